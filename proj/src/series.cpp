#include "starq/series.hpp"

namespace starq {

XSeries series_inverse(const XSeries& a) {
    Rational a0 = a.constant_coeff();
    if (a0 == 0) throw error("series_inverse: zero constant term");
    XSeries b(a.ctx(), a.cap());
    Rational inv0 = Rational(1) / a0;
    b.mutable_part(0) = Poly::constant(a.ctx(), inv0);
    for (std::uint32_t d = 1; d <= a.cap(); ++d) {
        Poly acc(a.ctx());
        for (std::uint32_t k = 1; k <= d; ++k) acc += a.part(k) * b.part(d - k);
        b.mutable_part(d) = acc.scaled(-inv0);
    }
    return b;
}

namespace {
bool rational_sqrt(const Rational& q, Rational& out) {
    if (q < 0) return false;
    Integer n = boost::multiprecision::numerator(q);
    Integer d = boost::multiprecision::denominator(q);
    Integer sn = boost::multiprecision::sqrt(n);
    Integer sd = boost::multiprecision::sqrt(d);
    if (sn * sn != n || sd * sd != d) return false;
    out = Rational(sn, sd);
    return true;
}
} // namespace

XSeries series_sqrt(const XSeries& a) {
    Rational r0;
    if (!rational_sqrt(a.constant_coeff(), r0) || r0 == 0)
        throw error("series_sqrt: constant term is not a nonzero rational square");
    XSeries r(a.ctx(), a.cap());
    r.mutable_part(0) = Poly::constant(a.ctx(), r0);
    Rational half_inv = Rational(1) / (2 * r0);
    for (std::uint32_t d = 1; d <= a.cap(); ++d) {
        Poly acc = a.part(d);
        for (std::uint32_t k = 1; k < d; ++k) acc -= r.part(k) * r.part(d - k);
        r.mutable_part(d) = acc.scaled(half_inv);
    }
    return r;
}

XSeries formal_integrate(const XSeries& a, std::uint32_t var) {
    if (!a.ctx() || a.ctx()->size() != 1)
        throw error("formal_integrate: single-variable context required");
    if (var != 0) throw error("formal_integrate: unknown variable");
    XSeries r(a.ctx(), a.cap() + 1);
    Poly x = Poly::variable(a.ctx(), 0);
    for (std::uint32_t d = 0; d <= a.cap(); ++d)
        r.mutable_part(d + 1) = (a.part(d) * x).scaled(Rational(1, d + 1));
    return r;
}

XSeries substitute_fiber(const Poly& h, std::uint32_t base_var, std::uint32_t fiber_var,
                         const XSeries& u) {
    if (!h.ctx() || h.ctx()->size() != 2)
        throw error("substitute_fiber: polynomial must live in a two-variable context");
    if (!u.ctx() || u.ctx()->size() != 1)
        throw error("substitute_fiber: series must live in a one-variable context");
    std::uint32_t cap = u.cap();
    Ctx xctx = u.ctx();

    std::uint32_t max_b = h.degree_in(fiber_var);
    std::vector<XSeries> upow;
    upow.push_back(XSeries::constant(xctx, 1, cap));
    for (std::uint32_t b = 1; b <= max_b; ++b) upow.push_back(upow.back() * u);

    XSeries out(xctx, cap);
    Poly x = Poly::variable(xctx, 0);
    for (const auto& [m, c] : h.terms()) {
        std::uint32_t a = m.exponent(base_var), b = m.exponent(fiber_var);
        Poly xa = Poly::constant(xctx, c);
        for (std::uint32_t k = 0; k < a; ++k) xa *= x;
        out = out + upow[b].times_poly(xa);
    }
    return out;
}

std::string to_string(const HScalar& s) {
    std::string out;
    bool any = false;
    for (std::uint32_t k = 0; k <= s.order(); ++k) {
        if (s.coeff(k) == 0) continue;
        if (any) out += " + ";
        std::string c = to_string(s.coeff(k));
        if (k == 0)
            out += c;
        else {
            out += (c == "1" ? std::string() : c + "*") + "h";
            if (k > 1) out += "^" + std::to_string(k);
        }
        any = true;
    }
    return any ? out : "0";
}

std::string to_string(const HSeries& h) {
    std::string out;
    bool any = false;
    for (std::uint32_t k = 0; k <= h.order(); ++k) {
        if (h.coeff(k).is_zero()) continue;
        if (any) out += " + ";
        std::string c = to_string(h.coeff(k));
        if (k == 0)
            out += c;
        else {
            out += "(" + c + ")*h";
            if (k > 1) out += "^" + std::to_string(k);
        }
        any = true;
    }
    return any ? out : "0";
}

} // namespace starq
