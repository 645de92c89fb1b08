#include "starq/ratfun.hpp"

namespace starq {

namespace {
// leading term in graded-lex order (the last map entry)
std::pair<Monomial, Rational> leading(const Poly& p) {
    auto it = p.terms().rbegin();
    return {it->first, it->second};
}
} // namespace

std::optional<Poly> try_exact_divide(const Poly& a, const Poly& b) {
    if (b.is_zero()) return std::nullopt;
    if (a.is_zero()) return a;
    Poly q(a.ctx()), r = a;
    auto [lm, lc] = leading(b);
    while (!r.is_zero()) {
        auto [rm, rc] = leading(r);
        if (!lm.divides(rm)) return std::nullopt;
        Poly t = Poly::monomial(r.ctx(), rm.quotient(lm), rc / lc);
        q += t;
        r -= t * b;
    }
    return q;
}

void RatFun::normalize() {
    if (num_.is_zero()) {
        den_ = one_in(den_.ctx());
        return;
    }
    if (!num_.ctx() && den_.ctx()) num_ = Poly(den_.ctx()) + num_;
    if (!den_.ctx() && num_.ctx()) den_ = Poly(num_.ctx()) + den_;

    // cancel a common monomial factor
    auto common_monomial = [](const Poly& p) {
        std::vector<std::uint32_t> mins;
        bool first = true;
        for (const auto& [m, c] : p.terms()) {
            std::uint32_t nv = m.max_var();
            if (first) {
                mins.assign(nv, 0);
                for (std::uint32_t v = 0; v < nv; ++v) mins[v] = m.exponent(v);
                first = false;
            } else {
                if (nv < mins.size()) mins.resize(nv);
                for (std::uint32_t v = 0; v < mins.size(); ++v)
                    mins[v] = std::min(mins[v], m.exponent(v));
            }
        }
        return Monomial::from_exponents(mins);
    };
    Monomial g1 = common_monomial(num_), g2 = common_monomial(den_);
    std::vector<std::uint32_t> shared;
    std::uint32_t nv = std::min(g1.max_var(), g2.max_var());
    shared.assign(nv, 0);
    bool nontrivial = false;
    for (std::uint32_t v = 0; v < nv; ++v) {
        shared[v] = std::min(g1.exponent(v), g2.exponent(v));
        nontrivial |= shared[v] > 0;
    }
    if (nontrivial) {
        Monomial g = Monomial::from_exponents(shared);
        Poly n2(num_.ctx()), d2(den_.ctx());
        for (const auto& [m, c] : num_.terms()) n2.add_term(m.quotient(g), c);
        for (const auto& [m, c] : den_.terms()) d2.add_term(m.quotient(g), c);
        num_ = n2;
        den_ = d2;
    }

    // exact division, so simple quotients print in lowest terms
    if (auto q = try_exact_divide(num_, den_)) {
        num_ = *q;
        den_ = one_in(num_.ctx());
    } else if (auto qd = try_exact_divide(den_, num_)) {
        den_ = *qd;
        num_ = one_in(den_.ctx());
    }

    // rational content and sign: make den's leading coefficient 1
    Rational lead = leading(den_).second;
    if (lead != 1) {
        num_ = num_.scaled(1 / lead);
        den_ = den_.scaled(1 / lead);
    }
}

std::string to_string(const RatFun& f) {
    if (f.is_zero()) return "0";
    std::string n = to_string(f.num());
    if (f.den().is_constant() && f.den().constant_term() == 1) return n;
    std::string d = to_string(f.den());
    bool np = f.num().terms().size() > 1, dp = f.den().terms().size() > 1;
    return (np ? "(" + n + ")" : n) + "/" + (dp ? "(" + d + ")" : d);
}

} // namespace starq
