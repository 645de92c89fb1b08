#include "starq/wkb.hpp"

namespace starq {

CurveIdeal::CurveIdeal(Poly curve, HScalar j) : H(std::move(curve)), shift(std::move(j)) {
    if (!H.ctx() || H.ctx()->size() != 2)
        throw error("CurveIdeal: curve must live in a two-variable context");
    if (H.constant_term() != 0) throw error("CurveIdeal: H(0,0) must vanish");
}

XSeries branch_solve(const Poly& H, std::uint32_t cap) {
    if (!H.ctx() || H.ctx()->size() != 2)
        throw error("branch_solve: curve must live in a two-variable context");
    if (H.constant_term() != 0) throw error("branch_solve: H(0,0) must vanish");
    Poly Hy = H.diff(1);
    if (Hy.constant_term() == 0) throw error("branch_solve: degenerate branch, dH/dy(0,0) = 0");

    Ctx xctx = make_context({H.ctx()->name(0)});
    XSeries u(xctx, cap);
    // Newton doubles the valid degree each step
    for (std::uint32_t it = 0; it <= cap + 1; ++it) {
        XSeries hu = substitute_fiber(H, 0, 1, u);
        if (hu.is_zero()) break;
        XSeries hyu = substitute_fiber(Hy, 0, 1, u);
        XSeries next = u - hu * series_inverse(hyu);
        if (next == u) break;
        u = next;
    }
    if (!substitute_fiber(H, 0, 1, u).is_zero())
        throw error("branch_solve: Newton iteration failed to close");
    return u;
}

namespace {
// powers (U + ℏ d/dx)^b · 1 where U = Σ_g ℏ^g u_g
std::vector<HXSeries> conjugated_powers(const std::vector<XSeries>& u, std::uint32_t maxb,
                                        std::uint32_t orders, std::uint32_t cap, const Ctx& xctx) {
    HXSeries U(xctx, orders, cap);
    for (std::uint32_t g = 0; g < u.size() && g <= orders; ++g) {
        XSeries padded(xctx, cap);
        for (std::uint32_t d = 0; d <= std::min(cap, u[g].cap()); ++d)
            padded.mutable_part(d) = u[g].part(d);
        U.mutable_level(g) = padded;
    }
    std::vector<HXSeries> T;
    HXSeries one(xctx, orders, cap);
    one.mutable_level(0) = XSeries::constant(xctx, 1, cap);
    T.push_back(one);
    for (std::uint32_t b = 1; b <= maxb; ++b) T.push_back(U * T.back() + T.back().diff().times_hbar());
    return T;
}
} // namespace

HXSeries wkb_residual(const CurveIdeal& curve, const std::vector<XSeries>& u,
                      std::uint32_t orders, std::uint32_t degree) {
    WeylContext wctx(curve.H.ctx(), {{0, 1}}, orders);
    WeylOp op = phi(curve.H, wctx);
    HScalar j = curve.shift.with_order(orders);
    op = op - WeylOp::identity(wctx).scaled_h(j.times_hbar(1));

    Ctx xctx = u.empty() ? make_context({curve.H.ctx()->name(0)}) : u.front().ctx();
    // degrees beyond what the u_g actually carry are unknown, not zero
    for (const auto& ug : u) degree = std::min(degree, ug.cap());
    std::uint32_t maxb = curve.H.degree_in(1);
    std::vector<HXSeries> T = conjugated_powers(u, maxb, orders, degree, xctx);

    HXSeries res(xctx, orders, degree);
    Poly x = Poly::variable(xctx, 0);
    for (const auto& [key, c] : op.terms()) {
        std::uint32_t a = key.first.exponent(0), b = key.second.exponent(0);
        Poly xa = Poly::constant(xctx, 1);
        for (std::uint32_t k = 0; k < a; ++k) xa *= x;
        res = res + T.at(b).times_poly(xa).times_hscalar(c);
    }
    return res;
}

WKBSolution wkb_solve(const CurveIdeal& curve, std::uint32_t orders, std::uint32_t degree) {
    std::uint32_t dy = std::max<std::uint32_t>(curve.H.degree_in(1), 1);
    std::uint32_t work = degree + (orders + 1) * dy;

    WKBSolution sol;
    sol.u.push_back(branch_solve(curve.H, work));
    Ctx xctx = sol.u.front().ctx();

    XSeries hy_inv = series_inverse(substitute_fiber(curve.H.diff(1), 0, 1, sol.u.front()));

    for (std::uint32_t g = 1; g <= orders; ++g) {
        sol.u.push_back(XSeries(xctx, work)); // placeholder zero
        HXSeries res = wkb_residual(curve, sol.u, orders, work);
        XSeries rg = res.level(g);
        if (rg.is_zero()) continue;
        sol.u.back() = (rg * hy_inv).scaled(-1);
    }

    HXSeries res = wkb_residual(curve, sol.u, orders, work);
    for (std::uint32_t g = 0; g <= orders; ++g)
        if (!res.level(g).truncated(degree).is_zero())
            throw error("wkb_solve: unsolvable order " + std::to_string(g));

    for (auto& ug : sol.u) ug = ug.truncated(degree);
    for (const auto& ug : sol.u) sol.S.push_back(formal_integrate(ug));
    return sol;
}

LambdaSeries lambda_solve(const Rational& seed0, const Rational& seed1, std::size_t count) {
    if (count < 3) throw error("lambda_solve: need at least three coefficients");
    LambdaSeries L;
    L.lam.assign(count, Rational(0));
    L.lam[0] = seed0;
    L.lam[1] = seed1;
    for (std::size_t n = 3; n < count; ++n)
        L.lam[n] = -L.lam[n - 3] / Rational((n - 1) * n);
    return L;
}

std::uint32_t lambda_hbar_exponent(std::size_t n) {
    return static_cast<std::uint32_t>((2 * n + 2) / 3); // ceil(2n/3)
}

std::map<int, Poly> lambda_residual(const CurveIdeal& curve, const LambdaSeries& lambda,
                                    const StarContext& ctx) {
    const Poly& H = curve.H;
    if (H.total_degree() > 2) throw error("lambda_residual: curve degree must be at most 2");
    std::map<int, Poly> res;
    Poly hpow = Poly::constant(H.ctx(), 1);
    for (std::size_t n = 0; n < lambda.count(); ++n) {
        if (n > 0) hpow *= H;
        if (lambda.coeff(n) == 0) continue;
        std::uint32_t e = lambda_hbar_exponent(n);
        Rational weight = lambda.coeff(n) * rational_pow(2, e);
        HSeries term = star(H, hpow, ctx);
        for (std::uint32_t k = 0; k <= term.order(); ++k) {
            if (term.coeff(k).is_zero()) continue;
            int level = static_cast<int>(k) - static_cast<int>(e);
            auto [it, fresh] = res.emplace(level, term.coeff(k).scaled(weight));
            if (!fresh) {
                it->second += term.coeff(k).scaled(weight);
                if (it->second.is_zero()) res.erase(it);
            }
        }
    }
    return res;
}

bool lambda_residual_vanishes(const CurveIdeal& curve, const LambdaSeries& lambda,
                              const StarContext& ctx) {
    auto res = lambda_residual(curve, lambda, ctx);
    // a level is fully determined once every λ_n feeding it has its partner
    // λ_{n+3} inside the series
    std::map<int, std::size_t> top_feeder;
    for (std::size_t n = 0; n < lambda.count(); ++n) {
        if (lambda.coeff(n) == 0) continue;
        int level = -static_cast<int>(lambda_hbar_exponent(n));
        auto [it, fresh] = top_feeder.emplace(level, n);
        if (!fresh) it->second = std::max(it->second, n);
    }
    for (const auto& [level, n] : top_feeder) {
        if (n + 3 >= lambda.count()) continue; // truncation tail
        auto it = res.find(level);
        if (it != res.end() && !it->second.is_zero()) return false;
    }
    return true;
}

} // namespace starq
