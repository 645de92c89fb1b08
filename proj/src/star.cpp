#include "starq/star.hpp"

namespace starq {

StarContext braid(const StarContext& ctx) {
    if (ctx.gauge) throw error("braid: context must be a plain skew bi-vector");
    StarContext out(ctx.bivector, ctx.order);
    out.braided = !ctx.braided;
    return out;
}

HSeries star(const Poly& f, const Poly& g, const StarContext& ctx) {
    require_same_context(f.ctx(), g.ctx(), "star");
    if (!f.ctx() || f.ctx()->size() != ctx.dim())
        throw context_error("star: bi-map dimension does not match context");
    HSeries out(f.ctx(), ctx.order);
    RMat tau = ctx.tau();
    TensorSum t{{f, g}};
    Rational coeff(1); // (1/2)^k / k!
    out.mutable_coeff(0) = tensor_prod(t, f.ctx());
    for (std::uint32_t k = 1; k <= ctx.order && !t.empty(); ++k) {
        t = ctx.braided ? bimap_apply_braided(tau, t) : bimap_apply(tau, t);
        coeff /= 2 * k;
        out.mutable_coeff(k) = tensor_prod(t, f.ctx()).scaled(coeff);
    }
    return out;
}

HSeries star(const HSeries& f, const HSeries& g, const StarContext& ctx) {
    require_same_context(f.ctx(), g.ctx(), "star");
    std::uint32_t n = std::min({f.order(), g.order(), ctx.order});
    HSeries out(f.ctx(), n);
    for (std::uint32_t i = 0; i <= n; ++i) {
        if (f.coeff(i).is_zero()) continue;
        for (std::uint32_t j = 0; i + j <= n; ++j) {
            if (g.coeff(j).is_zero()) continue;
            HSeries term = star(f.coeff(i), g.coeff(j), ctx);
            for (std::uint32_t k = 0; i + j + k <= n; ++k)
                out.mutable_coeff(i + j + k) += term.coeff(k);
        }
    }
    return out;
}

HSeries commutator(const HSeries& f, const HSeries& g, const StarContext& ctx) {
    return star(f, g, ctx) - star(g, f, ctx);
}

namespace {
Poly gamma_laplacian(const Poly& p, const RMat& gamma) {
    Poly out(p.ctx());
    for (std::size_t j = 0; j < gamma.rows(); ++j) {
        Poly dj = p.diff(static_cast<std::uint32_t>(j));
        if (dj.is_zero()) continue;
        for (std::size_t k = 0; k < gamma.cols(); ++k) {
            if (gamma.at(j, k) == 0) continue;
            out += dj.diff(static_cast<std::uint32_t>(k)).scaled(gamma.at(j, k));
        }
    }
    return out;
}

Poly derive(const Poly& p, const std::vector<std::uint32_t>& alpha) {
    Poly r = p;
    for (std::uint32_t v = 0; v < alpha.size() && !r.is_zero(); ++v)
        for (std::uint32_t k = 0; k < alpha[v]; ++k) r = r.diff(v);
    return r;
}
} // namespace

HSeries gauge_map(const HSeries& f, const GaugePart& gamma, std::uint32_t order) {
    if (!f.ctx() || f.ctx()->size() != gamma.dim())
        throw context_error("gauge_map: dimension mismatch");
    HSeries out(f.ctx(), order);
    for (std::uint32_t j = 0; j <= std::min(order, f.order()); ++j) {
        Poly p = f.coeff(j);
        Rational coeff(1); // (1/4)^m / m!
        for (std::uint32_t m = 0; j + m <= order && !p.is_zero(); ++m) {
            out.mutable_coeff(j + m) += p.scaled(coeff);
            p = gamma_laplacian(p, gamma.gamma);
            coeff /= 4 * (m + 1);
        }
    }
    return out;
}

HSeries gauge_map(const Poly& f, const GaugePart& gamma, std::uint32_t order) {
    return gauge_map(HSeries::from_poly(f, order), gamma, order);
}

HSeries star_wick_oracle(const Poly& f, const Poly& g, const StarContext& ctx) {
    require_same_context(f.ctx(), g.ctx(), "star_wick_oracle");
    if (!f.ctx() || f.ctx()->size() != ctx.dim())
        throw context_error("star_wick_oracle: dimension mismatch");
    if (ctx.braided) throw error("star_wick_oracle: braided contexts unsupported");

    struct Entry {
        std::uint32_t i, j;
        Rational half_value;
    };
    RMat tau = ctx.tau();
    std::vector<Entry> entries;
    for (std::size_t i = 0; i < tau.rows(); ++i)
        for (std::size_t j = 0; j < tau.cols(); ++j)
            if (!(tau.at(i, j) == 0))
                entries.push_back({static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j),
                                   tau.at(i, j) / 2});

    HSeries out(f.ctx(), ctx.order);
    std::uint32_t budget =
        std::min<std::uint32_t>(ctx.order, std::min(f.total_degree(), g.total_degree()));
    std::vector<std::uint32_t> alpha(f.ctx()->size(), 0), beta(f.ctx()->size(), 0);

    // assign a multiplicity m to every nonzero entry of τ/2; each assignment
    // contributes Π (τ_ij/2)^m / m! · ∂^α f · ∂^β g at ℏ^Σm
    auto rec = [&](auto&& self, std::size_t pos, std::uint32_t used, Rational weight) -> void {
        if (pos == entries.size()) {
            Poly df = derive(f, alpha);
            if (df.is_zero()) return;
            Poly dg = derive(g, beta);
            if (dg.is_zero()) return;
            out.mutable_coeff(used) += (df * dg).scaled(weight);
            return;
        }
        const Entry& e = entries[pos];
        Rational factor(1);
        std::uint32_t taken = 0;
        for (std::uint32_t m = 0; used + m <= budget; ++m) {
            if (m > 0) {
                factor = factor * e.half_value / static_cast<int>(m);
                alpha[e.i] += 1;
                beta[e.j] += 1;
                taken = m;
            }
            self(self, pos + 1, used + m, weight * factor);
        }
        alpha[e.i] -= taken;
        beta[e.j] -= taken;
    };
    rec(rec, 0, 0, Rational(1));
    return out;
}

std::map<std::tuple<Monomial, Monomial, Monomial>, Rational>
yang_baxter_residual(const StarContext& braided_ctx, const Poly& f, const Poly& g, const Poly& h) {
    if (!braided_ctx.braided) throw error("yang_baxter_residual: braided context required");
    RMat tau = braided_ctx.tau();
    TensorTriple t0{{f, g, h}};
    TensorTriple lhs = braided_on_23(tau, braided_on_12(tau, braided_on_23(tau, t0)));
    TensorTriple rhs = braided_on_12(tau, braided_on_23(tau, braided_on_12(tau, t0)));
    for (auto& triple : rhs) std::get<0>(triple) = -std::get<0>(triple);
    TensorTriple diff = std::move(lhs);
    diff.insert(diff.end(), rhs.begin(), rhs.end());
    return triple_canonical(diff);
}

} // namespace starq
