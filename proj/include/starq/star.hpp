#pragma once

#include <optional>

#include "starq/poisson.hpp"
#include "starq/series.hpp"

namespace starq {

// Everything needed to evaluate f ⋆ g = prod ∘ exp((ℏ/2) τ)(f ⊗ g): the skew
// bi-vector, an optional symmetric gauge part (τ = π + γ), the ℏ truncation
// order, and whether the bi-map is composed with the signed swap P.
struct StarContext {
    BiVector bivector;
    std::optional<GaugePart> gauge;
    std::uint32_t order = 6;
    bool braided = false;

    StarContext(BiVector b, std::uint32_t n) : bivector(std::move(b)), order(n) {
        if (order < 1) throw error("StarContext: order must be at least 1");
    }
    StarContext(BiVector b, GaugePart g, std::uint32_t n)
        : bivector(std::move(b)), gauge(std::move(g)), order(n) {
        if (order < 1) throw error("StarContext: order must be at least 1");
        if (bivector.dim() != gauge->dim()) throw error("StarContext: dimension mismatch");
    }

    std::size_t dim() const { return bivector.dim(); }

    RMat tau() const { return gauge ? bivector.pi + gauge->gamma : bivector.pi; }
};

// π̃ = π ∘ P; requires a skew context with no gauge part
StarContext braid(const StarContext& ctx);

HSeries star(const Poly& f, const Poly& g, const StarContext& ctx);
HSeries star(const HSeries& f, const HSeries& g, const StarContext& ctx);

// f⋆g - g⋆f
HSeries commutator(const HSeries& f, const HSeries& g, const StarContext& ctx);

// ψ(f) = exp((ℏ/4) γ^{jk} ∂_j ∂_k) f, truncated at ℏ^order
HSeries gauge_map(const HSeries& f, const GaugePart& gamma, std::uint32_t order);
HSeries gauge_map(const Poly& f, const GaugePart& gamma, std::uint32_t order);

// Independent evaluation of the same product by Wick-pairing enumeration:
// sums (ℏ/2)^k Π τ^{m_ij}/m_ij! ∂^α f ∂^β g over exponent assignments to the
// nonzero entries of τ, never iterating the bi-map.
HSeries star_wick_oracle(const Poly& f, const Poly& g, const StarContext& ctx);

// (id⊗π̃)(π̃⊗id)(id⊗π̃) - (π̃⊗id)(id⊗π̃)(π̃⊗id) applied to f⊗g⊗h, canonicalized
std::map<std::tuple<Monomial, Monomial, Monomial>, Rational>
yang_baxter_residual(const StarContext& braided_ctx, const Poly& f, const Poly& g, const Poly& h);

} // namespace starq
