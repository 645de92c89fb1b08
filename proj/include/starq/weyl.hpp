#pragma once

#include <map>
#include <utility>

#include "starq/poisson.hpp"
#include "starq/series.hpp"

namespace starq {

// Declares which phase-space variables are positions and which are momenta:
// the operator algebra is generated by x̂_i (multiplication) and ŷ_i = ℏ∂_i.
// The quantisation rule ŷ = ℏ∂ is a star-homomorphism exactly for the bracket
// {y_i, x_i} = 1 (π^{x_i y_i} = -1); matching_bivector() returns that π.
struct WeylContext {
    Ctx phase;                                              // all 2n polynomial variables
    std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs; // (position index, momentum index)
    std::uint32_t order = 6;

    WeylContext(Ctx phase_ctx, std::vector<std::pair<std::uint32_t, std::uint32_t>> pairing,
                std::uint32_t n);

    std::size_t dim() const { return pairs.size(); }

    // -1 when the phase variable is not part of the pairing
    int position_slot(std::uint32_t phase_var) const;
    int momentum_slot(std::uint32_t phase_var) const;

    BiVector matching_bivector() const;
};

// Normal-ordered differential operator word: Σ c_{a,b}(ℏ) x^a (ℏ∂)^b with all
// x factors to the left of all ∂ factors. Exponent monomials are indexed by
// the pairing slots 0..n-1.
class WeylOp {
  public:
    using Key = std::pair<Monomial, Monomial>; // (x exponents, ∂ exponents)

    WeylOp() = default;
    WeylOp(WeylContext ctx) : ctx_(std::move(ctx)) {}

    static WeylOp identity(const WeylContext& ctx) {
        WeylOp op(ctx);
        op.add_term(Monomial{}, Monomial{}, HScalar::constant(1, ctx.order));
        return op;
    }
    static WeylOp position(const WeylContext& ctx, std::uint32_t slot);
    static WeylOp momentum(const WeylContext& ctx, std::uint32_t slot); // ℏ∂_slot

    const WeylContext& ctx() const { return ctx_; }
    const std::map<Key, HScalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Monomial& xpart, const Monomial& dpart, const HScalar& c);

    HScalar coeff(const Monomial& xpart, const Monomial& dpart) const {
        auto it = terms_.find({xpart, dpart});
        return it == terms_.end() ? HScalar(ctx_.order) : it->second;
    }

    WeylOp operator-() const;
    friend WeylOp operator+(WeylOp a, const WeylOp& b);
    friend WeylOp operator-(WeylOp a, const WeylOp& b);

    WeylOp scaled_h(const HScalar& s) const;
    WeylOp scaled(const Rational& s) const { return scaled_h(HScalar::constant(s, ctx_.order)); }

    bool operator==(const WeylOp& o) const { return terms_ == o.terms_; }
    bool operator!=(const WeylOp& o) const { return !(*this == o); }

  private:
    WeylContext ctx_{nullptr, {}, 1};
    std::map<Key, HScalar> terms_;
};

// composition, rewritten to normal form via (ℏ∂_j) x_i = x_i (ℏ∂_j) + ℏ δ_ij
WeylOp weyl_mul(const WeylOp& p, const WeylOp& q);

// Symmetric (Weyl) ordering quantisation: each monomial Π x_i^{a_i} y_i^{b_i}
// maps to the average over all interleavings of its x̂ and ŷ factors,
// normal-ordered. Satisfies φ(f ⋆ g) = φ(f)·φ(g) for the matching bi-vector.
WeylOp phi(const Poly& f, const WeylContext& ctx);
WeylOp phi(const HSeries& f, const WeylContext& ctx);

// apply the operator to a truncated series in the single base variable
HXSeries weyl_apply(const WeylOp& p, const XSeries& s);

std::string to_string(const WeylOp& op);

} // namespace starq
