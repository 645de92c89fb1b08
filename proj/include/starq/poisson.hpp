#pragma once

#include <map>
#include <tuple>
#include <utility>
#include <vector>

#include "starq/linalg.hpp"
#include "starq/poly.hpp"

namespace starq {

using RMat = Mat<Rational>;

// Constant skew bi-vector π^{ij}: {f,g} = π^{ij} ∂_i f ∂_j g
struct BiVector {
    RMat pi;

    explicit BiVector(RMat m) : pi(std::move(m)) {
        if (!pi.is_skew()) throw error("BiVector: matrix is not skew-symmetric");
    }

    std::size_t dim() const { return pi.rows(); }
};

// Symmetric gauge part γ^{ij} of a non-symmetric bi-map
struct GaugePart {
    RMat gamma;

    explicit GaugePart(RMat m) : gamma(std::move(m)) {
        if (!gamma.is_symmetric()) throw error("GaugePart: matrix is not symmetric");
    }

    std::size_t dim() const { return gamma.rows(); }
};

// Σ_a f_a ⊗ g_a
using TensorSum = std::vector<std::pair<Poly, Poly>>;

// π(f⊗g) = Σ τ^{ij} ∂_i f ⊗ ∂_j g, zero pairs dropped
TensorSum bimap_apply(const RMat& tau, const TensorSum& t);

// π∘P with P(f⊗g) = -g⊗f (the braided bi-map)
TensorSum bimap_apply_braided(const RMat& tau, const TensorSum& t);

// prod: Σ f_a · g_a (ctx names the context of the zero result for empty sums)
Poly tensor_prod(const TensorSum& t, const Ctx& ctx);

// canonical expansion of a tensor into monomial pairs; empty map iff zero
std::map<std::pair<Monomial, Monomial>, Rational> tensor_canonical(const TensorSum& t);

// {f, g} = prod ∘ π (f ⊗ g)
Poly bracket(const Poly& f, const Poly& g, const BiVector& b);

// τ = π + γ with π skew and γ symmetric
std::pair<BiVector, GaugePart> skew_split(const RMat& tau);

// Ideal spanned by affine-linear generators, linearly independent as affine
// functions.
struct LinearIdeal {
    std::vector<Poly> generators;

    explicit LinearIdeal(std::vector<Poly> gens);
};

// True iff all pairwise brackets of the generators lie in the ideal;
// membership is decided by exact linear algebra on the affine span.
bool is_coisotropic(const LinearIdeal& ideal, const BiVector& b);

// Single generator of any degree: {H,H} = 0, always coisotropic.
bool is_coisotropic(const Poly& generator, const BiVector& b);

// ---------------------------------------------------------------------------
// triple tensors, for the Yang–Baxter check

using TensorTriple = std::vector<std::tuple<Poly, Poly, Poly>>;

// braided bi-map acting on slots (1,2) or (2,3) of a triple tensor
TensorTriple braided_on_12(const RMat& tau, const TensorTriple& t);
TensorTriple braided_on_23(const RMat& tau, const TensorTriple& t);

std::map<std::tuple<Monomial, Monomial, Monomial>, Rational>
triple_canonical(const TensorTriple& t);

} // namespace starq
