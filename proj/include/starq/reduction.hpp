#pragma once

#include <string>

#include "starq/linalg.hpp"
#include "starq/ratfun.hpp"

namespace starq {

// The reduction pipeline works over the field F = k(parameters). All linear
// data below is homogeneous in the phase variables; the bracket pattern is
// {x_i, y_i} = {z_k, w_k} = 1 and the quantisation rule is y_i -> ℏ∂_{x_i},
// w_k -> ℏ∂_{z_k}.
using F = RatFun;
using FMat = Mat<F>;
using FVec = std::vector<F>;

// linear form u·x + v·y + ρ·z + τ·w on the extended space
struct LinForm {
    FVec x, y, z, w;

    LinForm(std::size_t n, std::size_t g)
        : x(n, F(0)), y(n, F(0)), z(g, F(0)), w(g, F(0)) {}
};

// {f, g} under {x_i,y_i} = {z_k,w_k} = 1
F lin_bracket(const LinForm& f, const LinForm& g);

// Lagrangian equations M·y + N·x = 0
struct LinearLagrangian {
    FMat M, N;

    LinearLagrangian(FMat m, FMat n);

    std::size_t dim() const { return M.rows(); }
};

// codimension-(n-g) coisotropic subspace, rows of equations u·x + v·y = 0
struct CoisotropicSubspace {
    FMat X, Y; // (n-g) × n coefficient blocks

    CoisotropicSubspace(FMat x, FMat y);

    std::size_t codim() const { return X.rows(); }
    std::size_t dim_n() const { return X.cols(); }
};

// the extension X = W ⊕ G/G^⊥: new coordinates (z_k, w_k) with z_k - ζ_k,
// w_k - ξ_k adjoined to the ideal of G
struct Extension {
    std::vector<LinForm> zeta, xi; // ζ_k, ξ_k as forms on W (x,y parts only)
    std::string normalization;     // which pivot produced this choice

    std::size_t g() const { return zeta.size(); }
};

// wavefunction datum exp((1/ℏ)(-½ x·K·x + x·J·z + c)); K symmetric n×n, J is
// n×g (the source block), all entries rational functions of the parameters
struct GaussianForm {
    std::vector<std::string> vars; // names of the quadratic-form variables
    FMat K;
    FMat J;
    F c;

    GaussianForm(std::vector<std::string> v, FMat k, FMat j, F off = F(0));

    std::size_t n() const { return K.rows(); }
    std::size_t sources() const { return J.cols(); }

    // exponent sign flip (ℏ → -ℏ): turns the standalone annihilator into the
    // integral-kernel factor of the reduction pairing
    GaussianForm dual() const { return GaussianForm(vars, K.scaled(F(-1)), J.scaled(F(-1)), F(0) - c); }
};

// unique Gaussian annihilated by the quantisation of M·y + N·x = 0; when M is
// rank-deficient the pure-x equations eliminate variables and the Gaussian
// lives in the survivors
GaussianForm lagrangian_wavefunction(const LinearLagrangian& L,
                                     const std::vector<std::string>& var_names);

// checks φ(generator)·ψ = 0 for a linear generator on the extended space
bool annihilates(const GaussianForm& psi, const LinForm& generator);

// solve for ζ_k, ξ_k making ⟨z_k - ζ_k, w_k - ξ_k, H_G⟩ a Poisson ideal;
// implemented for the 4-dimensional, codimension-1 case of the worked example
Extension extend_coisotropic(const CoisotropicSubspace& G);

// all pairwise brackets of the extension ideal vanish
bool extension_is_coisotropic(const CoisotropicSubspace& G, const Extension& E);

// Gaussian K, J solving the quantised linear system of the extension ideal
GaussianForm coisotropic_wavefunction(const CoisotropicSubspace& G, const Extension& E,
                                      const std::vector<std::string>& var_names);

// ½ J·(K')⁻¹·J as a g×g quadratic form in the sources: the V = 0 central
// identity. Throws when det K' = 0 (the transversality failure).
FMat central_identity_quadratic(const FMat& Kprime, const FMat& J);

// full central identity with a polynomial potential V(∂/∂J): returns the
// pair (prefactor, quadratic exponent) of exp(-V(∂_J)) exp(½ J·(K')⁻¹·J)
// expanded to `order` applications of V; both live in the source context.
std::pair<PolyT<F>, PolyT<F>> central_identity(const FMat& Kprime, const PolyT<F>& V,
                                               const Ctx& source_ctx, std::uint32_t order);

struct EliminationResult {
    F c1;              // w_1 = c_1 z_1 on G ∩ L
    GaussianForm psi;  // exp((1/(2ℏ)) c_1 z_1²)
};

// eliminate x,y from the equations of G, L and the extension, quantise the
// resulting w_1 = c_1 z_1; throws "fail to intersect transversally" when the
// system degenerates
EliminationResult eliminate_and_quantise(const CoisotropicSubspace& G, const LinearLagrangian& L,
                                         const Extension& E);

struct ReduceReport {
    Extension extension;
    GaussianForm psi_L;     // standalone Lagrangian wavefunction
    GaussianForm psi_G;     // coisotropic wavefunction on the extension
    FMat Q_kernel;          // the L-factor of the pairing: -K_L (paper's printed Q)
    FMat K_prime;           // K + Q
    F det_K_prime;
    bool transversal = false;
    FMat C_gauss;           // z-quadratic from the Gaussian-integral route
    F c1 = F(0);            // elimination route: w1 = c1 z1
    F c0_recomputed = F(0); // -c1, the paper's c0 convention
    bool routes_agree = false;
    std::string normalization;
};

// run the whole pipeline: extension, both routes, transversality detections,
// agreement verdict
ReduceReport reduce_wavefunction(const CoisotropicSubspace& G, const LinearLagrangian& L);

std::string to_string(const GaussianForm& psi, const std::vector<std::string>& source_names = {});

} // namespace starq
