#pragma once

#include <map>

#include "starq/star.hpp"
#include "starq/weyl.hpp"

namespace starq {

// Plane curve H(x, y) through the origin, with the quantum shift j(ℏ) of the
// annihilating operator φ(H) - ℏ j(ℏ). Variable 0 is the base x, variable 1
// the fibre y.
struct CurveIdeal {
    Poly H;
    HScalar shift;

    CurveIdeal(Poly curve, HScalar j);
    explicit CurveIdeal(Poly curve) : CurveIdeal(std::move(curve), HScalar(6)) {}
};

// exponent data of ψ = exp((1/ℏ) Σ_g ℏ^g S_g(x)); u_g = S_g'
struct WKBSolution {
    std::vector<XSeries> S;
    std::vector<XSeries> u;
};

// branch y = u0(x) with H(x, u0(x)) = 0 and u0(0) = 0, by Newton iteration on
// truncated series; requires ∂H/∂y(0,0) ≠ 0
XSeries branch_solve(const Poly& H, std::uint32_t cap);

// order-by-order WKB solve of (φ(H) - ℏ j)·exp(S/ℏ) = 0 up to ℏ^orders,
// series to degree `degree`
WKBSolution wkb_solve(const CurveIdeal& curve, std::uint32_t orders, std::uint32_t degree);

// the conjugated-operator residual exp(-S/ℏ)(φ(H) - ℏj)exp(S/ℏ)·1 for given
// derivative data u_g; zero through all computed levels iff u solves the curve
HXSeries wkb_residual(const CurveIdeal& curve, const std::vector<XSeries>& u,
                      std::uint32_t orders, std::uint32_t degree);

// λ(H) coefficients with λ_{n+2} = -λ_{n-1}/((n+1)(n+2)), seeds λ_0, λ_1,
// λ_2 = 0
struct LambdaSeries {
    std::vector<Rational> lam;

    const Rational& coeff(std::size_t n) const { return lam.at(n); }
    std::size_t count() const { return lam.size(); }
};

LambdaSeries lambda_solve(const Rational& seed0, const Rational& seed1, std::size_t count);

// ℏ-exponent carried by λ_n Hⁿ in the wavefunction w = λ(H): the stride
// e(n+3) = e(n)+2 dictated by the recurrence
std::uint32_t lambda_hbar_exponent(std::size_t n);

// H ⋆ w for w = Σ λ_n 2^{e(n)} Hⁿ ℏ^{-e(n)}, via the full star machinery,
// graded by ℏ-exponent (keys may be negative). H must have degree ≤ 2.
std::map<int, Poly> lambda_residual(const CurveIdeal& curve, const LambdaSeries& lambda,
                                    const StarContext& ctx);

// true iff every fully-determined level of the residual vanishes (level of
// λ_n is complete once λ_{n+3} is part of the series)
bool lambda_residual_vanishes(const CurveIdeal& curve, const LambdaSeries& lambda,
                              const StarContext& ctx);

} // namespace starq
