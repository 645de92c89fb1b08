#include <doctest.h>

#include <map>

#include "starq/reduction.hpp"
#include "starq/verify.hpp"
#include "starq/weyl.hpp"

using namespace starq;

namespace {
struct Sym {
    Ctx params;
    F a, b, c, d, A, B, D;
    Sym() {
        params = make_context({"a", "b", "c", "d", "A", "B", "D"});
        a = F::variable(params, 0);
        b = F::variable(params, 1);
        c = F::variable(params, 2);
        d = F::variable(params, 3);
        A = F::variable(params, 4);
        B = F::variable(params, 5);
        D = F::variable(params, 6);
    }
    CoisotropicSubspace G() const {
        FMat X(1, 2), Y(1, 2);
        X.at(0, 0) = a;
        X.at(0, 1) = b;
        Y.at(0, 0) = c;
        Y.at(0, 1) = d;
        return CoisotropicSubspace(X, Y);
    }
    LinearLagrangian L() const {
        FMat M = FMat::identity(2), N(2, 2);
        N.at(0, 0) = A;
        N.at(0, 1) = B;
        N.at(1, 0) = B;
        N.at(1, 1) = D;
        return LinearLagrangian(M, N);
    }
};

CoisotropicSubspace numeric_G(Rational a, Rational b, Rational c, Rational d) {
    FMat X(1, 2), Y(1, 2);
    X.at(0, 0) = F(a);
    X.at(0, 1) = F(b);
    Y.at(0, 0) = F(c);
    Y.at(0, 1) = F(d);
    return CoisotropicSubspace(X, Y);
}

LinearLagrangian numeric_L(Rational A, Rational B, Rational D) {
    FMat M = FMat::identity(2), N(2, 2);
    N.at(0, 0) = F(A);
    N.at(0, 1) = F(B);
    N.at(1, 0) = F(B);
    N.at(1, 1) = F(D);
    return LinearLagrangian(M, N);
}
} // namespace

TEST_CASE("lagrangian wavefunction") {
    Sym s;
    GaussianForm psi = lagrangian_wavefunction(s.L(), {"x1", "x2"});
    // exp(-(1/2ℏ) x·[[A,B],[B,D]]·x); the paper's printed Q is -K/ℏ
    CHECK(psi.K.at(0, 0) == s.A);
    CHECK(psi.K.at(0, 1) == s.B);
    CHECK(psi.K.at(1, 1) == s.D);
    CHECK(psi.sources() == 0);

    // annihilated by the quantised equations φ(H_i)ψ = 0
    LinForm h1(2, 0), h2(2, 0);
    h1.y[0] = F(1);
    h1.x[0] = s.A;
    h1.x[1] = s.B;
    h2.y[1] = F(1);
    h2.x[0] = s.B;
    h2.x[1] = s.D;
    CHECK(annihilates(psi, h1));
    CHECK(annihilates(psi, h2));

    // y = 0: constant wavefunction
    GaussianForm flat = lagrangian_wavefunction(numeric_L(0, 0, 0), {"x1", "x2"});
    CHECK(flat.K == FMat(2, 2));

    // 1D y + qx = 0 → exp(-q x²/(2ℏ))
    Ctx qc = make_context({"q"});
    FMat m1(1, 1), n1(1, 1);
    m1.at(0, 0) = F(1);
    n1.at(0, 0) = F::variable(qc, 0);
    GaussianForm one_d = lagrangian_wavefunction(LinearLagrangian(m1, n1), {"x"});
    CHECK(one_d.K.at(0, 0) == F::variable(qc, 0));
}

TEST_CASE("lagrangian wavefunction annihilated through phi and weyl_apply") {
    // 1D instance y + q x = 0 with q = 3: psi = exp(-3x^2/(2h)). Expanding the
    // exponential gives level h^{-m} |-> (-3/2)^m x^{2m} / m!; applying
    // phi(y + 3x) = h d/dx + 3x level by level must cancel exactly.
    Ctx xy = make_context({"x", "y"});
    WeylContext w(xy, {{0, 1}}, 2);
    WeylOp op = phi(Poly::variable(xy, 1) + Poly::variable(xy, 0).scaled(3), w);

    Ctx xc = make_context({"x"});
    const int M = 6;
    std::map<int, XSeries> total; // accumulated output by hbar level
    Rational coeff(1);
    for (int m = 0; m <= M; ++m) {
        if (m > 0) coeff *= Rational(-3, 2) / m;
        XSeries level(xc, 2 * M + 2);
        Poly x2m = Poly::constant(xc, coeff);
        for (int k = 0; k < 2 * m; ++k) x2m *= Poly::variable(xc, 0);
        level.mutable_part(2 * m) = x2m;
        HXSeries out = weyl_apply(op, level);
        for (std::uint32_t k = 0; k <= out.order(); ++k) {
            if (out.level(k).is_zero()) continue;
            auto [it, fresh] = total.emplace(static_cast<int>(k) - m, out.level(k));
            if (!fresh) it->second = it->second + out.level(k);
        }
    }
    // every level above the truncation boundary cancels
    for (const auto& [lvl, series] : total)
        if (lvl > -M) CHECK(series.is_zero());
}

TEST_CASE("lagrangian with rank-deficient M eliminates variables") {
    // y1 + 2x1 = 0 together with x2 = 0: survivor x1, exp(-x1²/ℏ)
    FMat M(2, 2), N(2, 2);
    M.at(0, 0) = F(1);
    N.at(0, 0) = F(2);
    N.at(1, 1) = F(1);
    GaussianForm psi = lagrangian_wavefunction(LinearLagrangian(M, N), {"x1", "x2"});
    REQUIRE(psi.vars.size() == 1);
    CHECK(psi.vars[0] == "x1");
    CHECK(psi.K.at(0, 0) == F(2));
}

TEST_CASE("non-Lagrangian data is rejected") {
    // both M and N rank-deficient
    FMat M(2, 2), N(2, 2);
    M.at(0, 0) = F(1);
    N.at(0, 0) = F(1);
    CHECK_THROWS_AS(LinearLagrangian(M, N), error);

    // Poisson-closure violation: B != C
    FMat M2 = FMat::identity(2), N2(2, 2);
    N2.at(0, 1) = F(1);
    CHECK_THROWS_AS(LinearLagrangian(M2, N2), error);
}

TEST_CASE("coisotropic extension matches the paper's choice") {
    Sym s;
    Extension E = extend_coisotropic(s.G());
    // ζ₁ = a x₁ + c y₁
    CHECK(E.zeta[0].x[0] == s.a);
    CHECK(E.zeta[0].y[0] == s.c);
    CHECK(E.zeta[0].x[1].is_zero());
    // ξ₁ = x₁/c - x₂/d
    CHECK(E.xi[0].x[0] == F(1) / s.c);
    CHECK(E.xi[0].x[1] == F(0) - F(1) / s.d);
    CHECK(extension_is_coisotropic(s.G(), E));

    // numeric instance a=b=c=d=1: ζ₁ = x₁ + y₁, ξ₁ = x₁ - x₂
    Extension E1 = extend_coisotropic(numeric_G(1, 1, 1, 1));
    CHECK(E1.zeta[0].x[0] == F(1));
    CHECK(E1.zeta[0].y[0] == F(1));
    CHECK(E1.xi[0].x[0] == F(1));
    CHECK(E1.xi[0].x[1] == F(-1));

    // degenerate pivot c = 0 falls back and still satisfies the brackets
    Extension Ec0 = extend_coisotropic(numeric_G(1, 2, 0, 3));
    CHECK(extension_is_coisotropic(numeric_G(1, 2, 0, 3), Ec0));
    CHECK(Ec0.normalization.find("c = 0") != std::string::npos);
    Extension Ed0 = extend_coisotropic(numeric_G(1, 2, 3, 0));
    CHECK(extension_is_coisotropic(numeric_G(1, 2, 3, 0), Ed0));

    // with c = 0 the z1 - zeta1 equation has no hbar-derivative part, so no
    // Gaussian can be annihilated: the solve reports a singular pivot
    CHECK_THROWS_WITH_AS(coisotropic_wavefunction(numeric_G(1, 2, 0, 3), Ec0, {"x1", "x2"}),
                         doctest::Contains("singular pivot"), error);
}

TEST_CASE("coisotropic wavefunction solves the quantised system") {
    Sym s;
    Extension E = extend_coisotropic(s.G());
    GaussianForm psi = coisotropic_wavefunction(s.G(), E, {"x1", "x2"});
    // K = diag(a/c, b/d), J = (1/c, -1/d) (the 1/ℏ weight is the storage convention)
    CHECK(psi.K.at(0, 0) == s.a / s.c);
    CHECK(psi.K.at(1, 1) == s.b / s.d);
    CHECK(psi.K.at(0, 1).is_zero());
    CHECK(psi.J.at(0, 0) == F(1) / s.c);
    CHECK(psi.J.at(1, 0) == F(0) - F(1) / s.d);

    GaussianForm psi1 = coisotropic_wavefunction(numeric_G(1, 1, 1, 1),
                                                 extend_coisotropic(numeric_G(1, 1, 1, 1)),
                                                 {"x1", "x2"});
    CHECK(psi1.K == FMat::identity(2));
    CHECK(psi1.J.at(0, 0) == F(1));
    CHECK(psi1.J.at(1, 0) == F(-1));
}

TEST_CASE("central identity") {
    Sym s;
    // V = 0, K' = I: exponent ½(j₁² + j₂²)
    Ctx js = make_context({"j1", "j2"});
    auto [P, Q] = central_identity(FMat::identity(2), PolyT<F>(js), js, 0);
    PolyT<F> expect(js);
    expect += PolyT<F>::variable(js, 0, F(Rational(1, 2))) * PolyT<F>::variable(js, 0);
    expect += PolyT<F>::variable(js, 1, F(Rational(1, 2))) * PolyT<F>::variable(js, 1);
    CHECK(Q == expect);
    CHECK(P == PolyT<F>::constant(js, F(1)));

    // differentiating twice recovers (K')⁻¹
    FMat Kp(2, 2);
    Kp.at(0, 0) = s.a;
    Kp.at(0, 1) = Kp.at(1, 0) = s.B;
    Kp.at(1, 1) = s.d;
    auto [P2, Q2] = central_identity(Kp, PolyT<F>(js), js, 0);
    FMat inv = Kp.adjugate().scaled(F(1) / Kp.det_laplace());
    for (std::uint32_t i = 0; i < 2; ++i)
        for (std::uint32_t j = 0; j < 2; ++j)
            CHECK(Q2.diff(i).diff(j).constant_term() == inv.at(i, j));

    // singular kernel reports the transversality failure
    FMat sing(2, 2);
    sing.at(0, 0) = F(1);
    CHECK_THROWS_WITH_AS(central_identity_quadratic(sing, FMat(2, 1)),
                         doctest::Contains("transversally"), error);

    // V ≠ 0: exp(-t ∂₁) shifts, so the order-m expansion matches the Taylor
    // coefficients of exp(Q(j₁-t)) / exp(Q(j₁)) with K' = I (1 variable)
    Ctx j1 = make_context({"j1"});
    PolyT<F> V = PolyT<F>::variable(j1, 0, F(Rational(1, 3))); // V(∂) = (1/3)∂₁
    auto [P3, Q3] = central_identity(FMat::identity(1), V, j1, 4);
    // compare against the series sum_m (1/m!)(-t d/dj)^m exp(j^2/2), t = 1/3,
    // accumulated directly below
    PolyT<F> direct(j1);
    {
        PolyT<F> pm = PolyT<F>::constant(j1, F(1));
        F mfact(1);
        direct += pm;
        for (int m = 1; m <= 4; ++m) {
            pm = (pm.diff(0) + pm * Q3.diff(0)).scaled(F(0) - F(Rational(1, 3)));
            mfact = mfact * F(m);
            direct += pm.scaled(F(1) / mfact);
        }
    }
    CHECK(P3 == direct);
}

TEST_CASE("eliminate and quantise") {
    Sym s;
    Extension E = extend_coisotropic(s.G());
    EliminationResult elim = eliminate_and_quantise(s.G(), s.L(), E);
    // c1 = (ac + bd - c²A - 2cdB - d²D) / (cd[(a-cA)(b-dD) - B²cd])
    F num = s.a * s.c + s.b * s.d - s.c * s.c * s.A - F(2) * s.c * s.d * s.B - s.d * s.d * s.D;
    F den = s.c * s.d * ((s.a - s.c * s.A) * (s.b - s.d * s.D) - s.B * s.B * s.c * s.d);
    CHECK(elim.c1 == num / den);

    // non-transversal numeric tuple: B²cd = (a-cA)(b-dD)
    auto G1 = numeric_G(1, 1, 1, 1);
    auto L1 = numeric_L(1, 0, 0); // (1-1)(1-0) = 0 = B²cd
    Extension E1 = extend_coisotropic(G1);
    CHECK_THROWS_WITH_AS(eliminate_and_quantise(G1, L1, E1),
                         doctest::Contains("fail to intersect transversally"), error);
}

TEST_CASE("reduce wavefunction end to end") {
    Sym s;
    ReduceReport rep = reduce_wavefunction(s.G(), s.L());
    CHECK(rep.transversal);
    CHECK(rep.routes_agree); // symbolic equality over the parameter field
    CHECK(rep.C_gauss.at(0, 0) == rep.c1);
    CHECK(rep.c0_recomputed == F(0) - rep.c1);
    // Q kernel block is the paper's printed -[[A,B],[B,D]]
    CHECK(rep.Q_kernel.at(0, 0) == F(0) - s.A);
    CHECK(rep.Q_kernel.at(0, 1) == F(0) - s.B);

    // det(K+Q)·cd equals the printed locus polynomial (a-cA)(b-dD) - B²cd
    F locus = (s.a - s.c * s.A) * (s.b - s.d * s.D) - s.B * s.B * s.c * s.d;
    CHECK(rep.det_K_prime * s.c * s.d == locus);

    // pinned sample point: exp(z1²/ℏ), i.e. c1 = 2
    ReduceReport one = reduce_wavefunction(numeric_G(1, 1, 1, 1), numeric_L(0, 0, 0));
    CHECK(one.c1 == F(2));
    CHECK(one.routes_agree);

    // non-transversal tuple reports and stops
    ReduceReport degen = reduce_wavefunction(numeric_G(1, 1, 1, 1), numeric_L(1, 0, 0));
    CHECK_FALSE(degen.transversal);
}

TEST_CASE("reduction property suites") {
    CHECK(check_reduction_routes(41).ok);
    CHECK(check_transversality_trichotomy(42).ok);
}
