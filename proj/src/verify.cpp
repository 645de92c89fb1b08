#include "starq/verify.hpp"

#include "starq/reduction.hpp"
#include "starq/weyl.hpp"
#include "starq/wkb.hpp"

namespace starq {

Poly random_poly(Rng& rng, const Ctx& ctx, std::uint32_t max_degree, int max_terms) {
    std::uniform_int_distribution<int> coef(-4, 4), nterms(1, max_terms);
    std::uniform_int_distribution<std::uint32_t> deg(0, max_degree);
    std::uniform_int_distribution<std::uint32_t> pick(0, static_cast<std::uint32_t>(ctx->size()) - 1);
    Poly p(ctx);
    int n = nterms(rng);
    for (int t = 0; t < n; ++t) {
        std::vector<std::uint32_t> e(ctx->size(), 0);
        std::uint32_t d = deg(rng);
        for (std::uint32_t k = 0; k < d; ++k) e[pick(rng)]++;
        int c = coef(rng);
        p.add_term(Monomial::from_exponents(e), Rational(c == 0 ? 1 : c));
    }
    return p;
}

RMat random_skew(Rng& rng, std::size_t n) {
    std::uniform_int_distribution<int> coef(-3, 3);
    RMat m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            Rational v(coef(rng));
            m.at(i, j) = v;
            m.at(j, i) = -v;
        }
    return m;
}

RMat random_symmetric(Rng& rng, std::size_t n) {
    std::uniform_int_distribution<int> coef(-3, 3);
    RMat m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m.at(i, i) = Rational(coef(rng));
        for (std::size_t j = i + 1; j < n; ++j) {
            Rational v(coef(rng));
            m.at(i, j) = v;
            m.at(j, i) = v;
        }
    }
    return m;
}

namespace {
Ctx ctx4() { return make_context({"x1", "x2", "y1", "y2"}); }
Ctx ctx_xy() { return make_context({"x", "y"}); }

CheckResult pass(const std::string& name) { return {name, true, ""}; }
CheckResult fail(const std::string& name, const std::string& detail) {
    return {name, false, detail};
}
} // namespace

CheckResult check_ring_axioms(std::uint64_t seed, int trials) {
    Rng rng(seed);
    Ctx c = ctx4();
    for (int t = 0; t < trials; ++t) {
        Poly f = random_poly(rng, c, 5), g = random_poly(rng, c, 5), h = random_poly(rng, c, 5);
        if ((f * g) * h != f * (g * h)) return fail("ring axioms", "associativity");
        if (f * g != g * f) return fail("ring axioms", "commutativity");
        if (f * (g + h) != f * g + f * h) return fail("ring axioms", "distributivity");
    }
    return pass("ring axioms");
}

CheckResult check_mixed_partials(std::uint64_t seed, int trials) {
    Rng rng(seed);
    Ctx c = ctx4();
    std::uniform_int_distribution<std::uint32_t> pick(0, 3);
    for (int t = 0; t < trials; ++t) {
        Poly f = random_poly(rng, c, 6);
        std::uint32_t i = pick(rng), j = pick(rng);
        if (f.diff(i).diff(j) != f.diff(j).diff(i)) return fail("mixed partials", "asymmetry");
    }
    return pass("mixed partials");
}

CheckResult check_series_inverse_sqrt(std::uint64_t seed, int trials) {
    Rng rng(seed);
    Ctx c = make_context({"x"});
    std::uniform_int_distribution<int> coef(-4, 4);
    for (int t = 0; t < trials; ++t) {
        XSeries a(c, 10);
        int c0 = coef(rng);
        a.mutable_part(0) = Poly::constant(c, Rational(c0 == 0 ? 1 : c0));
        for (std::uint32_t d = 1; d <= 10; ++d) {
            Poly xd = Poly::constant(c, Rational(coef(rng)));
            for (std::uint32_t k = 0; k < d; ++k) xd *= Poly::variable(c, 0);
            a.mutable_part(d) = xd;
        }
        XSeries inv = series_inverse(a);
        if (!(a * inv == XSeries::constant(c, 1, 10))) return fail("series inverse", "a*inv(a) != 1");
        XSeries sq = a * a;
        XSeries root = series_sqrt(sq);
        if (!(root * root == sq)) return fail("series sqrt", "sqrt(a^2)^2 != a^2");
    }
    return pass("series inverse/sqrt");
}

CheckResult check_bracket_laws(std::uint64_t seed, int trials) {
    Rng rng(seed);
    Ctx c = ctx4();
    for (int t = 0; t < trials; ++t) {
        BiVector b(random_skew(rng, 4));
        Poly f = random_poly(rng, c, 3), g = random_poly(rng, c, 3), h = random_poly(rng, c, 3);
        if (bracket(f, g, b) + bracket(g, f, b) != Poly(c)) return fail("bracket", "skewness");
        if (bracket(f, g * h, b) != g * bracket(f, h, b) + bracket(f, g, b) * h)
            return fail("bracket", "Leibniz");
        Poly jac = bracket(f, bracket(g, h, b), b) + bracket(g, bracket(h, f, b), b) +
                   bracket(h, bracket(f, g, b), b);
        if (!jac.is_zero()) return fail("bracket", "Jacobi");
    }
    return pass("bracket laws");
}

CheckResult check_star_associativity(std::uint64_t seed, int trials) {
    Rng rng(seed);
    Ctx c = ctx4();
    for (int t = 0; t < trials; ++t) {
        StarContext ctx(BiVector(random_skew(rng, 4)), 4);
        Poly f = random_poly(rng, c, 3), g = random_poly(rng, c, 3), h = random_poly(rng, c, 3);
        HSeries lhs = star(star(f, g, ctx), HSeries::from_poly(h, 4), ctx);
        HSeries rhs = star(HSeries::from_poly(f, 4), star(g, h, ctx), ctx);
        if (!(lhs == rhs)) return fail("star associativity", "triple " + std::to_string(t));
    }
    return pass("star associativity");
}

CheckResult check_bracket_recovery(std::uint64_t seed, int trials) {
    Rng rng(seed);
    Ctx c = ctx4();
    for (int t = 0; t < trials; ++t) {
        BiVector b(random_skew(rng, 4));
        StarContext ctx(b, 4);
        Poly f = random_poly(rng, c, 3), g = random_poly(rng, c, 3);
        HSeries comm = commutator(HSeries::from_poly(f, 4), HSeries::from_poly(g, 4), ctx);
        if (!comm.coeff(0).is_zero()) return fail("bracket recovery", "commutator not O(h)");
        if (comm.div_hbar().coeff(0) != bracket(f, g, b))
            return fail("bracket recovery", "h^0 part != Poisson bracket");
    }
    return pass("bracket recovery");
}

CheckResult check_gauge_intertwining(std::uint64_t seed, int trials) {
    Rng rng(seed);
    Ctx c = ctx4();
    for (int t = 0; t < trials; ++t) {
        BiVector b(random_skew(rng, 4));
        GaugePart g_(random_symmetric(rng, 4));
        StarContext cpi(b, 4), cpg(b, g_, 4);
        Poly f = random_poly(rng, c, 3), g = random_poly(rng, c, 3);
        HSeries lhs = gauge_map(star(f, g, cpi), g_, 4);
        HSeries rhs = star(gauge_map(f, g_, 4), gauge_map(g, g_, 4), cpg);
        if (!(lhs == rhs)) return fail("gauge intertwining", "pair " + std::to_string(t));
    }
    return pass("gauge intertwining");
}

CheckResult check_tau_skew_reduction(std::uint64_t seed, int trials) {
    Rng rng(seed);
    Ctx c = ctx4();
    for (int t = 0; t < trials; ++t) {
        RMat tau = random_skew(rng, 4) + random_symmetric(rng, 4);
        auto [pi, gam] = skew_split(tau);
        StarContext ctau(pi, gam, 4), cskew(pi, 4);
        GaugePart neg(gam.gamma.scaled(Rational(-1)));
        Poly f = random_poly(rng, c, 3), g = random_poly(rng, c, 3);
        HSeries direct = star(f, g, ctau);
        HSeries via =
            gauge_map(star(gauge_map(f, neg, 4), gauge_map(g, neg, 4), cskew), gam, 4);
        if (!(direct == via)) return fail("tau-to-skew reduction", "pair " + std::to_string(t));
    }
    return pass("tau-to-skew reduction");
}

CheckResult check_yang_baxter(std::uint64_t seed, int trials) {
    Rng rng(seed);
    Ctx c = ctx4();
    for (int t = 0; t < trials; ++t) {
        StarContext ctx = braid(StarContext(BiVector(random_skew(rng, 4)), 4));
        Poly f = random_poly(rng, c, 2, 1), g = random_poly(rng, c, 2, 1),
             h = random_poly(rng, c, 2, 1);
        if (!yang_baxter_residual(ctx, f, g, h).empty())
            return fail("Yang-Baxter", "monomial triple " + std::to_string(t));
    }
    return pass("Yang-Baxter");
}

CheckResult check_wick_oracle(std::uint64_t seed, int trials) {
    Rng rng(seed);
    Ctx c = ctx4();
    for (int t = 0; t < trials; ++t) {
        StarContext ctx(BiVector(random_skew(rng, 4)), 3);
        Poly f = random_poly(rng, c, 3), g = random_poly(rng, c, 3);
        if (!(star_wick_oracle(f, g, ctx) == star(f, g, ctx)))
            return fail("Wick oracle", "pair " + std::to_string(t));
    }
    return pass("Wick oracle");
}

CheckResult check_phi_homomorphism(std::uint64_t seed, int trials) {
    Ctx xy = ctx_xy();
    WeylContext w(xy, {{0, 1}}, 6);
    StarContext sc(w.matching_bivector(), 6);
    for (std::uint32_t a1 = 0; a1 <= 4; ++a1)
        for (std::uint32_t b1 = 0; a1 + b1 <= 4; ++b1)
            for (std::uint32_t a2 = 0; a2 <= 4; ++a2)
                for (std::uint32_t b2 = 0; a2 + b2 <= 4; ++b2) {
                    Poly f = Poly::monomial(xy, Monomial::from_exponents({a1, b1}), 1);
                    Poly g = Poly::monomial(xy, Monomial::from_exponents({a2, b2}), 1);
                    if (!(phi(star(f, g, sc), w) == weyl_mul(phi(f, w), phi(g, w))))
                        return fail("phi homomorphism", "monomial pair");
                }
    Rng rng(seed);
    Ctx c = ctx4();
    WeylContext w2(c, {{0, 2}, {1, 3}}, 5);
    StarContext sc2(w2.matching_bivector(), 5);
    for (int t = 0; t < trials; ++t) {
        Poly f = random_poly(rng, c, 3), g = random_poly(rng, c, 3);
        if (!(phi(star(f, g, sc2), w2) == weyl_mul(phi(f, w2), phi(g, w2))))
            return fail("phi homomorphism", "random pair " + std::to_string(t));
    }
    return pass("phi homomorphism");
}

CheckResult check_weyl_algebra(std::uint64_t seed, int trials) {
    Rng rng(seed);
    Ctx c = ctx4();
    WeylContext w(c, {{0, 2}, {1, 3}}, 5);
    // canonical commutation
    for (std::uint32_t i = 0; i < 2; ++i)
        for (std::uint32_t j = 0; j < 2; ++j) {
            WeylOp lhs = weyl_mul(WeylOp::momentum(w, i), WeylOp::position(w, j)) -
                         weyl_mul(WeylOp::position(w, j), WeylOp::momentum(w, i));
            WeylOp expect(w);
            if (i == j)
                expect.add_term(Monomial{}, Monomial{}, HScalar::hbar_power(1, 1, w.order));
            if (!(lhs == expect)) return fail("weyl algebra", "canonical commutation");
        }
    for (int t = 0; t < trials; ++t) {
        WeylOp P = phi(random_poly(rng, c, 3), w), Q = phi(random_poly(rng, c, 3), w),
               R = phi(random_poly(rng, c, 3), w);
        if (!(weyl_mul(weyl_mul(P, Q), R) == weyl_mul(P, weyl_mul(Q, R))))
            return fail("weyl algebra", "associativity");
    }
    return pass("weyl algebra");
}

namespace {
Poly conic_curve(const Ctx& xy) {
    Poly x = Poly::variable(xy, 0), y = Poly::variable(xy, 1);
    return -y + x * x + Rational(2) * (x * y) + y * y;
}
} // namespace

CheckResult check_conic_series() {
    Ctx xy = ctx_xy();
    Poly H = conic_curve(xy);
    XSeries u0 = branch_solve(H, 12);
    // Catalan numbers against the closed form (2n)!/((n+1)! n!)
    for (unsigned n = 1; n <= 10; ++n) {
        Rational expect(factorial(2 * n), factorial(n + 1) * factorial(n));
        if (u0.coeff1(n + 1) != expect) return fail("conic branch", "x^" + std::to_string(n + 1));
    }
    if (!substitute_fiber(H, 0, 1, u0).is_zero()) return fail("conic branch", "H(x,u0) != 0");
    CurveIdeal curve(H, HScalar::constant(1, 8));
    WKBSolution sol = wkb_solve(curve, 2, 10);
    for (unsigned n = 1; n <= 8; ++n) {
        Rational expect = rational_pow(4, n) - Rational(factorial(2 * n), factorial(n) * factorial(n));
        if (sol.u[1].coeff1(n) != expect) return fail("genus-one series", "x^" + std::to_string(n));
    }
    return pass("conic series");
}

CheckResult check_wkb_full_residual() {
    Ctx xy = ctx_xy();
    Poly H = conic_curve(xy);
    for (int j : {1, 0}) {
        CurveIdeal curve(H, HScalar::constant(j, 6));
        // solve past the target degree so the recomputed residual is exact to 8
        WKBSolution sol = wkb_solve(curve, 3, 14);
        HXSeries res = wkb_residual(curve, sol.u, 3, 14);
        for (std::uint32_t g = 0; g <= 3; ++g) {
            if (res.level(g).cap() < 8) return fail("wkb residual", "window too small");
            if (!res.level(g).truncated(8).is_zero())
                return fail("wkb residual", "order " + std::to_string(g));
        }
    }
    return pass("wkb residual");
}

CheckResult check_lambda_recurrence() {
    Ctx xy = ctx_xy();
    Poly H = conic_curve(xy);
    RMat pi(2, 2);
    pi.at(0, 1) = Rational(-1);
    pi.at(1, 0) = Rational(1);
    StarContext sc(BiVector(pi), 4);
    CurveIdeal curve(H, HScalar(4));
    LambdaSeries L = lambda_solve(1, 0, 10);
    for (std::size_t n = 1; n + 2 < L.count(); ++n)
        if (L.coeff(n + 2) * Rational((n + 1) * (n + 2)) + L.coeff(n - 1) != 0)
            return fail("lambda recurrence", "index " + std::to_string(n + 2));
    if (!lambda_residual_vanishes(curve, L, sc)) return fail("lambda residual", "seeds (1,0)");
    LambdaSeries L2 = lambda_solve(0, 1, 10);
    if (!lambda_residual_vanishes(curve, L2, sc)) return fail("lambda residual", "seeds (0,1)");
    LambdaSeries bad = L;
    bad.lam[3] += Rational(1, 7);
    if (lambda_residual_vanishes(curve, bad, sc)) return fail("lambda residual", "mutation missed");
    return pass("lambda recurrence and residual");
}

CheckResult check_coisotropy() {
    Ctx xy = ctx_xy();
    RMat pi(2, 2);
    pi.at(0, 1) = Rational(-1); // {y,x} = 1
    pi.at(1, 0) = Rational(1);
    BiVector b(pi);
    LinearIdeal point({Poly::variable(xy, 0), Poly::variable(xy, 1)});
    if (is_coisotropic(point, b)) return fail("coisotropy", "<x,y> accepted");
    if (!is_coisotropic(conic_curve(xy), b)) return fail("coisotropy", "<H> rejected");

    Ctx c4 = ctx4();
    RMat pi4(4, 4);
    for (int i = 0; i < 2; ++i) {
        pi4.at(i, 2 + i) = Rational(1); // {x_i, y_i} = 1
        pi4.at(2 + i, i) = Rational(-1);
    }
    BiVector b4(pi4);
    Rng rng(7);
    std::uniform_int_distribution<int> coef(-5, 5);
    for (int t = 0; t < 10; ++t) {
        Rational A(coef(rng)), B(coef(rng)), D(coef(rng));
        Poly h1 = Poly::variable(c4, 2) + Poly::variable(c4, 0).scaled(A) +
                  Poly::variable(c4, 1).scaled(B);
        Poly h2 = Poly::variable(c4, 3) + Poly::variable(c4, 0).scaled(B) +
                  Poly::variable(c4, 1).scaled(D);
        if (!is_coisotropic(LinearIdeal({h1, h2}), b4))
            return fail("coisotropy", "Lagrangian pair with B=C rejected");
        Poly h2bad = h2 + Poly::variable(c4, 0); // breaks B=C
        if (is_coisotropic(LinearIdeal({h1, h2bad}), b4))
            return fail("coisotropy", "B != C accepted");
    }
    return pass("coisotropy checker");
}

namespace {
struct KsTuple {
    Rational a, b, c, d, A, B, D;
};

F cf(const Rational& v) { return F(v); }

CoisotropicSubspace ks_G(const KsTuple& t) {
    FMat X(1, 2), Y(1, 2);
    X.at(0, 0) = cf(t.a);
    X.at(0, 1) = cf(t.b);
    Y.at(0, 0) = cf(t.c);
    Y.at(0, 1) = cf(t.d);
    return CoisotropicSubspace(X, Y);
}

LinearLagrangian ks_L(const KsTuple& t) {
    FMat M = FMat::identity(2), N(2, 2);
    N.at(0, 0) = cf(t.A);
    N.at(0, 1) = cf(t.B);
    N.at(1, 0) = cf(t.B);
    N.at(1, 1) = cf(t.D);
    return LinearLagrangian(M, N);
}

Rational ks_locus(const KsTuple& t) { // (a-cA)(b-dD) - B²cd
    return (t.a - t.c * t.A) * (t.b - t.d * t.D) - t.B * t.B * t.c * t.d;
}

KsTuple random_tuple(Rng& rng) {
    std::uniform_int_distribution<int> nz(1, 5), any(-4, 4), den(1, 3);
    auto q = [&](bool nonzero) {
        int n = nonzero ? nz(rng) * (any(rng) >= 0 ? 1 : -1) : any(rng);
        return Rational(n, den(rng));
    };
    return {q(true), q(true), q(true), q(true), q(false), q(false), q(false)};
}
} // namespace

CheckResult check_reduction_routes(std::uint64_t seed, int tuples) {
    Rng rng(seed);
    int done = 0;
    while (done < tuples) {
        KsTuple t = random_tuple(rng);
        if (ks_locus(t) == 0) continue;
        ReduceReport rep = reduce_wavefunction(ks_G(t), ks_L(t));
        if (!rep.transversal) return fail("reduction routes", "transversal tuple flagged");
        if (!rep.routes_agree) return fail("reduction routes", "routes disagree");
        ++done;
    }
    // the pinned sample point: a=b=c=d=1, A=B=D=0 gives exp(z1^2/h)
    KsTuple one{1, 1, 1, 1, 0, 0, 0};
    ReduceReport rep = reduce_wavefunction(ks_G(one), ks_L(one));
    if (!(rep.c1 == F(2)) || !rep.routes_agree)
        return fail("reduction routes", "sample point c1 != 2");
    return pass("reduction route equivalence");
}

CheckResult check_transversality_trichotomy(std::uint64_t seed, int tuples) {
    Rng rng(seed);
    int done = 0;
    while (done < tuples) {
        KsTuple t = random_tuple(rng);
        bool on_locus = done % 2 == 1; // alternate off/on the degenerate locus
        if (on_locus) {
            // force (a-cA)(b-dD) = B²cd by solving for b
            Rational denom = t.a - t.c * t.A;
            if (denom == 0) continue;
            t.b = t.d * t.D + t.B * t.B * t.c * t.d / denom;
            if (t.b == 0) continue;
        } else if (ks_locus(t) == 0) {
            continue;
        }
        bool locus_zero = ks_locus(t) == 0;
        ReduceReport rep = reduce_wavefunction(ks_G(t), ks_L(t));
        bool det_zero = rep.det_K_prime.is_zero();
        bool elim_fails = false;
        try {
            eliminate_and_quantise(ks_G(t), ks_L(t), rep.extension);
        } catch (const error&) {
            elim_fails = true;
        }
        if (det_zero != locus_zero || elim_fails != locus_zero)
            return fail("transversality trichotomy",
                        "detections disagree at tuple " + std::to_string(done));
        ++done;
    }
    return pass("transversality trichotomy");
}

std::vector<CheckResult> run_all_checks(std::uint64_t seed) {
    return {
        check_ring_axioms(seed),
        check_mixed_partials(seed + 1),
        check_series_inverse_sqrt(seed + 2),
        check_bracket_laws(seed + 3),
        check_star_associativity(seed + 4),
        check_bracket_recovery(seed + 5),
        check_gauge_intertwining(seed + 6),
        check_tau_skew_reduction(seed + 7),
        check_yang_baxter(seed + 8),
        check_wick_oracle(seed + 9),
        check_phi_homomorphism(seed + 10),
        check_weyl_algebra(seed + 11),
        check_conic_series(),
        check_wkb_full_residual(),
        check_lambda_recurrence(),
        check_coisotropy(),
        check_reduction_routes(seed + 12),
        check_transversality_trichotomy(seed + 13),
    };
}

} // namespace starq
