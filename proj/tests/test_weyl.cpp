#include <doctest.h>

#include <algorithm>

#include "starq/expr.hpp"
#include "starq/verify.hpp"
#include "starq/weyl.hpp"

using namespace starq;

namespace {
Ctx xy() { return make_context({"x", "y"}); }
WeylContext wctx(std::uint32_t order = 6) { return WeylContext(xy(), {{0, 1}}, order); }

// independent oracle: the Weyl ordering of x^a y^b as the literal average
// over all interleavings of the generator word
WeylOp interleaving_average(const WeylContext& w, std::uint32_t a, std::uint32_t b) {
    std::vector<int> word(a, 0);
    word.insert(word.end(), b, 1);
    std::sort(word.begin(), word.end());
    WeylOp sum(w);
    int count = 0;
    do {
        WeylOp prod = WeylOp::identity(w);
        for (int g : word)
            prod = weyl_mul(prod, g == 0 ? WeylOp::position(w, 0) : WeylOp::momentum(w, 0));
        sum = sum + prod;
        ++count;
    } while (std::next_permutation(word.begin(), word.end()));
    return sum.scaled(Rational(1, count));
}
} // namespace

TEST_CASE("weyl_mul rewrites") {
    WeylContext w = wctx();
    WeylOp x = WeylOp::position(w, 0), p = WeylOp::momentum(w, 0);

    // (ℏ∂)·x = x·(ℏ∂) + ℏ
    WeylOp px = weyl_mul(p, x);
    WeylOp expect(w);
    expect.add_term(Monomial::variable(0), Monomial::variable(0), HScalar::constant(1, w.order));
    expect.add_term(Monomial{}, Monomial{}, HScalar::hbar_power(1, 1, w.order));
    CHECK(px == expect);

    // x·(ℏ∂) then ·x → x²(ℏ∂) + ℏx
    WeylOp xpx = weyl_mul(weyl_mul(x, p), x);
    WeylOp expect2(w);
    expect2.add_term(Monomial::variable(0, 2), Monomial::variable(0), HScalar::constant(1, w.order));
    expect2.add_term(Monomial::variable(0), Monomial{}, HScalar::hbar_power(1, 1, w.order));
    CHECK(xpx == expect2);

    CHECK(weyl_mul(px, WeylOp::identity(w)) == px);
}

TEST_CASE("phi on anchor monomials") {
    WeylContext w = wctx();
    Ctx c = xy();

    // φ(xy) = x·(ℏ∂) + ℏ/2
    WeylOp fxy = phi(parse_expr("x*y", c), w);
    WeylOp expect(w);
    expect.add_term(Monomial::variable(0), Monomial::variable(0), HScalar::constant(1, w.order));
    expect.add_term(Monomial{}, Monomial{}, HScalar::hbar_power(1, Rational(1, 2), w.order));
    CHECK(fxy == expect);

    // φ(x²) = x²
    WeylOp fx2 = phi(parse_expr("x^2", c), w);
    WeylOp expect2(w);
    expect2.add_term(Monomial::variable(0, 2), Monomial{}, HScalar::constant(1, w.order));
    CHECK(fx2 == expect2);

    // φ(H) = -ℏ∂ + x² + 2ℏ x∂ + ℏ²∂² + ℏ
    WeylOp fH = phi(parse_expr("-y + x^2 + 2*x*y + y^2", c), w);
    WeylOp expect3(w);
    expect3.add_term(Monomial{}, Monomial::variable(0), HScalar::constant(-1, w.order));
    expect3.add_term(Monomial::variable(0, 2), Monomial{}, HScalar::constant(1, w.order));
    expect3.add_term(Monomial::variable(0), Monomial::variable(0), HScalar::constant(2, w.order));
    expect3.add_term(Monomial{}, Monomial::variable(0, 2), HScalar::constant(1, w.order));
    expect3.add_term(Monomial{}, Monomial{}, HScalar::hbar_power(1, 1, w.order));
    CHECK(fH == expect3);

    // unpaired variable
    Ctx c3 = make_context({"x", "y", "t"});
    CHECK_THROWS_AS(phi(Poly::variable(c3, 2), WeylContext(c3, {{0, 1}}, 6)), error);
}

TEST_CASE("phi equals the interleaving average") {
    WeylContext w = wctx();
    Ctx c = xy();
    for (std::uint32_t a = 0; a <= 3; ++a)
        for (std::uint32_t b = 0; a + b <= 5 && b <= 3; ++b) {
            Poly mono = Poly::monomial(c, Monomial::from_exponents({a, b}), 1);
            CHECK(phi(mono, w) == interleaving_average(w, a, b));
        }
}

TEST_CASE("weyl_apply") {
    WeylContext w = wctx(4);
    Ctx c = xy();
    Ctx xc = make_context({"x"});
    XSeries x2(xc, 6);
    x2.mutable_part(2) = Poly::variable(xc, 0) * Poly::variable(xc, 0);

    HXSeries d = weyl_apply(WeylOp::momentum(w, 0), x2);
    CHECK(d.level(0).is_zero());
    CHECK(d.level(1).coeff1(1) == 2); // 2ℏx

    HXSeries h = weyl_apply(phi(parse_expr("-y + x^2 + 2*x*y + y^2", c), w),
                            XSeries::constant(xc, 1, 6));
    CHECK(h.level(0).coeff1(2) == 1); // x²
    CHECK(h.level(1).coeff1(0) == 1); // + ℏ
    CHECK(h.level(2).is_zero());

    CHECK(weyl_apply(WeylOp(w), x2).is_zero());
}

TEST_CASE("weyl property suites") {
    CHECK(check_phi_homomorphism(31).ok);
    CHECK(check_weyl_algebra(32).ok);
}
