#include <doctest.h>

#include "starq/expr.hpp"
#include "starq/poisson.hpp"
#include "starq/verify.hpp"

using namespace starq;

namespace {
Ctx xy() { return make_context({"x", "y"}); }

RMat conic_pi() { // {y,x} = 1
    RMat pi(2, 2);
    pi.at(0, 1) = Rational(-1);
    pi.at(1, 0) = Rational(1);
    return pi;
}

RMat canonical4() { // {x_i,y_i} = 1 on (x1,x2,y1,y2)
    RMat pi(4, 4);
    for (int i = 0; i < 2; ++i) {
        pi.at(i, 2 + i) = Rational(1);
        pi.at(2 + i, i) = Rational(-1);
    }
    return pi;
}
} // namespace

TEST_CASE("bimap on simple tensors") {
    Ctx c = xy();
    Poly x = Poly::variable(c, 0), y = Poly::variable(c, 1);
    auto out = tensor_canonical(bimap_apply(conic_pi(), {{x, y}}));
    // -1 ⊗ 1
    REQUIRE(out.size() == 1);
    CHECK(out.begin()->first == std::make_pair(Monomial{}, Monomial{}));
    CHECK(out.begin()->second == -1);

    CHECK(bimap_apply(conic_pi(), {{Poly::constant(c, 1), y}}).empty());
    CHECK(bimap_apply(conic_pi(), {}).empty());
}

TEST_CASE("bracket anchors") {
    Ctx c = xy();
    BiVector b(conic_pi());
    Poly x = Poly::variable(c, 0), y = Poly::variable(c, 1);
    CHECK(bracket(y, x, b) == Poly::constant(c, 1));
    CHECK(bracket(x, x, b).is_zero());

    Ctx c4 = make_context({"x1", "x2", "y1", "y2"});
    BiVector b4(canonical4());
    Poly h1 = parse_expr("y1 + 2*x1 + 3*x2", c4);
    Poly h2 = parse_expr("y2 + 3*x1 + 5*x2", c4); // B = C = 3
    CHECK(bracket(h1, h2, b4).is_zero());
    Poly h2bad = parse_expr("y2 + 4*x1 + 5*x2", c4);
    CHECK(bracket(h1, h2bad, b4) == Poly::constant(c4, -1)); // B - C under {x_i,y_i} = 1
}

TEST_CASE("skew split") {
    RMat tau(2, 2);
    tau.at(0, 1) = Rational(1);
    auto [pi, gamma] = skew_split(tau);
    CHECK(pi.pi.at(0, 1) == Rational(1, 2));
    CHECK(pi.pi.at(1, 0) == Rational(-1, 2));
    CHECK(gamma.gamma.at(0, 1) == Rational(1, 2));
    CHECK(gamma.gamma.at(1, 0) == Rational(1, 2));
    CHECK(pi.pi + gamma.gamma == tau);

    RMat skew = conic_pi();
    auto [p2, g2] = skew_split(skew);
    CHECK(p2.pi == skew);
    CHECK(g2.gamma == RMat(2, 2));

    RMat sym(2, 2);
    sym.at(0, 0) = Rational(3);
    sym.at(0, 1) = sym.at(1, 0) = Rational(1);
    auto [p3, g3] = skew_split(sym);
    CHECK(p3.pi == RMat(2, 2));
    CHECK(g3.gamma == sym);
}

TEST_CASE("coisotropy checker") {
    Ctx c = xy();
    BiVector b(conic_pi());
    // the skyscraper non-example: {y,x} = 1 ∉ <x,y>
    CHECK_FALSE(is_coisotropic(LinearIdeal({Poly::variable(c, 0), Poly::variable(c, 1)}), b));
    // single generator of any degree
    CHECK(is_coisotropic(parse_expr("-y + x^2 + 2*x*y + y^2", c), b));

    Ctx c4 = make_context({"x1", "x2", "y1", "y2"});
    BiVector b4(canonical4());
    Poly h1 = parse_expr("y1 + 7*x1 + 2*x2", c4);
    Poly h2 = parse_expr("y2 + 2*x1 - 3*x2", c4);
    CHECK(is_coisotropic(LinearIdeal({h1, h2}), b4));
    Poly h2bad = parse_expr("y2 + 5*x1 - 3*x2", c4);
    CHECK_FALSE(is_coisotropic(LinearIdeal({h1, h2bad}), b4));
}

TEST_CASE("unsupported ideal shapes are rejected") {
    Ctx c = xy();
    Poly q = parse_expr("x^2 + y", c);
    CHECK_THROWS_AS(LinearIdeal({q, Poly::variable(c, 0)}), error);
    CHECK_THROWS_AS(LinearIdeal({Poly::variable(c, 0), Poly::variable(c, 0).scaled(2)}), error);
}

TEST_CASE("bracket laws") {
    CHECK(check_bracket_laws(11).ok);
}
