#include <doctest.h>

#include <sstream>

#include <nlohmann/json.hpp>

#include "starq/cli.hpp"
#include "starq/expr.hpp"
#include "starq/verify.hpp"

using namespace starq;

TEST_CASE("expression parser") {
    Ctx c = make_context({"x", "y"});
    Poly H = parse_expr("-y + x^2 + 2*x*y + y^2", c);
    Poly x = Poly::variable(c, 0), y = Poly::variable(c, 1);
    CHECK(H == -y + x * x + (x * y).scaled(2) + y * y);

    CHECK(parse_expr("0", c).is_zero());
    CHECK(parse_expr("1/2*x^2", c) == (x * x).scaled(Rational(1, 2)));
    CHECK(parse_expr("(x + y)^2", c) == x * x + (x * y).scaled(2) + y * y);
    CHECK(parse_expr("  - x ", c) == -x);

    CHECK_THROWS_AS(parse_expr("x + z", c), parse_error);
    CHECK_THROWS_AS(parse_expr("x x", c), parse_error);
    CHECK_THROWS_AS(parse_expr("2x", c), parse_error); // implicit multiplication
    CHECK_THROWS_AS(parse_expr("x + ", c), parse_error);
    CHECK_THROWS_AS(parse_expr("1/0", c), parse_error);
    try {
        parse_expr("x + q", c);
        CHECK(false);
    } catch (const parse_error& e) {
        CHECK(e.offset == 4);
    }
}

TEST_CASE("print/parse round trip") {
    Ctx c = make_context({"x", "y", "z"});
    Rng rng(5);
    for (int t = 0; t < 60; ++t) {
        Poly p = random_poly(rng, c, 5, 6);
        CHECK(parse_expr(to_string(p), c) == p);
    }
}

namespace {
int run_req(const Request& req, std::string& out_text) {
    std::ostringstream out, err;
    int code = run(req, out, err);
    out_text = out.str() + err.str();
    return code;
}
} // namespace

TEST_CASE("star subcommand") {
    Request req;
    req.subcommand = "star";
    req.exprs = {"x", "y"};
    std::string text;
    CHECK(run_req(req, text) == 0);
    CHECK(text.find("h^0: x*y") != std::string::npos);
    CHECK(text.find("h^1: -1/2") != std::string::npos);

    req.json = true;
    CHECK(run_req(req, text) == 0);
    auto j = nlohmann::json::parse(text);
    CHECK(j["schema_version"] == 1);
    CHECK(j["result"][1][0]["n"] == "-1");
    CHECK(j["result"][1][0]["d"] == "2");

    req.exprs = {"x + q", "y"};
    CHECK(run_req(req, text) == 2);
}

TEST_CASE("wkb subcommand") {
    Request req;
    req.subcommand = "wkb";
    req.preset = "conic";
    req.orders = 1;
    req.x_degree = 8;
    req.json = true;
    std::string text;
    CHECK(run_req(req, text) == 0);
    auto j = nlohmann::json::parse(text);
    CHECK(j["u"][0][2] == "1");
    CHECK(j["u"][0][5] == "14");
    CHECK(j["u"][1][1] == "2");
    CHECK(j["u"][1][2] == "10");
}

TEST_CASE("lambda subcommand") {
    Request req;
    req.subcommand = "lambda";
    req.seeds = "1,0";
    req.count = 10;
    req.json = true;
    std::string text;
    CHECK(run_req(req, text) == 0);
    auto j = nlohmann::json::parse(text);
    CHECK(j["lambda"][3] == "-1/6");
    CHECK(j["lambda"][6] == "1/180");
    CHECK(j["residual_vanishes"] == true);
}

TEST_CASE("reduce subcommand") {
    Request req;
    req.subcommand = "reduce";
    req.preset = "ks4d";
    req.params = "a=1,b=1,c=1,d=1,A=0,B=0,D=0";
    req.json = true;
    std::string text;
    CHECK(run_req(req, text) == 0);
    auto j = nlohmann::json::parse(text);
    CHECK(j["verdict"] == "AGREE");
    CHECK(j["c1"]["str"] == "2");

    req.params = "a=1,b=1,c=1,d=1,A=1,B=0,D=0"; // on the degenerate locus
    CHECK(run_req(req, text) == 1);
    CHECK(text.find("transversally") != std::string::npos);

    req.params = "a=1,q=2";
    CHECK(run_req(req, text) == 2);
}

TEST_CASE("usage errors") {
    Request req;
    req.subcommand = "nonsense";
    std::string text;
    CHECK(run_req(req, text) == 2);

    req.subcommand = "star";
    req.exprs = {"x"};
    CHECK(run_req(req, text) == 2);
}
