#include "starq/cli.hpp"

#include <cstdlib>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "starq/expr.hpp"
#include "starq/json_out.hpp"
#include "starq/verify.hpp"
#include "starq/wkb.hpp"

namespace starq {

namespace {

Rational parse_rational_str(const std::string& s) {
    auto slash = s.find('/');
    std::string n = s.substr(0, slash);
    if (slash == std::string::npos) return Rational(Integer(n));
    Integer den(s.substr(slash + 1));
    if (den == 0) throw error("zero denominator in rational '" + s + "'");
    return Rational(Integer(n), den);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep))
        if (!item.empty()) out.push_back(item);
    return out;
}

RMat parse_matrix(const std::string& spec, std::size_t dim) {
    if (spec == "std2") {
        if (dim != 2) throw error("pi preset std2 needs exactly two variables");
        RMat pi(2, 2);
        pi.at(0, 1) = Rational(-1); // {y, x} = 1
        pi.at(1, 0) = Rational(1);
        return pi;
    }
    if (spec == "canonical") {
        if (dim % 2 != 0) throw error("pi preset canonical needs an even variable count");
        std::size_t n = dim / 2;
        RMat pi(dim, dim);
        for (std::size_t i = 0; i < n; ++i) {
            pi.at(i, n + i) = Rational(1); // {x_i, y_i} = 1
            pi.at(n + i, i) = Rational(-1);
        }
        return pi;
    }
    auto rows = split(spec, ';');
    if (rows.size() != dim) throw error("matrix row count does not match variable count");
    RMat m(dim, dim);
    for (std::size_t i = 0; i < dim; ++i) {
        auto entries = split(rows[i], ',');
        if (entries.size() != dim) throw error("matrix column count does not match variable count");
        for (std::size_t j = 0; j < dim; ++j) m.at(i, j) = parse_rational_str(entries[j]);
    }
    return m;
}

std::string hseries_table(const HSeries& h) {
    std::string out;
    for (std::uint32_t k = 0; k <= h.order(); ++k) {
        out += "h^" + std::to_string(k) + ": " + to_string(h.coeff(k)) + "\n";
    }
    return out;
}

int cmd_star(const Request& req, std::ostream& out, std::ostream& err) {
    std::vector<std::string> vars = req.vars.empty() ? std::vector<std::string>{"x", "y"} : req.vars;
    Ctx ctx = make_context(vars);
    if (req.exprs.size() != 2) {
        err << "star: exactly two expressions required\n";
        return 2;
    }
    Poly f = parse_expr(req.exprs[0], ctx), g = parse_expr(req.exprs[1], ctx);
    BiVector pi(parse_matrix(req.pi_spec, ctx->size()));
    HSeries result = [&] {
        if (req.gauge_spec.empty()) return star(f, g, StarContext(pi, req.hbar_order));
        GaugePart gamma(parse_matrix(req.gauge_spec, ctx->size()));
        return star(f, g, StarContext(pi, gamma, req.hbar_order));
    }();
    if (req.json) {
        nlohmann::json j{{"schema_version", kSchemaVersion},
                         {"command", "star"},
                         {"vars", vars},
                         {"result", hseries_to_json(result)},
                         {"printed", to_string(result)}};
        out << j.dump(2) << "\n";
    } else {
        out << hseries_table(result);
    }
    return 0;
}

nlohmann::json coeff_row(const XSeries& s) {
    nlohmann::json row = nlohmann::json::array();
    for (std::uint32_t d = 0; d <= s.cap(); ++d)
        row.push_back(to_string(s.coeff1(d)));
    return row;
}

int cmd_wkb(const Request& req, std::ostream& out, std::ostream& err) {
    Ctx xy = make_context({"x", "y"});
    std::string curve_text = req.curve;
    std::string shift_text = req.shift;
    if (req.preset == "conic") {
        curve_text = "-y + x^2 + 2*x*y + y^2";
        shift_text = "1"; // reproduces the map-counting series
    } else if (!req.preset.empty()) {
        err << "wkb: unknown preset '" << req.preset << "'\n";
        return 2;
    }
    if (curve_text.empty()) {
        err << "wkb: --curve or --preset required\n";
        return 2;
    }
    Poly H = parse_expr(curve_text, xy);
    HScalar j = HScalar::constant(parse_rational_str(shift_text), req.orders);
    CurveIdeal curve(H, j);
    WKBSolution sol = wkb_solve(curve, req.orders, req.x_degree);
    if (req.json) {
        nlohmann::json u = nlohmann::json::array(), S = nlohmann::json::array();
        for (const auto& ug : sol.u) u.push_back(coeff_row(ug));
        for (const auto& Sg : sol.S) S.push_back(coeff_row(Sg));
        nlohmann::json jj{{"schema_version", kSchemaVersion}, {"command", "wkb"},
                          {"curve", to_string(H)},           {"shift", shift_text},
                          {"u", u},                          {"S", S},
                          {"residual", "0"}};
        out << jj.dump(2) << "\n";
    } else {
        out << "curve: " << to_string(H) << "   shift j = " << shift_text << "\n";
        for (std::size_t g = 0; g < sol.u.size(); ++g) {
            out << "u" << g << ":";
            for (std::uint32_t d = 0; d <= sol.u[g].cap(); ++d)
                out << " " << to_string(sol.u[g].coeff1(d));
            out << "\n";
        }
        for (std::size_t g = 0; g < sol.S.size(); ++g) {
            out << "S" << g << ":";
            for (std::uint32_t d = 0; d <= sol.S[g].cap(); ++d)
                out << " " << to_string(sol.S[g].coeff1(d));
            out << "\n";
        }
        out << "residual: 0 (exact to h^" << req.orders << ", x^" << req.x_degree << ")\n";
    }
    return 0;
}

int cmd_lambda(const Request& req, std::ostream& out, std::ostream& err) {
    auto seed_parts = split(req.seeds, ',');
    if (seed_parts.size() != 2) {
        err << "lambda: --seeds expects two rationals\n";
        return 2;
    }
    LambdaSeries L =
        lambda_solve(parse_rational_str(seed_parts[0]), parse_rational_str(seed_parts[1]), req.count);
    Ctx xy = make_context({"x", "y"});
    Poly H = parse_expr("-y + x^2 + 2*x*y + y^2", xy);
    RMat pi(2, 2);
    pi.at(0, 1) = Rational(-1);
    pi.at(1, 0) = Rational(1);
    StarContext sc(BiVector(pi), 4);
    CurveIdeal curve(H, HScalar(4));
    bool ok = lambda_residual_vanishes(curve, L, sc);
    if (req.json) {
        nlohmann::json lam = nlohmann::json::array();
        for (const auto& v : L.lam) lam.push_back(to_string(v));
        nlohmann::json jj{{"schema_version", kSchemaVersion},
                          {"command", "lambda"},
                          {"lambda", lam},
                          {"residual_vanishes", ok}};
        out << jj.dump(2) << "\n";
    } else {
        for (std::size_t n = 0; n < L.count(); ++n)
            out << "lambda_" << n << " = " << to_string(L.coeff(n)) << "\n";
        out << "star residual: " << (ok ? "0" : "NONZERO") << "\n";
    }
    return ok ? 0 : 1;
}

int cmd_reduce(const Request& req, std::ostream& out, std::ostream& err) {
    if (req.preset != "ks4d") {
        err << "reduce: --preset ks4d required\n";
        return 2;
    }
    // bind parameters; unbound names stay symbolic
    std::vector<std::string> names{"a", "b", "c", "d", "A", "B", "D"};
    std::map<std::string, Rational> bound;
    for (const auto& kv : split(req.params, ',')) {
        auto eq = kv.find('=');
        if (eq == std::string::npos) {
            err << "reduce: bad parameter binding '" << kv << "'\n";
            return 2;
        }
        std::string key = kv.substr(0, eq);
        if (std::find(names.begin(), names.end(), key) == names.end()) {
            err << "reduce: unknown parameter '" << key << "'\n";
            return 2;
        }
        bound[key] = parse_rational_str(kv.substr(eq + 1));
    }
    std::vector<std::string> free_names;
    for (const auto& n : names)
        if (!bound.count(n)) free_names.push_back(n);
    Ctx pctx = make_context(free_names);
    auto param = [&](const std::string& n) -> F {
        auto it = bound.find(n);
        if (it != bound.end()) return F(it->second);
        return F::variable(pctx, static_cast<std::uint32_t>(pctx->index_of(n)));
    };
    FMat X(1, 2), Y(1, 2), M = FMat::identity(2), N(2, 2);
    X.at(0, 0) = param("a");
    X.at(0, 1) = param("b");
    Y.at(0, 0) = param("c");
    Y.at(0, 1) = param("d");
    N.at(0, 0) = param("A");
    N.at(0, 1) = param("B");
    N.at(1, 0) = param("B");
    N.at(1, 1) = param("D");

    ReduceReport rep = reduce_wavefunction(CoisotropicSubspace(X, Y), LinearLagrangian(M, N));
    if (req.json) {
        nlohmann::json jj{{"schema_version", kSchemaVersion},
                          {"command", "reduce"},
                          {"normalization", rep.normalization},
                          {"psi_L", gaussian_to_json(rep.psi_L)},
                          {"psi_G", gaussian_to_json(rep.psi_G)},
                          {"det_K_prime", ratfun_to_json(rep.det_K_prime)},
                          {"transversal", rep.transversal}};
        if (rep.transversal) {
            jj["c1"] = ratfun_to_json(rep.c1);
            jj["c0_recomputed"] = ratfun_to_json(rep.c0_recomputed);
            jj["gauss_coefficient"] = ratfun_to_json(rep.C_gauss.at(0, 0));
            jj["exponent"] = "exp((1/(2h))*(" + to_string(rep.c1) + ")*z1^2)";
            jj["verdict"] = rep.routes_agree ? "AGREE" : "DISAGREE";
        } else {
            jj["verdict"] = "fail to intersect transversally";
        }
        out << jj.dump(2) << "\n";
    } else {
        out << "extension: " << rep.normalization << "\n";
        out << "psi_L = " << to_string(rep.psi_L) << "\n";
        out << "psi_G = " << to_string(rep.psi_G, {"z1"}) << "\n";
        out << "det(K+Q) = " << to_string(rep.det_K_prime) << "\n";
        if (!rep.transversal) {
            out << "fail to intersect transversally\n";
        } else {
            out << "eliminate-and-quantise: c1 = " << to_string(rep.c1) << "\n";
            out << "gaussian-integral coefficient = " << to_string(rep.C_gauss.at(0, 0)) << "\n";
            out << "reduced wavefunction: exp((1/(2h))*(" << to_string(rep.c1) << ")*z1^2)\n";
            out << "c0 (recomputed) = " << to_string(rep.c0_recomputed) << "\n";
            out << "verdict: " << (rep.routes_agree ? "AGREE" : "DISAGREE") << "\n";
        }
    }
    if (!rep.transversal) return 1;
    return rep.routes_agree ? 0 : 1;
}

int cmd_check(const Request& req, std::ostream& out, std::ostream& err) {
    (void)err;
    auto results = run_all_checks(req.seed);
    bool all_ok = true;
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& r : results) {
        all_ok &= r.ok;
        if (req.json)
            rows.push_back({{"name", r.name}, {"ok", r.ok}, {"detail", r.detail}});
        else
            out << (r.ok ? "[PASS] " : "[FAIL] ") << r.name
                << (r.detail.empty() ? "" : " - " + r.detail) << "\n";
    }
    if (req.json) {
        nlohmann::json jj{{"schema_version", kSchemaVersion},
                          {"command", "check"},
                          {"seed", req.seed},
                          {"results", rows},
                          {"ok", all_ok}};
        out << jj.dump(2) << "\n";
    } else {
        out << (all_ok ? "all checks passed\n" : "CHECK FAILURES\n");
    }
    return all_ok ? 0 : 1;
}

} // namespace

Request Request::with_env_defaults() {
    Request req;
    if (const char* v = std::getenv("STARQ_HBAR_ORDER")) req.hbar_order = std::atoi(v);
    if (const char* v = std::getenv("STARQ_DEGREE")) req.x_degree = std::atoi(v);
    return req;
}

int run(const Request& req, std::ostream& out, std::ostream& err) {
    try {
        if (req.hbar_order < 1 || req.x_degree < 1) {
            err << "caps must be positive\n";
            return 2;
        }
        if (req.subcommand == "star") return cmd_star(req, out, err);
        if (req.subcommand == "wkb") return cmd_wkb(req, out, err);
        if (req.subcommand == "lambda") return cmd_lambda(req, out, err);
        if (req.subcommand == "reduce") return cmd_reduce(req, out, err);
        if (req.subcommand == "check") return cmd_check(req, out, err);
        err << "unknown subcommand '" << req.subcommand << "'\n";
        return 2;
    } catch (const parse_error& e) {
        err << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact deformation quantisation toolkit"};
    app.require_subcommand(1);
    Request req = Request::with_env_defaults();

    std::string vars_csv;
    auto add_common = [&](CLI::App* sub) {
        sub->add_flag("--json", req.json, "machine-readable output");
        sub->add_option("--order", req.hbar_order, "hbar truncation order");
    };

    CLI::App* star_cmd = app.add_subcommand("star", "star product of two polynomials");
    star_cmd->add_option("--vars", vars_csv, "comma-separated variables (default x,y)");
    star_cmd->add_option("--pi", req.pi_spec, "bi-vector: std2, canonical, or rows 'a,b;c,d'");
    star_cmd->add_option("--gauge", req.gauge_spec, "symmetric gauge part, same format");
    star_cmd->add_option("exprs", req.exprs, "two polynomial expressions")->expected(2);
    add_common(star_cmd);

    CLI::App* wkb_cmd = app.add_subcommand("wkb", "WKB wavefunction of a plane curve");
    wkb_cmd->add_option("--curve", req.curve, "curve H(x,y) with H(0,0)=0");
    wkb_cmd->add_option("--preset", req.preset, "conic");
    wkb_cmd->add_option("--orders", req.orders, "hbar orders to solve");
    wkb_cmd->add_option("--degree", req.x_degree, "series degree cap");
    wkb_cmd->add_option("--shift", req.shift, "quantum shift j (rational)");
    add_common(wkb_cmd);

    CLI::App* lam_cmd = app.add_subcommand("lambda", "Airy-type lambda series for the conic");
    lam_cmd->add_option("--seeds", req.seeds, "lambda_0,lambda_1");
    lam_cmd->add_option("--count", req.count, "number of coefficients");
    add_common(lam_cmd);

    CLI::App* red_cmd = app.add_subcommand("reduce", "symplectic reduction of a wavefunction");
    red_cmd->add_option("--preset", req.preset, "ks4d");
    red_cmd->add_option("--params", req.params, "bindings a=1,b=1,... (unbound stay symbolic)");
    add_common(red_cmd);

    CLI::App* chk_cmd = app.add_subcommand("check", "run the invariant property suites");
    chk_cmd->add_option("--seed", req.seed, "random seed");
    add_common(chk_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) { // --help
            out << app.help();
            return 0;
        }
        err << e.what() << "\n";
        return 2;
    }
    if (star_cmd->parsed()) req.subcommand = "star";
    if (wkb_cmd->parsed()) req.subcommand = "wkb";
    if (lam_cmd->parsed()) req.subcommand = "lambda";
    if (red_cmd->parsed()) req.subcommand = "reduce";
    if (chk_cmd->parsed()) req.subcommand = "check";
    if (!vars_csv.empty()) req.vars = split(vars_csv, ',');
    return run(req, out, err);
}

} // namespace starq
