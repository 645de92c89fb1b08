#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "starq/cli.hpp"
#include "starq/expr.hpp"
#include "starq/reduction.hpp"
#include "starq/verify.hpp"
#include "starq/weyl.hpp"
#include "starq/wkb.hpp"

namespace py = pybind11;
using namespace starq;

namespace {

Ctx ctx_from(const std::vector<std::string>& names) { return make_context(names); }

StarContext make_ctx(const std::vector<std::vector<std::string>>& pi,
                     const std::vector<std::string>& vars, std::uint32_t order) {
    RMat m(vars.size(), vars.size());
    for (std::size_t i = 0; i < pi.size(); ++i)
        for (std::size_t j = 0; j < pi[i].size(); ++j) m.at(i, j) = Rational(pi[i][j]);
    return StarContext(BiVector(std::move(m)), order);
}

} // namespace

PYBIND11_MODULE(_starq, m) {
    m.doc() = "exact deformation quantisation: star products, Weyl operators, "
              "WKB wavefunctions and symplectic reduction";

    py::register_exception<starq::error>(m, "StarqError");

    py::class_<Poly>(m, "Poly")
        .def("__str__", [](const Poly& p) { return to_string(p); })
        .def("__eq__", [](const Poly& a, const Poly& b) { return a == b; })
        .def("__add__", [](const Poly& a, const Poly& b) { return a + b; })
        .def("__sub__", [](const Poly& a, const Poly& b) { return a - b; })
        .def("__mul__", [](const Poly& a, const Poly& b) { return a * b; })
        .def("diff", [](const Poly& p, std::uint32_t v) { return p.diff(v); })
        .def_property_readonly("is_zero", &Poly::is_zero);

    py::class_<HSeries>(m, "HSeries")
        .def("__str__", [](const HSeries& h) { return to_string(h); })
        .def("__eq__", [](const HSeries& a, const HSeries& b) { return a == b; })
        .def("coeff", [](const HSeries& h, std::uint32_t k) { return h.coeff(k); })
        .def_property_readonly("order", &HSeries::order);

    m.def("parse", [](const std::string& text, const std::vector<std::string>& vars) {
        return parse_expr(text, ctx_from(vars));
    }, py::arg("text"), py::arg("vars"));

    m.def("star", [](const std::string& f, const std::string& g,
                     const std::vector<std::string>& vars,
                     const std::vector<std::vector<std::string>>& pi, std::uint32_t order) {
        Ctx c = ctx_from(vars);
        return star(parse_expr(f, c), parse_expr(g, c), make_ctx(pi, vars, order));
    }, py::arg("f"), py::arg("g"), py::arg("vars") = std::vector<std::string>{"x", "y"},
       py::arg("pi") = std::vector<std::vector<std::string>>{{"0", "-1"}, {"1", "0"}},
       py::arg("order") = 6);

    m.def("branch_coefficients", [](const std::string& curve, std::uint32_t degree) {
        Ctx c = ctx_from({"x", "y"});
        XSeries u0 = branch_solve(parse_expr(curve, c), degree);
        std::vector<std::string> out;
        for (std::uint32_t d = 0; d <= degree; ++d) out.push_back(to_string(u0.coeff1(d)));
        return out;
    }, py::arg("curve"), py::arg("degree") = 12);

    m.def("wkb", [](const std::string& curve, const std::string& shift, std::uint32_t orders,
                    std::uint32_t degree) {
        Ctx c = ctx_from({"x", "y"});
        CurveIdeal ci(parse_expr(curve, c), HScalar::constant(Rational(shift), orders));
        WKBSolution sol = wkb_solve(ci, orders, degree);
        std::vector<std::vector<std::string>> u, S;
        for (const auto& ug : sol.u) {
            std::vector<std::string> row;
            for (std::uint32_t d = 0; d <= ug.cap(); ++d) row.push_back(to_string(ug.coeff1(d)));
            u.push_back(row);
        }
        for (const auto& Sg : sol.S) {
            std::vector<std::string> row;
            for (std::uint32_t d = 0; d <= Sg.cap(); ++d) row.push_back(to_string(Sg.coeff1(d)));
            S.push_back(row);
        }
        return py::dict(py::arg("u") = u, py::arg("S") = S);
    }, py::arg("curve"), py::arg("shift") = "0", py::arg("orders") = 2, py::arg("degree") = 12);

    m.def("lambda_series", [](const std::string& seed0, const std::string& seed1,
                              std::size_t count) {
        LambdaSeries L = lambda_solve(Rational(seed0), Rational(seed1), count);
        std::vector<std::string> out;
        for (const auto& v : L.lam) out.push_back(to_string(v));
        return out;
    }, py::arg("seed0") = "1", py::arg("seed1") = "0", py::arg("count") = 12);

    m.def("reduce_ks4d", [](const std::map<std::string, std::string>& params) {
        std::vector<std::string> names{"a", "b", "c", "d", "A", "B", "D"};
        std::vector<std::string> free_names;
        for (const auto& n : names)
            if (!params.count(n)) free_names.push_back(n);
        Ctx pctx = make_context(free_names);
        auto param = [&](const std::string& n) -> F {
            auto it = params.find(n);
            if (it != params.end()) return F(Rational(it->second));
            return F::variable(pctx, static_cast<std::uint32_t>(pctx->index_of(n)));
        };
        FMat X(1, 2), Y(1, 2), M = FMat::identity(2), N(2, 2);
        X.at(0, 0) = param("a");
        X.at(0, 1) = param("b");
        Y.at(0, 0) = param("c");
        Y.at(0, 1) = param("d");
        N.at(0, 0) = param("A");
        N.at(0, 1) = N.at(1, 0) = param("B");
        N.at(1, 1) = param("D");
        ReduceReport rep = reduce_wavefunction(CoisotropicSubspace(X, Y), LinearLagrangian(M, N));
        py::dict out;
        out["transversal"] = rep.transversal;
        out["normalization"] = rep.normalization;
        out["psi_L"] = to_string(rep.psi_L);
        out["psi_G"] = to_string(rep.psi_G, {"z1"});
        if (rep.transversal) {
            out["c1"] = to_string(rep.c1);
            out["gauss_coefficient"] = to_string(rep.C_gauss.at(0, 0));
            out["verdict"] = rep.routes_agree ? "AGREE" : "DISAGREE";
        } else {
            out["verdict"] = "fail to intersect transversally";
        }
        return out;
    }, py::arg("params") = std::map<std::string, std::string>{});

    m.def("check", [](std::uint64_t seed) {
        py::list rows;
        bool all_ok = true;
        for (const auto& r : run_all_checks(seed)) {
            rows.append(py::make_tuple(r.name, r.ok, r.detail));
            all_ok &= r.ok;
        }
        return py::make_tuple(all_ok, rows);
    }, py::arg("seed") = 20250801);

    m.def("run_cli", [](const std::vector<std::string>& args) {
        std::vector<const char*> argv{"starq"};
        for (const auto& a : args) argv.push_back(a.c_str());
        std::ostringstream out, err;
        int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
        return py::make_tuple(code, out.str(), err.str());
    }, py::arg("args"));
}
