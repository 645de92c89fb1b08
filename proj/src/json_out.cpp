#include "starq/json_out.hpp"

#include <nlohmann/json.hpp>

namespace starq {

nlohmann::json poly_to_json(const Poly& p) {
    nlohmann::json terms = nlohmann::json::array();
    std::size_t nvars = p.ctx() ? p.ctx()->size() : 0;
    for (const auto& [m, c] : p.terms()) {
        std::vector<std::uint32_t> exps(nvars, 0);
        for (const auto& [v, e] : m.factors()) exps[v] = e;
        terms.push_back({{"m", exps},
                         {"n", boost::multiprecision::numerator(c).str()},
                         {"d", boost::multiprecision::denominator(c).str()}});
    }
    return terms;
}

nlohmann::json hseries_to_json(const HSeries& h) {
    nlohmann::json levels = nlohmann::json::array();
    for (std::uint32_t k = 0; k <= h.order(); ++k) levels.push_back(poly_to_json(h.coeff(k)));
    return levels;
}

nlohmann::json xseries_to_json(const XSeries& s) {
    nlohmann::json parts = nlohmann::json::array();
    for (std::uint32_t d = 0; d <= s.cap(); ++d) parts.push_back(poly_to_json(s.part(d)));
    return parts;
}

nlohmann::json ratfun_to_json(const RatFun& f) {
    return {{"num", poly_to_json(f.num())}, {"den", poly_to_json(f.den())}, {"str", to_string(f)}};
}

nlohmann::json gaussian_to_json(const GaussianForm& psi) {
    nlohmann::json K = nlohmann::json::array(), J = nlohmann::json::array();
    for (std::size_t i = 0; i < psi.n(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t j = 0; j < psi.n(); ++j) row.push_back(ratfun_to_json(psi.K.at(i, j)));
        K.push_back(row);
    }
    for (std::size_t i = 0; i < psi.n(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t k = 0; k < psi.sources(); ++k) row.push_back(ratfun_to_json(psi.J.at(i, k)));
        J.push_back(row);
    }
    return {{"vars", psi.vars}, {"K", K}, {"J", J}, {"c", ratfun_to_json(psi.c)},
            {"exponent", to_string(psi)}};
}

} // namespace starq
