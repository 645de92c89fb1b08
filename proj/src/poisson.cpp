#include "starq/poisson.hpp"

namespace starq {

namespace {
void require_dim(const RMat& tau, const Ctx& ctx, const char* where) {
    if (tau.rows() != tau.cols()) throw error(std::string(where) + ": matrix not square");
    if (!ctx || ctx->size() != tau.rows())
        throw context_error(std::string(where) + ": matrix dimension does not match context");
}
} // namespace

TensorSum bimap_apply(const RMat& tau, const TensorSum& t) {
    TensorSum out;
    for (const auto& [f, g] : t) {
        require_same_context(f.ctx(), g.ctx(), "bimap_apply");
        require_dim(tau, f.ctx(), "bimap_apply");
        for (std::size_t i = 0; i < tau.rows(); ++i) {
            Poly df = f.diff(static_cast<std::uint32_t>(i));
            if (df.is_zero()) continue;
            for (std::size_t j = 0; j < tau.cols(); ++j) {
                if (tau.at(i, j) == 0) continue;
                Poly dg = g.diff(static_cast<std::uint32_t>(j));
                if (dg.is_zero()) continue;
                out.emplace_back(df.scaled(tau.at(i, j)), dg);
            }
        }
    }
    return out;
}

TensorSum bimap_apply_braided(const RMat& tau, const TensorSum& t) {
    TensorSum swapped;
    swapped.reserve(t.size());
    for (const auto& [f, g] : t) swapped.emplace_back(-g, f);
    return bimap_apply(tau, swapped);
}

Poly tensor_prod(const TensorSum& t, const Ctx& ctx) {
    Poly r(ctx);
    for (const auto& [f, g] : t) r += f * g;
    return r;
}

std::map<std::pair<Monomial, Monomial>, Rational> tensor_canonical(const TensorSum& t) {
    std::map<std::pair<Monomial, Monomial>, Rational> out;
    for (const auto& [f, g] : t)
        for (const auto& [mf, cf] : f.terms())
            for (const auto& [mg, cg] : g.terms()) {
                auto key = std::make_pair(mf, mg);
                auto [it, fresh] = out.emplace(key, cf * cg);
                if (!fresh) {
                    it->second += cf * cg;
                    if (it->second == 0) out.erase(it);
                }
            }
    return out;
}

Poly bracket(const Poly& f, const Poly& g, const BiVector& b) {
    require_same_context(f.ctx(), g.ctx(), "bracket");
    require_dim(b.pi, f.ctx(), "bracket");
    return tensor_prod(bimap_apply(b.pi, {{f, g}}), f.ctx());
}

std::pair<BiVector, GaugePart> skew_split(const RMat& tau) {
    if (tau.rows() != tau.cols()) throw error("skew_split: square matrix required");
    RMat pi(tau.rows(), tau.cols()), gamma(tau.rows(), tau.cols());
    Rational half(1, 2);
    for (std::size_t i = 0; i < tau.rows(); ++i)
        for (std::size_t j = 0; j < tau.cols(); ++j) {
            pi.at(i, j) = (tau.at(i, j) - tau.at(j, i)) * half;
            gamma.at(i, j) = (tau.at(i, j) + tau.at(j, i)) * half;
        }
    return {BiVector(std::move(pi)), GaugePart(std::move(gamma))};
}

LinearIdeal::LinearIdeal(std::vector<Poly> gens) : generators(std::move(gens)) {
    if (generators.empty()) throw error("LinearIdeal: no generators");
    const Ctx& ctx = generators.front().ctx();
    for (const auto& g : generators) {
        require_same_context(ctx, g.ctx(), "LinearIdeal");
        if (g.total_degree() > 1) throw error("LinearIdeal: generator of degree > 1");
    }
    // linear independence as affine functions
    std::size_t n = ctx->size();
    Mat<Rational> rows(generators.size(), n + 1);
    for (std::size_t i = 0; i < generators.size(); ++i) {
        rows.at(i, 0) = generators[i].constant_term();
        for (std::uint32_t v = 0; v < n; ++v)
            rows.at(i, 1 + v) = generators[i].coeff(Monomial::variable(v));
    }
    if (rows.rank() != generators.size())
        throw error("LinearIdeal: generators are not linearly independent");
}

namespace {
// membership of an affine-linear polynomial in the affine span of the
// generators
bool in_affine_span(const Poly& p, const std::vector<Poly>& gens) {
    if (p.is_zero()) return true;
    const Ctx& ctx = p.ctx();
    std::size_t n = ctx->size();
    Mat<Rational> cols(n + 1, gens.size());
    std::vector<Rational> rhs(n + 1, Rational(0));
    for (std::size_t j = 0; j < gens.size(); ++j) {
        cols.at(0, j) = gens[j].constant_term();
        for (std::uint32_t v = 0; v < n; ++v)
            cols.at(1 + v, j) = gens[j].coeff(Monomial::variable(v));
    }
    rhs[0] = p.constant_term();
    for (std::uint32_t v = 0; v < n; ++v) rhs[1 + v] = p.coeff(Monomial::variable(v));
    return cols.solve(rhs).has_value();
}
} // namespace

bool is_coisotropic(const LinearIdeal& ideal, const BiVector& b) {
    const auto& gens = ideal.generators;
    for (std::size_t i = 0; i < gens.size(); ++i)
        for (std::size_t j = i + 1; j < gens.size(); ++j) {
            Poly br = bracket(gens[i], gens[j], b);
            if (br.total_degree() > 1)
                throw error("is_coisotropic: bracket left the affine span (unsupported ideal shape)");
            if (!in_affine_span(br, gens)) return false;
        }
    return true;
}

bool is_coisotropic(const Poly& generator, const BiVector& b) {
    // {H,H} = 0 for the single generator; validate shapes anyway
    require_dim(b.pi, generator.ctx(), "is_coisotropic");
    return true;
}

TensorTriple braided_on_12(const RMat& tau, const TensorTriple& t) {
    TensorTriple out;
    for (const auto& [f, g, h] : t) {
        TensorSum pair = bimap_apply_braided(tau, {{f, g}});
        for (auto& [a, b2] : pair) out.emplace_back(std::move(a), std::move(b2), h);
    }
    return out;
}

TensorTriple braided_on_23(const RMat& tau, const TensorTriple& t) {
    TensorTriple out;
    for (const auto& [f, g, h] : t) {
        TensorSum pair = bimap_apply_braided(tau, {{g, h}});
        for (auto& [a, b2] : pair) out.emplace_back(f, std::move(a), std::move(b2));
    }
    return out;
}

std::map<std::tuple<Monomial, Monomial, Monomial>, Rational>
triple_canonical(const TensorTriple& t) {
    std::map<std::tuple<Monomial, Monomial, Monomial>, Rational> out;
    for (const auto& [f, g, h] : t)
        for (const auto& [mf, cf] : f.terms())
            for (const auto& [mg, cg] : g.terms())
                for (const auto& [mh, ch] : h.terms()) {
                    auto key = std::make_tuple(mf, mg, mh);
                    Rational c = cf * cg * ch;
                    auto [it, fresh] = out.emplace(key, c);
                    if (!fresh) {
                        it->second += c;
                        if (it->second == 0) out.erase(it);
                    }
                }
    return out;
}

} // namespace starq
