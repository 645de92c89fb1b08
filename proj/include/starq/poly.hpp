#pragma once

#include <map>
#include <string>
#include <vector>

#include "starq/context.hpp"
#include "starq/monomial.hpp"
#include "starq/rational.hpp"

namespace starq {

// Sparse multivariate polynomial over an exact coefficient field K.
// Terms are kept in graded-lex order and never hold zero coefficients.
template <class K>
class PolyT {
  public:
    using TermMap = std::map<Monomial, K, GradedLexLess>;

    PolyT() = default;
    explicit PolyT(Ctx ctx) : ctx_(std::move(ctx)) {}

    PolyT(Ctx ctx, const K& c) : ctx_(std::move(ctx)) {
        if (!(c == K(0))) terms_.emplace(Monomial{}, c);
    }

    static PolyT constant(Ctx ctx, const K& c) { return PolyT(std::move(ctx), c); }

    static PolyT variable(Ctx ctx, std::uint32_t var, const K& coeff = K(1)) {
        if (!ctx || var >= ctx->size()) throw error("PolyT::variable: index out of context");
        PolyT p(std::move(ctx));
        if (!(coeff == K(0))) p.terms_.emplace(Monomial::variable(var), coeff);
        return p;
    }

    static PolyT monomial(Ctx ctx, Monomial m, const K& coeff) {
        PolyT p(std::move(ctx));
        if (!(coeff == K(0))) p.terms_.emplace(std::move(m), coeff);
        return p;
    }

    const Ctx& ctx() const { return ctx_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
    }

    K constant_term() const {
        auto it = terms_.find(Monomial{});
        return it == terms_.end() ? K(0) : it->second;
    }

    K coeff(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? K(0) : it->second;
    }

    std::uint32_t total_degree() const { // degree of 0 reported as 0
        std::uint32_t d = 0;
        for (const auto& [m, c] : terms_) d = std::max(d, m.total_degree());
        return d;
    }

    std::uint32_t degree_in(std::uint32_t var) const {
        std::uint32_t d = 0;
        for (const auto& [m, c] : terms_) d = std::max(d, m.exponent(var));
        return d;
    }

    PolyT operator-() const {
        PolyT r(ctx_);
        for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
        return r;
    }

    PolyT& operator+=(const PolyT& o) {
        adopt_context(o);
        require_same_context(ctx_, effective_ctx(o), "poly add");
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    PolyT& operator-=(const PolyT& o) {
        adopt_context(o);
        require_same_context(ctx_, effective_ctx(o), "poly sub");
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }

    friend PolyT operator+(PolyT a, const PolyT& b) { return a += b; }
    friend PolyT operator-(PolyT a, const PolyT& b) { return a -= b; }

    friend PolyT operator*(const PolyT& a, const PolyT& b) {
        PolyT r(a.ctx_ ? a.ctx_ : b.ctx_);
        require_same_context(r.ctx_, r.effective_ctx(b), "poly mul");
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
        return r;
    }

    PolyT& operator*=(const PolyT& o) { return *this = *this * o; }

    PolyT scaled(const K& s) const {
        PolyT r(ctx_);
        if (s == K(0)) return r;
        for (const auto& [m, c] : terms_) r.terms_.emplace(m, c * s);
        return r;
    }

    friend PolyT operator*(const K& s, const PolyT& p) { return p.scaled(s); }
    friend PolyT operator*(const PolyT& p, const K& s) { return p.scaled(s); }

    bool operator==(const PolyT& o) const {
        if (same_context(ctx_, o.ctx_)) return terms_ == o.terms_;
        // context-free constants compare against constants from any context
        if ((!ctx_ && is_constant()) || (!o.ctx_ && o.is_constant()))
            return terms_ == o.terms_ && is_constant() && o.is_constant();
        return false;
    }
    bool operator!=(const PolyT& o) const { return !(*this == o); }

    // formal partial derivative
    PolyT diff(std::uint32_t var) const {
        if (!ctx_ || var >= ctx_->size()) throw error("poly diff: unknown variable");
        PolyT r(ctx_);
        for (const auto& [m, c] : terms_) {
            std::uint32_t e = m.exponent(var);
            if (e == 0) continue;
            r.add_term(m.divide_by_var(var), c * K(static_cast<int>(e)));
        }
        return r;
    }

    // the sum of terms of exact total degree d
    PolyT homogeneous_part(std::uint32_t d) const {
        PolyT r(ctx_);
        for (const auto& [m, c] : terms_)
            if (m.total_degree() == d) r.terms_.emplace(m, c);
        return r;
    }

    PolyT truncated_to_degree(std::uint32_t d) const {
        PolyT r(ctx_);
        for (const auto& [m, c] : terms_)
            if (m.total_degree() <= d) r.terms_.emplace(m, c);
        return r;
    }

    // substitute values for every variable
    K eval(const std::vector<K>& point) const {
        if (ctx_ && point.size() != ctx_->size()) throw error("poly eval: wrong point size");
        K total(0);
        for (const auto& [m, c] : terms_) {
            K t = c;
            for (const auto& [v, e] : m.factors())
                for (std::uint32_t k = 0; k < e; ++k) t = t * point[v];
            total = total + t;
        }
        return total;
    }

    void add_term(const Monomial& m, const K& c) {
        if (c == K(0)) return;
        auto [it, inserted] = terms_.emplace(m, c);
        if (!inserted) {
            it->second = it->second + c;
            if (it->second == K(0)) terms_.erase(it);
        }
    }

  private:
    // a context-free constant (e.g. K(0) or K(1) built without a context)
    // silently adopts the other operand's context
    void adopt_context(const PolyT& o) {
        if (!ctx_ && o.ctx_ && is_constant()) ctx_ = o.ctx_;
    }
    Ctx effective_ctx(const PolyT& o) const {
        return (!o.ctx_ && o.is_constant()) ? ctx_ : o.ctx_;
    }

    Ctx ctx_;
    TermMap terms_;
};

using Poly = PolyT<Rational>;

// --- printing -------------------------------------------------------------

namespace detail {
inline std::string coeff_to_string(const Rational& q) { return q.str(); }
} // namespace detail

// Canonical form: graded-lex term order, explicit '*' and '^', rationals as
// p/q. Re-parsing the output with parse_expr yields an equal Poly.
inline std::string to_string(const Poly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : p.terms()) {
        Rational a = c;
        if (first) {
            if (a < 0) out += "-", a = -a;
            first = false;
        } else {
            out += a < 0 ? " - " : " + ";
            if (a < 0) a = -a;
        }
        std::string mono;
        for (const auto& [v, e] : m.factors()) {
            if (!mono.empty()) mono += "*";
            mono += p.ctx()->name(v);
            if (e > 1) mono += "^" + std::to_string(e);
        }
        if (mono.empty())
            out += detail::coeff_to_string(a);
        else if (a == 1)
            out += mono;
        else
            out += detail::coeff_to_string(a) + "*" + mono;
    }
    return out;
}

} // namespace starq
