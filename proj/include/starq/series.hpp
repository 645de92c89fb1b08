#pragma once

#include <vector>

#include "starq/poly.hpp"

namespace starq {

// Truncated formal power series: homogeneous Poly per total degree 0..cap.
// Entries above the cap are unknown, not zero; mixed-cap arithmetic truncates
// to the smaller cap.
class XSeries {
  public:
    XSeries() = default;
    XSeries(Ctx ctx, std::uint32_t cap) : ctx_(std::move(ctx)), parts_(cap + 1, Poly(ctx_)) {
        for (auto& p : parts_) p = Poly(ctx_);
    }

    static XSeries from_poly(const Poly& p, std::uint32_t cap) {
        XSeries s(p.ctx(), cap);
        for (const auto& [m, c] : p.terms()) {
            std::uint32_t d = m.total_degree();
            if (d <= cap) s.parts_[d].add_term(m, c);
        }
        return s;
    }

    static XSeries constant(Ctx ctx, const Rational& c, std::uint32_t cap) {
        XSeries s(ctx, cap);
        s.parts_[0] = Poly::constant(s.ctx_, c);
        return s;
    }

    const Ctx& ctx() const { return ctx_; }
    std::uint32_t cap() const { return static_cast<std::uint32_t>(parts_.size()) - 1; }

    const Poly& part(std::uint32_t d) const {
        static const Poly zero{};
        return d < parts_.size() ? parts_[d] : zero;
    }

    // coefficient of x^d, for single-variable series
    Rational coeff1(std::uint32_t d) const {
        if (d >= parts_.size()) return 0;
        if (parts_[d].is_zero()) return 0;
        return parts_[d].terms().begin()->second;
    }

    Rational constant_coeff() const { return parts_.empty() ? Rational(0) : parts_[0].constant_term(); }

    bool is_zero() const {
        for (const auto& p : parts_)
            if (!p.is_zero()) return false;
        return true;
    }

    Poly to_poly() const {
        Poly r(ctx_);
        for (const auto& p : parts_) r += p;
        return r;
    }

    // never extends: degrees above the current cap stay unknown
    XSeries truncated(std::uint32_t new_cap) const {
        XSeries r(ctx_, std::min(new_cap, cap()));
        for (std::uint32_t d = 0; d <= r.cap(); ++d) r.parts_[d] = parts_[d];
        return r;
    }

    XSeries operator-() const {
        XSeries r = *this;
        for (auto& p : r.parts_) p = -p;
        return r;
    }

    friend XSeries operator+(const XSeries& a, const XSeries& b) {
        require_same_context(a.ctx_, b.ctx_, "series add");
        XSeries r(a.ctx_, std::min(a.cap(), b.cap()));
        for (std::uint32_t d = 0; d <= r.cap(); ++d) r.parts_[d] = a.parts_[d] + b.parts_[d];
        return r;
    }
    friend XSeries operator-(const XSeries& a, const XSeries& b) { return a + (-b); }

    friend XSeries operator*(const XSeries& a, const XSeries& b) {
        require_same_context(a.ctx_, b.ctx_, "series mul");
        XSeries r(a.ctx_, std::min(a.cap(), b.cap()));
        for (std::uint32_t i = 0; i < a.parts_.size(); ++i) {
            if (a.parts_[i].is_zero()) continue;
            for (std::uint32_t j = 0; i + j <= r.cap() && j < b.parts_.size(); ++j)
                r.parts_[i + j] += a.parts_[i] * b.parts_[j];
        }
        return r;
    }

    XSeries scaled(const Rational& s) const {
        XSeries r = *this;
        for (auto& p : r.parts_) p = p.scaled(s);
        return r;
    }

    // multiply by a polynomial without changing the cap
    XSeries times_poly(const Poly& q) const {
        require_same_context(ctx_, q.ctx(), "series times_poly");
        XSeries r(ctx_, cap());
        for (const auto& [m, c] : q.terms()) {
            std::uint32_t d0 = m.total_degree();
            Poly mono = Poly::monomial(ctx_, m, c);
            for (std::uint32_t d = 0; d + d0 <= cap() && d < parts_.size(); ++d)
                r.parts_[d + d0] += parts_[d] * mono;
        }
        return r;
    }

    // d/dx for any variable; result cap drops by one
    XSeries diff(std::uint32_t var) const {
        std::uint32_t rcap = cap() == 0 ? 0 : cap() - 1;
        XSeries r(ctx_, rcap);
        for (std::uint32_t d = 1; d < parts_.size(); ++d)
            if (d - 1 <= rcap) r.parts_[d - 1] = parts_[d].diff(var);
        return r;
    }

    bool operator==(const XSeries& o) const {
        return same_context(ctx_, o.ctx_) && parts_ == o.parts_;
    }
    bool operator!=(const XSeries& o) const { return !(*this == o); }

    Poly& mutable_part(std::uint32_t d) { return parts_.at(d); }

  private:
    Ctx ctx_;
    std::vector<Poly> parts_;
};

// 1 / a, requires a nonzero constant term
XSeries series_inverse(const XSeries& a);

// square root with sqrt(a_0) > 0; requires the constant term to be the square
// of a rational
XSeries series_sqrt(const XSeries& a);

// term-wise antiderivative with zero constant term; single-variable series
// only; the result cap is raised to cap+1 so no term is lost
XSeries formal_integrate(const XSeries& a, std::uint32_t var = 0);

// substitute y -> u(x) into a polynomial in (x, y): Poly context must be
// exactly two variables {base, fiber}; u lives in a single-variable context
XSeries substitute_fiber(const Poly& h, std::uint32_t base_var, std::uint32_t fiber_var,
                         const XSeries& u);

// ---------------------------------------------------------------------------

// ℏ-truncated series with Poly coefficients (elements of the deformed algebra)
class HSeries {
  public:
    HSeries() = default;
    HSeries(Ctx ctx, std::uint32_t order) : ctx_(std::move(ctx)), coeffs_(order + 1, Poly(ctx_)) {
        for (auto& p : coeffs_) p = Poly(ctx_);
    }

    static HSeries from_poly(const Poly& p, std::uint32_t order) {
        HSeries h(p.ctx(), order);
        h.coeffs_[0] = p;
        return h;
    }

    const Ctx& ctx() const { return ctx_; }
    std::uint32_t order() const { return static_cast<std::uint32_t>(coeffs_.size()) - 1; }

    const Poly& coeff(std::uint32_t k) const {
        static const Poly zero{};
        return k < coeffs_.size() ? coeffs_[k] : zero;
    }
    Poly& mutable_coeff(std::uint32_t k) { return coeffs_.at(k); }

    bool is_zero() const {
        for (const auto& p : coeffs_)
            if (!p.is_zero()) return false;
        return true;
    }

    HSeries truncated(std::uint32_t order) const {
        HSeries r(ctx_, order);
        for (std::uint32_t k = 0; k <= order && k < coeffs_.size(); ++k) r.coeffs_[k] = coeffs_[k];
        return r;
    }

    HSeries operator-() const {
        HSeries r = *this;
        for (auto& p : r.coeffs_) p = -p;
        return r;
    }

    friend HSeries operator+(const HSeries& a, const HSeries& b) {
        require_same_context(a.ctx_, b.ctx_, "hseries add");
        HSeries r(a.ctx_, std::min(a.order(), b.order()));
        for (std::uint32_t k = 0; k <= r.order(); ++k) r.coeffs_[k] = a.coeffs_[k] + b.coeffs_[k];
        return r;
    }
    friend HSeries operator-(const HSeries& a, const HSeries& b) { return a + (-b); }

    friend HSeries operator*(const HSeries& a, const HSeries& b) {
        require_same_context(a.ctx_, b.ctx_, "hseries mul");
        HSeries r(a.ctx_, std::min(a.order(), b.order()));
        for (std::uint32_t i = 0; i < a.coeffs_.size(); ++i) {
            if (a.coeffs_[i].is_zero()) continue;
            for (std::uint32_t j = 0; i + j <= r.order() && j < b.coeffs_.size(); ++j)
                r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
        return r;
    }

    HSeries scaled(const Rational& s) const {
        HSeries r = *this;
        for (auto& p : r.coeffs_) p = p.scaled(s);
        return r;
    }

    HSeries times_hbar(std::uint32_t k = 1) const {
        HSeries r(ctx_, order());
        for (std::uint32_t j = 0; j + k <= order(); ++j) r.coeffs_[j + k] = coeffs_[j];
        return r;
    }

    // divide by ℏ; the ℏ^0 coefficient must vanish. The top coefficient of the
    // quotient is unknown, so the order drops by one.
    HSeries div_hbar() const {
        if (!coeffs_[0].is_zero()) throw error("hseries: not divisible by hbar");
        std::uint32_t n = order() == 0 ? 0 : order() - 1;
        HSeries r(ctx_, n);
        for (std::uint32_t k = 1; k < coeffs_.size(); ++k) r.coeffs_[k - 1] = coeffs_[k];
        return r;
    }

    bool operator==(const HSeries& o) const {
        return same_context(ctx_, o.ctx_) && coeffs_ == o.coeffs_;
    }
    bool operator!=(const HSeries& o) const { return !(*this == o); }

  private:
    Ctx ctx_;
    std::vector<Poly> coeffs_;
};

std::string to_string(const HSeries& h);

// Truncated polynomial in ℏ with rational coefficients (the scalars of the
// Weyl algebra).
class HScalar {
  public:
    HScalar() = default;
    explicit HScalar(std::uint32_t order) : c_(order + 1, Rational(0)) {}

    static HScalar constant(const Rational& v, std::uint32_t order) {
        HScalar s(order);
        s.c_[0] = v;
        return s;
    }
    static HScalar hbar_power(std::uint32_t k, const Rational& v, std::uint32_t order) {
        HScalar s(order);
        if (k <= order) s.c_[k] = v;
        return s;
    }

    std::uint32_t order() const { return static_cast<std::uint32_t>(c_.size()) - 1; }
    const Rational& coeff(std::uint32_t k) const {
        static const Rational zero(0);
        return k < c_.size() ? c_[k] : zero;
    }
    Rational& mutable_coeff(std::uint32_t k) { return c_.at(k); }

    bool is_zero() const {
        for (const auto& v : c_)
            if (v != 0) return false;
        return true;
    }

    friend HScalar operator+(const HScalar& a, const HScalar& b) {
        HScalar r(std::min(a.order(), b.order()));
        for (std::uint32_t k = 0; k <= r.order(); ++k) r.c_[k] = a.c_[k] + b.c_[k];
        return r;
    }
    friend HScalar operator-(const HScalar& a, const HScalar& b) {
        HScalar r(std::min(a.order(), b.order()));
        for (std::uint32_t k = 0; k <= r.order(); ++k) r.c_[k] = a.c_[k] - b.c_[k];
        return r;
    }
    friend HScalar operator*(const HScalar& a, const HScalar& b) {
        HScalar r(std::min(a.order(), b.order()));
        for (std::uint32_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == 0) continue;
            for (std::uint32_t j = 0; i + j <= r.order() && j < b.c_.size(); ++j)
                r.c_[i + j] += a.c_[i] * b.c_[j];
        }
        return r;
    }

    HScalar scaled(const Rational& s) const {
        HScalar r = *this;
        for (auto& v : r.c_) v *= s;
        return r;
    }

    HScalar times_hbar(std::uint32_t k) const {
        HScalar r(order());
        for (std::uint32_t j = 0; j + k <= order(); ++j) r.c_[j + k] = c_[j];
        return r;
    }

    HScalar with_order(std::uint32_t order) const {
        HScalar r(order);
        for (std::uint32_t k = 0; k <= order && k < c_.size(); ++k) r.c_[k] = c_[k];
        return r;
    }

    bool operator==(const HScalar& o) const { return c_ == o.c_; }
    bool operator!=(const HScalar& o) const { return !(*this == o); }

  private:
    std::vector<Rational> c_;
};

std::string to_string(const HScalar& s);

// ℏ-graded truncated x-series: the output type of differential operators
// acting on series
class HXSeries {
  public:
    HXSeries() = default;
    HXSeries(Ctx ctx, std::uint32_t order, std::uint32_t cap)
        : levels_(order + 1, XSeries(ctx, cap)) {}

    std::uint32_t order() const { return static_cast<std::uint32_t>(levels_.size()) - 1; }
    const XSeries& level(std::uint32_t k) const { return levels_.at(k); }
    XSeries& mutable_level(std::uint32_t k) { return levels_.at(k); }

    Ctx ctx() const { return levels_.empty() ? Ctx{} : levels_[0].ctx(); }
    std::uint32_t cap() const { return levels_.empty() ? 0 : levels_[0].cap(); }

    bool is_zero() const {
        for (const auto& s : levels_)
            if (!s.is_zero()) return false;
        return true;
    }

    friend HXSeries operator+(const HXSeries& a, const HXSeries& b) {
        HXSeries r;
        std::uint32_t n = std::min(a.order(), b.order());
        for (std::uint32_t k = 0; k <= n; ++k) r.levels_.push_back(a.levels_[k] + b.levels_[k]);
        return r;
    }
    // ℏ-convolution with x-series multiplication at each level
    friend HXSeries operator*(const HXSeries& a, const HXSeries& b) {
        HXSeries r(a.ctx(), std::min(a.order(), b.order()), std::min(a.cap(), b.cap()));
        for (std::uint32_t i = 0; i <= a.order(); ++i) {
            if (a.levels_[i].is_zero()) continue;
            for (std::uint32_t j = 0; i + j <= r.order() && j <= b.order(); ++j)
                r.levels_[i + j] = r.levels_[i + j] + (a.levels_[i] * b.levels_[j]).truncated(r.cap());
        }
        return r;
    }

    HXSeries scaled(const Rational& s) const {
        HXSeries r = *this;
        for (auto& l : r.levels_) l = l.scaled(s);
        return r;
    }

    HXSeries times_poly(const Poly& p) const {
        HXSeries r = *this;
        for (auto& l : r.levels_) l = l.times_poly(p);
        return r;
    }

    HXSeries times_hscalar(const HScalar& s) const {
        HXSeries r(ctx(), order(), cap());
        for (std::uint32_t i = 0; i <= order(); ++i) {
            if (levels_[i].is_zero()) continue;
            for (std::uint32_t j = 0; i + j <= order() && j <= s.order(); ++j) {
                if (s.coeff(j) == 0) continue;
                r.levels_[i + j] = r.levels_[i + j] + levels_[i].scaled(s.coeff(j));
            }
        }
        return r;
    }

    HXSeries times_hbar(std::uint32_t k = 1) const {
        HXSeries r(ctx(), order(), cap());
        for (std::uint32_t j = 0; j + k <= order(); ++j) r.levels_[j + k] = levels_[j];
        return r;
    }

    // d/dx at each level; x-caps drop by one
    HXSeries diff(std::uint32_t var = 0) const {
        HXSeries r = *this;
        for (auto& l : r.levels_) l = l.diff(var);
        return r;
    }

  private:
    std::vector<XSeries> levels_;
};

} // namespace starq
