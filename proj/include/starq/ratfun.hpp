#pragma once

#include <optional>

#include "starq/poly.hpp"

namespace starq {

// Field of rational functions in the reduction parameters, represented as
// Poly/Poly. Normalization cancels rational content, a common monomial
// factor, the sign, and exact polynomial divisors; full multivariate gcd is
// deliberately not attempted, so equality goes through cross-multiplication.
class RatFun {
  public:
    RatFun() : num_(), den_(one()) {}
    RatFun(int v) : num_(constant(Rational(v))), den_(one()) {}
    RatFun(const Rational& v) : num_(constant(v)), den_(one()) {}
    explicit RatFun(Poly p) : num_(std::move(p)), den_(one_in(num_.ctx())) { normalize(); }
    RatFun(Poly n, Poly d) : num_(std::move(n)), den_(std::move(d)) {
        if (den_.is_zero()) throw error("RatFun: zero denominator");
        normalize();
    }

    static RatFun variable(const Ctx& ctx, std::uint32_t var) {
        return RatFun(Poly::variable(ctx, var));
    }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    Rational constant_value() const {
        if (!is_constant()) throw error("RatFun: not a constant");
        return num_.constant_term() / den_.constant_term();
    }

    friend RatFun operator+(const RatFun& a, const RatFun& b) {
        return RatFun(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFun operator-(const RatFun& a, const RatFun& b) {
        return RatFun(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFun operator*(const RatFun& a, const RatFun& b) {
        return RatFun(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RatFun operator/(const RatFun& a, const RatFun& b) {
        if (b.num_.is_zero()) throw error("RatFun: division by zero");
        return RatFun(a.num_ * b.den_, a.den_ * b.num_);
    }
    RatFun operator-() const {
        RatFun r = *this;
        r.num_ = -r.num_;
        return r;
    }

    friend bool operator==(const RatFun& a, const RatFun& b) {
        return a.num_ * b.den_ == b.num_ * a.den_;
    }
    friend bool operator!=(const RatFun& a, const RatFun& b) { return !(a == b); }

    // evaluate at rational parameter values
    Rational eval(const std::vector<Rational>& point) const {
        Rational d = den_.eval(point);
        if (d == 0) throw error("RatFun: denominator vanishes at evaluation point");
        return num_.eval(point) / d;
    }

  private:
    static Poly constant(const Rational& v) {
        Poly p;
        p.add_term(Monomial{}, v);
        return p;
    }
    static Poly one() { return constant(1); }
    static Poly one_in(const Ctx& ctx) { return ctx ? Poly::constant(ctx, 1) : one(); }

    void normalize();

    Poly num_, den_;
};

std::string to_string(const RatFun& f);

// quotient of an exact polynomial division, or nullopt when the division has
// a remainder
std::optional<Poly> try_exact_divide(const Poly& a, const Poly& b);

} // namespace starq
