#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "starq/error.hpp"

namespace starq {

// Sparse exponent list, sorted by variable index, no zero exponents stored.
class Monomial {
  public:
    using Factor = std::pair<std::uint32_t, std::uint32_t>; // (variable index, exponent)

    Monomial() = default;

    static Monomial variable(std::uint32_t var, std::uint32_t exp = 1) {
        Monomial m;
        if (exp > 0) m.factors_.push_back({var, exp});
        return m;
    }

    static Monomial from_exponents(const std::vector<std::uint32_t>& exps) {
        Monomial m;
        for (std::uint32_t v = 0; v < exps.size(); ++v)
            if (exps[v] > 0) m.factors_.push_back({v, exps[v]});
        return m;
    }

    const std::vector<Factor>& factors() const { return factors_; }
    bool is_one() const { return factors_.empty(); }

    std::uint32_t exponent(std::uint32_t var) const {
        for (const auto& [v, e] : factors_)
            if (v == var) return e;
        return 0;
    }

    std::uint32_t total_degree() const {
        std::uint32_t d = 0;
        for (const auto& [v, e] : factors_) d += e;
        return d;
    }

    std::uint32_t max_var() const {
        return factors_.empty() ? 0 : factors_.back().first + 1;
    }

    Monomial operator*(const Monomial& o) const {
        Monomial r;
        auto a = factors_.begin(), b = o.factors_.begin();
        while (a != factors_.end() || b != o.factors_.end()) {
            if (b == o.factors_.end() || (a != factors_.end() && a->first < b->first))
                r.factors_.push_back(*a++);
            else if (a == factors_.end() || b->first < a->first)
                r.factors_.push_back(*b++);
            else {
                r.factors_.push_back({a->first, a->second + b->second});
                ++a, ++b;
            }
        }
        return r;
    }

    // m / x_var, exponent must be positive
    Monomial divide_by_var(std::uint32_t var) const {
        Monomial r;
        bool found = false;
        for (const auto& f : factors_) {
            if (f.first == var) {
                found = true;
                if (f.second > 1) r.factors_.push_back({f.first, f.second - 1});
            } else {
                r.factors_.push_back(f);
            }
        }
        if (!found) throw error("monomial: dividing by absent variable");
        return r;
    }

    bool divides(const Monomial& o) const {
        for (const auto& [v, e] : factors_)
            if (o.exponent(v) < e) return false;
        return true;
    }

    // componentwise quotient; caller ensures divisibility
    Monomial quotient(const Monomial& by) const {
        Monomial r;
        for (const auto& [v, e] : factors_) {
            std::uint32_t d = e - by.exponent(v);
            if (d > 0) r.factors_.push_back({v, d});
        }
        return r;
    }

    bool operator==(const Monomial& o) const { return factors_ == o.factors_; }
    bool operator!=(const Monomial& o) const { return !(*this == o); }

  private:
    std::vector<Factor> factors_;
};

// Graded-lexicographic order, arranged so that map iteration yields the
// canonical printing order: ascending total degree, and within a degree the
// lexicographically largest exponent vector first (x^2 before x*y before y^2).
struct GradedLexLess {
    bool operator()(const Monomial& a, const Monomial& b) const {
        std::uint32_t da = a.total_degree(), db = b.total_degree();
        if (da != db) return da < db;
        std::uint32_t nv = std::max(a.max_var(), b.max_var());
        for (std::uint32_t v = 0; v < nv; ++v) {
            std::uint32_t ea = a.exponent(v), eb = b.exponent(v);
            if (ea != eb) return ea > eb;
        }
        return false;
    }
};

inline bool operator<(const Monomial& a, const Monomial& b) { return GradedLexLess{}(a, b); }

} // namespace starq
