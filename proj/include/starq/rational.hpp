#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

#include "starq/error.hpp"

namespace starq {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Rational rational_pow(const Rational& base, long e) {
    if (e < 0) {
        if (base == 0) throw error("rational_pow: zero to a negative power");
        return Rational(1) / rational_pow(base, -e);
    }
    Rational r = 1, b = base;
    for (long k = e; k > 0; k >>= 1) {
        if (k & 1) r *= b;
        if (k > 1) b *= b;
    }
    return r;
}

inline std::string to_string(const Rational& q) { return q.str(); }

inline Integer factorial(unsigned n) {
    Integer r = 1;
    for (unsigned k = 2; k <= n; ++k) r *= k;
    return r;
}

inline Integer binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    Integer r = 1;
    for (unsigned i = 0; i < k; ++i) {
        r *= n - i;
        r /= i + 1;
    }
    return r;
}

} // namespace starq
