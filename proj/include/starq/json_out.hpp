#pragma once

#include <nlohmann/json_fwd.hpp>

#include "starq/reduction.hpp"
#include "starq/series.hpp"
#include "starq/wkb.hpp"

// bit-exact JSON encodings: every coefficient is a
// {"m": [exponents...], "n": "numerator", "d": "denominator"} record
namespace starq {

inline constexpr int kSchemaVersion = 1;

nlohmann::json poly_to_json(const Poly& p);
nlohmann::json hseries_to_json(const HSeries& h);
nlohmann::json xseries_to_json(const XSeries& s);
nlohmann::json gaussian_to_json(const GaussianForm& psi);
nlohmann::json ratfun_to_json(const RatFun& f);

} // namespace starq
