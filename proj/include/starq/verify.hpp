#pragma once

#include <random>
#include <string>
#include <vector>

#include "starq/poisson.hpp"
#include "starq/star.hpp"

namespace starq {

struct CheckResult {
    std::string name;
    bool ok = false;
    std::string detail;
};

// deterministic generators for the property suites
using Rng = std::mt19937_64;
Poly random_poly(Rng& rng, const Ctx& ctx, std::uint32_t max_degree, int max_terms = 5);
RMat random_skew(Rng& rng, std::size_t n);
RMat random_symmetric(Rng& rng, std::size_t n);

CheckResult check_ring_axioms(std::uint64_t seed, int trials = 100);
CheckResult check_mixed_partials(std::uint64_t seed, int trials = 100);
CheckResult check_series_inverse_sqrt(std::uint64_t seed, int trials = 50);
CheckResult check_bracket_laws(std::uint64_t seed, int trials = 50);
CheckResult check_star_associativity(std::uint64_t seed, int trials = 50);
CheckResult check_bracket_recovery(std::uint64_t seed, int trials = 100);
CheckResult check_gauge_intertwining(std::uint64_t seed, int trials = 50);
CheckResult check_tau_skew_reduction(std::uint64_t seed, int trials = 20);
CheckResult check_yang_baxter(std::uint64_t seed, int trials = 20);
CheckResult check_wick_oracle(std::uint64_t seed, int trials = 50);
CheckResult check_phi_homomorphism(std::uint64_t seed, int trials = 50);
CheckResult check_weyl_algebra(std::uint64_t seed, int trials = 30);
CheckResult check_conic_series();
CheckResult check_wkb_full_residual();
CheckResult check_lambda_recurrence();
CheckResult check_coisotropy();
CheckResult check_reduction_routes(std::uint64_t seed, int tuples = 20);
CheckResult check_transversality_trichotomy(std::uint64_t seed, int tuples = 20);

std::vector<CheckResult> run_all_checks(std::uint64_t seed);

} // namespace starq
