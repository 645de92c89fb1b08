#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <cstdint>

namespace starq {

// A parsed command-line invocation. Caps default to ℏ-order 6 and x-degree 12
// and can be overridden by the STARQ_HBAR_ORDER / STARQ_DEGREE environment
// variables before flags are applied.
struct Request {
    std::string subcommand;                  // star | wkb | lambda | reduce | check
    std::vector<std::string> vars;           // declared variables
    std::string pi_spec = "std2";            // std2 | canonical | "0,-1;1,0"
    std::string gauge_spec;                  // optional symmetric matrix
    std::vector<std::string> exprs;          // operand expressions
    std::string curve;                       // wkb curve in (x, y)
    std::string shift = "0";                 // quantum shift j (rational)
    std::uint32_t hbar_order = 6;
    std::uint32_t x_degree = 12;
    std::uint32_t orders = 2;                // WKB ℏ-orders to solve
    std::string seeds = "1,0";               // lambda seeds
    std::uint32_t count = 12;                // lambda coefficient count
    std::string preset;                      // conic | ks4d
    std::string params;                      // ks4d parameter bindings a=1,b=2,...
    std::uint64_t seed = 20250801;           // property-suite seed
    bool json = false;

    static Request with_env_defaults();
};

// exit status: 0 pass, 1 verification failure, 2 usage or parse error
int run(const Request& req, std::ostream& out, std::ostream& err);

// full command-line front end (flag parsing + run)
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace starq
