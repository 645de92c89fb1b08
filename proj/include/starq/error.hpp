#pragma once

#include <stdexcept>
#include <string>

namespace starq {

struct error : std::runtime_error {
    explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

// two polynomials from different variable contexts, or a matrix of the wrong size
struct context_error : error {
    explicit context_error(const std::string& msg) : error(msg) {}
};

// parser diagnostics carry the byte offset of the offending token
struct parse_error : error {
    parse_error(const std::string& msg, std::size_t offset)
        : error(msg + " (at byte " + std::to_string(offset) + ")"), offset(offset) {}
    std::size_t offset;
};

} // namespace starq
