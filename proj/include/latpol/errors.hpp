#ifndef LATPOL_ERRORS_HPP
#define LATPOL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace latpol {

// Wrong shapes, non-square determinants, degenerate input where
// full-dimensional was required.
struct DimensionError : std::invalid_argument {
    explicit DimensionError(const std::string& msg) : std::invalid_argument(msg) {}
};

// Brute-force limits (hull size, enumeration size) exceeded.
struct CapExceededError : std::runtime_error {
    explicit CapExceededError(const std::string& msg) : std::runtime_error(msg) {}
};

// An internal invariant failed; signals a bug, not bad input.
struct ConsistencyError : std::logic_error {
    explicit ConsistencyError(const std::string& msg) : std::logic_error(msg) {}
};

// Malformed external documents.
struct SchemaError : std::runtime_error {
    explicit SchemaError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace latpol

#endif
