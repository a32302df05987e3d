#pragma once

#include <stdexcept>
#include <string>

namespace vscgw {

struct DivisionByZeroPolynomial : std::domain_error {
    explicit DivisionByZeroPolynomial(const std::string& what)
        : std::domain_error(what) {}
};

struct NonIsolatedPole : std::domain_error {
    explicit NonIsolatedPole(const std::string& what) : std::domain_error(what) {}
};

struct OrderMismatch : std::invalid_argument {
    explicit OrderMismatch(const std::string& what) : std::invalid_argument(what) {}
};

struct UnsupportedDegree : std::invalid_argument {
    explicit UnsupportedDegree(const std::string& what) : std::invalid_argument(what) {}
};

struct DegenerateCharacters : std::domain_error {
    explicit DegenerateCharacters(const std::string& what) : std::domain_error(what) {}
};

struct RangeError : std::out_of_range {
    explicit RangeError(const std::string& what) : std::out_of_range(what) {}
};

struct SchemaMismatch : std::runtime_error {
    explicit SchemaMismatch(const std::string& what) : std::runtime_error(what) {}
};

struct CorruptFile : std::runtime_error {
    explicit CorruptFile(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace vscgw
