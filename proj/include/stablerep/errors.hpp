#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace stablerep {

enum class ErrorKind {
    InvalidArgument,
    DegreeMismatch,
    SizeBudgetExceeded,
    NonIntegralMultiplicity,
    NegativeMultiplicity,
    NonPolynomialAction,
    OracleDisagreement,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

/// Caps on the brute-force constructions. Ambient dimension (d^r for tensor
/// space, dim of an F_W piece, r! for a group algebra) is the cost driver.
struct Budget {
    std::size_t max_dimension = 20000;
    int max_specht_degree = 6;
    int max_enumeration_degree = 8;

    /// Defaults, with STABLEREP_BUDGET overriding max_dimension when set.
    static Budget from_environment();

    void require_dimension(std::size_t dim, std::string_view what) const;
};

}  // namespace stablerep
