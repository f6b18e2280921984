#include "stablerep/errors.hpp"

#include <cstdlib>

namespace stablerep {

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::InvalidArgument: return "InvalidArgument";
        case ErrorKind::DegreeMismatch: return "DegreeMismatch";
        case ErrorKind::SizeBudgetExceeded: return "SizeBudgetExceeded";
        case ErrorKind::NonIntegralMultiplicity: return "NonIntegralMultiplicity";
        case ErrorKind::NegativeMultiplicity: return "NegativeMultiplicity";
        case ErrorKind::NonPolynomialAction: return "NonPolynomialAction";
        case ErrorKind::OracleDisagreement: return "OracleDisagreement";
    }
    return "Unknown";
}

Budget Budget::from_environment() {
    Budget budget;
    if (const char* env = std::getenv("STABLEREP_BUDGET"); env != nullptr && *env != '\0') {
        char* end = nullptr;
        const unsigned long long value = std::strtoull(env, &end, 10);
        if (end == env || *end != '\0' || value == 0) {
            throw Error(ErrorKind::InvalidArgument,
                        std::string("STABLEREP_BUDGET must be a positive integer, got '") + env + "'");
        }
        budget.max_dimension = static_cast<std::size_t>(value);
    }
    return budget;
}

void Budget::require_dimension(std::size_t dim, std::string_view what) const {
    if (dim > max_dimension) {
        throw Error(ErrorKind::SizeBudgetExceeded,
                    std::string(what) + " needs dimension " + std::to_string(dim) +
                        " > budget " + std::to_string(max_dimension));
    }
}

}  // namespace stablerep
