#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace casimag {

/// Numerical failure that would otherwise produce garbage (overflow,
/// ill-conditioned linear system, non-finite intermediate).
struct NumericalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Thrown when a curve expected to have a single interior maximum does not.
/// Carries the sampled grid so the caller can inspect what was seen.
struct NonUnimodalError : std::runtime_error {
    NonUnimodalError(std::string msg, std::vector<double> grid, std::vector<double> values)
        : std::runtime_error(std::move(msg)), z_grid(std::move(grid)), lambda_grid(std::move(values)) {}
    std::vector<double> z_grid;
    std::vector<double> lambda_grid;
};

/// Requested load exceeds the fold value: no equilibria exist (pull-in regime).
struct NoEquilibriumError : std::domain_error {
    using std::domain_error::domain_error;
};

}  // namespace casimag
