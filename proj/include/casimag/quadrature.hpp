#pragma once

// Globally adaptive Gauss-Kronrod (G7,K15) quadrature on a finite interval.
// Panels are bisected worst-error-first with a deterministic tie-break and the
// final sums are compensated in left-to-right panel order, so results do not
// depend on evaluation order or thread count.
//
// Integrands may report a pointwise uncertainty (used when the integrand is
// itself an adaptive integral); the weighted uncertainty enters the error
// estimate but never drives subdivision, since splitting cannot reduce it.

#include <functional>

namespace casimag {

struct QuadratureConfig {
    double rel_tol = 1e-6;
    double abs_tol = 1e-12;
    int max_depth = 40;

    void validate() const;  // throws std::invalid_argument
};

/// Integrand value with an absolute uncertainty bound (>= 0).
struct NoisySample {
    double value = 0.0;
    double noise = 0.0;
};

struct IntegralEstimate {
    double value = 0.0;
    double err_est = 0.0;  ///< quadrature error + propagated integrand noise
    long evals = 0;        ///< integrand evaluations
    bool converged = false;
};

IntegralEstimate integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                                    const QuadratureConfig& config);

IntegralEstimate integrate_adaptive_noisy(const std::function<NoisySample(double)>& f, double a,
                                          double b, const QuadratureConfig& config);

}  // namespace casimag
