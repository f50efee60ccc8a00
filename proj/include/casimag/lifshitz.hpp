#pragma once

// Reduction factor eta(L) = F/F0 of the zero-temperature Lifshitz formula,
// evaluated by nested adaptive quadrature over imaginary frequency and
// transverse wavevector. Normalised so that perfect conductors give exactly 1.

#include <span>
#include <vector>

#include "casimag/material.hpp"
#include "casimag/quadrature.hpp"

namespace casimag {

struct EtaPoint {
    double l_hat = 0.0;        ///< plate separation L omega_p / c
    double omega_c_hat = 0.0;  ///< effective cyclotron ratio used
    double eta = 0.0;
    double err_est = 0.0;      ///< estimated absolute error
    long evals = 0;            ///< reflection-product evaluations
    bool converged = false;
};

/// Evaluates eta at one separation. Throws std::domain_error for l_hat <= 0;
/// when the tolerance cannot be met within config.max_depth the best estimate
/// is returned with converged = false and an honestly enlarged err_est.
EtaPoint eta(const MaterialSpec& spec, double l_hat, const QuadratureConfig& config = {});

/// Pointwise eta() over a strictly increasing sequence of separations.
/// `parallel` may spread points over threads; results are identical to the
/// serial evaluation either way. Per-point non-convergence is reported in the
/// corresponding element, never by aborting the batch.
std::vector<EtaPoint> eta_curve(const MaterialSpec& spec, std::span<const double> l_hats,
                                const QuadratureConfig& config = {}, bool parallel = false);

}  // namespace casimag
