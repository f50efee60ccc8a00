#pragma once

// Pull-in analysis of a spring-mounted plate under the Casimir force:
// bifurcation curve lambda(z) = (1-z) z^4 / eta(z L0), fold location, stable
// and unstable equilibria, field sweeps of the fold value and the translation
// to cantilever stiffness and detachment length.

#include <functional>
#include <list>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

#include "casimag/lifshitz.hpp"

namespace casimag {

struct BifurcationPoint {
    double z_bar;     ///< gap ratio z/L0 in (0,1)
    double lambda;    ///< (1 - z_bar) z_bar^4 / eta_at
    double eta_at;    ///< reduction factor at separation z_bar * L0
    bool converged;   ///< eta quadrature converged at this point
};

struct PullInResult {
    double z_bar_in = 0.0;
    double lambda_in = 0.0;
    double omega_c_hat = 0.0;
    /// lambda_in(0) / lambda_in(omega_c); present only when a zero-field
    /// baseline was supplied (field_sweep fills these).
    std::optional<double> kappa_min_ratio;
    /// (lambda_in(omega_c) / lambda_in(0))^(1/3); detach_ratio^3 * kappa_min_ratio = 1.
    std::optional<double> detach_ratio;
};

struct Equilibrium {
    double z_bar;
    bool stable;
};

struct CantileverGeometry {
    double youngs_modulus;  ///< E, pressure units
    double width;           ///< w
    double thickness;       ///< t, requires t <= w
    double length;          ///< l
    double initial_gap;     ///< L0, same length units
    double plate_area;      ///< A

    void validate() const;  // throws std::invalid_argument
};

struct DeviceReport {
    double kappa;              ///< E w t^3 / (4 l^3)
    double f0;                 ///< pi^2 hbar c A / (240 L0^4)
    double lambda;             ///< f0 / (kappa L0)
    double detach_length_max;  ///< l (lambda_in / lambda)^(1/3)
    bool pulled_in;            ///< lambda > lambda_in
};

/// Separation -> reduction factor, injectable so stub materials (constant eta)
/// can exercise the bifurcation machinery without quadrature.
using EtaFn = std::function<EtaPoint(double separation_hat)>;

/// Binds (material, L0, tolerances) and memoizes eta per separation, since
/// curve construction, fold refinement and root solving revisit the same
/// separations. The memo is mutex-guarded; sweeps partition per field anyway.
class BifurcationSolver {
  public:
    BifurcationSolver(MaterialSpec spec, double l0_hat, QuadratureConfig config = {});
    BifurcationSolver(EtaFn eta_fn, double l0_hat);

    EtaPoint eta_at(double z_bar) const;
    double lambda_at(double z_bar) const;

    std::vector<BifurcationPoint> curve(int n_points, double z_min = 0.05,
                                        double z_max = 0.999) const;
    PullInResult find_pullin() const;
    std::pair<Equilibrium, Equilibrium> solve_equilibria(double lambda) const;

    double l0_hat() const { return l0_hat_; }
    double omega_c_hat() const { return omega_c_hat_; }

  private:
    EtaFn eta_fn_;
    double l0_hat_;
    double omega_c_hat_ = 0.0;

    struct Memo;
    std::shared_ptr<Memo> memo_;
};

std::vector<BifurcationPoint> bifurcation_curve(const MaterialSpec& spec, double l0_hat,
                                                int n_points, const QuadratureConfig& config = {});

PullInResult find_pullin(const MaterialSpec& spec, double l0_hat,
                         const QuadratureConfig& config = {});

/// Two roots of lambda(z) = lambda on either side of the fold, refined to
/// |dz| <= 1e-6; the larger-gap root is the stable one. Throws
/// NoEquilibriumError for lambda >= lambda_in and std::domain_error for
/// lambda <= 0.
std::pair<Equilibrium, Equilibrium> solve_equilibria(const MaterialSpec& spec, double l0_hat,
                                                     double lambda,
                                                     const QuadratureConfig& config = {});

/// find_pullin per field with ratios relative to the baseline field (must be
/// contained in omega_c_list). `parallel` spreads fields over threads with one
/// solver (and memo) per field; results are identical to serial evaluation.
std::vector<PullInResult> field_sweep(const MaterialSpec& spec_template, double l0_hat,
                                      std::span<const double> omega_c_list,
                                      const QuadratureConfig& config = {}, bool parallel = false,
                                      double baseline_omega_c = 0.0);

/// SI translation: stiffness, perfect-conductor force at the initial gap, the
/// load parameter and the longest same-cross-section cantilever below the
/// fold. omega_p (rad/s) fixes the c/omega_p length scale; non-positive values
/// are a domain error.
DeviceReport device_translate(const CantileverGeometry& geom, const PullInResult& result,
                              double omega_p);

}  // namespace casimag
