#include "casimag/lifshitz.hpp"

#include <atomic>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <thread>

#include "casimag/reflectivity.hpp"

namespace casimag {

namespace {

// eta = 15/(2 pi^4) * Int_0^inf dy Int_y^inf dx x^2 [G_s + G_p], where
// x = 2 k L and y = 2 xi L (Q dQ = k dk folded in). The inner variable is
// mapped through u = 1 - e^{-(x-y)} so the e^{-x} mass is flattened, the
// outer through y = s/(1-s); both land on (0,1) and the perfect-conductor
// case integrates to exactly 1.
constexpr double kPrefactor = 15.0 / (2.0 * std::numbers::pi * std::numbers::pi *
                                      std::numbers::pi * std::numbers::pi);

/// G(rho, x) = [rho^{-1} e^x - 1]^{-1}, arranged to stay accurate for small x
/// and rho near 1, and to underflow cleanly to 0 for large x.
double lifshitz_g(double rho, double x) {
    return rho / (std::expm1(x) + (1.0 - rho));
}

struct InnerConfig {
    QuadratureConfig quad;
    double l_hat;
};

double inner_integrand(const MaterialSpec& spec, double l_hat, double y, double u) {
    if (!(u < 1.0)) return 0.0;
    const double w = -std::log1p(-u);  // x - y >= 0
    const double x = y + w;
    if (x == 0.0) return 0.0;  // x^2 G -> 0 even at unit reflectivity

    const double inv_2l = 0.5 / l_hat;
    const double q_hat = std::sqrt(w * (w + 2.0 * y)) * inv_2l;

    ReflectionProduct rp;
    if (y == 0.0) {
        rp = reflection_products_xi0(spec, q_hat);
    } else {
        const double xi_hat = y * inv_2l;
        const double k_hat = x * inv_2l;
        rp = reflection_products(spec, WavevectorNode{xi_hat, q_hat, k_hat});
    }
    const double g = lifshitz_g(rp.rs_prod, x) + lifshitz_g(rp.rp_prod, x);
    return x * x * g / (1.0 - u);
}

}  // namespace

EtaPoint eta(const MaterialSpec& spec, double l_hat, const QuadratureConfig& config) {
    spec.validate();
    config.validate();
    if (!(l_hat > 0.0) || !std::isfinite(l_hat))
        throw std::domain_error("eta: l_hat must be finite and > 0");

    QuadratureConfig inner_cfg = config;
    inner_cfg.rel_tol = config.rel_tol / 50.0;
    inner_cfg.abs_tol = config.abs_tol * 1e-3;

    long refl_evals = 0;
    bool inner_ok = true;

    auto outer = [&](double s) -> NoisySample {
        if (!(s < 1.0)) return {0.0, 0.0};
        const double y = s / (1.0 - s);
        const IntegralEstimate inner = integrate_adaptive(
            [&](double u) { return inner_integrand(spec, l_hat, y, u); }, 0.0, 1.0, inner_cfg);
        refl_evals += inner.evals;
        inner_ok = inner_ok && inner.converged;
        const double jac = 1.0 / ((1.0 - s) * (1.0 - s));
        return {inner.value * jac, inner.err_est * jac};
    };

    QuadratureConfig outer_cfg = config;
    outer_cfg.abs_tol = config.abs_tol / kPrefactor;
    const IntegralEstimate est = integrate_adaptive_noisy(outer, 0.0, 1.0, outer_cfg);

    EtaPoint out;
    out.l_hat = l_hat;
    out.omega_c_hat = spec.effective_omega_c();
    out.eta = kPrefactor * est.value;
    out.err_est = kPrefactor * est.err_est;
    out.evals = refl_evals;
    out.converged = est.converged && inner_ok;
    return out;
}

std::vector<EtaPoint> eta_curve(const MaterialSpec& spec, std::span<const double> l_hats,
                                const QuadratureConfig& config, bool parallel) {
    for (std::size_t i = 0; i < l_hats.size(); ++i) {
        if (!(l_hats[i] > 0.0))
            throw std::domain_error("eta_curve: separations must be > 0");
        if (i > 0 && !(l_hats[i] > l_hats[i - 1]))
            throw std::invalid_argument("eta_curve: separations must be strictly increasing");
    }

    std::vector<EtaPoint> points(l_hats.size());
    if (!parallel || l_hats.size() < 2) {
        for (std::size_t i = 0; i < l_hats.size(); ++i) points[i] = eta(spec, l_hats[i], config);
        return points;
    }

    // each point is pure and lands in its own slot, so any schedule gives
    // results identical to the serial loop
    std::atomic<std::size_t> next{0};
    const unsigned n_workers =
        std::min<std::size_t>(std::max(1u, std::thread::hardware_concurrency()), l_hats.size());
    std::vector<std::thread> workers;
    workers.reserve(n_workers);
    for (unsigned t = 0; t < n_workers; ++t) {
        workers.emplace_back([&] {
            for (std::size_t i = next.fetch_add(1); i < l_hats.size(); i = next.fetch_add(1))
                points[i] = eta(spec, l_hats[i], config);
        });
    }
    for (std::thread& t : workers) t.join();
    return points;
}

}  // namespace casimag
