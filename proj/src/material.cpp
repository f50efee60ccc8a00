#include "casimag/material.hpp"

#include <cmath>
#include <stdexcept>

namespace casimag {

const char* to_string(PlateModel model) {
    switch (model) {
        case PlateModel::DrudeMagneto: return "drude-magneto";
        case PlateModel::Isotropic: return "isotropic";
        case PlateModel::PerfectConductor: return "perfect-conductor";
    }
    return "?";
}

PlateModel plate_model_from_string(const std::string& name) {
    if (name == "drude-magneto") return PlateModel::DrudeMagneto;
    if (name == "isotropic") return PlateModel::Isotropic;
    if (name == "perfect-conductor" || name == "perfect") return PlateModel::PerfectConductor;
    throw std::invalid_argument("unknown plate model '" + name +
                                "' (expected drude-magneto, isotropic or perfect-conductor)");
}

void MaterialSpec::validate() const {
    if (!(std::isfinite(eps_l) && eps_l >= 1.0))
        throw std::invalid_argument("material: eps_l must be finite and >= 1");
    if (!(std::isfinite(gamma_hat) && gamma_hat >= 0.0))
        throw std::invalid_argument("material: gamma_hat must be finite and >= 0");
    if (!(std::isfinite(omega_c_hat) && omega_c_hat >= 0.0))
        throw std::invalid_argument("material: omega_c_hat must be finite and >= 0");
}

PermittivitySample permittivity_at(const MaterialSpec& spec, double xi_hat) {
    if (!(xi_hat > 0.0))
        throw std::domain_error("permittivity_at: xi_hat must be > 0");

    const double oc = spec.effective_omega_c();
    const double xg = xi_hat + spec.gamma_hat;

    // omega -> i xi in the Drude tensor; all components come out real.
    const double eps_xx = spec.eps_l * (1.0 + 1.0 / (xi_hat * xg));
    const double den = xi_hat * (xg * xg + oc * oc);
    const double eps_yy = spec.eps_l * (1.0 + xg / den);
    const double eps_yz = -spec.eps_l * oc / den;
    const double eps_v = eps_yy + eps_yz * eps_yz / eps_yy;

    return {xi_hat, eps_xx, eps_yy, eps_yz, eps_v};
}

double isotropic_permittivity_at(const MaterialSpec& spec, double xi_hat) {
    if (!(xi_hat > 0.0))
        throw std::domain_error("isotropic_permittivity_at: xi_hat must be > 0");
    return spec.eps_l * (1.0 + 1.0 / (xi_hat * (xi_hat + spec.gamma_hat)));
}

}  // namespace casimag
