#pragma once

// Magneto-optic dielectric tensor of a Drude semiconductor on the imaginary
// frequency axis, in plasma units: frequencies are measured in omega_p and
// lengths in c/omega_p, so the material is fully described by
// (eps_L, gamma/omega_p, omega_c/omega_p).

#include <string>

namespace casimag {

enum class PlateModel {
    DrudeMagneto,      ///< full magneto-optic Drude tensor
    Isotropic,         ///< zero-field Drude (omega_c forced to 0)
    PerfectConductor,  ///< unit reflectivities, no material response
};

const char* to_string(PlateModel model);
PlateModel plate_model_from_string(const std::string& name);  // throws std::invalid_argument

struct MaterialSpec {
    double eps_l = 15.7;        ///< background permittivity, >= 1
    double gamma_hat = 0.01;    ///< damping gamma/omega_p, >= 0
    double omega_c_hat = 0.0;   ///< cyclotron ratio omega_c/omega_p, >= 0
    PlateModel model = PlateModel::DrudeMagneto;

    /// Cyclotron ratio actually used: the isotropic model ignores the field.
    double effective_omega_c() const {
        return model == PlateModel::Isotropic ? 0.0 : omega_c_hat;
    }

    void validate() const;  // throws std::invalid_argument
};

/// Tensor components at one imaginary frequency xi_hat = xi/omega_p.
/// eps_zz and eps_zy are not stored; they equal eps_yy and -eps_yz and are
/// already folded into the Voigt permittivity eps_v = eps_yy + eps_yz^2/eps_yy.
struct PermittivitySample {
    double xi_hat;
    double eps_xx;
    double eps_yy;
    double eps_yz;  ///< signed; negative for omega_c_hat > 0
    double eps_v;
};

/// Wick-rotated tensor components at xi_hat > 0. Throws std::domain_error for
/// xi_hat <= 0 (the xi -> 0 endpoint is handled analytically by callers).
PermittivitySample permittivity_at(const MaterialSpec& spec, double xi_hat);

/// Zero-field scalar permittivity eps_L [1 + 1/(xi(xi+gamma))]; equals eps_xx
/// of permittivity_at for any field.
double isotropic_permittivity_at(const MaterialSpec& spec, double xi_hat);

}  // namespace casimag
