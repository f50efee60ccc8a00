#pragma once

// Two-plate reflection-amplitude products at imaginary frequency in the Voigt
// configuration (field along x, in-plane wavevector along y, identical
// half-space plates). Only the products r1*r2 enter the force integrand; for
// p polarization the nonreciprocal +-i(eps_yz/eps_yy)Q term flips sign between
// the facing plates, so the product is real.

#include "casimag/material.hpp"

namespace casimag {

struct WavevectorNode {
    double xi_hat;  ///< imaginary frequency xi/omega_p
    double q_hat;   ///< transverse wavevector Q c/omega_p
    double k_hat;   ///< sqrt(xi_hat^2 + q_hat^2)

    static WavevectorNode make(double xi_hat, double q_hat);
};

struct ReflectionProduct {
    double rs_prod;  ///< r1s * r2s
    double rp_prod;  ///< r1p * r2p
};

/// Half-space products at xi_hat > 0, q_hat >= 0. Routed by spec.model:
/// perfect conductor -> (1,1); isotropic -> Fresnel path; drude-magneto ->
/// the Voigt closed forms. Throws std::domain_error for xi_hat <= 0 and
/// NumericalError if the material response is non-finite.
ReflectionProduct reflection_products(const MaterialSpec& spec, const WavevectorNode& node);

/// Isotropic Fresnel path with eps = isotropic_permittivity_at. Kept as a
/// distinct route so the zero-field Voigt forms can be checked against it.
ReflectionProduct reflection_products_isotropic(const MaterialSpec& spec, const WavevectorNode& node);

/// Analytic xi -> 0 limits at fixed q_hat: rp -> 1 for any Drude material;
/// rs -> 0 with damping, and to the plasma-model interface value without.
ReflectionProduct reflection_products_xi0(const MaterialSpec& spec, double q_hat);

/// Validation oracle: reflection products of a finite slab (thickness_hat in
/// units of c/omega_p) backed by vacuum, obtained by matching tangential
/// fields at both interfaces and solving the resulting linear system.
/// Converges to reflection_products as thickness_hat -> infinity. Throws
/// std::domain_error for thickness_hat <= 0 and NumericalError when the
/// matching system loses precision.
ReflectionProduct transfer_matrix_oracle(const MaterialSpec& spec, const WavevectorNode& node,
                                         double thickness_hat);

}  // namespace casimag
