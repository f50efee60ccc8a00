#include "casimag/reflectivity.hpp"

#include <array>
#include <cmath>
#include <complex>
#include <stdexcept>

#include "casimag/errors.hpp"

namespace casimag {

namespace {

using cplx = std::complex<double>;

ReflectionProduct voigt_products(const PermittivitySample& p, const WavevectorNode& node) {
    const double k0 = node.k_hat;
    const double ks = std::sqrt(node.q_hat * node.q_hat + p.eps_xx * node.xi_hat * node.xi_hat);
    const double km = std::sqrt(node.q_hat * node.q_hat + p.eps_v * node.xi_hat * node.xi_hat);

    const double rs = (k0 - ks) / (k0 + ks);
    const double nr = (p.eps_yz / p.eps_yy) * node.q_hat;  // nonreciprocal term
    const double dm = p.eps_v * k0 - km;
    const double dp = p.eps_v * k0 + km;

    return {rs * rs, (dm * dm + nr * nr) / (dp * dp + nr * nr)};
}

/// Solves the 4x4 complex matching system by Gaussian elimination with
/// partial pivoting; throws when a pivot is negligible relative to the matrix.
cplx solve_reflection_amplitude(std::array<cplx, 16> m, std::array<cplx, 4> rhs) {
    double scale = 0.0;
    for (const cplx& v : m) scale = std::max(scale, std::abs(v));

    std::array<int, 4> perm = {0, 1, 2, 3};
    for (int col = 0; col < 4; ++col) {
        int best = col;
        for (int r = col + 1; r < 4; ++r)
            if (std::abs(m[perm[r] * 4 + col]) > std::abs(m[perm[best] * 4 + col])) best = r;
        std::swap(perm[col], perm[best]);

        const cplx pivot = m[perm[col] * 4 + col];
        if (!(std::abs(pivot) > 1e-13 * scale))
            throw NumericalError("transfer_matrix_oracle: matching system is ill-conditioned, "
                                 "result would lose precision");
        for (int r = col + 1; r < 4; ++r) {
            const cplx f = m[perm[r] * 4 + col] / pivot;
            for (int c = col; c < 4; ++c) m[perm[r] * 4 + c] -= f * m[perm[col] * 4 + c];
            rhs[perm[r]] -= f * rhs[perm[col]];
        }
    }
    std::array<cplx, 4> x{};
    for (int row = 3; row >= 0; --row) {
        cplx acc = rhs[perm[row]];
        for (int c = row + 1; c < 4; ++c) acc -= m[perm[row] * 4 + c] * x[c];
        x[row] = acc / m[perm[row] * 4 + row];
    }
    return x[0];  // unknown order: r, a, b, t
}

/// Slab reflection amplitude for one polarization. The in-medium modes are
/// parameterized as a e^{-kappa z} and b e^{-kappa (d-z)} so no exponential
/// ever exceeds 1 regardless of thickness. chi(m) is the tangential-field
/// ratio of a mode with z-dependence e^{m z}; vacuum has chi(m) = m.
cplx slab_amplitude(double k0, double kappa, const std::function<cplx(double)>& chi, double d) {
    const double decay = std::exp(-kappa * d);
    const cplx chi_dn = chi(-kappa);
    const cplx chi_up = chi(kappa);

    // unknowns (r, a, b, t); interface z=0 then z=d, field row then ratio row
    std::array<cplx, 16> m = {
        -1.0, 1.0, decay, 0.0,
        k0, -chi_dn, -chi_up * decay, 0.0,
        0.0, decay, 1.0, -1.0,
        0.0, chi_dn * decay, chi_up, k0,
    };
    std::array<cplx, 4> rhs = {1.0, k0, 0.0, 0.0};
    return solve_reflection_amplitude(m, rhs);
}

void check_node(const WavevectorNode& node) {
    if (!(node.xi_hat > 0.0))
        throw std::domain_error("reflection_products: xi_hat must be > 0");
    if (!(node.q_hat >= 0.0))
        throw std::domain_error("reflection_products: q_hat must be >= 0");
}

void check_finite(const ReflectionProduct& rp) {
    if (!std::isfinite(rp.rs_prod) || !std::isfinite(rp.rp_prod))
        throw NumericalError("reflection_products: non-finite material response");
}

}  // namespace

WavevectorNode WavevectorNode::make(double xi_hat, double q_hat) {
    return {xi_hat, q_hat, std::hypot(xi_hat, q_hat)};
}

ReflectionProduct reflection_products(const MaterialSpec& spec, const WavevectorNode& node) {
    if (spec.model == PlateModel::PerfectConductor) return {1.0, 1.0};
    if (spec.model == PlateModel::Isotropic) return reflection_products_isotropic(spec, node);
    check_node(node);
    const ReflectionProduct out = voigt_products(permittivity_at(spec, node.xi_hat), node);
    check_finite(out);
    return out;
}

ReflectionProduct reflection_products_isotropic(const MaterialSpec& spec,
                                                const WavevectorNode& node) {
    if (spec.model == PlateModel::PerfectConductor) return {1.0, 1.0};
    check_node(node);
    const double eps = isotropic_permittivity_at(spec, node.xi_hat);
    const double k0 = node.k_hat;
    const double km = std::sqrt(node.q_hat * node.q_hat + eps * node.xi_hat * node.xi_hat);
    const double rs = (k0 - km) / (k0 + km);
    const double rp = (eps * k0 - km) / (eps * k0 + km);
    const ReflectionProduct out{rs * rs, rp * rp};
    check_finite(out);
    return out;
}

ReflectionProduct reflection_products_xi0(const MaterialSpec& spec, double q_hat) {
    if (spec.model == PlateModel::PerfectConductor) return {1.0, 1.0};
    if (!(q_hat >= 0.0))
        throw std::domain_error("reflection_products_xi0: q_hat must be >= 0");
    // p response is metallic at zero frequency for any Drude strength; the s
    // limit vanishes with damping and stays finite without (plasma model).
    if (spec.gamma_hat > 0.0) return {0.0, 1.0};
    const double ks = std::sqrt(q_hat * q_hat + spec.eps_l);
    const double rs = (q_hat - ks) / (q_hat + ks);
    return {rs * rs, 1.0};
}

ReflectionProduct transfer_matrix_oracle(const MaterialSpec& spec, const WavevectorNode& node,
                                         double thickness_hat) {
    if (!(thickness_hat > 0.0))
        throw std::domain_error("transfer_matrix_oracle: thickness_hat must be > 0");
    if (spec.model == PlateModel::PerfectConductor) return {1.0, 1.0};
    check_node(node);

    PermittivitySample p{};
    if (spec.model == PlateModel::Isotropic) {
        const double eps = isotropic_permittivity_at(spec, node.xi_hat);
        p = {node.xi_hat, eps, eps, 0.0, eps};
    } else {
        p = permittivity_at(spec, node.xi_hat);
    }

    const double k0 = node.k_hat;
    const double xi2 = node.xi_hat * node.xi_hat;
    const double q2 = node.q_hat * node.q_hat;
    const double ks = std::sqrt(q2 + p.eps_xx * xi2);
    const double km = std::sqrt(q2 + p.eps_v * xi2);

    const cplx r_s = slab_amplitude(k0, ks, [](double m) { return cplx(m); }, thickness_hat);
    const cplx r_p = slab_amplitude(
        k0, km,
        [&](double m) { return (p.eps_yy * m + cplx(0.0, p.eps_yz * node.q_hat)) /
                               (p.eps_yy * p.eps_v); },
        thickness_hat);

    // The facing plate is the mirror image (eps_yz -> -eps_yz), which
    // conjugates r_p, so the two-plate products are real.
    const ReflectionProduct out{std::norm(r_s), std::norm(r_p)};
    check_finite(out);
    return out;
}

}  // namespace casimag
