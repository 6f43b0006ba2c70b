// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>
#include <functional>
#include <vector>

namespace dflsim {

/// Tensor-product Gauss-Legendre rule over a uniform panel grid.
struct QuadratureSpec {
    double panel_max_side;      // m, upper bound on the panel edge length
    int points_per_panel;       // Gauss-Legendre nodes per panel per axis
    double rel_tol;             // relative tolerance between refinements

    /// panel_max_side = lambda/4, 4-point panels, rel_tol 1e-6. Quarter-wave
    /// panels keep the diffraction phase change per panel below pi, which a
    /// 4-point rule resolves with wide margin.
    static QuadratureSpec for_wavelength(double wavelength);

    void validate() const;
};

struct IntegrationResult {
    std::complex<double> value{0.0, 0.0};
    double error_estimate = 0.0;  // relative difference of the last two refinements
    int refinements = 0;          // halvings performed past the base grid
    bool converged = false;
    std::vector<double> estimate_history;  // one entry per refinement
};

using Integrand2D = std::function<std::complex<double>(double, double)>;

/// Gauss-Legendre nodes and weights on [-1, 1], exactly symmetric about 0.
struct GaussRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};
GaussRule gauss_legendre(int n);

/// Integrates f over [-half_width, half_width] x [-half_height, half_height].
///
/// Panels are refined (halved) until two successive results agree to
/// spec.rel_tol in relative magnitude, up to 8 refinements; past the cap the
/// result carries converged = false. Node ordering and the reduction tree are
/// fixed, and the reduction is invariant under mirror reversal of either
/// axis, so mirror-symmetric geometries integrate to bit-identical values.
/// Throws QuadratureError on a non-finite integrand value.
IntegrationResult integrate_2d(const Integrand2D& f, double half_width,
                               double half_height, const QuadratureSpec& spec);

/// Plain midpoint Riemann sum on an n x n grid. Deliberately simple; serves
/// as the independent reference for integrate_2d.
std::complex<double> integrate_2d_oracle(const Integrand2D& f, double half_width,
                                         double half_height, int n_per_axis);

} // namespace dflsim
