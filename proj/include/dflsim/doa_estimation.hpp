// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <vector>

#include "dflsim/array_processing.hpp"
#include "dflsim/em_model.hpp"
#include "dflsim/geometry.hpp"
#include "dflsim/quadrature.hpp"

namespace dflsim {

/// Scan grid over [start, stop] in steps of `step`; both endpoints are
/// always grid points.
struct GammaGrid {
    double start = 0.0;
    double stop = std::numbers::pi;
    double step = std::numbers::pi / 1800.0;  // 0.1 degree

    static GammaGrid standard() { return {}; }

    void validate() const;
    std::vector<double> points() const;
};

struct PowerRatioCurve {
    std::vector<double> gammas;  // rad
    std::vector<double> ratios;  // P_y(S=1) / P_0(S=0)
};

struct DoaEstimate {
    double gamma_hat = 0.0;        // rad, a grid point of `curve`
    double attenuation_db = 0.0;   // 10 log10(P_0 / P_y(gamma_hat))
    double p0 = 0.0;               // center-antenna reference power
    double py = 0.0;               // beamformer power at gamma_hat
    PowerRatioCurve curve;
};

/// Power received by the center antenna in the empty room; with the
/// E_R^(0) = 1 normalization this is 1 + sigma_n^2.
double reference_power_p0(double sigma_n);

/// Scan weights used by the estimator: conjugated planar steering over
/// 2M+1. The conjugation fixes the scan's left/right sense so that targets
/// on the positive-Y side of the link produce gamma_hat < pi/2.
BeamWeights scan_weights(const LinkLayout& layout, double gamma);

/// Power-ratio curve for an already-computed noiseless signal vector. The
/// correlation matrix is formed once; only the weights vary with gamma.
PowerRatioCurve power_ratio_curve_for_signal(const FieldVector& signal,
                                             const LinkLayout& layout,
                                             const GammaGrid& grid, double sigma_n);

/// Full pipeline: signal vector (empty room when no sheet), then the curve.
PowerRatioCurve power_ratio_curve(const LinkLayout& layout,
                                  const std::optional<TargetSheet>& sheet,
                                  const GammaGrid& grid, double sigma_n,
                                  const QuadratureSpec& spec);

/// Grid argmax of the power ratio (ties resolve to the smallest gamma) with
/// the excess attenuation evaluated there.
DoaEstimate estimate_doa_for_signal(const FieldVector& signal, const LinkLayout& layout,
                                    const GammaGrid& grid, double sigma_n);

DoaEstimate estimate_doa(const LinkLayout& layout, const std::optional<TargetSheet>& sheet,
                         const GammaGrid& grid, double sigma_n, const QuadratureSpec& spec);

} // namespace dflsim
