// SPDX-License-Identifier: Apache-2.0
#include "dflsim/doa_estimation.hpp"

#include <cmath>
#include <sstream>

#include "dflsim/errors.hpp"

namespace dflsim {

void GammaGrid::validate() const {
    std::ostringstream bad;
    auto fail = [&bad](const char* what) { bad << (bad.tellp() > 0 ? "; " : "") << what; };
    if (!(std::isfinite(start) && start >= 0.0)) fail("start must be >= 0");
    if (!(std::isfinite(stop) && stop <= std::numbers::pi)) fail("stop must be <= pi");
    if (!(start < stop)) fail("start must be < stop");
    if (!(std::isfinite(step) && step > 0.0)) fail("step must be > 0");
    if (bad.tellp() > 0) throw ValidationError("GammaGrid: " + bad.str());
}

std::vector<double> GammaGrid::points() const {
    validate();
    const double span = stop - start;
    const double steps = span / step;
    const auto whole = static_cast<long long>(std::llround(steps));
    std::vector<double> out;
    if (whole >= 1 && std::abs(steps - static_cast<double>(whole)) < 1e-9) {
        // Step divides the span: place points so grid symmetry is exact
        // (i/whole is computed first; the midpoint lands on span/2 exactly).
        out.reserve(static_cast<std::size_t>(whole) + 1);
        for (long long i = 0; i <= whole; ++i)
            out.push_back(start + span * (static_cast<double>(i) / static_cast<double>(whole)));
    } else {
        const auto n = static_cast<long long>(std::floor(steps + 1e-12));
        out.reserve(static_cast<std::size_t>(n) + 2);
        for (long long i = 0; i <= n; ++i) out.push_back(start + static_cast<double>(i) * step);
        if (out.back() < stop) out.push_back(stop);
    }
    return out;
}

double reference_power_p0(double sigma_n) {
    if (!(sigma_n >= 0.0)) throw ValidationError("reference_power_p0: sigma_n must be >= 0");
    return 1.0 + sigma_n * sigma_n;
}

BeamWeights scan_weights(const LinkLayout& layout, double gamma) {
    const SteeringVector a = steering_planar(layout, gamma);
    return {a.values().conjugate() / static_cast<double>(layout.size())};
}

PowerRatioCurve power_ratio_curve_for_signal(const FieldVector& signal,
                                             const LinkLayout& layout,
                                             const GammaGrid& grid, double sigma_n) {
    const CorrelationMatrix r = correlation_matrix(signal, sigma_n);
    const double p0 = reference_power_p0(sigma_n);
    PowerRatioCurve curve;
    curve.gammas = grid.points();
    curve.ratios.reserve(curve.gammas.size());
    for (const double gamma : curve.gammas)
        curve.ratios.push_back(beamform_power(r, scan_weights(layout, gamma)) / p0);
    return curve;
}

PowerRatioCurve power_ratio_curve(const LinkLayout& layout,
                                  const std::optional<TargetSheet>& sheet,
                                  const GammaGrid& grid, double sigma_n,
                                  const QuadratureSpec& spec) {
    const FieldVector s = signal_vector(
        layout, sheet ? Occupancy::Occupied : Occupancy::Empty, sheet, spec);
    return power_ratio_curve_for_signal(s, layout, grid, sigma_n);
}

DoaEstimate estimate_doa_for_signal(const FieldVector& signal, const LinkLayout& layout,
                                    const GammaGrid& grid, double sigma_n) {
    DoaEstimate est;
    est.curve = power_ratio_curve_for_signal(signal, layout, grid, sigma_n);
    std::size_t best = 0;
    for (std::size_t i = 1; i < est.curve.ratios.size(); ++i)
        if (est.curve.ratios[i] > est.curve.ratios[best]) best = i;
    const double ratio = est.curve.ratios[best];
    if (!(ratio > 0.0))
        throw NumericalError("estimate_doa: non-positive power ratio at the maximum");
    est.gamma_hat = est.curve.gammas[best];
    est.p0 = reference_power_p0(sigma_n);
    est.py = ratio * est.p0;
    est.attenuation_db = -10.0 * std::log10(ratio);
    return est;
}

DoaEstimate estimate_doa(const LinkLayout& layout, const std::optional<TargetSheet>& sheet,
                         const GammaGrid& grid, double sigma_n, const QuadratureSpec& spec) {
    const FieldVector s = signal_vector(
        layout, sheet ? Occupancy::Occupied : Occupancy::Empty, sheet, spec);
    return estimate_doa_for_signal(s, layout, grid, sigma_n);
}

} // namespace dflsim
