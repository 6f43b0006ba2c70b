// SPDX-License-Identifier: Apache-2.0
#include "dflsim/array_processing.hpp"

#include <cmath>
#include <numbers>

#include "dflsim/errors.hpp"

namespace dflsim {

SteeringVector::SteeringVector(Eigen::VectorXcd values, Wavefront hypothesis, double gamma)
    : values_(std::move(values)), hypothesis_(hypothesis), gamma_(gamma) {
    if (values_.size() % 2 == 0)
        throw ValidationError("SteeringVector: length must be odd (2M+1)");
}

BeamWeights BeamWeights::uniform(int half_size) {
    if (half_size < 0) throw ValidationError("BeamWeights: half_size must be >= 0");
    const int n = 2 * half_size + 1;
    return {Eigen::VectorXcd::Constant(n, std::complex<double>(1.0 / n, 0.0))};
}

CorrelationMatrix::CorrelationMatrix(Eigen::MatrixXcd m) : m_(std::move(m)) {
    if (m_.rows() != m_.cols())
        throw ValidationError("CorrelationMatrix: matrix must be square");
}

SteeringVector steering_planar(const LinkLayout& layout, double gamma) {
    const int half = layout.half_size();
    const double phase_step =
        2.0 * std::numbers::pi / layout.wavelength() * layout.spacing() * std::cos(gamma);
    Eigen::VectorXcd v(2 * half + 1);
    for (int m = -half; m <= half; ++m) v(m + half) = std::polar(1.0, m * phase_step);
    return {std::move(v), Wavefront::Planar, gamma};
}

SteeringVector steering_nonplanar(const LinkLayout& layout, double gamma) {
    const int half = layout.half_size();
    const double wavenumber = 2.0 * std::numbers::pi / layout.wavelength();
    const double d0 = layout.los_length();
    Eigen::VectorXcd v(2 * half + 1);
    for (int m = -half; m <= half; ++m) {
        const double d_m = layout.link_distance(m);
        const double phi = layout.incidence_angle(gamma, m);
        const double phase = m * wavenumber * layout.spacing() *
                             std::cos((gamma + phi) / 2.0) / std::cos((gamma - phi) / 2.0);
        v(m + half) = std::polar(d0 / d_m, phase);
    }
    return {std::move(v), Wavefront::NonPlanar, gamma};
}

std::complex<double> array_factor(const LinkLayout& layout, const BeamWeights& weights,
                                  double gamma, Wavefront hypothesis) {
    if (weights.w.size() != layout.size())
        throw ValidationError("array_factor: weight length does not match the array");
    const SteeringVector a = hypothesis == Wavefront::Planar
                                 ? steering_planar(layout, gamma)
                                 : steering_nonplanar(layout, gamma);
    return weights.w.transpose() * a.values();
}

CorrelationMatrix correlation_matrix(const FieldVector& signal, double sigma_n) {
    if (!signal.values().allFinite())
        throw ValidationError("correlation_matrix: signal entries must be finite");
    Eigen::MatrixXcd r = signal.values() * signal.values().adjoint();
    r.diagonal().array() += sigma_n * sigma_n;
    return CorrelationMatrix(std::move(r));
}

double beamform_power(const CorrelationMatrix& correlation, const BeamWeights& weights) {
    if (weights.w.size() != correlation.size())
        throw ValidationError("beamform_power: weight length does not match the matrix");
    const std::complex<double> p = weights.w.adjoint() * correlation.matrix() * weights.w;
    return p.real();
}

} // namespace dflsim
