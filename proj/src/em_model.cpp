// SPDX-License-Identifier: Apache-2.0
#include "dflsim/em_model.hpp"

#include <cmath>
#include <numbers>

#include "dflsim/errors.hpp"

namespace dflsim {

namespace {

constexpr std::complex<double> kImag{0.0, 1.0};

std::uint64_t splitmix_next(std::uint64_t& state) {
    state += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

// Uniform in (0, 1); the half-ulp offset keeps log() away from 0.
double to_unit(std::uint64_t bits) {
    return (static_cast<double>(bits >> 11) + 0.5) * 0x1.0p-53;
}

// One complex Gaussian sample, E|n|^2 = sigma^2, from the stream keyed by
// (seed, t_index, antenna index). Stateless across calls, so snapshots can
// be drawn concurrently in any order.
std::complex<double> keyed_noise(std::uint64_t seed, std::int64_t t_index, int m,
                                 double sigma) {
    std::uint64_t state = seed;
    std::uint64_t key = splitmix_next(state) ^ static_cast<std::uint64_t>(t_index);
    state = key;
    key = splitmix_next(state) ^ static_cast<std::uint64_t>(static_cast<std::int64_t>(m));
    state = key;
    const double u1 = to_unit(splitmix_next(state));
    const double u2 = to_unit(splitmix_next(state));
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * std::numbers::pi * u2;
    const double scale = sigma / std::numbers::sqrt2;
    return {scale * radius * std::cos(angle), scale * radius * std::sin(angle)};
}

} // namespace

FieldVector::FieldVector(int half_size, FieldKind kind)
    : values_(Eigen::VectorXcd::Zero(2 * half_size + 1)), half_size_(half_size), kind_(kind) {
    if (half_size < 0) throw ValidationError("FieldVector: half_size must be >= 0");
}

FieldVector FieldVector::from_values(Eigen::VectorXcd values, FieldKind kind) {
    if (values.size() % 2 == 0)
        throw ValidationError("FieldVector: length must be odd (2M+1)");
    if (!values.allFinite())
        throw ValidationError("FieldVector: entries must be finite");
    FieldVector out(static_cast<int>(values.size() / 2), kind);
    out.values_ = std::move(values);
    return out;
}

std::complex<double> perturbed_ratio(const LinkLayout& layout, const TargetSheet& sheet,
                                     int m, const QuadratureSpec& spec) {
    const double d_m = layout.link_distance(m);
    const double wavenumber = 2.0 * std::numbers::pi / layout.wavelength();
    const auto integrand = [&](double xi2, double xi3) {
        const auto [r1, r2] = path_lengths(layout, sheet, m, xi2, xi3);
        return std::polar(1.0 / (r1 * r2), -wavenumber * (r1 + r2 - d_m));
    };
    const IntegrationResult res =
        integrate_2d(integrand, sheet.half_width(), sheet.half_height(), spec);
    if (!res.converged)
        throw QuadratureError("field-ratio integral did not converge (relative change " +
                              std::to_string(res.error_estimate) + " after " +
                              std::to_string(res.refinements) + " refinements)");
    return 1.0 - kImag * (d_m / layout.wavelength()) * res.value;
}

FieldVector perturbed_ratio_vector(const LinkLayout& layout, const TargetSheet& sheet,
                                   const QuadratureSpec& spec) {
    FieldVector out(layout.half_size(), FieldKind::RatioPerAntenna);
    for (int m = -layout.half_size(); m <= layout.half_size(); ++m)
        out(m) = perturbed_ratio(layout, sheet, m, spec);
    return out;
}

std::complex<double> reference_ratio(const LinkLayout& layout, int m) {
    const double d_m = layout.link_distance(m);
    const double d0 = layout.los_length();
    const double wavenumber = 2.0 * std::numbers::pi / layout.wavelength();
    return std::polar(d0 / d_m, -wavenumber * (d_m - d0));
}

FieldVector signal_vector(const LinkLayout& layout, Occupancy occupancy,
                          const std::optional<TargetSheet>& sheet,
                          const QuadratureSpec& spec) {
    if (occupancy == Occupancy::Occupied && !sheet.has_value())
        throw ValidationError("signal_vector: occupied state requires a target sheet");
    FieldVector out(layout.half_size(), FieldKind::RatioToCenter);
    for (int m = -layout.half_size(); m <= layout.half_size(); ++m) {
        std::complex<double> s = reference_ratio(layout, m);
        if (occupancy == Occupancy::Occupied) s *= perturbed_ratio(layout, *sheet, m, spec);
        out(m) = s;
    }
    return out;
}

FieldVector snapshot(const FieldVector& signal, const NoiseModel& noise,
                     std::int64_t t_index) {
    if (signal.kind() != FieldKind::RatioToCenter)
        throw ValidationError("snapshot: input must be a noiseless RatioToCenter signal");
    FieldVector out(signal.half_size(), FieldKind::Snapshot);
    for (int m = -signal.half_size(); m <= signal.half_size(); ++m)
        out(m) = signal(m) + keyed_noise(noise.seed, t_index, m, noise.sigma_n);
    return out;
}

double excess_attenuation_db(std::complex<double> perturbed) {
    const double mag = std::abs(perturbed);
    if (mag == 0.0)
        throw SingularityError("zero field ratio: excess attenuation is infinite");
    return -20.0 * std::log10(mag);
}

} // namespace dflsim
