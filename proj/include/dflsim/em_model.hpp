// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>
#include <cstdint>
#include <optional>

#include <Eigen/Dense>

#include "dflsim/geometry.hpp"
#include "dflsim/quadrature.hpp"

namespace dflsim {

enum class Occupancy { Empty, Occupied };

enum class FieldKind {
    RatioPerAntenna,  // E^(m) / E_R^(m)
    RatioToCenter,    // E^(m) / E_R^(0) or E_R^(m) / E_R^(0)
    Snapshot,         // one noisy observation r
};

/// Complex per-antenna vector indexed m = -M ... M.
class FieldVector {
public:
    FieldVector(int half_size, FieldKind kind);
    static FieldVector from_values(Eigen::VectorXcd values, FieldKind kind);

    int half_size() const { return half_size_; }
    int size() const { return 2 * half_size_ + 1; }
    FieldKind kind() const { return kind_; }

    std::complex<double>& operator()(int m) { return values_(m + half_size_); }
    const std::complex<double>& operator()(int m) const { return values_(m + half_size_); }

    const Eigen::VectorXcd& values() const { return values_; }

private:
    Eigen::VectorXcd values_;
    int half_size_;
    FieldKind kind_;
};

/// Zero-mean circularly-symmetric complex white noise, per-component
/// variance sigma_n^2, generated from a counter-based stream keyed by
/// (seed, snapshot index, antenna index).
struct NoiseModel {
    double sigma_n = 0.0;
    std::uint64_t seed = 0;
};

/// Field ratio E^(m)/E_R^(m) at RX_m with the absorbing sheet present:
/// 1 - j (d_m/lambda) * integral over the sheet of
/// exp(-j 2pi/lambda (r1 + r2 - d_m)) / (r1 r2).
std::complex<double> perturbed_ratio(const LinkLayout& layout, const TargetSheet& sheet,
                                     int m, const QuadratureSpec& spec);

/// All perturbed ratios as a FieldVector of kind RatioPerAntenna.
FieldVector perturbed_ratio_vector(const LinkLayout& layout, const TargetSheet& sheet,
                                   const QuadratureSpec& spec);

/// Free-space ratio E_R^(m)/E_R^(0) = (d0/d_m) exp(-j 2pi/lambda (d_m - d0)).
std::complex<double> reference_ratio(const LinkLayout& layout, int m);

/// Noiseless signal vector normalized to E_R^(0) = 1: the reference ratios
/// when empty, their elementwise product with the perturbed ratios when
/// occupied.
FieldVector signal_vector(const LinkLayout& layout, Occupancy occupancy,
                          const std::optional<TargetSheet>& sheet,
                          const QuadratureSpec& spec);

/// One noisy observation r = s + n. Deterministic in (seed, t_index).
FieldVector snapshot(const FieldVector& signal, const NoiseModel& noise,
                     std::int64_t t_index);

/// Excess attenuation 10 log10 |E_R/E|^2 = -20 log10 |ratio| in dB;
/// positive when the target absorbs.
double excess_attenuation_db(std::complex<double> perturbed);

} // namespace dflsim
