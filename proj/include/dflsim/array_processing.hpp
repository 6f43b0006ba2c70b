// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>

#include <Eigen/Dense>

#include "dflsim/em_model.hpp"
#include "dflsim/geometry.hpp"

namespace dflsim {

enum class Wavefront { Planar, NonPlanar };

/// Per-antenna array response a(gamma) under one wavefront hypothesis.
class SteeringVector {
public:
    SteeringVector(Eigen::VectorXcd values, Wavefront hypothesis, double gamma);

    const Eigen::VectorXcd& values() const { return values_; }
    Wavefront hypothesis() const { return hypothesis_; }
    double gamma() const { return gamma_; }
    int size() const { return static_cast<int>(values_.size()); }

private:
    Eigen::VectorXcd values_;
    Wavefront hypothesis_;
    double gamma_;
};

struct BeamWeights {
    Eigen::VectorXcd w;

    /// w_m = 1/(2M+1); with these weights the array factor reduces to the
    /// plain normalized element sum.
    static BeamWeights uniform(int half_size);
};

/// Autocorrelation of the received vector; Hermitian positive semidefinite.
class CorrelationMatrix {
public:
    explicit CorrelationMatrix(Eigen::MatrixXcd m);
    const Eigen::MatrixXcd& matrix() const { return m_; }
    int size() const { return static_cast<int>(m_.rows()); }

private:
    Eigen::MatrixXcd m_;
};

/// Far-field hypothesis: a_m = exp(j m k d_a cos gamma), |a_m| = 1.
SteeringVector steering_planar(const LinkLayout& layout, double gamma);

/// Spherical-wavefront hypothesis:
/// a_m = (d0/d_m) exp(j m k d_a cos((gamma+phi_m)/2) / cos((gamma-phi_m)/2)),
/// which tends to the planar form as d0 grows; |a|^2 = sum (d0/d_m)^2.
SteeringVector steering_nonplanar(const LinkLayout& layout, double gamma);

/// Array response F_a = w^T a(gamma) under the chosen hypothesis.
std::complex<double> array_factor(const LinkLayout& layout, const BeamWeights& weights,
                                  double gamma, Wavefront hypothesis);

/// Analytic autocorrelation of a deterministic signal in white noise:
/// R = s s^H + sigma_n^2 I.
CorrelationMatrix correlation_matrix(const FieldVector& signal, double sigma_n);

/// Beamformer output power w^H R w (real, >= 0 for PSD R).
double beamform_power(const CorrelationMatrix& correlation, const BeamWeights& weights);

} // namespace dflsim
