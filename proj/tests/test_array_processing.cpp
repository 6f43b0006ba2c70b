// SPDX-License-Identifier: Apache-2.0
#include <cmath>
#include <complex>
#include <numbers>

#include <doctest.h>

#include <Eigen/Eigenvalues>

#include "dflsim/array_processing.hpp"
#include "dflsim/errors.hpp"

using namespace dflsim;

namespace {

constexpr double kLambda = 0.12055350571014958;
constexpr double kPi = std::numbers::pi;

LinkLayout paper_layout(int half_size = 2) {
    return LinkLayout(kLambda, 5.0, 0.06, half_size, 0.9);
}

LinkLayout halfwave_layout(int half_size, double d0) {
    return LinkLayout(kLambda, d0, kLambda / 2.0, half_size, 0.9);
}

FieldVector occupied_like_signal() {
    // Arbitrary fixed complex signal; statistics tests need nothing physical.
    Eigen::VectorXcd v(5);
    v << std::complex<double>(0.009, 0.253), std::complex<double>(0.044, 0.358),
        std::complex<double>(0.054, 0.398), std::complex<double>(0.044, 0.358),
        std::complex<double>(0.009, 0.253);
    return FieldVector::from_values(v, FieldKind::RatioToCenter);
}

} // namespace

TEST_CASE("planar steering") {
    const LinkLayout lay = halfwave_layout(2, 5.0);

    SUBCASE("broadside is the all-ones vector") {
        const SteeringVector a = steering_planar(lay, kPi / 2);
        for (int i = 0; i < 5; ++i)
            CHECK(std::abs(a.values()(i) - std::complex<double>{1.0, 0.0}) < 1e-14);
    }

    SUBCASE("endfire alternates sign at half-wave spacing") {
        const SteeringVector a = steering_planar(lay, 0.0);
        for (int m = -2; m <= 2; ++m) {
            const double expected = (m % 2 == 0) ? 1.0 : -1.0;
            CHECK(std::abs(a.values()(m + 2) - expected) < 1e-13);
        }
    }

    SUBCASE("sixty degrees gives quarter-turn phase steps") {
        const SteeringVector a = steering_planar(lay, kPi / 3);
        for (int m = -2; m <= 2; ++m) {
            const std::complex<double> expected = std::polar(1.0, m * kPi / 2.0);
            CHECK(std::abs(a.values()(m + 2) - expected) < 1e-13);
        }
    }

    SUBCASE("unit modulus and conjugate symmetry everywhere") {
        for (double gamma = 0.0; gamma <= kPi; gamma += kPi / 37) {
            const SteeringVector a = steering_planar(lay, gamma);
            for (int m = -2; m <= 2; ++m) {
                CHECK(std::abs(std::abs(a.values()(m + 2)) - 1.0) < 1e-14);
                CHECK(std::abs(a.values()(m + 2) - std::conj(a.values()(-m + 2))) < 1e-14);
            }
        }
    }

    SUBCASE("mirror property a(pi - gamma) = conj(a(gamma))") {
        const BeamWeights uniform = BeamWeights::uniform(2);
        for (double gamma : {0.3, 1.0, 1.4}) {
            const SteeringVector a = steering_planar(lay, gamma);
            const SteeringVector b = steering_planar(lay, kPi - gamma);
            for (int i = 0; i < 5; ++i)
                CHECK(std::abs(b.values()(i) - std::conj(a.values()(i))) < 1e-12);
            const double fa = std::abs(array_factor(lay, uniform, gamma, Wavefront::Planar));
            const double fb = std::abs(array_factor(lay, uniform, kPi - gamma, Wavefront::Planar));
            CHECK(fa == doctest::Approx(fb).epsilon(1e-12));
        }
    }
}

TEST_CASE("non-planar steering") {
    SUBCASE("single antenna reduces to unity") {
        const LinkLayout one = paper_layout(0);
        const SteeringVector a = steering_nonplanar(one, 1.1);
        CHECK(a.values()(0) == std::complex<double>{1.0, 0.0});
    }

    SUBCASE("squared norm equals sum of (d0/d_m)^2") {
        const LinkLayout lay = paper_layout();
        for (double gamma : {0.0, 0.4, kPi / 2, 2.2, kPi}) {
            const SteeringVector a = steering_nonplanar(lay, gamma);
            double expected = 0.0;
            for (int m = -2; m <= 2; ++m) {
                const double c = lay.los_length() / lay.link_distance(m);
                expected += c * c;
            }
            CHECK(a.values().squaredNorm() == doctest::Approx(expected).epsilon(1e-12));
        }
    }

    SUBCASE("broadside magnitudes match the reference ratios") {
        const LinkLayout lay = paper_layout();
        const SteeringVector a = steering_nonplanar(lay, kPi / 2);
        for (int m = -2; m <= 2; ++m)
            CHECK(std::abs(a.values()(m + 2)) ==
                  doctest::Approx(std::abs(reference_ratio(lay, m))).epsilon(1e-14));
    }

    SUBCASE("broadside phase reduces to sign(m) k (d_m - d0)") {
        const LinkLayout lay = halfwave_layout(4, 4.0);
        const double k = 2.0 * kPi / kLambda;
        const SteeringVector a = steering_nonplanar(lay, kPi / 2);
        for (int m = -4; m <= 4; ++m) {
            if (m == 0) continue;
            const double expected =
                (m > 0 ? 1.0 : -1.0) * k * (lay.link_distance(m) - lay.los_length());
            CHECK(std::arg(a.values()(m + 4)) == doctest::Approx(expected).epsilon(1e-9));
        }
    }

    SUBCASE("far-field limit recovers the planar vector") {
        const LinkLayout far(kLambda, 1e6 * 0.06, 0.06, 2, 0.9);
        for (double gamma : {0.2, 1.0, 2.5}) {
            const SteeringVector np = steering_nonplanar(far, gamma);
            const SteeringVector pl = steering_planar(far, gamma);
            for (int i = 0; i < 5; ++i)
                CHECK(std::abs(np.values()(i) - pl.values()(i)) < 1e-8);
        }
    }
}

TEST_CASE("array factor") {
    const LinkLayout fig3 = halfwave_layout(4, 4.0);
    const BeamWeights uniform = BeamWeights::uniform(4);

    SUBCASE("planar broadside peak is exactly one") {
        const std::complex<double> f = array_factor(fig3, uniform, kPi / 2, Wavefront::Planar);
        CHECK(std::abs(f - std::complex<double>{1.0, 0.0}) < 1e-15);
    }

    SUBCASE("planar null of the 9-element half-wave array") {
        const double gamma_null = std::acos(2.0 / 9.0);
        CHECK(std::abs(array_factor(fig3, uniform, gamma_null, Wavefront::Planar)) < 1e-12);
        const double gamma_null_neg = std::acos(-2.0 / 9.0);
        CHECK(std::abs(array_factor(fig3, uniform, gamma_null_neg, Wavefront::Planar)) < 1e-12);
    }

    SUBCASE("non-planar broadside peak is attenuated") {
        const double f = std::abs(array_factor(fig3, uniform, kPi / 2, Wavefront::NonPlanar));
        CHECK(f < 1.0);
        CHECK(f > 0.5);
        // Frozen from the independent reference implementation.
        CHECK(f == doctest::Approx(0.9774833817080212).epsilon(1e-9));
    }

    SUBCASE("weight length must match") {
        CHECK_THROWS_AS((void)array_factor(fig3, BeamWeights::uniform(2), 1.0, Wavefront::Planar),
                        ValidationError);
    }
}

TEST_CASE("correlation matrix") {
    const FieldVector s = occupied_like_signal();

    SUBCASE("noiseless case is the rank-one outer product") {
        const CorrelationMatrix r = correlation_matrix(s, 0.0);
        CHECK(r.matrix().trace().real() == doctest::Approx(s.values().squaredNorm()).epsilon(1e-13));
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(r.matrix());
        CHECK(eig.eigenvalues()(3) < 1e-12 * r.matrix().trace().real());  // rank one
        CHECK(eig.eigenvalues()(4) ==
              doctest::Approx(s.values().squaredNorm()).epsilon(1e-12));
    }

    SUBCASE("zero signal gives sigma^2 I") {
        const FieldVector zero(2, FieldKind::RatioToCenter);
        const CorrelationMatrix r = correlation_matrix(zero, 0.3);
        for (int i = 0; i < 5; ++i)
            for (int j = 0; j < 5; ++j)
                CHECK(r.matrix()(i, j) ==
                      (i == j ? std::complex<double>{0.09, 0.0} : std::complex<double>{0.0, 0.0}));
    }

    SUBCASE("hermitian and positive semidefinite") {
        const CorrelationMatrix r = correlation_matrix(s, 0.1);
        const double asym = (r.matrix() - r.matrix().adjoint()).cwiseAbs().maxCoeff();
        CHECK(asym < 1e-12);
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(r.matrix());
        CHECK(eig.eigenvalues().minCoeff() >= -1e-10 * r.matrix().trace().real());
    }
}

TEST_CASE("beamform power") {
    const FieldVector s = occupied_like_signal();
    const CorrelationMatrix r0 = correlation_matrix(s, 0.0);

    SUBCASE("matched weights capture the full signal power") {
        BeamWeights w{s.values() / s.values().norm()};
        CHECK(beamform_power(r0, w) == doctest::Approx(s.values().squaredNorm()).epsilon(1e-12));
    }

    SUBCASE("orthogonal weights capture nothing") {
        Eigen::VectorXcd u(5);
        u << 1.0, 0.0, 0.0, 0.0, 0.0;
        Eigen::VectorXcd orth = u - (s.values().dot(u) / s.values().squaredNorm()) * s.values();
        CHECK(std::abs(s.values().dot(orth)) < 1e-14);
        CHECK(beamform_power(r0, BeamWeights{orth}) < 1e-12 * s.values().squaredNorm());
    }

    SUBCASE("white noise alone scales with the weight norm") {
        const FieldVector zero(2, FieldKind::RatioToCenter);
        const CorrelationMatrix rn = correlation_matrix(zero, 0.2);
        Eigen::VectorXcd w(5);
        w << std::complex<double>(1, 1), std::complex<double>(0, -2), 0.5, 1.0,
            std::complex<double>(-0.3, 0.4);
        CHECK(beamform_power(rn, BeamWeights{w}) ==
              doctest::Approx(0.04 * w.squaredNorm()).epsilon(1e-13));
    }

    SUBCASE("positive scaling leaves any argmax unchanged") {
        const CorrelationMatrix r = correlation_matrix(s, 0.1);
        BeamWeights w = BeamWeights::uniform(2);
        const double base = beamform_power(r, w);
        BeamWeights scaled{3.0 * w.w};
        CHECK(beamform_power(r, scaled) == doctest::Approx(9.0 * base).epsilon(1e-12));
    }

    SUBCASE("quadratic form equals the analytic decomposition") {
        const double sigma = 0.15;
        const CorrelationMatrix r = correlation_matrix(s, sigma);
        Eigen::VectorXcd w(5);
        w << 0.2, std::complex<double>(0.1, -0.7), 1.0, std::complex<double>(-0.4, 0.3), 0.6;
        const double direct = beamform_power(r, BeamWeights{w});
        const double expected =
            std::norm(w.dot(s.values())) + sigma * sigma * w.squaredNorm();
        CHECK(direct == doctest::Approx(expected).epsilon(1e-12));
    }

    SUBCASE("dimension mismatch is rejected") {
        CHECK_THROWS_AS((void)beamform_power(r0, BeamWeights::uniform(1)), ValidationError);
    }
}

TEST_CASE("monte carlo covariance matches the analytic matrix") {
    const LinkLayout lay = paper_layout();
    const QuadratureSpec spec = QuadratureSpec::for_wavelength(kLambda);
    const FieldVector s = signal_vector(lay, Occupancy::Empty, std::nullopt, spec);
    const double sigma = 0.1;
    const NoiseModel noise{sigma, 77};
    const int n = 100000;
    Eigen::MatrixXcd sample = Eigen::MatrixXcd::Zero(5, 5);
    for (int t = 0; t < n; ++t) {
        const FieldVector r = snapshot(s, noise, t);
        sample += r.values() * r.values().adjoint();
    }
    sample /= n;
    const CorrelationMatrix analytic = correlation_matrix(s, sigma);
    const double rel = (sample - analytic.matrix()).norm() / analytic.matrix().norm();
    CHECK(rel < 0.02);
}
