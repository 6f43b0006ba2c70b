// SPDX-License-Identifier: Apache-2.0
#include "dflsim/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <span>
#include <sstream>

#include "dflsim/errors.hpp"

namespace dflsim {

namespace {

constexpr int kMaxRefinements = 8;

// Sum with head-tail pre-pairing followed by a pairwise tree. The pairing
// makes the result invariant under reversal of the input sequence, which is
// what keeps mirror-symmetric geometries bit-identical.
std::complex<double> tree_sum(std::span<const std::complex<double>> v) {
    if (v.size() <= 4) {
        std::complex<double> acc{0.0, 0.0};
        for (const auto& x : v) acc += x;
        return acc;
    }
    const std::size_t half = v.size() / 2;
    return tree_sum(v.subspan(0, half)) + tree_sum(v.subspan(half));
}

std::complex<double> symmetric_sum(std::span<const std::complex<double>> v) {
    if (v.empty()) return {0.0, 0.0};
    const std::size_t pairs = v.size() / 2;
    std::vector<std::complex<double>> folded;
    folded.reserve(pairs + 1);
    for (std::size_t i = 0; i < pairs; ++i) folded.push_back(v[i] + v[v.size() - 1 - i]);
    if (v.size() % 2 == 1) folded.push_back(v[pairs]);
    return tree_sum(folded);
}

// All node positions and node weights along one axis of [-half_extent,
// half_extent] split into `panels` uniform panels. Panel edges are built by
// reflecting the lower half so the node set is exactly symmetric about 0.
struct Axis {
    std::vector<double> nodes;
    std::vector<double> weights;
};

Axis build_axis(double half_extent, int panels, const GaussRule& rule) {
    std::vector<double> edges(static_cast<std::size_t>(panels) + 1);
    const double width = 2.0 * half_extent / panels;
    for (int i = 0; 2 * i <= panels; ++i) {
        const double e = (2 * i == panels) ? 0.0 : -half_extent + i * width;
        edges[static_cast<std::size_t>(i)] = e;
        if (i != panels - i) edges[static_cast<std::size_t>(panels - i)] = -e;
    }

    Axis axis;
    axis.nodes.reserve(static_cast<std::size_t>(panels) * rule.nodes.size());
    axis.weights.reserve(axis.nodes.capacity());
    for (int p = 0; p < panels; ++p) {
        const double lo = edges[static_cast<std::size_t>(p)];
        const double hi = edges[static_cast<std::size_t>(p) + 1];
        const double mid = 0.5 * (lo + hi);
        const double halfw = 0.5 * (hi - lo);
        for (std::size_t k = 0; k < rule.nodes.size(); ++k) {
            axis.nodes.push_back(mid + halfw * rule.nodes[k]);
            axis.weights.push_back(halfw * rule.weights[k]);
        }
    }
    return axis;
}

std::complex<double> evaluate_grid(const Integrand2D& f, const Axis& ax,
                                   const Axis& az) {
    std::vector<std::complex<double>> row(ax.nodes.size());
    std::vector<std::complex<double>> rows(az.nodes.size());
    for (std::size_t iy = 0; iy < az.nodes.size(); ++iy) {
        for (std::size_t ix = 0; ix < ax.nodes.size(); ++ix) {
            const std::complex<double> val = f(ax.nodes[ix], az.nodes[iy]);
            if (!std::isfinite(val.real()) || !std::isfinite(val.imag())) {
                std::ostringstream msg;
                msg << "non-finite integrand value at (" << ax.nodes[ix] << ", "
                    << az.nodes[iy] << ")";
                throw QuadratureError(msg.str());
            }
            row[ix] = val * ax.weights[ix];
        }
        rows[iy] = symmetric_sum(row) * az.weights[iy];
    }
    return symmetric_sum(rows);
}

} // namespace

QuadratureSpec QuadratureSpec::for_wavelength(double wavelength) {
    return {wavelength / 4.0, 4, 1e-6};
}

void QuadratureSpec::validate() const {
    std::ostringstream bad;
    auto fail = [&bad](const char* what) { bad << (bad.tellp() > 0 ? "; " : "") << what; };
    if (!(std::isfinite(panel_max_side) && panel_max_side > 0.0))
        fail("panel_max_side must be > 0");
    if (points_per_panel < 2) fail("points_per_panel must be >= 2");
    if (!(std::isfinite(rel_tol) && rel_tol > 0.0)) fail("rel_tol must be > 0");
    if (bad.tellp() > 0) throw ValidationError("QuadratureSpec: " + bad.str());
}

GaussRule gauss_legendre(int n) {
    if (n < 1) throw ValidationError("gauss_legendre: n must be >= 1");
    GaussRule rule;
    rule.nodes.assign(static_cast<std::size_t>(n), 0.0);
    rule.weights.assign(static_cast<std::size_t>(n), 0.0);
    // Newton iteration on P_n; roots come in exact +- pairs and the center
    // root of an odd rule is pinned to 0.
    for (int i = 0; 2 * i < n; ++i) {
        double z = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        if (2 * i + 1 == n) z = 0.0;
        double deriv = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = 0.0;
            for (int j = 0; j < n; ++j) {
                const double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * j + 1.0) * z * p1 - j * p2) / (j + 1);
            }
            deriv = n * (z * p0 - p1) / (z * z - 1.0);
            if (2 * i + 1 == n) break;  // center root, z is 0 exactly
            const double step = p0 / deriv;
            z -= step;
            if (std::abs(step) < 1e-15) break;
        }
        const double w = 2.0 / ((1.0 - z * z) * deriv * deriv);
        rule.nodes[static_cast<std::size_t>(i)] = -z;
        rule.nodes[static_cast<std::size_t>(n - 1 - i)] = z;
        rule.weights[static_cast<std::size_t>(i)] = w;
        rule.weights[static_cast<std::size_t>(n - 1 - i)] = w;
    }
    return rule;
}

IntegrationResult integrate_2d(const Integrand2D& f, double half_width,
                               double half_height, const QuadratureSpec& spec) {
    spec.validate();
    if (!(half_width >= 0.0) || !(half_height >= 0.0))
        throw ValidationError("integrate_2d: domain half-sizes must be >= 0");
    if (half_width == 0.0 || half_height == 0.0) return {{0.0, 0.0}, 0.0, 0, true};

    const GaussRule rule = gauss_legendre(spec.points_per_panel);
    const auto base_panels = [&](double half_extent) {
        return std::max(1, static_cast<int>(std::ceil(2.0 * half_extent / spec.panel_max_side)));
    };
    const int px0 = base_panels(half_width);
    const int pz0 = base_panels(half_height);

    IntegrationResult res;
    std::complex<double> prev{0.0, 0.0};
    for (int level = 0; level <= kMaxRefinements; ++level) {
        const Axis ax = build_axis(half_width, px0 << level, rule);
        const Axis az = build_axis(half_height, pz0 << level, rule);
        const std::complex<double> cur = evaluate_grid(f, ax, az);
        if (level > 0) {
            const double scale = std::max(std::abs(cur), 1e-300);
            res.error_estimate = std::abs(cur - prev) / scale;
            res.refinements = level;
            res.estimate_history.push_back(res.error_estimate);
            if (res.error_estimate <= spec.rel_tol) {
                res.value = cur;
                res.converged = true;
                return res;
            }
        }
        prev = cur;
    }
    res.value = prev;
    res.converged = false;
    return res;
}

std::complex<double> integrate_2d_oracle(const Integrand2D& f, double half_width,
                                         double half_height, int n_per_axis) {
    if (n_per_axis < 10) throw ValidationError("integrate_2d_oracle: n_per_axis must be >= 10");
    const double hx = 2.0 * half_width / n_per_axis;
    const double hz = 2.0 * half_height / n_per_axis;
    std::complex<double> acc{0.0, 0.0};
    for (int i = 0; i < n_per_axis; ++i) {
        const double x = -half_width + (i + 0.5) * hx;
        std::complex<double> rowacc{0.0, 0.0};
        for (int j = 0; j < n_per_axis; ++j) {
            const double z = -half_height + (j + 0.5) * hz;
            rowacc += f(x, z);
        }
        acc += rowacc;
    }
    return acc * (hx * hz);
}

} // namespace dflsim
