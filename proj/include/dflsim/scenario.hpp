// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "dflsim/doa_estimation.hpp"
#include "dflsim/geometry.hpp"
#include "dflsim/quadrature.hpp"

namespace dflsim {

inline constexpr double kSpeedOfLight = 299'792'458.0;  // m/s

struct TargetSpec {
    double ay_m = 0.0;       // transverse half-size
    double az_m = 0.0;       // vertical half-size
    double theta_rad = 0.0;  // rotation about the vertical axis
    double x_m = 0.0;
    double y_m = 0.0;
};

enum class SweepAxis { TargetY, TargetX, Theta };

struct SweepBlock {
    SweepAxis axis = SweepAxis::TargetY;
    std::vector<double> values;
};

/// One fully validated simulation setup. Wavelength derives from the
/// carrier frequency; omitted gamma_grid / quadrature / sigma_n blocks get
/// the module defaults.
struct Scenario {
    double frequency_hz = 0.0;
    double d0_m = 0.0;
    double da_m = 0.0;
    double h_m = 0.0;
    int half_size = 0;  // M
    double sigma_n = 0.0;
    std::uint64_t seed = 0;
    std::optional<TargetSpec> target;
    GammaGrid gamma_grid;
    QuadratureSpec quadrature{0.0, 4, 1e-6};
    std::optional<SweepBlock> sweep;

    std::vector<std::string> warnings;  // diagnostics, e.g. the coupling warning

    double wavelength() const { return kSpeedOfLight / frequency_hz; }
    LinkLayout layout() const;
    std::optional<TargetSheet> sheet() const;
};

/// Parses and validates a scenario document (JSON). Throws ValidationError
/// listing every failing field; parse failures carry the byte offset.
Scenario parse_scenario(const std::string& text, const std::string& origin);

Scenario load_scenario(const std::filesystem::path& path);

} // namespace dflsim
