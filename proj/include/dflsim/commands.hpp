// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "dflsim/doa_estimation.hpp"
#include "dflsim/scenario.hpp"
#include "dflsim/sweep.hpp"

namespace dflsim {

// Process exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 2;
inline constexpr int kExitNumerical = 3;

struct CommandOptions {
    std::filesystem::path scenario_path;
    std::filesystem::path out_dir = ".";
    unsigned threads = 0;  // 0 = hardware concurrency
    std::optional<std::uint64_t> seed_override;
};

/// Shortest round-trip decimal representation (std::to_chars).
std::string format_double(double value);

void write_curve_csv(const std::filesystem::path& path, const PowerRatioCurve& curve);
void write_estimate_json(const std::filesystem::path& path, const DoaEstimate& estimate);
void write_sweep_csv(const std::filesystem::path& path, const std::vector<SweepRow>& rows,
                     int half_size);
void write_factor_csv(const std::filesystem::path& path, const LinkLayout& layout,
                      const GammaGrid& grid);

int cmd_validate(const CommandOptions& options);
int cmd_doa(const CommandOptions& options);
int cmd_sweep(const CommandOptions& options);
int cmd_array_factor(const CommandOptions& options);

} // namespace dflsim
