// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include "dflsim/scenario.hpp"

namespace dflsim {

/// Result of one sweep point. On failure `error` is non-empty and the
/// numeric fields are unset.
struct SweepRow {
    double value = 0.0;
    bool ok = false;
    double gamma_hat_rad = 0.0;
    double gamma_hat_deg = 0.0;
    double attenuation_db = 0.0;
    double p0 = 0.0;
    double py = 0.0;
    std::vector<double> per_antenna_attenuation_db;  // m = -M ... M
    std::string error;
};

/// Evaluates every sweep value of scenario.sweep with a worker pool. Row
/// content is a pure function of (scenario, value), so the output order and
/// bytes are independent of `threads`. A failing row records its error and
/// the run continues.
std::vector<SweepRow> run_sweep(const Scenario& scenario, unsigned threads);

/// Single evaluation used per sweep row; exposed for direct calls.
SweepRow evaluate_sweep_point(const Scenario& scenario, SweepAxis axis, double value);

} // namespace dflsim
