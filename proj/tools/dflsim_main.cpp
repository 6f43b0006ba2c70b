// SPDX-License-Identifier: Apache-2.0
//
// dflsim: near-field ULA simulator for device-free localization.
// Subcommands evaluate the absorbing-sheet body model, estimate the
// direction of arrival by beamforming power maximization, run parameter
// sweeps, and tabulate array factors. Data goes to files, diagnostics to
// stderr.
#include <cstdlib>
#include <iostream>

#include <CLI11.hpp>

#include "dflsim/commands.hpp"

namespace {

void add_common_options(CLI::App* sub, dflsim::CommandOptions& options) {
    sub->add_option("--scenario", options.scenario_path, "Scenario file (JSON)")->required();
    sub->add_option("--out", options.out_dir, "Output directory (default: $DFLSIM_OUT_DIR or .)");
    sub->add_option("--threads", options.threads, "Worker threads (0 = hardware concurrency)");
    sub->add_option("--seed", options.seed_override, "Override the scenario seed");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Multi-antenna electromagnetic body model: direction-of-arrival and "
                 "excess-attenuation simulation for device-free localization"};
    app.require_subcommand(1);

    dflsim::CommandOptions options;
    if (const char* env_out = std::getenv("DFLSIM_OUT_DIR")) options.out_dir = env_out;

    int (*selected)(const dflsim::CommandOptions&) = nullptr;
    auto bind = [&](CLI::App* sub, int (*fn)(const dflsim::CommandOptions&)) {
        add_common_options(sub, options);
        sub->callback([&selected, fn] { selected = fn; });
    };

    bind(app.add_subcommand("doa", "Power-ratio curve and DoA estimate (curve.csv, estimate.json)"),
         dflsim::cmd_doa);
    bind(app.add_subcommand("sweep", "Parameter sweep over target positions (sweep.csv)"),
         dflsim::cmd_sweep);
    bind(app.add_subcommand("array-factor",
                            "Planar and non-planar array factors over the scan grid (factor.csv)"),
         dflsim::cmd_array_factor);
    bind(app.add_subcommand("validate", "Parse and validate a scenario file"),
         dflsim::cmd_validate);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? dflsim::kExitOk : dflsim::kExitValidation;
    }

    return selected(options);
}
