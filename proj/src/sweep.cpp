// SPDX-License-Identifier: Apache-2.0
#include "dflsim/sweep.hpp"

#include <atomic>
#include <thread>

#include "dflsim/em_model.hpp"
#include "dflsim/errors.hpp"

namespace dflsim {

namespace {

Scenario with_value(const Scenario& base, SweepAxis axis, double value) {
    Scenario sc = base;
    switch (axis) {
        case SweepAxis::TargetY: sc.target->y_m = value; break;
        case SweepAxis::TargetX: sc.target->x_m = value; break;
        case SweepAxis::Theta: sc.target->theta_rad = value; break;
    }
    return sc;
}

} // namespace

SweepRow evaluate_sweep_point(const Scenario& scenario, SweepAxis axis, double value) {
    SweepRow row;
    row.value = value;
    try {
        const Scenario sc = with_value(scenario, axis, value);
        const LinkLayout layout = sc.layout();
        const TargetSheet sheet = *sc.sheet();

        const FieldVector ratios = perturbed_ratio_vector(layout, sheet, sc.quadrature);
        FieldVector signal(layout.half_size(), FieldKind::RatioToCenter);
        row.per_antenna_attenuation_db.reserve(static_cast<std::size_t>(layout.size()));
        for (int m = -layout.half_size(); m <= layout.half_size(); ++m) {
            signal(m) = reference_ratio(layout, m) * ratios(m);
            row.per_antenna_attenuation_db.push_back(excess_attenuation_db(ratios(m)));
        }

        const DoaEstimate est =
            estimate_doa_for_signal(signal, layout, sc.gamma_grid, sc.sigma_n);
        row.gamma_hat_rad = est.gamma_hat;
        row.gamma_hat_deg = to_degrees(est.gamma_hat);
        row.attenuation_db = est.attenuation_db;
        row.p0 = est.p0;
        row.py = est.py;
        row.ok = true;
    } catch (const std::exception& e) {
        row.ok = false;
        row.error = e.what();
        row.per_antenna_attenuation_db.clear();
    }
    return row;
}

std::vector<SweepRow> run_sweep(const Scenario& scenario, unsigned threads) {
    if (!scenario.sweep) throw ValidationError("run_sweep: scenario has no sweep block");
    const SweepBlock& block = *scenario.sweep;
    std::vector<SweepRow> rows(block.values.size());
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = std::min<unsigned>(threads, static_cast<unsigned>(block.values.size()));
    if (threads <= 1) {
        for (std::size_t i = 0; i < block.values.size(); ++i)
            rows[i] = evaluate_sweep_point(scenario, block.axis, block.values[i]);
        return rows;
    }

    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next.fetch_add(1); i < block.values.size();
             i = next.fetch_add(1))
            rows[i] = evaluate_sweep_point(scenario, block.axis, block.values[i]);
    };
    {
        // Scoped so every jthread joins before rows is returned.
        std::vector<std::jthread> pool;
        pool.reserve(threads);
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    }
    return rows;
}

} // namespace dflsim
