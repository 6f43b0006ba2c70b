// SPDX-License-Identifier: Apache-2.0
#include "dflsim/commands.hpp"

#include <charconv>
#include <fstream>
#include <iostream>

#include <json.hpp>

#include "dflsim/array_processing.hpp"
#include "dflsim/errors.hpp"

namespace dflsim {

namespace {

std::ofstream open_output(const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw NumericalError("cannot open output file: " + path.string());
    return out;
}

Scenario load_with_options(const CommandOptions& options) {
    Scenario sc = load_scenario(options.scenario_path);
    if (options.seed_override) sc.seed = *options.seed_override;
    for (const auto& w : sc.warnings) std::cerr << "warning: " << w << "\n";
    return sc;
}

int run_guarded(const char* name, const std::function<int()>& body) {
    try {
        return body();
    } catch (const ValidationError& e) {
        std::cerr << name << ": " << e.what() << "\n";
        return kExitValidation;
    } catch (const std::exception& e) {
        std::cerr << name << ": " << e.what() << "\n";
        return kExitNumerical;
    }
}

} // namespace

std::string format_double(double value) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof(buf), value);
    return std::string(buf, res.ptr);
}

void write_curve_csv(const std::filesystem::path& path, const PowerRatioCurve& curve) {
    auto out = open_output(path);
    out << "gamma_rad,gamma_deg,power_ratio\n";
    for (std::size_t i = 0; i < curve.gammas.size(); ++i)
        out << format_double(curve.gammas[i]) << ',' << format_double(to_degrees(curve.gammas[i]))
            << ',' << format_double(curve.ratios[i]) << '\n';
}

void write_estimate_json(const std::filesystem::path& path, const DoaEstimate& estimate) {
    nlohmann::ordered_json j;
    j["gamma_hat_rad"] = estimate.gamma_hat;
    j["gamma_hat_deg"] = to_degrees(estimate.gamma_hat);
    j["attenuation_db"] = estimate.attenuation_db;
    j["p0"] = estimate.p0;
    j["py"] = estimate.py;
    auto out = open_output(path);
    out << j.dump(2) << '\n';
}

void write_sweep_csv(const std::filesystem::path& path, const std::vector<SweepRow>& rows,
                     int half_size) {
    auto out = open_output(path);
    out << "value,gamma_hat_rad,gamma_hat_deg,attenuation_db,p0,py";
    for (int m = -half_size; m <= half_size; ++m) out << ",attenuation_db_m" << m;
    out << ",error\n";
    for (const SweepRow& row : rows) {
        out << format_double(row.value);
        if (row.ok) {
            out << ',' << format_double(row.gamma_hat_rad) << ','
                << format_double(row.gamma_hat_deg) << ','
                << format_double(row.attenuation_db) << ',' << format_double(row.p0) << ','
                << format_double(row.py);
            for (const double a : row.per_antenna_attenuation_db)
                out << ',' << format_double(a);
            out << ',';
        } else {
            for (int i = 0; i < 5 + 2 * half_size + 1; ++i) out << ',';
            // Row errors land in the last column; commas inside the message
            // would break the CSV shape.
            std::string msg = row.error;
            for (char& c : msg)
                if (c == ',' || c == '\n') c = ';';
            out << msg;
        }
        out << '\n';
    }
}

void write_factor_csv(const std::filesystem::path& path, const LinkLayout& layout,
                      const GammaGrid& grid) {
    auto out = open_output(path);
    out << "gamma_deg,abs_factor_planar,abs_factor_nonplanar\n";
    const BeamWeights uniform = BeamWeights::uniform(layout.half_size());
    for (const double gamma : grid.points()) {
        const double planar = std::abs(array_factor(layout, uniform, gamma, Wavefront::Planar));
        const double nonplanar =
            std::abs(array_factor(layout, uniform, gamma, Wavefront::NonPlanar));
        out << format_double(to_degrees(gamma)) << ',' << format_double(planar) << ','
            << format_double(nonplanar) << '\n';
    }
}

int cmd_validate(const CommandOptions& options) {
    return run_guarded("validate", [&] {
        const Scenario sc = load_with_options(options);
        std::cout << "scenario OK: " << options.scenario_path.string() << " (lambda = "
                  << format_double(sc.wavelength()) << " m, " << sc.layout().size()
                  << " antennas" << (sc.target ? ", target present" : ", no target")
                  << (sc.sweep ? ", sweep present" : "") << ")\n";
        return kExitOk;
    });
}

int cmd_doa(const CommandOptions& options) {
    return run_guarded("doa", [&] {
        const Scenario sc = load_with_options(options);
        std::filesystem::create_directories(options.out_dir);
        const DoaEstimate est =
            estimate_doa(sc.layout(), sc.sheet(), sc.gamma_grid, sc.sigma_n, sc.quadrature);
        write_curve_csv(options.out_dir / "curve.csv", est.curve);
        write_estimate_json(options.out_dir / "estimate.json", est);
        std::cerr << "doa: wrote " << (options.out_dir / "curve.csv").string() << " and "
                  << (options.out_dir / "estimate.json").string() << "\n";
        return kExitOk;
    });
}

int cmd_sweep(const CommandOptions& options) {
    return run_guarded("sweep", [&] {
        const Scenario sc = load_with_options(options);
        if (!sc.sweep) throw ValidationError("sweep: scenario file has no sweep block");
        std::filesystem::create_directories(options.out_dir);
        const std::vector<SweepRow> rows = run_sweep(sc, options.threads);
        write_sweep_csv(options.out_dir / "sweep.csv", rows, sc.half_size);
        std::size_t failed = 0;
        for (const auto& r : rows)
            if (!r.ok) ++failed;
        std::cerr << "sweep: wrote " << (options.out_dir / "sweep.csv").string() << " ("
                  << rows.size() << " rows, " << failed << " failed)\n";
        return kExitOk;
    });
}

int cmd_array_factor(const CommandOptions& options) {
    return run_guarded("array-factor", [&] {
        const Scenario sc = load_with_options(options);
        std::filesystem::create_directories(options.out_dir);
        write_factor_csv(options.out_dir / "factor.csv", sc.layout(), sc.gamma_grid);
        std::cerr << "array-factor: wrote " << (options.out_dir / "factor.csv").string()
                  << "\n";
        return kExitOk;
    });
}

} // namespace dflsim
