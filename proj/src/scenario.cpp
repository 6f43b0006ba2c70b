// SPDX-License-Identifier: Apache-2.0
#include "dflsim/scenario.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>

#include <json.hpp>

#include "dflsim/errors.hpp"

namespace dflsim {

namespace {

using nlohmann::json;

class FieldErrors {
public:
    void add(const std::string& field, const std::string& what) {
        items_.push_back(field + ": " + what);
    }
    bool empty() const { return items_.empty(); }
    std::string message(const std::string& origin) const {
        std::ostringstream out;
        out << origin << ": invalid scenario";
        for (const auto& item : items_) out << "\n  - " << item;
        return out.str();
    }

private:
    std::vector<std::string> items_;
};

void reject_unknown_keys(const json& obj, const std::string& prefix,
                         const std::set<std::string>& allowed, FieldErrors& errs) {
    for (const auto& [key, _] : obj.items())
        if (!allowed.contains(key)) errs.add(prefix + key, "unknown field");
}

double take_number(const json& obj, const std::string& prefix, const std::string& key,
                   double fallback, FieldErrors& errs) {
    if (!obj.contains(key)) return fallback;
    if (!obj[key].is_number()) {
        errs.add(prefix + key, "expected a number");
        return fallback;
    }
    return obj[key].get<double>();
}

double require_number(const json& obj, const std::string& prefix, const std::string& key,
                      FieldErrors& errs) {
    if (!obj.contains(key)) {
        errs.add(prefix + key, "missing required field");
        return std::numeric_limits<double>::quiet_NaN();
    }
    return take_number(obj, prefix, key, std::numeric_limits<double>::quiet_NaN(), errs);
}

} // namespace

LinkLayout Scenario::layout() const {
    return LinkLayout(wavelength(), d0_m, da_m, half_size, h_m);
}

std::optional<TargetSheet> Scenario::sheet() const {
    if (!target) return std::nullopt;
    return TargetSheet(target->ay_m, target->az_m, target->theta_rad, target->x_m,
                       target->y_m);
}

Scenario parse_scenario(const std::string& text, const std::string& origin) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ValidationError(origin + ": " + e.what());
    }
    if (!doc.is_object()) throw ValidationError(origin + ": top level must be an object");

    FieldErrors errs;
    reject_unknown_keys(doc, "",
                        {"frequency_hz", "d0_m", "da_m", "h_m", "M", "sigma_n", "seed",
                         "target", "gamma_grid", "quadrature", "sweep"},
                        errs);

    Scenario sc;
    sc.frequency_hz = require_number(doc, "", "frequency_hz", errs);
    sc.d0_m = require_number(doc, "", "d0_m", errs);
    sc.da_m = require_number(doc, "", "da_m", errs);
    sc.h_m = require_number(doc, "", "h_m", errs);
    if (!doc.contains("M")) {
        errs.add("M", "missing required field");
    } else if (!doc["M"].is_number_integer() || doc["M"].get<std::int64_t>() < 0) {
        errs.add("M", "expected a non-negative integer");
    } else {
        sc.half_size = doc["M"].get<int>();
    }
    sc.sigma_n = take_number(doc, "", "sigma_n", 0.0, errs);
    if (doc.contains("seed")) {
        if (!doc["seed"].is_number_integer())
            errs.add("seed", "expected an integer");
        else
            sc.seed = doc["seed"].get<std::uint64_t>();
    }

    if (doc.contains("target")) {
        const json& t = doc["target"];
        if (!t.is_object()) {
            errs.add("target", "expected an object");
        } else {
            reject_unknown_keys(t, "target.", {"ay_m", "az_m", "theta_rad", "x_m", "y_m"},
                                errs);
            TargetSpec ts;
            ts.ay_m = require_number(t, "target.", "ay_m", errs);
            ts.az_m = require_number(t, "target.", "az_m", errs);
            ts.theta_rad = take_number(t, "target.", "theta_rad", 0.0, errs);
            ts.x_m = require_number(t, "target.", "x_m", errs);
            ts.y_m = require_number(t, "target.", "y_m", errs);
            sc.target = ts;
        }
    }

    sc.gamma_grid = GammaGrid::standard();
    if (doc.contains("gamma_grid")) {
        const json& g = doc["gamma_grid"];
        if (!g.is_object()) {
            errs.add("gamma_grid", "expected an object");
        } else {
            reject_unknown_keys(g, "gamma_grid.", {"start_rad", "stop_rad", "step_rad"}, errs);
            sc.gamma_grid.start =
                take_number(g, "gamma_grid.", "start_rad", sc.gamma_grid.start, errs);
            sc.gamma_grid.stop =
                take_number(g, "gamma_grid.", "stop_rad", sc.gamma_grid.stop, errs);
            sc.gamma_grid.step =
                take_number(g, "gamma_grid.", "step_rad", sc.gamma_grid.step, errs);
        }
    }

    const double lambda = sc.frequency_hz > 0.0 ? kSpeedOfLight / sc.frequency_hz : 0.0;
    sc.quadrature = QuadratureSpec::for_wavelength(lambda > 0.0 ? lambda : 1.0);
    if (doc.contains("quadrature")) {
        const json& q = doc["quadrature"];
        if (!q.is_object()) {
            errs.add("quadrature", "expected an object");
        } else {
            reject_unknown_keys(q, "quadrature.",
                                {"panel_max_side_m", "points_per_panel", "rel_tol"}, errs);
            sc.quadrature.panel_max_side = take_number(q, "quadrature.", "panel_max_side_m",
                                                       sc.quadrature.panel_max_side, errs);
            if (q.contains("points_per_panel")) {
                if (!q["points_per_panel"].is_number_integer())
                    errs.add("quadrature.points_per_panel", "expected an integer");
                else
                    sc.quadrature.points_per_panel = q["points_per_panel"].get<int>();
            }
            sc.quadrature.rel_tol =
                take_number(q, "quadrature.", "rel_tol", sc.quadrature.rel_tol, errs);
        }
    }

    if (doc.contains("sweep")) {
        const json& s = doc["sweep"];
        if (!s.is_object()) {
            errs.add("sweep", "expected an object");
        } else {
            reject_unknown_keys(s, "sweep.", {"axis", "values"}, errs);
            SweepBlock sb;
            if (!s.contains("axis") || !s["axis"].is_string()) {
                errs.add("sweep.axis", "expected one of \"target_y\", \"target_x\", \"theta\"");
            } else {
                const std::string axis = s["axis"].get<std::string>();
                if (axis == "target_y")
                    sb.axis = SweepAxis::TargetY;
                else if (axis == "target_x")
                    sb.axis = SweepAxis::TargetX;
                else if (axis == "theta")
                    sb.axis = SweepAxis::Theta;
                else
                    errs.add("sweep.axis", "unknown axis \"" + axis + "\"");
            }
            if (!s.contains("values") || !s["values"].is_array() || s["values"].empty()) {
                errs.add("sweep.values", "expected a non-empty array of numbers");
            } else {
                for (const auto& v : s["values"]) {
                    if (!v.is_number()) {
                        errs.add("sweep.values", "expected a non-empty array of numbers");
                        sb.values.clear();
                        break;
                    }
                    sb.values.push_back(v.get<double>());
                }
            }
            sc.sweep = sb;
        }
    }

    // Cross-field invariants. Collected all at once so a bad file reports
    // every problem in a single pass.
    if (!(std::isfinite(sc.frequency_hz) && sc.frequency_hz > 0.0))
        errs.add("frequency_hz", "must be > 0");
    if (!(std::isfinite(sc.d0_m) && sc.d0_m > 0.0)) errs.add("d0_m", "must be > 0");
    if (!(std::isfinite(sc.da_m) && sc.da_m > 0.0)) errs.add("da_m", "must be > 0");
    if (!(std::isfinite(sc.h_m) && sc.h_m >= 0.0)) errs.add("h_m", "must be >= 0");
    if (!(std::isfinite(sc.sigma_n) && sc.sigma_n >= 0.0)) errs.add("sigma_n", "must be >= 0");
    if (sc.target) {
        if (!(std::isfinite(sc.target->ay_m) && sc.target->ay_m > 0.0))
            errs.add("target.ay_m", "must be > 0");
        if (!(std::isfinite(sc.target->az_m) && sc.target->az_m > 0.0))
            errs.add("target.az_m", "must be > 0");
        if (!(std::isfinite(sc.target->theta_rad) &&
              std::abs(sc.target->theta_rad) <= std::numbers::pi / 2))
            errs.add("target.theta_rad", "must lie in [-pi/2, pi/2]");
        if (!std::isfinite(sc.target->x_m)) errs.add("target.x_m", "must be finite");
        if (!std::isfinite(sc.target->y_m)) errs.add("target.y_m", "must be finite");
    }
    if (!(std::isfinite(sc.gamma_grid.start) && sc.gamma_grid.start >= 0.0))
        errs.add("gamma_grid.start_rad", "must be >= 0");
    if (!(std::isfinite(sc.gamma_grid.stop) && sc.gamma_grid.stop <= std::numbers::pi))
        errs.add("gamma_grid.stop_rad", "must be <= pi");
    if (!(sc.gamma_grid.start < sc.gamma_grid.stop))
        errs.add("gamma_grid.start_rad", "must be < gamma_grid.stop_rad");
    if (!(std::isfinite(sc.gamma_grid.step) && sc.gamma_grid.step > 0.0))
        errs.add("gamma_grid.step_rad", "must be > 0");
    if (!(std::isfinite(sc.quadrature.panel_max_side) && sc.quadrature.panel_max_side > 0.0))
        errs.add("quadrature.panel_max_side_m", "must be > 0");
    if (sc.quadrature.points_per_panel < 2)
        errs.add("quadrature.points_per_panel", "must be >= 2");
    if (!(std::isfinite(sc.quadrature.rel_tol) && sc.quadrature.rel_tol > 0.0))
        errs.add("quadrature.rel_tol", "must be > 0");
    if (sc.sweep) {
        if (!sc.target)
            errs.add("sweep", "sweeping a target parameter requires a target block");
        for (const double v : sc.sweep->values)
            if (!std::isfinite(v)) {
                errs.add("sweep.values", "all values must be finite");
                break;
            }
    }

    if (!errs.empty()) throw ValidationError(errs.message(origin));

    if (sc.da_m <= sc.wavelength() / 4.0) {
        std::ostringstream w;
        w << "da_m = " << sc.da_m << " is <= lambda/4 = " << sc.wavelength() / 4.0
          << "; the negligible-coupling assumption may not hold";
        sc.warnings.push_back(w.str());
    }
    return sc;
}

Scenario load_scenario(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ValidationError("cannot open scenario file: " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_scenario(buffer.str(), path.string());
}

} // namespace dflsim
