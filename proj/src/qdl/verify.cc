// Copyright 2026 The qdl Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qdl/verify.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <stdexcept>

#include "qdl/analysis.h"
#include "qdl/complementarity.h"
#include "qdl/entanglement.h"
#include "qdl/parallel.h"
#include "qdl/state_factory.h"

namespace qdl {

bool Check::passed() const {
    switch (kind) {
        case Kind::kAtMost:
        case Kind::kCount:
            return value <= bound;
        case Kind::kAtLeast:
            return value >= bound;
        case Kind::kReport:
            return true;
    }
    return false;
}

bool SuiteResult::passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check &c) { return c.passed(); });
}

double SuiteResult::max_residual() const {
    double worst = 0;
    for (const auto &c : checks) {
        if (c.kind == Check::Kind::kAtMost) {
            worst = std::max(worst, c.value);
        }
    }
    return worst;
}

bool VerifyReport::passed() const {
    return std::all_of(suites.begin(), suites.end(), [](const SuiteResult &s) { return s.passed(); });
}

namespace {

constexpr double kIdentityTol = 1e-9;
constexpr double kFringeTol = 1e-5;
constexpr double kBruteBelowTol = 1e-5;
constexpr double kBruteAboveTol = 1e-6;
constexpr double kRegionMargin = 1e-6;
constexpr double kTsirelsonTol = 1e-12;
constexpr double kTypoEvidence = 1e-3;

std::string sci(double x) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.3e", x);
    return buf;
}

std::string fixed(double x, int decimals = 6) {
    return format_fixed(x, decimals);
}

std::vector<double> grid(std::size_t n) {
    std::vector<double> out(n);
    for (std::size_t k = 0; k < n; ++k) {
        out[k] = k + 1 == n ? 1.0 : static_cast<double>(k) / static_cast<double>(n - 1);
    }
    return out;
}

/// Every grid point of a scenario: (r, D) for free, (D, R) for the single
/// decoherence scenarios and (D, R_S, R_M) for combined.
std::vector<ScenarioParams> scenario_grid(Scenario scenario, std::size_t n) {
    const auto g = grid(n);
    std::vector<ScenarioParams> out;
    for (double x : g) {
        for (double y : g) {
            ScenarioParams p;
            switch (scenario) {
                case Scenario::kFree:
                    p.r = x;
                    p.d = y;
                    out.push_back(p);
                    break;
                case Scenario::kSystemDecoherence:
                    p.d = x;
                    p.r_s = y;
                    out.push_back(p);
                    break;
                case Scenario::kMeterDecoherence:
                    p.d = x;
                    p.r_m = y;
                    out.push_back(p);
                    break;
                case Scenario::kCombined:
                    for (double z : g) {
                        p.d = x;
                        p.r_s = y;
                        p.r_m = z;
                        out.push_back(p);
                    }
                    break;
            }
        }
    }
    return out;
}

constexpr Scenario kAllScenarios[] = {Scenario::kFree, Scenario::kSystemDecoherence,
                                      Scenario::kMeterDecoherence, Scenario::kCombined};
constexpr Scenario kSingleDecoherence[] = {Scenario::kSystemDecoherence,
                                           Scenario::kMeterDecoherence};

double robustness_of(Scenario scenario, const ScenarioParams &p) {
    return scenario == Scenario::kMeterDecoherence ? p.r_m : p.r_s;
}

ScenarioParams single_point(Scenario scenario, double d, double robustness) {
    ScenarioParams p;
    p.d = d;
    if (scenario == Scenario::kMeterDecoherence) {
        p.r_m = robustness;
    } else {
        p.r_s = robustness;
    }
    return p;
}

/// Maximum of f over the points, evaluated in parallel.
double parallel_max(const std::vector<ScenarioParams> &points,
                    const std::function<double(const ScenarioParams &)> &f) {
    std::vector<double> values(points.size());
    parallel_for(points.size(), [&](std::size_t i) { values[i] = f(points[i]); });
    return values.empty() ? 0.0 : *std::max_element(values.begin(), values.end());
}

class SuiteBuilder {
   public:
    SuiteBuilder(std::string name, std::string description, const VerifyOptions &options)
        : options_(options) {
        result_.name = std::move(name);
        result_.description = std::move(description);
    }

    void at_most(std::string name, double value, double bound) {
        result_.checks.push_back(
            {std::move(name), value, options_.tolerance.value_or(bound), Check::Kind::kAtMost});
    }
    void at_least(std::string name, double value, double bound) {
        result_.checks.push_back({std::move(name), value, bound, Check::Kind::kAtLeast});
    }
    void zero_count(std::string name, std::size_t count) {
        result_.checks.push_back(
            {std::move(name), static_cast<double>(count), 0.0, Check::Kind::kCount});
    }
    void report(std::string name, double value) {
        result_.checks.push_back({std::move(name), value, 0.0, Check::Kind::kReport});
    }
    void row(std::string line) {
        result_.table.push_back(std::move(line));
    }

    SuiteResult finish() {
        return std::move(result_);
    }

   private:
    const VerifyOptions &options_;
    SuiteResult result_;
};

SuiteResult identities_suite(const VerifyOptions &o) {
    SuiteBuilder s("identities", "complementarity relations with V from the constructed state", o);
    for (Scenario scenario : kAllScenarios) {
        const auto points = scenario_grid(scenario, o.resolution);
        std::vector<IdentityResiduals> res(points.size());
        parallel_for(points.size(), [&](std::size_t i) { res[i] = check_identity(scenario, points[i]); });
        double identity = 0;
        double product = 0;
        double ratio = 0;
        for (const auto &r : res) {
            identity = std::max(identity, r.identity);
            product = std::max(product, r.product_form.value_or(0.0));
            ratio = std::max(ratio, r.robustness_ratio.value_or(0.0));
        }
        const std::string prefix(scenario_name(scenario));
        s.at_most(prefix + ".quotient_identity", identity, kIdentityTol);
        if (scenario == Scenario::kFree) {
            s.at_most(prefix + ".V_equals_OU", product, kIdentityTol);
        }
        if (scenario == Scenario::kSystemDecoherence || scenario == Scenario::kCombined) {
            s.at_most(prefix + ".R_equals_V_over_V0", ratio, kIdentityTol);
        }
    }
    return s.finish();
}

SuiteResult fringe_suite(const VerifyOptions &o) {
    SuiteBuilder s("fringe", "sampled fringe contrast against 2|rho_A(up,down)|", o);
    const std::size_t n = std::min<std::size_t>(o.resolution, 5);
    for (Scenario scenario : kAllScenarios) {
        const auto points = scenario_grid(scenario, n);
        const double worst = parallel_max(points, [&](const ScenarioParams &p) {
            const DensityMatrix rho = scenario_state(p, scenario);
            return std::abs(visibility_sweep(rho, o.fringe_samples).visibility - visibility_analytic(rho));
        });
        s.at_most(std::string(scenario_name(scenario)) + ".sweep_vs_analytic", worst, kFringeTol);
    }
    return s.finish();
}

SuiteResult closed_form_suite(const VerifyOptions &o) {
    SuiteBuilder s("closed_form", "closed-form B_max against the Horodecki value of the state", o);
    for (Scenario scenario : kAllScenarios) {
        const auto points = scenario_grid(scenario, o.resolution);
        const double worst = parallel_max(points, [&](const ScenarioParams &p) {
            return std::abs(bell_closed_form(scenario, p) - horodecki_bmax(scenario_state(p, scenario)));
        });
        s.at_most(std::string(scenario_name(scenario)) + ".closed_vs_horodecki", worst, kIdentityTol);
    }
    return s.finish();
}

SuiteResult brute_force_suite(const VerifyOptions &o) {
    SuiteBuilder s("brute_force", "multi-start CHSH optimizer against the Horodecki value", o);
    for (Scenario scenario : kAllScenarios) {
        const auto points = scenario_grid(scenario, o.resolution);
        std::vector<double> below(points.size());
        std::vector<double> above(points.size());
        std::vector<char> converged(points.size());
        parallel_for(points.size(), [&](std::size_t i) {
            const DensityMatrix rho = scenario_state(points[i], scenario);
            const double h = horodecki_bmax(rho);
            const BruteForceResult b = chsh_brute_force(rho, o.brute);
            below[i] = h - b.value;
            above[i] = b.value - h;
            converged[i] = b.converged;
        });
        const std::string prefix(scenario_name(scenario));
        s.at_most(prefix + ".horodecki_minus_brute", *std::max_element(below.begin(), below.end()),
                  kBruteBelowTol);
        s.at_most(prefix + ".brute_minus_horodecki", *std::max_element(above.begin(), above.end()),
                  kBruteAboveTol);
        s.report(prefix + ".unconverged_points",
                 static_cast<double>(std::count(converged.begin(), converged.end(), 0)));
    }
    return s.finish();
}

SuiteResult boundary_suite(const VerifyOptions &o) {
    SuiteBuilder s("boundary", "B_max = 2 on the printed violation boundaries", o);
    const auto g = grid(o.resolution);

    double system = 0;
    double meter = 0;
    std::size_t meter_points = 0;
    for (double r : g) {
        const ScenarioParams p = single_point(Scenario::kSystemDecoherence, std::sqrt(1 - r * r), r);
        system = std::max(system, std::abs(horodecki_bmax(scenario_state(p, Scenario::kSystemDecoherence)) - 2));
        if (2 * r * r < 1) {
            const double d = std::sqrt(1 - r * r / (1 - r * r));
            const ScenarioParams q = single_point(Scenario::kMeterDecoherence, d, r);
            meter = std::max(meter, std::abs(horodecki_bmax(scenario_state(q, Scenario::kMeterDecoherence)) - 2));
            ++meter_points;
        }
    }
    s.at_most("system.D2_plus_R2_eq_1", system, kIdentityTol);
    s.at_most("meter.overlap2_eq_R2_over_1mR2", meter, kIdentityTol);
    s.report("meter.boundary_points", static_cast<double>(meter_points));

    double combined = 0;
    for (double rs : g) {
        for (double rm : g) {
            ScenarioParams p;
            p.r_s = rs;
            p.r_m = rm;
            p.d = violation_boundary(Scenario::kCombined, p).d_threshold;
            combined = std::max(combined, std::abs(horodecki_bmax(scenario_state(p, Scenario::kCombined)) - 2));
        }
    }
    s.at_most("combined.threshold_surface", combined, kIdentityTol);
    return s.finish();
}

SuiteResult nonlocality_suite(const VerifyOptions &o) {
    SuiteBuilder s("nonlocality", "violation regions, Tsirelson bound and boundary predicates", o);

    std::size_t gisin = 0;
    for (const auto &p : scenario_grid(Scenario::kFree, o.resolution)) {
        const double u = unpredictability(predictability(p.r));
        if (p.d > 0.05 && u > 0.05 && !(horodecki_bmax(scenario_state(p, Scenario::kFree)) > 2)) {
            ++gisin;
        }
    }
    s.zero_count("free.entangled_pure_states_not_violating", gisin);

    double tsirelson = 0;
    std::size_t predicate_mismatch = 0;
    for (Scenario scenario : kAllScenarios) {
        for (const auto &p : scenario_grid(scenario, o.resolution)) {
            const double b = horodecki_bmax(scenario_state(p, scenario));
            tsirelson = std::max(tsirelson, b - 2 * std::sqrt(2.0));
            if (std::abs(b - 2) > kRegionMargin &&
                violation_boundary(scenario, p).violates != (b > 2)) {
                ++predicate_mismatch;
            }
        }
    }
    s.at_most("all.b_max_minus_tsirelson", std::max(0.0, tsirelson), kTsirelsonTol);
    s.zero_count("all.boundary_predicate_mismatches", predicate_mismatch);

    std::size_t contrast_mismatch = 0;
    for (const auto &p : scenario_grid(Scenario::kSystemDecoherence, o.resolution)) {
        const DensityMatrix rho = scenario_state(p, Scenario::kSystemDecoherence);
        const double v = visibility_analytic(rho);
        const double o2 = 1 - p.d * p.d;
        if (std::abs(v - o2) > kRegionMargin && (v > o2) != (horodecki_bmax(rho) > 2)) {
            ++contrast_mismatch;
        }
    }
    s.zero_count("system.V_above_O2_iff_violation_mismatches", contrast_mismatch);

    std::size_t hidden = 0;
    for (const auto &p : scenario_grid(Scenario::kMeterDecoherence, o.resolution)) {
        const DensityMatrix rho = scenario_state(p, Scenario::kMeterDecoherence);
        if (!ppt_check(rho).separable && !(horodecki_bmax(rho) > 2 + kViolationTol)) {
            ++hidden;
        }
    }
    s.at_least("meter.entangled_but_chsh_local_points", static_cast<double>(hidden), 1);
    return s.finish();
}

SuiteResult ppt_suite(const VerifyOptions &o) {
    SuiteBuilder s("ppt", "entanglement exactly where D > 0 and R > 0, one negative PT eigenvalue", o);
    for (Scenario scenario : kSingleDecoherence) {
        std::size_t region = 0;
        std::size_t count = 0;
        double smallest = 1;
        for (const auto &p : scenario_grid(scenario, o.resolution)) {
            const SeparabilityReport sep = ppt_check(scenario_state(p, scenario));
            const bool expect = p.d > kRegionMargin && robustness_of(scenario, p) > kRegionMargin;
            region += (sep.negativity > kPsdTol) != expect;
            if (expect) {
                count += sep.negative_count != 1;
                smallest = std::min(smallest, sep.negativity);
            }
        }
        const std::string prefix(scenario_name(scenario));
        s.zero_count(prefix + ".region_mismatches", region);
        s.zero_count(prefix + ".entangled_without_single_negative_eigenvalue", count);
        s.report(prefix + ".smallest_negativity_in_region", smallest);
    }
    return s.finish();
}

SuiteResult entropy_suite(const VerifyOptions &o) {
    SuiteBuilder s("entropy", "closed-form entropies against spectra of the constructed state", o);
    for (Scenario scenario : kSingleDecoherence) {
        const auto points = scenario_grid(scenario, o.resolution);
        double worst[4] = {0, 0, 0, 0};
        for (const auto &p : points) {
            const InformationReport m = mutual_information(scenario_state(p, scenario));
            const InformationReport c = entropy_closed_form(scenario, p);
            worst[0] = std::max(worst[0], std::abs(m.s_a - c.s_a));
            worst[1] = std::max(worst[1], std::abs(m.s_b - c.s_b));
            worst[2] = std::max(worst[2], std::abs(m.s_ab - c.s_ab));
            worst[3] = std::max(worst[3], std::abs(m.i_ab - c.i_ab));
        }
        const std::string prefix(scenario_name(scenario));
        s.at_most(prefix + ".S_A", worst[0], kIdentityTol);
        s.at_most(prefix + ".S_B", worst[1], kIdentityTol);
        s.at_most(prefix + ".S_AB", worst[2], kIdentityTol);
        s.at_most(prefix + ".I_AB", worst[3], kIdentityTol);
    }
    return s.finish();
}

SuiteResult threshold_suite(const VerifyOptions &o) {
    SuiteBuilder s("threshold", "information thresholds for CHSH violation", o);
    const auto g = grid(o.resolution);

    double system_value = 0;
    double meter_value = 0;
    for (double r : g) {
        const InfoThreshold t = info_threshold(Scenario::kSystemDecoherence, r);
        const ScenarioParams p = single_point(Scenario::kSystemDecoherence, *t.boundary_d, r);
        const double at_boundary = mutual_information(scenario_state(p, Scenario::kSystemDecoherence)).i_ab;
        system_value = std::max(system_value, std::abs(*t.value - at_boundary));

        const InfoThreshold m = info_threshold(Scenario::kMeterDecoherence, r);
        if (m.value) {
            const ScenarioParams q = single_point(Scenario::kMeterDecoherence, *m.boundary_d, r);
            meter_value = std::max(
                meter_value, std::abs(*m.value - entropy_closed_form(Scenario::kMeterDecoherence, q).i_ab));
        }
    }
    s.at_most("system.closed_form_vs_I_AB_at_boundary", system_value, kIdentityTol);
    s.at_most("meter.numeric_vs_closed_form_at_boundary", meter_value, kIdentityTol);

    for (Scenario scenario : kSingleDecoherence) {
        std::size_t mismatch = 0;
        for (const auto &p : scenario_grid(scenario, o.resolution)) {
            const double r = robustness_of(scenario, p);
            const InfoThreshold t = info_threshold(scenario, r);
            if (!t.value) {
                continue;
            }
            const double margin = scenario == Scenario::kSystemDecoherence
                                      ? p.d * p.d + r * r - 1
                                      : r * r / (1 - r * r) - (1 - p.d * p.d);
            if (std::abs(margin) <= kRegionMargin) {
                continue;
            }
            const DensityMatrix rho = scenario_state(p, scenario);
            const bool above = mutual_information(rho).i_ab > *t.value;
            const bool inequality = margin > 0;
            const bool violates = horodecki_bmax(rho) > 2 + kViolationTol;
            mismatch += (above != inequality) || (inequality != violates);
        }
        s.zero_count(std::string(scenario_name(scenario)) + ".information_vs_violation_mismatches",
                     mismatch);
    }
    return s.finish();
}

SuiteResult p_definition_suite(const VerifyOptions &o) {
    SuiteBuilder s("p_definition", "predictability |1-2r| versus the sqrt|1-2r| reading", o);
    double adopted = 0;
    double literal = 0;
    for (const auto &p : scenario_grid(Scenario::kFree, o.resolution)) {
        const double v = visibility_analytic(scenario_state(p, Scenario::kFree));
        const double u_adopted = unpredictability(predictability(p.r));
        const double u_literal = unpredictability(predictability_sqrt_reading(p.r));
        const auto residual = [&](double u) {
            return u * u < 1e-12 ? std::abs(v * v) : std::abs(v * v / (u * u) + p.d * p.d - 1);
        };
        adopted = std::max(adopted, residual(u_adopted));
        literal = std::max(literal, residual(u_literal));
    }
    s.at_most("adopted_reading_residual", adopted, kIdentityTol);
    s.at_least("sqrt_reading_residual", literal, kTypoEvidence);

    s.row("r        D        V_sweep   V_analytic  res(|1-2r|)  res(sqrt|1-2r|)");
    for (double r : {0.1, 0.25, 0.4, 0.5, 0.75}) {
        ScenarioParams p;
        p.r = r;
        p.d = 0.5;
        const DensityMatrix rho = scenario_state(p, Scenario::kFree);
        const double sweep = visibility_sweep(rho, o.fringe_samples).visibility;
        const double v = visibility_analytic(rho);
        const double ua = unpredictability(predictability(r));
        const double ul = unpredictability(predictability_sqrt_reading(r));
        s.row(fixed(r, 4) + "   " + fixed(p.d, 4) + "   " + fixed(sweep) + "  " + fixed(v) + "    " +
              sci(std::abs(v * v / (ua * ua) + p.d * p.d - 1)) + "    " +
              sci(std::abs(v * v / (ul * ul) + p.d * p.d - 1)));
    }
    return s.finish();
}

SuiteResult ppt_polarity_suite(const VerifyOptions &o) {
    SuiteBuilder s("ppt_polarity", "negative partial transpose means entangled, not the reverse", o);
    std::size_t product_states = 0;
    std::size_t product_called_entangled_by_literal = 0;
    std::size_t single_zero_with_negativity = 0;
    std::size_t entangled_with_one_negative = 0;
    for (Scenario scenario : kSingleDecoherence) {
        for (const auto &p : scenario_grid(scenario, o.resolution)) {
            const DensityMatrix rho = scenario_state(p, scenario);
            const SeparabilityReport sep = ppt_check(rho);
            const double r = robustness_of(scenario, p);
            if (p.d == 0) {
                // D = 0 leaves the meter untouched: rho = rho_A (x) rho_B.
                const double defect = max_abs_diff(rho.matrix(), kron(rho.reduced_a(), rho.reduced_b()));
                if (defect < kStructureTol) {
                    ++product_states;
                    // literal reading: inseparable iff the PT is non-negative
                    product_called_entangled_by_literal += sep.negative_count == 0;
                }
            }
            if ((p.d == 0) != (r == 0) && sep.negativity > kPsdTol) {
                ++single_zero_with_negativity;
            }
            entangled_with_one_negative += sep.negative_count == 1;
        }
    }
    s.at_least("product_states_on_grid", static_cast<double>(product_states), 1);
    s.at_least("product_states_literal_reading_calls_inseparable",
               static_cast<double>(product_called_entangled_by_literal),
               static_cast<double>(product_states));
    s.zero_count("points_with_only_one_of_D_R_zero_but_entangled", single_zero_with_negativity);
    s.report("points_with_three_positive_one_negative", static_cast<double>(entangled_with_one_negative));

    s.row("scenario  D      R      min_PT_eig    standard      literal");
    for (Scenario scenario : kSingleDecoherence) {
        for (auto [d, r] : {std::pair{0.0, 0.5}, std::pair{0.5, 0.0}, std::pair{0.5, 0.5}, std::pair{1.0, 1.0}}) {
            const SeparabilityReport sep = ppt_check(scenario_state(single_point(scenario, d, r), scenario));
            const bool nonneg = sep.negative_count == 0;
            std::string name(scenario_name(scenario));
            name.resize(8, ' ');
            s.row(name + "  " + fixed(d, 2) + "   " + fixed(r, 2) + "   " +
                  format_fixed(sep.ppt_spectrum[3], 6) + "     " +
                  (nonneg ? "separable  " : "entangled  ") + "   " +
                  (nonneg ? "inseparable" : "separable"));
        }
    }
    return s.finish();
}

SuiteResult meter_threshold_suite(const VerifyOptions &o) {
    SuiteBuilder s("meter_threshold",
                   "meter-case information threshold: numeric boundary value versus printed form", o);
    double corrected = 0;
    double printed = 0;
    double boundary = 0;
    s.row("R      D_boundary  I_numeric    printed      h(x)         |printed-num|  |h(x)-num|");
    for (double r : {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7}) {
        const InfoThreshold t = info_threshold(Scenario::kMeterDecoherence, r);
        const double x = std::sqrt(2.0) * r * r / std::sqrt(1 - r * r);
        const double hx = binary_entropy_of_bloch(x);
        const ScenarioParams p = single_point(Scenario::kMeterDecoherence, *t.boundary_d, r);
        boundary = std::max(boundary, std::abs(horodecki_bmax(scenario_state(p, Scenario::kMeterDecoherence)) - 2));
        corrected = std::max(corrected, std::abs(hx - *t.value));
        printed = std::max(printed, std::abs(*t.printed - *t.value));
        s.row(fixed(r, 2) + "   " + fixed(*t.boundary_d) + "    " + fixed(*t.value) + "  " +
              fixed(*t.printed) + "  " + fixed(hx) + "  " + sci(std::abs(*t.printed - *t.value)) +
              "      " + sci(std::abs(hx - *t.value)));
    }
    s.at_most("b_max_at_boundary_minus_2", boundary, kIdentityTol);
    s.at_most("binary_entropy_form_vs_numeric", corrected, kIdentityTol);
    s.report("printed_form_vs_numeric", printed);
    return s.finish();
}

SuiteResult meter_sb_suite(const VerifyOptions &o) {
    SuiteBuilder s("meter_sb", "meter-case S_B: adopted closed form versus printed Bloch length", o);
    double adopted = 0;
    double printed = 0;
    for (const auto &p : scenario_grid(Scenario::kMeterDecoherence, o.resolution)) {
        const double sb = mutual_information(scenario_state(p, Scenario::kMeterDecoherence)).s_b;
        adopted = std::max(adopted, std::abs(entropy_closed_form(Scenario::kMeterDecoherence, p).s_b - sb));
        printed = std::max(printed, std::abs(meter_sb_printed_form(p.d, p.r_m) - sb));
    }
    s.at_most("adopted_vs_matrix", adopted, kIdentityTol);
    s.report("printed_vs_matrix", printed);
    s.row("D      R      S_B_matrix   S_B_adopted  S_B_printed");
    for (auto [d, r] : {std::pair{0.3, 1.0}, std::pair{0.6, 0.5}, std::pair{0.9, 0.0}, std::pair{0.9, 0.5}}) {
        const ScenarioParams p = single_point(Scenario::kMeterDecoherence, d, r);
        const double sb = mutual_information(scenario_state(p, Scenario::kMeterDecoherence)).s_b;
        s.row(fixed(d, 2) + "   " + fixed(r, 2) + "   " + fixed(sb) + "     " +
              fixed(entropy_closed_form(Scenario::kMeterDecoherence, p).s_b) + "     " +
              fixed(meter_sb_printed_form(d, r)));
    }
    return s.finish();
}

using SuiteFn = SuiteResult (*)(const VerifyOptions &);

const std::vector<std::pair<std::string, SuiteFn>> &registry() {
    static const std::vector<std::pair<std::string, SuiteFn>> kSuites = {
        {"identities", identities_suite},
        {"fringe", fringe_suite},
        {"closed_form", closed_form_suite},
        {"brute_force", brute_force_suite},
        {"boundary", boundary_suite},
        {"nonlocality", nonlocality_suite},
        {"ppt", ppt_suite},
        {"entropy", entropy_suite},
        {"threshold", threshold_suite},
        {"p_definition", p_definition_suite},
        {"ppt_polarity", ppt_polarity_suite},
        {"meter_threshold", meter_threshold_suite},
        {"meter_sb", meter_sb_suite},
    };
    return kSuites;
}

}  // namespace

const std::vector<std::string> &suite_names() {
    static const std::vector<std::string> kNames = [] {
        std::vector<std::string> names;
        for (const auto &[name, fn] : registry()) {
            names.push_back(name);
        }
        return names;
    }();
    return kNames;
}

SuiteResult run_suite(const std::string &name, const VerifyOptions &options) {
    if (options.resolution < 2) {
        throw std::invalid_argument("verify resolution must be at least 2");
    }
    for (const auto &[suite, fn] : registry()) {
        if (suite == name) {
            return fn(options);
        }
    }
    throw std::invalid_argument("unknown verify suite '" + name + "'");
}

VerifyReport run_verify(const VerifyOptions &options) {
    VerifyReport report;
    const auto &names = options.suites.empty() ? suite_names() : options.suites;
    for (const auto &name : names) {
        report.suites.push_back(run_suite(name, options));
    }
    return report;
}

void render_verify(const VerifyReport &report, std::ostream &out) {
    std::size_t passed = 0;
    for (const auto &suite : report.suites) {
        passed += suite.passed();
        out << "suite " << suite.name << ": " << (suite.passed() ? "PASS" : "FAIL")
            << " max_residual=" << sci(suite.max_residual()) << "  # " << suite.description << '\n';
        for (const auto &c : suite.checks) {
            out << "  " << (c.passed() ? "ok  " : "FAIL") << ' ' << c.name << " = ";
            switch (c.kind) {
                case Check::Kind::kAtMost:
                    out << sci(c.value) << " (<= " << sci(c.bound) << ")";
                    break;
                case Check::Kind::kAtLeast:
                    out << sci(c.value) << " (>= " << sci(c.bound) << ")";
                    break;
                case Check::Kind::kCount:
                    out << static_cast<long long>(c.value) << " (must be 0)";
                    break;
                case Check::Kind::kReport:
                    out << sci(c.value) << " (reported)";
                    break;
            }
            out << '\n';
        }
        for (const auto &row : suite.table) {
            out << "    | " << row << '\n';
        }
    }
    out << "summary: " << passed << '/' << report.suites.size() << " suites passed\n";
}

}  // namespace qdl
