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

#include "qdl/analysis.h"

#include <cmath>
#include <cstdio>
#include <string>

#include "qdl/complementarity.h"

namespace qdl {

std::string format_fixed(double value, int decimals) {
    if (std::isnan(value)) {
        return "nan";
    }
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*f", decimals, value);
    std::string s = buf;
    if (s.front() == '-' && s.find_first_not_of("-0.") == std::string::npos) {
        s.erase(0, 1);
    }
    return s;
}

AnalysisReport analyze(Scenario scenario, const ScenarioParams &params,
                       const AnalyzeOptions &options) {
    params.validate_for(scenario);
    const DensityMatrix rho = scenario_state(params, scenario);

    AnalysisReport out;
    out.scenario = scenario;
    out.params = params;
    out.v = visibility_analytic(rho);
    out.p = predictability(params.r);
    out.bell = analyze_bell(rho, std::pair{scenario, params}, options.brute);
    out.boundary = violation_boundary(scenario, params);
    out.sep = ppt_check(rho);
    out.info = mutual_information(rho);

    if (scenario == Scenario::kSystemDecoherence) {
        out.info.threshold = info_threshold(scenario, params.r_s).value;
    } else if (scenario == Scenario::kMeterDecoherence) {
        out.info.threshold = info_threshold(scenario, params.r_m).value;
    }

    auto &c = out.classifications;
    c.chsh_violating = out.bell.violates;
    c.entangled = !out.sep.separable;
    if (scenario == Scenario::kSystemDecoherence) {
        const double o = overlap(params.d);
        c.lrt_explainable = !(out.v > o * o + kViolationTol);
    } else {
        c.lrt_explainable = !c.chsh_violating;
    }
    if (out.info.threshold) {
        c.above_info_threshold = out.info.i_ab > *out.info.threshold + kViolationTol;
    }
    return out;
}

void render_report(const AnalysisReport &r, std::ostream &out) {
    const auto line = [&](const char *key, const std::string &value) {
        out << key << '=' << value << '\n';
    };
    const auto num = [&](const char *key, double value) { line(key, format_fixed(value)); };
    const auto flag = [&](const char *key, bool value) { line(key, value ? "true" : "false"); };

    line("scenario", std::string(scenario_name(r.scenario)));
    num("r", r.params.r);
    num("D", r.params.d);
    num("R_S", r.params.r_s);
    num("R_M", r.params.r_m);
    num("V", r.v);
    num("P", r.p);
    num("B_max.horodecki", r.bell.b_max_horodecki);
    if (r.bell.b_max_closed_form) {
        num("B_max.closed_form", *r.bell.b_max_closed_form);
    }
    if (r.bell.brute) {
        num("B_max.brute", r.bell.brute->value);
        flag("B_max.brute_converged", r.bell.brute->converged);
    }
    num("D_threshold", r.boundary.d_threshold);
    for (std::size_t k = 0; k < r.sep.ppt_spectrum.size(); ++k) {
        const std::string key = "ppt_spectrum." + std::to_string(k);
        num(key.c_str(), r.sep.ppt_spectrum[k]);
    }
    num("negativity", r.sep.negativity);
    num("S_A", r.info.s_a);
    num("S_B", r.info.s_b);
    num("S_AB", r.info.s_ab);
    num("I_AB", r.info.i_ab);
    line("I_threshold", r.info.threshold ? format_fixed(*r.info.threshold) : "none");
    flag("chsh_violating", r.classifications.chsh_violating);
    flag("lrt_explainable", r.classifications.lrt_explainable);
    flag("entangled", r.classifications.entangled);
    const auto &above = r.classifications.above_info_threshold;
    line("above_info_threshold", above ? (*above ? "true" : "false") : "none");
}

}  // namespace qdl
