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

#include "qdl/figures.h"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "qdl/analysis.h"
#include "qdl/parallel.h"

namespace qdl {

double SweepAxis::value(std::size_t k) const {
    if (k + 1 >= steps) {
        return stop;
    }
    return start + static_cast<double>(k) * (stop - start) / static_cast<double>(steps - 1);
}

void SweepSpec::validate() const {
    if (axes.empty() || axes.size() > 2) {
        throw std::invalid_argument("a sweep needs one or two axes");
    }
    for (const auto &axis : axes) {
        if (axis.steps < 2) {
            throw std::invalid_argument("axis " + axis.header + " needs at least 2 steps");
        }
        if (!(axis.start >= 0 && axis.start < axis.stop && axis.stop <= 1)) {
            throw std::invalid_argument("axis " + axis.header + " must satisfy 0 <= start < stop <= 1");
        }
    }
    if (outputs.empty()) {
        throw std::invalid_argument("a sweep needs at least one output");
    }
    fixed.validate();
}

std::size_t SweepSpec::row_count() const {
    std::size_t n = 1;
    for (const auto &axis : axes) {
        n *= axis.steps;
    }
    return n;
}

namespace {

void set_param(ScenarioParams &p, SweepParam param, double value) {
    switch (param) {
        case SweepParam::kDistinguishability:
            p.d = value;
            break;
        case SweepParam::kUnpredictability:
            p.r = 0.5 * (1 - std::sqrt(std::max(0.0, 1 - value * value)));
            break;
        case SweepParam::kOverlap:
            p.d = overlap(value);
            break;
        case SweepParam::kSystemRobustness:
            p.r_s = value;
            break;
        case SweepParam::kMeterRobustness:
            p.r_m = value;
            break;
    }
}

std::string metric_cell(const AnalysisReport &report, SweepMetric metric) {
    switch (metric) {
        case SweepMetric::kBMax:
            return format_fixed(report.bell.b_max_horodecki);
        case SweepMetric::kVisibility:
            return format_fixed(report.v);
        case SweepMetric::kLrtExplainable:
            return report.classifications.lrt_explainable ? "1" : "0";
        case SweepMetric::kMutualInformation:
            return format_fixed(report.info.i_ab);
        case SweepMetric::kChshViolating:
            return report.classifications.chsh_violating ? "1" : "0";
        case SweepMetric::kDThreshold:
            return format_fixed(report.boundary.d_threshold);
    }
    throw std::logic_error("unknown sweep metric");
}

SweepAxis unit_axis(std::string header, SweepParam param, std::size_t steps) {
    return SweepAxis{std::move(header), param, 0.0, 1.0, steps};
}

}  // namespace

SweepSpec figure_spec(int number, std::size_t resolution) {
    if (resolution < kMinFigureResolution) {
        throw std::invalid_argument("figure resolution must be at least " +
                                    std::to_string(kMinFigureResolution));
    }
    using P = SweepParam;
    using M = SweepMetric;
    SweepSpec spec;
    switch (number) {
        case 1:
            spec.scenario = Scenario::kFree;
            spec.axes = {unit_axis("D", P::kDistinguishability, resolution),
                         unit_axis("U", P::kUnpredictability, resolution)};
            spec.outputs = {{"B_max", M::kBMax}};
            break;
        case 2:
            spec.scenario = Scenario::kSystemDecoherence;
            spec.axes = {unit_axis("O", P::kOverlap, resolution),
                         unit_axis("R", P::kSystemRobustness, resolution)};
            spec.outputs = {{"B_max", M::kBMax}};
            break;
        case 3:
            spec.scenario = Scenario::kSystemDecoherence;
            spec.axes = {unit_axis("D", P::kDistinguishability, resolution),
                         unit_axis("R", P::kSystemRobustness, resolution)};
            spec.outputs = {{"V", M::kVisibility}, {"lrt_explainable", M::kLrtExplainable}};
            break;
        case 4:
            spec.scenario = Scenario::kSystemDecoherence;
            spec.axes = {unit_axis("D", P::kDistinguishability, resolution),
                         unit_axis("R", P::kSystemRobustness, resolution)};
            spec.outputs = {{"I_AB", M::kMutualInformation}, {"chsh_violating", M::kChshViolating}};
            break;
        case 5:
            spec.scenario = Scenario::kMeterDecoherence;
            spec.axes = {unit_axis("R", P::kMeterRobustness, resolution),
                         unit_axis("D", P::kDistinguishability, resolution)};
            spec.outputs = {{"B_max", M::kBMax}};
            break;
        case 6:
            spec.scenario = Scenario::kMeterDecoherence;
            spec.axes = {unit_axis("D", P::kDistinguishability, resolution),
                         unit_axis("R", P::kMeterRobustness, resolution)};
            spec.outputs = {{"I_AB", M::kMutualInformation}, {"chsh_violating", M::kChshViolating}};
            break;
        case 7:
            spec.scenario = Scenario::kCombined;
            spec.axes = {unit_axis("R_S", P::kSystemRobustness, resolution),
                         unit_axis("R_M", P::kMeterRobustness, resolution)};
            spec.outputs = {{"D_threshold", M::kDThreshold}};
            break;
        default:
            throw std::invalid_argument("figure number must be in 1..7");
    }
    return spec;
}

void write_sweep_csv(const SweepSpec &spec, std::ostream &out) {
    spec.validate();
    const std::size_t rows = spec.row_count();
    const std::size_t inner = spec.axes.size() == 2 ? spec.axes[1].steps : 1;

    std::vector<std::string> lines(rows);
    parallel_for(rows, [&](std::size_t row) {
        const std::size_t index[2] = {row / inner, row % inner};
        ScenarioParams params = spec.fixed;
        std::ostringstream line;
        for (std::size_t a = 0; a < spec.axes.size(); ++a) {
            const double value = spec.axes[a].value(index[a]);
            set_param(params, spec.axes[a].param, value);
            line << (a ? "," : "") << format_fixed(value);
        }
        const AnalysisReport report = analyze(spec.scenario, params);
        for (const auto &output : spec.outputs) {
            line << ',' << metric_cell(report, output.metric);
        }
        lines[row] = line.str();
    });

    for (std::size_t a = 0; a < spec.axes.size(); ++a) {
        out << (a ? "," : "") << spec.axes[a].header;
    }
    for (const auto &output : spec.outputs) {
        out << ',' << output.header;
    }
    out << '\n';
    for (const auto &line : lines) {
        out << line << '\n';
    }
}

}  // namespace qdl
