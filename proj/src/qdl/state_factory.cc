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

#include "qdl/state_factory.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace qdl {

namespace {

void require_unit_interval(double value, const char *name) {
    if (!(value >= 0.0 && value <= 1.0)) {
        throw std::invalid_argument(std::string(name) + " must lie in [0, 1], got " +
                                    std::to_string(value));
    }
}

/// Appends a fresh qubit in |down>. Where `control` holds `control_bit`, the
/// new qubit is instead prepared as active_up|up> + active_down|down>.
PureState append_conditioned(const PureState &s, const std::string &control, int control_bit,
                             const std::string &new_label, double active_up, double active_down) {
    if (s.has_factor(new_label)) {
        throw std::invalid_argument("state already carries factor '" + new_label + "'");
    }
    const std::size_t n = s.num_factors();
    const std::size_t shift = n - 1 - s.factor_index(control);

    std::vector<Complex> amps(2 * s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
        const bool active = static_cast<int>((i >> shift) & 1) == control_bit;
        if (active) {
            amps[2 * i] = s.amp(i) * active_up;
            amps[2 * i + 1] = s.amp(i) * active_down;
        } else {
            amps[2 * i + 1] = s.amp(i);
        }
    }
    auto labels = s.labels();
    labels.push_back(new_label);
    return PureState(std::move(labels), std::move(amps));
}

constexpr int kUp = 0;
constexpr int kDown = 1;

}  // namespace

std::string_view scenario_name(Scenario scenario) {
    switch (scenario) {
        case Scenario::kFree:
            return "free";
        case Scenario::kSystemDecoherence:
            return "system";
        case Scenario::kMeterDecoherence:
            return "meter";
        case Scenario::kCombined:
            return "combined";
    }
    throw std::logic_error("unknown scenario");
}

Scenario parse_scenario(std::string_view name) {
    for (auto s : {Scenario::kFree, Scenario::kSystemDecoherence, Scenario::kMeterDecoherence,
                   Scenario::kCombined}) {
        if (scenario_name(s) == name) {
            return s;
        }
    }
    throw std::invalid_argument("unknown scenario '" + std::string(name) + "'");
}

void ScenarioParams::validate() const {
    require_unit_interval(r, "r");
    require_unit_interval(d, "D");
    require_unit_interval(r_s, "R_S");
    require_unit_interval(r_m, "R_M");
}

void ScenarioParams::validate_for(Scenario scenario) const {
    validate();
    if (scenario != Scenario::kFree && r != 0.5) {
        throw std::invalid_argument("decoherence scenarios are defined for r = 1/2 only");
    }
    const bool uses_system_env =
        scenario == Scenario::kSystemDecoherence || scenario == Scenario::kCombined;
    const bool uses_meter_env =
        scenario == Scenario::kMeterDecoherence || scenario == Scenario::kCombined;
    if (!uses_system_env && r_s != 1.0) {
        throw std::invalid_argument("R_S is not a parameter of the " +
                                    std::string(scenario_name(scenario)) + " scenario");
    }
    if (!uses_meter_env && r_m != 1.0) {
        throw std::invalid_argument("R_M is not a parameter of the " +
                                    std::string(scenario_name(scenario)) + " scenario");
    }
}

double overlap(double d) {
    return std::sqrt(std::max(0.0, 1 - d * d));
}

double predictability(double r) {
    require_unit_interval(r, "r");
    return std::abs(1 - 2 * r);
}

double unpredictability(double p) {
    return std::sqrt(std::max(0.0, 1 - p * p));
}

PureState input_state(double r) {
    require_unit_interval(r, "r");
    return PureState({kSystem}, {std::sqrt(r), -std::sqrt(1 - r)});
}

PureState couple_meter(const PureState &s, double d) {
    require_unit_interval(d, "D");
    return append_conditioned(s, kSystem, kDown, kMeter, d, overlap(d));
}

PureState decohere_system(const PureState &s, double r_s) {
    require_unit_interval(r_s, "R_S");
    return append_conditioned(s, kSystem, kDown, kSystemEnv, overlap(r_s), r_s);
}

PureState decohere_meter(const PureState &s, double r_m) {
    require_unit_interval(r_m, "R_M");
    return append_conditioned(s, kMeter, kUp, kMeterEnv, overlap(r_m), r_m);
}

PureState build_joint_state(const ScenarioParams &params, Scenario scenario) {
    params.validate_for(scenario);
    PureState s = couple_meter(input_state(params.r), params.d);
    if (scenario == Scenario::kSystemDecoherence || scenario == Scenario::kCombined) {
        s = decohere_system(s, params.r_s);
    }
    if (scenario == Scenario::kMeterDecoherence || scenario == Scenario::kCombined) {
        s = decohere_meter(s, params.r_m);
    }
    return s;
}

DensityMatrix reduce_to_ab(const PureState &s) {
    const std::size_t keep[] = {s.factor_index(kSystem), s.factor_index(kMeter)};
    if (keep[0] > keep[1]) {
        throw std::invalid_argument("factor A must precede factor B");
    }
    return DensityMatrix(partial_trace(s, keep));
}

DensityMatrix scenario_state(const ScenarioParams &params, Scenario scenario) {
    return reduce_to_ab(build_joint_state(params, scenario));
}

ComplexMatrix phase_gate(double phi) {
    if (!std::isfinite(phi)) {
        throw std::invalid_argument("phase must be finite");
    }
    return {{std::polar(1.0, -phi), 0}, {0, 1}};
}

ComplexMatrix rotation_gate() {
    const double h = 1 / std::sqrt(2.0);
    return {{h, -h}, {h, h}};
}

PureState apply_to_factor(const PureState &s, const std::string &label, const ComplexMatrix &u) {
    if (u.dim() != 2) {
        throw DimensionError("single-qubit gate must be 2x2");
    }
    const std::size_t mask = std::size_t{1} << (s.num_factors() - 1 - s.factor_index(label));
    std::vector<Complex> amps(s.amps().begin(), s.amps().end());
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i & mask) {
            continue;
        }
        const Complex up = s.amp(i);
        const Complex down = s.amp(i | mask);
        amps[i] = u(0, 0) * up + u(0, 1) * down;
        amps[i | mask] = u(1, 0) * up + u(1, 1) * down;
    }
    return PureState(s.labels(), std::move(amps));
}

DensityMatrix apply_to_system(const DensityMatrix &rho, const ComplexMatrix &u) {
    const ComplexMatrix full = kron(u, ComplexMatrix::identity(2));
    return DensityMatrix(full * rho.matrix() * full.adjoint());
}

PureState phase_shift(const PureState &s, double phi) {
    return apply_to_factor(s, kSystem, phase_gate(phi));
}

DensityMatrix phase_shift(const DensityMatrix &rho, double phi) {
    return apply_to_system(rho, phase_gate(phi));
}

PureState interference_rotation(const PureState &s) {
    return apply_to_factor(s, kSystem, rotation_gate());
}

DensityMatrix interference_rotation(const DensityMatrix &rho) {
    return apply_to_system(rho, rotation_gate());
}

}  // namespace qdl
