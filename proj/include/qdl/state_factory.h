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

#ifndef QDL_STATE_FACTORY_H
#define QDL_STATE_FACTORY_H

#include <string>
#include <string_view>

#include "qdl/linalg.h"

namespace qdl {

/// Factor labels used by the scenario states.
inline constexpr const char *kSystem = "A";
inline constexpr const char *kMeter = "B";
inline constexpr const char *kSystemEnv = "E_S";
inline constexpr const char *kMeterEnv = "E_M";

enum class Scenario { kFree, kSystemDecoherence, kMeterDecoherence, kCombined };

/// "free", "system", "meter", "combined".
std::string_view scenario_name(Scenario scenario);
/// Inverse of scenario_name; throws std::invalid_argument on unknown names.
Scenario parse_scenario(std::string_view name);

/// Knobs of the interferometer model. Every field lies in [0, 1].
///   r   - weight of the |up> path in the input superposition
///   d   - distinguishability imprinted on the meter
///   r_s - robustness of the system against its environment
///   r_m - robustness of the meter against its environment
struct ScenarioParams {
    double r = 0.5;
    double d = 0.0;
    double r_s = 1.0;
    double r_m = 1.0;

    /// Throws std::invalid_argument if any field leaves [0, 1] or is NaN.
    void validate() const;
    /// validate() plus the scenario's constraints: decoherence scenarios fix
    /// r = 1/2, and a robustness the scenario does not model must stay at 1.
    void validate_for(Scenario scenario) const;
};

/// sqrt(1 - D^2)
double overlap(double d);
/// |1 - 2r|
double predictability(double r);
/// sqrt(1 - P^2)
double unpredictability(double p);

/// sqrt(r)|up> - sqrt(1 - r)|down> on factor A.
PureState input_state(double r);

/// Nondemolition monitoring of A by a fresh meter B prepared in |down>:
/// |up>|down> stays, |down>|down> -> sqrt(1-D^2)|down>|down> + D|down>|up>.
PureState couple_meter(const PureState &s, double d);

/// Appends the system environment E_S (in |down>); the |down>_A branch
/// drives it to R|down> + sqrt(1-R^2)|up>.
PureState decohere_system(const PureState &s, double r_s);

/// Appends the meter environment E_M (in |down>); the |up>_B branch drives
/// it to R|down> + sqrt(1-R^2)|up>.
PureState decohere_meter(const PureState &s, double r_m);

/// input_state -> couple_meter -> decohere_system -> decohere_meter, using
/// only the steps the scenario calls for.
PureState build_joint_state(const ScenarioParams &params, Scenario scenario);

/// Traces out every factor other than A and B.
DensityMatrix reduce_to_ab(const PureState &s);

/// The shared A-B state of a scenario point.
DensityMatrix scenario_state(const ScenarioParams &params, Scenario scenario);

/// Phase shift on A: |up> -> exp(-i phi)|up>, |down> unchanged.
ComplexMatrix phase_gate(double phi);
/// |up> -> (|up> + |down>)/sqrt2, |down> -> (-|up> + |down>)/sqrt2.
ComplexMatrix rotation_gate();

/// Applies a 2x2 unitary to one labeled factor.
PureState apply_to_factor(const PureState &s, const std::string &label, const ComplexMatrix &u);
/// U rho U^dagger with U acting on A.
DensityMatrix apply_to_system(const DensityMatrix &rho, const ComplexMatrix &u);

PureState phase_shift(const PureState &s, double phi);
DensityMatrix phase_shift(const DensityMatrix &rho, double phi);
PureState interference_rotation(const PureState &s);
DensityMatrix interference_rotation(const DensityMatrix &rho);

}  // namespace qdl

#endif
