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

#ifndef QDL_ENTANGLEMENT_H
#define QDL_ENTANGLEMENT_H

#include <array>
#include <optional>

#include "qdl/linalg.h"
#include "qdl/state_factory.h"

namespace qdl {

/// Partial-transpose (Peres-Horodecki) separability of a two-qubit state:
/// separable exactly when the partial transpose has no negative eigenvalue.
struct SeparabilityReport {
    /// Descending.
    std::array<double, 4> ppt_spectrum{};
    /// Sum of |negative PT eigenvalues| beyond the PSD tolerance.
    double negativity = 0;
    int negative_count = 0;
    bool separable = true;
};

SeparabilityReport ppt_check(const DensityMatrix &rho);

/// -sum lambda ln lambda in nats. Eigenvalues in [-1e-10, 0) clamp to 0;
/// anything more negative throws ContractError.
double von_neumann_entropy(const ComplexMatrix &rho);
double von_neumann_entropy(const DensityMatrix &rho);

/// Entropy of a qubit with Bloch length x:
/// -(1+x)/2 ln((1+x)/2) - (1-x)/2 ln((1-x)/2).
double binary_entropy_of_bloch(double x);

struct InformationReport {
    double s_a = 0;
    double s_b = 0;
    double s_ab = 0;
    /// s_a + s_b - s_ab
    double i_ab = 0;
    std::optional<double> threshold;
};

InformationReport mutual_information(const DensityMatrix &rho);

/// Entropies from the closed-form expressions (system and meter
/// decoherence only; std::invalid_argument otherwise). The meter-case S_B
/// uses the Bloch length sqrt((1-D^2)(1-D^2(1-R^2))) of the reduced meter
/// state; meter_sb_printed_form() keeps the alternative reading.
InformationReport entropy_closed_form(Scenario scenario, const ScenarioParams &params);

/// S_B for meter decoherence with Bloch length sqrt((1-D^2)^2 (1-R^2)).
/// Disagrees with the constructed state whenever 0 < D < 1 and R > 0.
double meter_sb_printed_form(double d, double r);

struct InfoThreshold {
    /// Mutual information at the CHSH boundary; absent when every D > 0
    /// already violates.
    std::optional<double> value;
    /// D on the CHSH boundary for this robustness.
    std::optional<double> boundary_d;
    /// Meter case: the alternative closed-form expression
    /// (1/2 + x/2) ln(1/2 + x/2) - (1/2 - x/2) ln(1/2 - x/2),
    /// x = sqrt2 R^2 / sqrt(1 - R^2).
    std::optional<double> printed;
};

/// System decoherence: h(R^2) evaluated in closed form. Meter decoherence:
/// I_AB of the constructed state at 1 - D^2 = R^2/(1 - R^2), defined for
/// R < 1/sqrt2 only.
InfoThreshold info_threshold(Scenario scenario, double robustness);

}  // namespace qdl

#endif
