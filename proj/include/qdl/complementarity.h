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

#ifndef QDL_COMPLEMENTARITY_H
#define QDL_COMPLEMENTARITY_H

#include <cstddef>
#include <optional>
#include <vector>

#include "qdl/linalg.h"
#include "qdl/state_factory.h"

namespace qdl {

inline constexpr std::size_t kDefaultFringeSamples = 1024;

/// Probability of finding A in |up> after phase shift and recombination,
/// sampled over one period of the phase.
struct FringeScan {
    std::vector<double> phases;
    std::vector<double> probabilities;
    /// (p_max - p_min) / (p_max + p_min) over the samples.
    double visibility = 0;
};

/// Samples phi_k = 2 pi k / n, k = 0..n-1. Requires n >= 8.
FringeScan visibility_sweep(const DensityMatrix &rho, std::size_t n = kDefaultFringeSamples);

/// 2 |<up|rho_A|down>|: the contrast of the sinusoidal fringe.
double visibility_analytic(const DensityMatrix &rho);

/// Literal sqrt|1 - 2r| reading of the predictability. Only used to show it
/// fails the complementarity identity; predictability() is the real one.
double predictability_sqrt_reading(double r);

/// Residuals of the complementarity relations at one scenario point, with V
/// taken from the constructed state.
struct IdentityResiduals {
    double visibility = 0;
    /// |V^2/denom + D^2 - 1| with denom = 1 - P^2 (free) or R_S^2 (system,
    /// combined) or 1 (meter); product form |V^2 - denom (1 - D^2)| when
    /// denom vanishes.
    double identity = 0;
    /// |V - O U|, free scenario only.
    std::optional<double> product_form;
    /// |V / V0 - R_S| with V0 = sqrt(1 - D^2); scenarios with system
    /// decoherence and D < 1 only.
    std::optional<double> robustness_ratio;

    double max() const;
};

IdentityResiduals check_identity(Scenario scenario, const ScenarioParams &params);

}  // namespace qdl

#endif
