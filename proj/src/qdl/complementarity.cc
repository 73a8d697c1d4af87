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

#include "qdl/complementarity.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qdl {

FringeScan visibility_sweep(const DensityMatrix &rho, std::size_t n) {
    if (n < 8) {
        throw std::invalid_argument("visibility sweep needs at least 8 phases");
    }
    FringeScan scan;
    scan.phases.reserve(n);
    scan.probabilities.reserve(n);
    for (std::size_t k = 0; k < n; ++k) {
        const double phi = 2 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n);
        const DensityMatrix out = interference_rotation(phase_shift(rho, phi));
        const double p_up = std::clamp(out.reduced_a()(0, 0).real(), 0.0, 1.0);
        scan.phases.push_back(phi);
        scan.probabilities.push_back(p_up);
    }
    auto [lo, hi] = std::minmax_element(scan.probabilities.begin(), scan.probabilities.end());
    const double denom = *hi + *lo;
    scan.visibility = denom > 0 ? (*hi - *lo) / denom : 0.0;
    return scan;
}

double visibility_analytic(const DensityMatrix &rho) {
    return std::min(1.0, 2 * std::abs(rho.reduced_a()(0, 1)));
}

double predictability_sqrt_reading(double r) {
    return std::sqrt(predictability(r));
}

double IdentityResiduals::max() const {
    double worst = identity;
    if (product_form) {
        worst = std::max(worst, *product_form);
    }
    if (robustness_ratio) {
        worst = std::max(worst, *robustness_ratio);
    }
    return worst;
}

namespace {

/// |V^2/denom + D^2 - 1|, or |V^2 - denom (1 - D^2)| for a vanishing denom.
double quotient_residual(double v, double denom, double d) {
    constexpr double kZeroDenom = 1e-12;
    if (denom < kZeroDenom) {
        return std::abs(v * v - denom * (1 - d * d));
    }
    return std::abs(v * v / denom + d * d - 1);
}

}  // namespace

IdentityResiduals check_identity(Scenario scenario, const ScenarioParams &params) {
    const DensityMatrix rho = scenario_state(params, scenario);
    IdentityResiduals out;
    out.visibility = visibility_analytic(rho);
    const double v = out.visibility;
    const double d = params.d;

    switch (scenario) {
        case Scenario::kFree: {
            const double u = unpredictability(predictability(params.r));
            out.identity = quotient_residual(v, u * u, d);
            out.product_form = std::abs(v - overlap(d) * u);
            break;
        }
        case Scenario::kMeterDecoherence:
            out.identity = quotient_residual(v, 1.0, d);
            break;
        case Scenario::kSystemDecoherence:
        case Scenario::kCombined: {
            out.identity = quotient_residual(v, params.r_s * params.r_s, d);
            if (d < 1) {
                out.robustness_ratio = std::abs(v / overlap(d) - params.r_s);
            }
            break;
        }
    }
    return out;
}

}  // namespace qdl
