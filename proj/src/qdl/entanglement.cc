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

#include "qdl/entanglement.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qdl {

namespace {

double neg_x_log_x(double p) {
    return p > 0 ? -p * std::log(p) : 0.0;
}

double clamped_sqrt(double x) {
    return std::sqrt(std::max(0.0, x));
}

}  // namespace

SeparabilityReport ppt_check(const DensityMatrix &rho) {
    const auto spectrum = hermitian_eigenvalues(partial_transpose(rho));
    SeparabilityReport out;
    std::copy(spectrum.begin(), spectrum.end(), out.ppt_spectrum.begin());
    for (double lambda : spectrum) {
        if (lambda < -kPsdTol) {
            out.negativity -= lambda;
            ++out.negative_count;
        }
    }
    out.separable = out.negative_count == 0;
    return out;
}

double von_neumann_entropy(const ComplexMatrix &rho) {
    double s = 0;
    for (double lambda : hermitian_eigenvalues(rho)) {
        if (lambda < -kPsdTol) {
            throw ContractError("entropy of an operator with eigenvalue " + std::to_string(lambda));
        }
        s += neg_x_log_x(std::clamp(lambda, 0.0, 1.0));
    }
    return s;
}

double von_neumann_entropy(const DensityMatrix &rho) {
    return von_neumann_entropy(rho.matrix());
}

double binary_entropy_of_bloch(double x) {
    x = std::clamp(x, 0.0, 1.0);
    return neg_x_log_x((1 + x) / 2) + neg_x_log_x((1 - x) / 2);
}

InformationReport mutual_information(const DensityMatrix &rho) {
    InformationReport out;
    out.s_a = von_neumann_entropy(rho.reduced_a());
    out.s_b = von_neumann_entropy(rho.reduced_b());
    out.s_ab = von_neumann_entropy(rho);
    out.i_ab = out.s_a + out.s_b - out.s_ab;
    return out;
}

InformationReport entropy_closed_form(Scenario scenario, const ScenarioParams &params) {
    params.validate_for(scenario);
    const double d2 = params.d * params.d;
    const double o = overlap(params.d);
    InformationReport out;
    switch (scenario) {
        case Scenario::kSystemDecoherence: {
            const double r = params.r_s;
            out.s_ab = binary_entropy_of_bloch(r);
            out.s_a = binary_entropy_of_bloch(r * o);
            out.s_b = binary_entropy_of_bloch(o);
            break;
        }
        case Scenario::kMeterDecoherence: {
            const double r2 = params.r_m * params.r_m;
            out.s_ab = binary_entropy_of_bloch(clamped_sqrt(1 - d2 * (2 - d2) * (1 - r2)));
            out.s_a = binary_entropy_of_bloch(o);
            out.s_b = binary_entropy_of_bloch(clamped_sqrt((1 - d2) * (1 - d2 * (1 - r2))));
            break;
        }
        default:
            throw std::invalid_argument("no closed-form entropies for the " +
                                        std::string(scenario_name(scenario)) + " scenario");
    }
    out.i_ab = out.s_a + out.s_b - out.s_ab;
    return out;
}

double meter_sb_printed_form(double d, double r) {
    const double d2 = d * d;
    return binary_entropy_of_bloch(clamped_sqrt((1 - d2) * (1 - d2) * (1 - r * r)));
}

InfoThreshold info_threshold(Scenario scenario, double robustness) {
    if (!(robustness >= 0 && robustness <= 1)) {
        throw std::invalid_argument("robustness must lie in [0, 1]");
    }
    const double r2 = robustness * robustness;
    InfoThreshold out;
    switch (scenario) {
        case Scenario::kSystemDecoherence:
            out.value = binary_entropy_of_bloch(r2);
            out.boundary_d = std::sqrt(1 - r2);
            break;
        case Scenario::kMeterDecoherence: {
            if (2 * r2 >= 1) {
                break;
            }
            const double d = std::sqrt(std::max(0.0, 1 - r2 / (1 - r2)));
            out.boundary_d = d;
            ScenarioParams params;
            params.d = d;
            params.r_m = robustness;
            out.value = mutual_information(scenario_state(params, scenario)).i_ab;
            const double x = std::sqrt(2.0) * r2 / std::sqrt(1 - r2);
            const double plus = 0.5 + x / 2;
            const double minus = 0.5 - x / 2;
            out.printed = -neg_x_log_x(plus) + neg_x_log_x(minus);
            break;
        }
        default:
            throw std::invalid_argument("no information threshold for the " +
                                        std::string(scenario_name(scenario)) + " scenario");
    }
    return out;
}

}  // namespace qdl
