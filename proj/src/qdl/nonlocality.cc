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

#include "qdl/nonlocality.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <stdexcept>

namespace qdl {

namespace {

const std::array<ComplexMatrix, 3> &paulis() {
    static const std::array<ComplexMatrix, 3> kPaulis = {pauli_x(), pauli_y(), pauli_z()};
    return kPaulis;
}

Vec3 bloch(double theta, double phi) {
    return {std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi), std::cos(theta)};
}

/// Tr[rho (a.sigma (x) b.sigma)] by direct index contraction.
double correlator(const ComplexMatrix &rho, const Vec3 &a, const Vec3 &b) {
    const Complex x[2][2] = {{a[2], Complex{a[0], -a[1]}}, {Complex{a[0], a[1]}, -a[2]}};
    const Complex y[2][2] = {{b[2], Complex{b[0], -b[1]}}, {Complex{b[0], b[1]}, -b[2]}};
    Complex sum = 0;
    for (int i = 0; i < 2; ++i) {
        for (int k = 0; k < 2; ++k) {
            for (int j = 0; j < 2; ++j) {
                for (int l = 0; l < 2; ++l) {
                    sum += rho(2 * i + k, 2 * j + l) * x[j][i] * y[l][k];
                }
            }
        }
    }
    return sum.real();
}

/// angles: theta_a, phi_a, theta_a', phi_a', theta_b, phi_b, theta_b', phi_b'
double chsh_at(const ComplexMatrix &rho, const std::array<double, 8> &angles) {
    const Vec3 a = bloch(angles[0], angles[1]);
    const Vec3 ap = bloch(angles[2], angles[3]);
    const Vec3 b = bloch(angles[4], angles[5]);
    const Vec3 bp = bloch(angles[6], angles[7]);
    return correlator(rho, a, b) + correlator(rho, a, bp) + correlator(rho, ap, b) -
           correlator(rho, ap, bp);
}

double radical_inverse(std::uint64_t index, std::uint64_t base) {
    double result = 0;
    double scale = 1.0 / static_cast<double>(base);
    while (index > 0) {
        result += static_cast<double>(index % base) * scale;
        index /= base;
        scale /= static_cast<double>(base);
    }
    return result;
}

struct RestartOutcome {
    double value;
    std::array<double, 8> angles;
    bool converged;
};

RestartOutcome ascend(const ComplexMatrix &rho, std::array<double, 8> angles,
                      const BruteForceOptions &options) {
    constexpr double kThird = 2 * std::numbers::pi / 3;
    constexpr double kFlatAmplitude = 1e-13;
    const double sqrt3 = std::sqrt(3.0);
    double value = chsh_at(rho, angles);
    for (int sweep = 0; sweep < options.max_sweeps; ++sweep) {
        double largest_step = 0;
        for (std::size_t c = 0; c < angles.size(); ++c) {
            // f(x + delta) = c0 + c1 cos(delta) + c2 sin(delta)
            const double x = angles[c];
            const double f0 = value;
            angles[c] = x + kThird;
            const double f1 = chsh_at(rho, angles);
            angles[c] = x - kThird;
            const double f2 = chsh_at(rho, angles);
            const double c1 = (2 * f0 - f1 - f2) / 3;
            const double c2 = (f1 - f2) / sqrt3;
            if (std::hypot(c1, c2) < kFlatAmplitude) {
                // the value does not depend on this angle here
                angles[c] = x;
                continue;
            }
            const double step = std::atan2(c2, c1);
            angles[c] = x + step;
            const double moved = chsh_at(rho, angles);
            if (moved >= f0) {
                value = moved;
                largest_step = std::max(largest_step, std::abs(step));
            } else {
                angles[c] = x;
            }
        }
        if (largest_step < options.step_tol) {
            return {value, angles, true};
        }
    }
    return {value, angles, false};
}

}  // namespace

MeasurementSetting::MeasurementSetting(const Vec3 &direction) {
    const double n = std::hypot(direction[0], direction[1], direction[2]);
    if (!(n > 0) || !std::isfinite(n)) {
        throw std::invalid_argument("measurement direction must be a finite nonzero vector");
    }
    dir_ = {direction[0] / n, direction[1] / n, direction[2] / n};
}

MeasurementSetting MeasurementSetting::from_angles(double theta, double phi) {
    return MeasurementSetting(bloch(theta, phi));
}

ComplexMatrix MeasurementSetting::observable() const {
    ComplexMatrix m = dir_[0] * paulis()[0];
    m += dir_[1] * paulis()[1];
    m += dir_[2] * paulis()[2];
    return m;
}

CorrelationTensor correlation_tensor(const DensityMatrix &rho) {
    CorrelationTensor out;
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = 0; j < 3; ++j) {
            out.t[i][j] = (rho.matrix() * kron(paulis()[i], paulis()[j])).trace().real();
        }
    }
    return out;
}

double horodecki_m(const DensityMatrix &rho) {
    const CorrelationTensor t = correlation_tensor(rho);
    ComplexMatrix tt(3);
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = 0; j < 3; ++j) {
            double sum = 0;
            for (std::size_t k = 0; k < 3; ++k) {
                sum += t(k, i) * t(k, j);
            }
            tt(i, j) = sum;
        }
    }
    const auto values = hermitian_eigenvalues(tt);
    return std::max(0.0, values[0] + values[1]);
}

double horodecki_bmax(const DensityMatrix &rho) {
    return 2 * std::sqrt(horodecki_m(rho));
}

double bell_closed_form(Scenario scenario, const ScenarioParams &params) {
    params.validate_for(scenario);
    const double d2 = params.d * params.d;
    const double rs2 = params.r_s * params.r_s;
    const double rm2 = params.r_m * params.r_m;
    double m = 0;
    switch (scenario) {
        case Scenario::kFree: {
            const double u = unpredictability(predictability(params.r));
            m = 1 + d2 * u * u;
            break;
        }
        case Scenario::kSystemDecoherence:
            m = rs2 + d2;
            break;
        case Scenario::kMeterDecoherence:
            m = (1 - rm2) * (1 - d2) * (1 - d2) + rm2 + d2;
            break;
        case Scenario::kCombined:
            m = d2 * (1 - rm2) * (d2 - rs2) + d2 * rm2 + rs2;
            break;
    }
    return 2 * std::sqrt(std::max(0.0, m));
}

double chsh_value(const DensityMatrix &rho, const MeasurementSetting &a,
                  const MeasurementSetting &a_prime, const MeasurementSetting &b,
                  const MeasurementSetting &b_prime) {
    const auto c = [&](const MeasurementSetting &x, const MeasurementSetting &y) {
        return (rho.matrix() * kron(x.observable(), y.observable())).trace().real();
    };
    return c(a, b) + c(a, b_prime) + c(a_prime, b) - c(a_prime, b_prime);
}

BruteForceResult chsh_brute_force(const DensityMatrix &rho, const BruteForceOptions &options) {
    if (options.restarts < 1) {
        throw std::invalid_argument("brute-force CHSH needs at least one restart");
    }
    constexpr std::uint64_t kBases[8] = {2, 3, 5, 7, 11, 13, 17, 19};
    std::mt19937_64 rng(options.seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::array<double, 8> shift{};
    for (auto &s : shift) {
        s = unit(rng);
    }

    BruteForceResult best;
    best.value = -std::numeric_limits<double>::infinity();
    for (int restart = 0; restart < options.restarts; ++restart) {
        std::array<double, 8> start{};
        for (std::size_t c = 0; c < start.size(); ++c) {
            double u = radical_inverse(static_cast<std::uint64_t>(restart) + 1, kBases[c]) + shift[c];
            u -= std::floor(u);
            // even slots are polar angles, odd slots azimuthal
            start[c] = (c % 2 == 0) ? std::acos(1 - 2 * u) : 2 * std::numbers::pi * u;
        }
        const RestartOutcome outcome = ascend(rho.matrix(), start, options);
        best.converged = best.converged && outcome.converged;
        if (outcome.value > best.value) {
            best.value = outcome.value;
            best.best_restart = restart;
            for (std::size_t k = 0; k < 4; ++k) {
                best.settings[k] =
                    MeasurementSetting::from_angles(outcome.angles[2 * k], outcome.angles[2 * k + 1]);
            }
        }
    }
    return best;
}

BellResult analyze_bell(const DensityMatrix &rho,
                        std::optional<std::pair<Scenario, ScenarioParams>> point,
                        std::optional<BruteForceOptions> brute) {
    BellResult out;
    out.b_max_horodecki = horodecki_bmax(rho);
    out.violates = out.b_max_horodecki > 2 + kViolationTol;
    if (point) {
        out.b_max_closed_form = bell_closed_form(point->first, point->second);
    }
    if (brute) {
        out.brute = chsh_brute_force(rho, *brute);
    }
    return out;
}

ViolationBoundary violation_boundary(Scenario scenario, const ScenarioParams &params) {
    params.validate_for(scenario);
    const double d2 = params.d * params.d;
    const double rs2 = params.r_s * params.r_s;
    const double rm2 = params.r_m * params.r_m;

    // Violation requires D^2 > threshold_sq.
    double threshold_sq = 0;
    switch (scenario) {
        case Scenario::kFree:
            threshold_sq = unpredictability(predictability(params.r)) > 0 ? 0.0 : 1.0;
            break;
        case Scenario::kSystemDecoherence:
            threshold_sq = 1 - rs2;
            break;
        case Scenario::kMeterDecoherence:
            threshold_sq = params.r_m == 1.0 ? 0.0 : std::max(0.0, 1 - rm2 / (1 - rm2));
            break;
        case Scenario::kCombined: {
            if (params.r_m == 1.0) {
                threshold_sq = 1 - rs2;
                break;
            }
            const double alpha = rs2 - rm2 / (1 - rm2);
            const double beta = (1 - rs2) / (1 - rm2);
            const double root = std::sqrt(alpha * alpha / 4 + beta);
            // Same root as alpha/2 + root; for alpha < 0 use the product of
            // roots (-beta) to avoid cancellation.
            threshold_sq = alpha >= 0 ? alpha / 2 + root
                                      : (root - alpha / 2 > 0 ? beta / (root - alpha / 2) : 0.0);
            break;
        }
    }
    threshold_sq = std::clamp(threshold_sq, 0.0, 1.0);

    ViolationBoundary out;
    out.d_threshold = std::sqrt(threshold_sq);
    out.violates = d2 > threshold_sq + kViolationTol;
    return out;
}

}  // namespace qdl
