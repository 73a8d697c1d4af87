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

#ifndef QDL_NONLOCALITY_H
#define QDL_NONLOCALITY_H

#include <array>
#include <cstdint>
#include <optional>

#include "qdl/linalg.h"
#include "qdl/state_factory.h"

namespace qdl {

/// B_max above 2 + kViolationTol counts as a CHSH violation.
inline constexpr double kViolationTol = 1e-9;

using Vec3 = std::array<double, 3>;

/// T_ij = Tr[rho (sigma_i (x) sigma_j)], i, j over x, y, z.
struct CorrelationTensor {
    std::array<std::array<double, 3>, 3> t{};

    double operator()(std::size_t i, std::size_t j) const {
        return t[i][j];
    }
};

/// Unit Bloch direction of a spin measurement.
class MeasurementSetting {
   public:
    /// Normalizes `direction`; throws std::invalid_argument on a zero vector.
    explicit MeasurementSetting(const Vec3 &direction);
    /// (sin theta cos phi, sin theta sin phi, cos theta)
    static MeasurementSetting from_angles(double theta, double phi);

    const Vec3 &direction() const {
        return dir_;
    }
    /// a . sigma
    ComplexMatrix observable() const;

   private:
    Vec3 dir_;
};

CorrelationTensor correlation_tensor(const DensityMatrix &rho);

/// Sum of the two largest eigenvalues of T^T T.
double horodecki_m(const DensityMatrix &rho);
/// 2 sqrt(M(rho)).
double horodecki_bmax(const DensityMatrix &rho);

/// Closed-form maximal CHSH value for a scenario point.
double bell_closed_form(Scenario scenario, const ScenarioParams &params);

/// C(a,b) + C(a,b') + C(a',b) - C(a',b') with C(a,b) = Tr[rho (a.sigma) (x) (b.sigma)].
double chsh_value(const DensityMatrix &rho, const MeasurementSetting &a,
                  const MeasurementSetting &a_prime, const MeasurementSetting &b,
                  const MeasurementSetting &b_prime);

struct BruteForceOptions {
    int restarts = 32;
    int max_sweeps = 5000;
    /// A restart has converged once a full sweep moves no angle by more than this.
    double step_tol = 1e-7;
    std::uint64_t seed = 0x9e3779b97f4a7c15ULL;
};

struct BruteForceResult {
    double value = 0;
    /// a, a', b, b'
    std::array<MeasurementSetting, 4> settings{
        MeasurementSetting({0, 0, 1}), MeasurementSetting({0, 0, 1}),
        MeasurementSetting({0, 0, 1}), MeasurementSetting({0, 0, 1})};
    /// False if any restart exhausted max_sweeps before meeting step_tol.
    bool converged = true;
    int best_restart = 0;
};

/// Multi-start coordinate ascent over the eight polar/azimuthal angles of
/// the four settings. Each coordinate step maximizes exactly: CHSH is linear
/// in each setting, hence a pure sinusoid in each angle, which three samples
/// determine. Starts come from a shifted Halton sequence seeded by
/// options.seed. Deterministic for fixed options.
BruteForceResult chsh_brute_force(const DensityMatrix &rho, const BruteForceOptions &options = {});

struct BellResult {
    double b_max_horodecki = 0;
    std::optional<double> b_max_closed_form;
    std::optional<BruteForceResult> brute;
    bool violates = false;
};

/// Horodecki value for rho, plus the closed form when a scenario point is
/// given and the brute-force oracle when options are given.
BellResult analyze_bell(const DensityMatrix &rho,
                        std::optional<std::pair<Scenario, ScenarioParams>> point = std::nullopt,
                        std::optional<BruteForceOptions> brute = std::nullopt);

struct ViolationBoundary {
    bool violates = false;
    /// Smallest D that still fails to violate; violation needs D > d_threshold.
    /// 1 means no D violates.
    double d_threshold = 0;
};

/// Boundary of CHSH violation in D from the printed inequalities: D > 0 with
/// U > 0 (free), D^2 + R^2 > 1 (system), 1 - D^2 < R^2/(1 - R^2) (meter),
/// D^2 > alpha/2 + sqrt(alpha^2/4 + beta) (combined, with D^2 > 1 - R_S^2 at
/// R_M = 1).
ViolationBoundary violation_boundary(Scenario scenario, const ScenarioParams &params);

}  // namespace qdl

#endif
