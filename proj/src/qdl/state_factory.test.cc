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

#include <cmath>
#include <numbers>
#include <random>

#include "gtest/gtest.h"

using namespace qdl;

namespace {

const double kInvSqrt2 = 1 / std::sqrt(2.0);

ScenarioParams point(double d, double r_s = 1, double r_m = 1) {
    ScenarioParams p;
    p.d = d;
    p.r_s = r_s;
    p.r_m = r_m;
    return p;
}

void expect_amps_near(const PureState &a, const PureState &b, double tol) {
    ASSERT_EQ(a.size(), b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        EXPECT_NEAR(std::abs(a.amp(i) - b.amp(i)), 0, tol) << "index " << i;
    }
}

}  // namespace

TEST(state_factory, input_state) {
    const PureState up = input_state(1);
    EXPECT_EQ(up.amp(0), Complex(1));
    EXPECT_NEAR(std::abs(up.amp(1)), 0, 1e-15);

    const PureState balanced = input_state(0.5);
    EXPECT_NEAR(balanced.amp(0).real(), kInvSqrt2, 1e-15);
    EXPECT_NEAR(balanced.amp(1).real(), -kInvSqrt2, 1e-15);

    const PureState quarter = input_state(0.25);
    EXPECT_NEAR(quarter.norm(), 1, 1e-15);
    EXPECT_NEAR(quarter.amp(0).real(), 0.5, 1e-15);

    EXPECT_THROW(input_state(1.5), std::invalid_argument);
    EXPECT_THROW(input_state(-0.1), std::invalid_argument);
}

TEST(state_factory, couple_meter) {
    const PureState none = couple_meter(input_state(0.5), 0);
    EXPECT_NEAR(std::abs(none.amp({0, 0})), 0, 1e-15);
    EXPECT_NEAR(std::abs(none.amp({1, 0})), 0, 1e-15);

    // perfect tagging: (|up,down> - |down,up>)/sqrt2
    const PureState tagged = couple_meter(input_state(0.5), 1);
    EXPECT_NEAR(tagged.amp({0, 1}).real(), kInvSqrt2, 1e-15);
    EXPECT_NEAR(tagged.amp({1, 0}).real(), -kInvSqrt2, 1e-15);
    EXPECT_NEAR(std::abs(tagged.amp({1, 1})), 0, 1e-15);

    const PureState partial = couple_meter(input_state(0.5), 0.6);
    EXPECT_NEAR(partial.amp({1, 1}).real(), -0.8 * kInvSqrt2, 1e-15);

    EXPECT_THROW(couple_meter(input_state(0.5), 1.01), std::invalid_argument);
    EXPECT_THROW(couple_meter(tagged, 0.5), std::invalid_argument);
}

TEST(state_factory, system_decoherence_matches_closed_expression) {
    for (double d : {0.0, 0.3, 0.8, 1.0}) {
        for (double r : {0.0, 0.5, 0.9, 1.0}) {
            const PureState s = build_joint_state(point(d, r), Scenario::kSystemDecoherence);
            const double o = std::sqrt(1 - d * d);
            const double e = std::sqrt(1 - r * r);
            // (|up,down,down> - |down>(O|down> + D|up>)(R|down> + e|up>))/sqrt2
            const double expected[8] = {0, 0, 0, kInvSqrt2, -d * e * kInvSqrt2, -d * r * kInvSqrt2,
                                        -o * e * kInvSqrt2, -o * r * kInvSqrt2};
            for (int i = 0; i < 8; ++i) {
                EXPECT_NEAR(s.amp(i).real(), expected[i], 1e-15) << "D=" << d << " R=" << r << " i=" << i;
                EXPECT_EQ(s.amp(i).imag(), 0);
            }
        }
    }
}

TEST(state_factory, decohere_system_examples) {
    const PureState coupled = couple_meter(input_state(0.5), 0.4);
    const PureState intact = decohere_system(coupled, 1);
    for (std::size_t i = 0; i < intact.size(); i += 2) {
        EXPECT_EQ(intact.amp(i), Complex(0));  // E_S stays |down>
    }

    const DensityMatrix rho = reduce_to_ab(decohere_system(coupled, 0));
    EXPECT_NEAR(std::abs(rho.reduced_a()(0, 1)), 0, 1e-15);
    EXPECT_THROW(decohere_system(coupled, 2), std::invalid_argument);
}

TEST(state_factory, decohere_meter_examples) {
    const PureState coupled = couple_meter(input_state(0.5), 1);
    const DensityMatrix classical = reduce_to_ab(decohere_meter(coupled, 0));
    const double diag[] = {0, 0.5, 0.5, 0};
    EXPECT_LT(max_abs_diff(classical.matrix(), ComplexMatrix::diagonal(diag)), 1e-15);

    const PureState s = decohere_meter(couple_meter(input_state(0.5), 0.8), 0.5);
    EXPECT_NEAR(s.amp({1, 0, 0}).real(), -0.8 * std::sqrt(0.75) * kInvSqrt2, 1e-15);

    const PureState intact = decohere_meter(couple_meter(input_state(0.5), 0.8), 1);
    for (std::size_t i = 0; i < intact.size(); i += 2) {
        EXPECT_EQ(intact.amp(i), Complex(0));
    }
    EXPECT_THROW(decohere_meter(input_state(0.5), 0.5), std::invalid_argument);
}

TEST(state_factory, build_joint_state_examples) {
    const PureState free = build_joint_state(point(0), Scenario::kFree);
    EXPECT_NEAR(free.amp({0, 1}).real(), kInvSqrt2, 1e-15);
    EXPECT_NEAR(free.amp({1, 1}).real(), -kInvSqrt2, 1e-15);

    const PureState combined = build_joint_state(point(0.7, 0.4, 0.3), Scenario::kCombined);
    EXPECT_EQ(combined.labels(), (std::vector<std::string>{kSystem, kMeter, kSystemEnv, kMeterEnv}));

    ScenarioParams biased = point(0.5);
    biased.r = 0.3;
    EXPECT_NO_THROW(build_joint_state(biased, Scenario::kFree));
    EXPECT_THROW(build_joint_state(biased, Scenario::kSystemDecoherence), std::invalid_argument);
    EXPECT_THROW(build_joint_state(point(0.5, 0.5), Scenario::kMeterDecoherence), std::invalid_argument);
    EXPECT_THROW(build_joint_state(point(0.5, 1, 0.5), Scenario::kFree), std::invalid_argument);
}

TEST(state_factory, every_joint_state_is_normalized) {
    for (auto scenario : {Scenario::kFree, Scenario::kSystemDecoherence, Scenario::kMeterDecoherence,
                          Scenario::kCombined}) {
        for (double d = 0; d <= 1; d += 0.125) {
            for (double x = 0; x <= 1; x += 0.125) {
                ScenarioParams p = point(d);
                if (scenario == Scenario::kFree) {
                    p.r = x;
                } else if (scenario == Scenario::kMeterDecoherence) {
                    p.r_m = x;
                } else {
                    p.r_s = x;
                    p.r_m = scenario == Scenario::kCombined ? 1 - x : 1;
                }
                EXPECT_NEAR(build_joint_state(p, scenario).norm(), 1, 1e-12);
            }
        }
    }
}

TEST(state_factory, reduce_to_ab_examples) {
    const DensityMatrix pure = scenario_state(point(0.6), Scenario::kFree);
    EXPECT_NEAR(pure.purity(), 1, 1e-12);

    const DensityMatrix dephased = scenario_state(point(0, 0), Scenario::kSystemDecoherence);
    const double diag[] = {0, 0.5, 0, 0.5};
    EXPECT_LT(max_abs_diff(dephased.matrix(), ComplexMatrix::diagonal(diag)), 1e-15);

    for (double d : {0.2, 0.7, 1.0}) {
        EXPECT_LT(max_abs_diff(scenario_state(point(d, 1, 1), Scenario::kMeterDecoherence).matrix(),
                               scenario_state(point(d), Scenario::kFree).matrix()),
                  1e-12);
    }
}

TEST(state_factory, scenario_embeddings_agree) {
    for (double d = 0; d <= 1.0001; d += 0.1) {
        const auto free = scenario_state(point(d), Scenario::kFree).matrix();
        EXPECT_LT(max_abs_diff(scenario_state(point(d), Scenario::kSystemDecoherence).matrix(), free), 1e-12);
        EXPECT_LT(max_abs_diff(scenario_state(point(d), Scenario::kMeterDecoherence).matrix(), free), 1e-12);
        EXPECT_LT(max_abs_diff(scenario_state(point(d), Scenario::kCombined).matrix(), free), 1e-12);
        for (double r = 0; r <= 1.0001; r += 0.1) {
            EXPECT_LT(max_abs_diff(scenario_state(point(d, r, 1), Scenario::kCombined).matrix(),
                                   scenario_state(point(d, r, 1), Scenario::kSystemDecoherence).matrix()),
                      1e-12);
            EXPECT_LT(max_abs_diff(scenario_state(point(d, 1, r), Scenario::kCombined).matrix(),
                                   scenario_state(point(d, 1, r), Scenario::kMeterDecoherence).matrix()),
                      1e-12);
        }
    }
}

TEST(state_factory, monitoring_maps_are_isometries) {
    std::mt19937_64 rng(21);
    std::normal_distribution<double> g;
    std::uniform_real_distribution<double> u(0, 1);
    for (int trial = 0; trial < 100; ++trial) {
        Complex a{g(rng), g(rng)}, b{g(rng), g(rng)};
        const double n = std::sqrt(std::norm(a) + std::norm(b));
        const PureState in({kSystem}, {a / n, b / n});
        const PureState coupled = couple_meter(in, u(rng));
        EXPECT_NEAR(coupled.norm(), 1, 1e-12);
        EXPECT_NEAR(decohere_system(coupled, u(rng)).norm(), 1, 1e-12);
        EXPECT_NEAR(decohere_meter(coupled, u(rng)).norm(), 1, 1e-12);
    }
}

TEST(state_factory, phase_shift) {
    const PureState s = input_state(0.5);
    expect_amps_near(phase_shift(s, 0), s, 0);
    expect_amps_near(phase_shift(s, 2 * std::numbers::pi), s, 1e-12);

    const PureState flipped = phase_shift(s, std::numbers::pi);
    expect_amps_near(flipped, PureState({kSystem}, {-kInvSqrt2, -kInvSqrt2}), 1e-15);

    const DensityMatrix rho = scenario_state(point(0.3), Scenario::kFree);
    EXPECT_LT(max_abs_diff(phase_shift(rho, 2 * std::numbers::pi).matrix(), rho.matrix()), 1e-12);
    EXPECT_THROW(phase_shift(s, std::nan("")), std::invalid_argument);
}

TEST(state_factory, interference_rotation) {
    const ComplexMatrix u = rotation_gate();
    EXPECT_LT(max_abs_diff(u.adjoint() * u, ComplexMatrix::identity(2)), 1e-14);

    const PureState down({kSystem}, {0, 1});
    expect_amps_near(interference_rotation(down), PureState({kSystem}, {-kInvSqrt2, kInvSqrt2}), 1e-15);

    // two applications send |up> to |down>
    const PureState up({kSystem}, {1, 0});
    const PureState twice = interference_rotation(interference_rotation(up));
    EXPECT_NEAR(std::abs(twice.amp(1)), 1, 1e-15);

    const DensityMatrix mixed = scenario_state(point(1, 0), Scenario::kSystemDecoherence);
    const ComplexMatrix before = mixed.reduced_a();
    EXPECT_LT(max_abs_diff(interference_rotation(mixed).reduced_a(), before), 1e-15);
}

TEST(state_factory, gates_agree_between_vector_and_density_routes) {
    const PureState s = couple_meter(input_state(0.3), 0.45);
    const PureState out = interference_rotation(phase_shift(s, 0.7));
    const DensityMatrix rho = interference_rotation(phase_shift(DensityMatrix::from_pure(s), 0.7));
    EXPECT_LT(max_abs_diff(DensityMatrix::from_pure(out).matrix(), rho.matrix()), 1e-15);
}

TEST(state_factory, scenario_names_round_trip) {
    for (auto s : {Scenario::kFree, Scenario::kSystemDecoherence, Scenario::kMeterDecoherence,
                   Scenario::kCombined}) {
        EXPECT_EQ(parse_scenario(scenario_name(s)), s);
    }
    EXPECT_THROW(parse_scenario("both"), std::invalid_argument);
}

TEST(state_factory, derived_quantities) {
    EXPECT_EQ(predictability(0.5), 0);
    EXPECT_EQ(predictability(1), 1);
    EXPECT_EQ(predictability(0.25), 0.5);
    EXPECT_NEAR(overlap(0.6), 0.8, 1e-15);
    EXPECT_NEAR(unpredictability(0.6), 0.8, 1e-15);
}
