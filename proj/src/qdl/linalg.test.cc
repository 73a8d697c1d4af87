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

#include "qdl/linalg.h"

#include <Eigen/Dense>
#include <cmath>
#include <limits>
#include <random>

#include "gtest/gtest.h"
#include "qdl/state_factory.h"

using namespace qdl;

namespace {

ComplexMatrix random_hermitian(std::size_t n, std::mt19937_64 &rng) {
    std::normal_distribution<double> g;
    ComplexMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = g(rng);
        for (std::size_t j = i + 1; j < n; ++j) {
            m(i, j) = Complex{g(rng), g(rng)};
            m(j, i) = std::conj(m(i, j));
        }
    }
    return m;
}

ComplexMatrix random_matrix(std::size_t n, std::mt19937_64 &rng) {
    std::normal_distribution<double> g;
    ComplexMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            m(i, j) = Complex{g(rng), g(rng)};
        }
    }
    return m;
}

PureState random_state(std::size_t qubits, std::mt19937_64 &rng) {
    std::normal_distribution<double> g;
    std::vector<Complex> amps(std::size_t{1} << qubits);
    double norm = 0;
    for (auto &a : amps) {
        a = Complex{g(rng), g(rng)};
        norm += std::norm(a);
    }
    for (auto &a : amps) {
        a /= std::sqrt(norm);
    }
    std::vector<std::string> labels;
    for (std::size_t q = 0; q < qubits; ++q) {
        labels.push_back("q" + std::to_string(q));
    }
    return PureState(labels, amps);
}

PureState bell_phi_plus() {
    const double h = 1 / std::sqrt(2.0);
    return PureState({"A", "B"}, {h, 0, 0, h});
}

}  // namespace

TEST(linalg, kron_examples) {
    const double diag[] = {1, -1, -1, 1};
    EXPECT_EQ(kron(pauli_z(), pauli_z()), ComplexMatrix::diagonal(diag));
    EXPECT_EQ(kron(ComplexMatrix::identity(2), ComplexMatrix::identity(2)), ComplexMatrix::identity(4));
    EXPECT_EQ(kron(pauli_x(), pauli_y())(0, 3), Complex(0, -1));
}

TEST(linalg, kron_rejects_oversized_result) {
    const ComplexMatrix eight = ComplexMatrix::identity(8);
    EXPECT_EQ(kron(eight, ComplexMatrix::identity(2)).dim(), 16u);
    EXPECT_THROW(kron(eight, ComplexMatrix::identity(4)), DimensionError);
}

TEST(linalg, kron_mixed_product_property) {
    std::mt19937_64 rng(1);
    for (int trial = 0; trial < 50; ++trial) {
        const auto a = random_matrix(2, rng), b = random_matrix(2, rng);
        const auto c = random_matrix(2, rng), d = random_matrix(2, rng);
        EXPECT_LT(max_abs_diff(kron(a, b) * kron(c, d), kron(a * c, b * d)), 1e-12);
        // associativity on flattened indices
        EXPECT_LT(max_abs_diff(kron(kron(a, b), c), kron(a, kron(b, c))), 1e-12);
    }
}

TEST(linalg, rejects_non_finite_entries) {
    const double nan = std::numeric_limits<double>::quiet_NaN();
    EXPECT_THROW(ComplexMatrix(2, {1, nan, 0, 1}), ContractError);
    EXPECT_THROW((ComplexMatrix{{1, 0}, {0, std::numeric_limits<double>::infinity()}}), ContractError);
}

TEST(linalg, eigenvalue_examples) {
    const auto x = hermitian_eigenvalues(pauli_x());
    EXPECT_NEAR(x[0], 1, 1e-12);
    EXPECT_NEAR(x[1], -1, 1e-12);

    for (double v : hermitian_eigenvalues(0.25 * ComplexMatrix::identity(4))) {
        EXPECT_NEAR(v, 0.25, 1e-12);
    }

    const auto pt = hermitian_eigenvalues(partial_transpose(outer(bell_phi_plus().amps())));
    const double expected[] = {0.5, 0.5, 0.5, -0.5};
    for (int k = 0; k < 4; ++k) {
        EXPECT_NEAR(pt[k], expected[k], 1e-10);
    }
}

TEST(linalg, eigenvalues_match_eigen_oracle) {
    std::mt19937_64 rng(7);
    for (std::size_t n : {2u, 3u, 4u, 8u, 16u}) {
        for (int trial = 0; trial < 20; ++trial) {
            const ComplexMatrix m = random_hermitian(n, rng);
            Eigen::MatrixXcd e(n, n);
            for (std::size_t i = 0; i < n; ++i) {
                for (std::size_t j = 0; j < n; ++j) {
                    e(i, j) = m(i, j);
                }
            }
            Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(e);
            const Eigen::VectorXd oracle = solver.eigenvalues();  // ascending
            const auto values = hermitian_eigenvalues(m);
            for (std::size_t k = 0; k < n; ++k) {
                EXPECT_NEAR(values[k], oracle(n - 1 - k), 1e-10) << "n=" << n;
            }
        }
    }
}

TEST(linalg, eigensystem_properties) {
    std::mt19937_64 rng(11);
    for (std::size_t n : {2u, 4u, 8u, 16u}) {
        const ComplexMatrix m = random_hermitian(n, rng);
        const Eigensystem es = hermitian_eigensystem(m);
        double sum = 0;
        for (double v : es.values) {
            sum += v;
        }
        EXPECT_NEAR(sum, m.trace().real(), 1e-10);
        EXPECT_TRUE(std::is_sorted(es.values.rbegin(), es.values.rend()));
        for (std::size_t k = 0; k < n; ++k) {
            std::vector<Complex> v(n);
            for (std::size_t i = 0; i < n; ++i) {
                v[i] = es.vectors(i, k);
            }
            const auto mv = m * std::span<const Complex>(v);
            double residual = 0;
            for (std::size_t i = 0; i < n; ++i) {
                residual += std::norm(mv[i] - es.values[k] * v[i]);
            }
            EXPECT_LT(std::sqrt(residual), 1e-8);
        }
        EXPECT_LE(es.sweeps, 100);
    }
}

TEST(linalg, eigensolver_rejects_non_hermitian) {
    EXPECT_THROW(hermitian_eigenvalues(ComplexMatrix{{0, 1}, {0, 0}}), ContractError);
}

TEST(linalg, partial_trace_examples) {
    const std::size_t keep_a[] = {0};
    EXPECT_LT(max_abs_diff(partial_trace(bell_phi_plus(), keep_a), 0.5 * ComplexMatrix::identity(2)), 1e-12);

    const PureState product({"A", "B"}, {0, 1, 0, 0});  // |up>_A |down>_B
    EXPECT_EQ(partial_trace(product, keep_a), (ComplexMatrix{{1, 0}, {0, 0}}));

    // system-decoherence state with D = 1, R = 1: the environment factors out
    ScenarioParams p;
    p.d = 1;
    p.r_s = 1;
    const PureState joint = build_joint_state(p, Scenario::kSystemDecoherence);
    const std::size_t keep_ab[] = {0, 1};
    const auto values = hermitian_eigenvalues(partial_trace(joint, keep_ab));
    EXPECT_NEAR(values[0], 1, 1e-12);
    for (int k = 1; k < 4; ++k) {
        EXPECT_NEAR(values[k], 0, 1e-12);
    }
}

TEST(linalg, partial_trace_rejects_bad_keep_sets) {
    const std::size_t out_of_range[] = {2};
    const std::size_t duplicate[] = {0, 0};
    EXPECT_THROW(partial_trace(bell_phi_plus(), out_of_range), std::invalid_argument);
    EXPECT_THROW(partial_trace(bell_phi_plus(), duplicate), std::invalid_argument);
    EXPECT_THROW(partial_trace(bell_phi_plus(), std::span<const std::size_t>{}), std::invalid_argument);
}

TEST(linalg, partial_trace_matches_expectation_values) {
    // Tr[rho_kept X] = <psi| X (x) I |psi> for X on the kept factor.
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 20; ++trial) {
        const PureState s = random_state(3, rng);
        const std::size_t keep[] = {1};
        const ComplexMatrix reduced = partial_trace(s, keep);
        const ComplexMatrix x = random_hermitian(2, rng);
        const ComplexMatrix full = kron(kron(ComplexMatrix::identity(2), x), ComplexMatrix::identity(2));
        const auto fx = full * s.amps();
        Complex expectation = 0;
        for (std::size_t i = 0; i < s.size(); ++i) {
            expectation += std::conj(s.amp(i)) * fx[i];
        }
        EXPECT_NEAR((reduced * x).trace().real(), expectation.real(), 1e-12);
    }
}

TEST(linalg, partial_trace_of_pure_states_is_a_density_matrix) {
    std::mt19937_64 rng(5);
    for (std::size_t qubits : {2u, 3u, 4u}) {
        for (int trial = 0; trial < 20; ++trial) {
            const PureState s = random_state(qubits, rng);
            const std::size_t keep[] = {0, 1};
            EXPECT_NO_THROW(DensityMatrix(partial_trace(s, keep)));
        }
    }
}

TEST(linalg, density_partial_trace_agrees_with_pure_route) {
    std::mt19937_64 rng(9);
    const PureState s = random_state(2, rng);
    const DensityMatrix rho = DensityMatrix::from_pure(s);
    const std::size_t keep_b[] = {1};
    EXPECT_LT(max_abs_diff(rho.reduced_b(), partial_trace(s, keep_b)), 1e-14);
}

TEST(linalg, density_matrix_contract) {
    EXPECT_THROW(DensityMatrix(ComplexMatrix::identity(4)), ContractError);  // trace 4
    const double neg[] = {1.5, -0.5, 0, 0};
    EXPECT_THROW(DensityMatrix(ComplexMatrix::diagonal(neg)), ContractError);
    EXPECT_THROW(DensityMatrix(0.5 * ComplexMatrix::identity(2)), DimensionError);
    EXPECT_NEAR(DensityMatrix::maximally_mixed().purity(), 0.25, 1e-15);
}

TEST(linalg, partial_transpose_examples) {
    std::mt19937_64 rng(13);
    const PureState a = random_state(1, rng);
    const PureState b = random_state(1, rng);
    const ComplexMatrix rho_a = outer(a.amps());
    const ComplexMatrix rho_b = outer(b.amps());
    const DensityMatrix product(kron(rho_a, rho_b));
    EXPECT_LT(max_abs_diff(partial_transpose(product), kron(rho_a, rho_b.transpose())), 1e-15);
    EXPECT_GE(hermitian_eigenvalues(partial_transpose(product)).back(), -kPsdTol);
}

TEST(linalg, partial_transpose_is_an_involution_preserving_trace) {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 20; ++trial) {
        const DensityMatrix rho = DensityMatrix::from_pure(random_state(2, rng));
        const ComplexMatrix pt = partial_transpose(rho);
        EXPECT_EQ(partial_transpose(pt), rho.matrix());
        EXPECT_EQ(pt.trace(), rho.matrix().trace());
        EXPECT_EQ(pt.hermiticity_defect(), rho.matrix().hermiticity_defect());
    }
}

TEST(linalg, pure_state_contract) {
    EXPECT_THROW(PureState({"A"}, {1, 1}), ContractError);
    EXPECT_THROW(PureState({"A", "A"}, {1, 0, 0, 0}), std::invalid_argument);
    EXPECT_THROW(PureState({"A"}, {1, 0, 0}), DimensionError);
    EXPECT_THROW(PureState({"a", "b", "c", "d", "e"}, std::vector<Complex>(32)), DimensionError);
    const PureState s({"A", "B"}, {0, 1, 0, 0});
    EXPECT_EQ(s.amp({0, 1}), Complex(1));
    EXPECT_EQ(s.factor_index("B"), 1u);
    EXPECT_THROW(s.factor_index("E"), std::invalid_argument);
}
