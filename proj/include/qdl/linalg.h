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

#ifndef QDL_LINALG_H
#define QDL_LINALG_H

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace qdl {

using Complex = std::complex<double>;

/// Raised when a caller breaks an operation's documented precondition
/// (non-Hermitian input to an eigensolver, NaN entries, invalid state).
struct ContractError : std::logic_error {
    using std::logic_error::logic_error;
};

/// Raised when an operation would produce an operator larger than the
/// artifact supports (16x16).
struct DimensionError : std::length_error {
    using std::length_error::length_error;
};

inline constexpr std::size_t kMaxDim = 16;

/// Exact-structure tolerance (Hermiticity, unit trace, norms).
inline constexpr double kStructureTol = 1e-12;
/// Positive-semidefiniteness tolerance on eigenvalues.
inline constexpr double kPsdTol = 1e-10;

/// Dense square complex matrix, row-major. Dimension is bounded by kMaxDim.
class ComplexMatrix {
   public:
    ComplexMatrix() = default;
    explicit ComplexMatrix(std::size_t dim);
    ComplexMatrix(std::size_t dim, std::vector<Complex> entries);
    ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

    static ComplexMatrix identity(std::size_t dim);
    static ComplexMatrix diagonal(std::span<const double> values);

    std::size_t dim() const {
        return dim_;
    }
    Complex &operator()(std::size_t row, std::size_t col) {
        return entries_[row * dim_ + col];
    }
    const Complex &operator()(std::size_t row, std::size_t col) const {
        return entries_[row * dim_ + col];
    }
    std::span<const Complex> entries() const {
        return entries_;
    }

    ComplexMatrix adjoint() const;
    ComplexMatrix transpose() const;
    Complex trace() const;
    bool all_finite() const;
    /// max_ij |m_ij - m_ji^*|
    double hermiticity_defect() const;

    ComplexMatrix &operator+=(const ComplexMatrix &other);
    ComplexMatrix &operator-=(const ComplexMatrix &other);
    ComplexMatrix &operator*=(Complex scale);

    bool operator==(const ComplexMatrix &other) const = default;

   private:
    std::size_t dim_ = 0;
    std::vector<Complex> entries_;
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix &b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix &b);
ComplexMatrix operator*(const ComplexMatrix &a, const ComplexMatrix &b);
ComplexMatrix operator*(Complex scale, ComplexMatrix m);
std::vector<Complex> operator*(const ComplexMatrix &m, std::span<const Complex> v);

/// Largest entrywise magnitude of a - b.
double max_abs_diff(const ComplexMatrix &a, const ComplexMatrix &b);

/// Kronecker product. Block (i, j) of the result is a(i, j) * b.
ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b);

/// Outer product |v><v|.
ComplexMatrix outer(std::span<const Complex> v);

ComplexMatrix pauli_x();
ComplexMatrix pauli_y();
ComplexMatrix pauli_z();

struct Eigensystem {
    /// Sorted descending.
    std::vector<double> values;
    /// Column k of `vectors` is the eigenvector for values[k].
    ComplexMatrix vectors;
    int sweeps = 0;
};

/// Cyclic complex Jacobi diagonalization of a Hermitian matrix. Iterates
/// until the off-diagonal Frobenius norm drops below 1e-14 (relative to the
/// matrix scale when that exceeds one) or 100 sweeps elapse.
Eigensystem hermitian_eigensystem(const ComplexMatrix &m);

/// All eigenvalues of a Hermitian matrix, sorted descending.
std::vector<double> hermitian_eigenvalues(const ComplexMatrix &m);

/// Normalized amplitude vector over a tensor product of labeled qubits.
/// Factor 0 is the most significant (leftmost) index, so the basis order
/// of two factors is {00, 01, 10, 11} with 0 = up and 1 = down.
class PureState {
   public:
    PureState(std::vector<std::string> labels, std::vector<Complex> amps);

    std::size_t num_factors() const {
        return labels_.size();
    }
    std::size_t size() const {
        return amps_.size();
    }
    const std::vector<std::string> &labels() const {
        return labels_;
    }
    std::span<const Complex> amps() const {
        return amps_;
    }
    Complex amp(std::size_t index) const {
        return amps_[index];
    }
    /// Amplitude of a basis state given one bit per factor (0 = up).
    Complex amp(std::initializer_list<int> bits) const;

    /// Position of a labeled factor; throws std::invalid_argument if absent.
    std::size_t factor_index(const std::string &label) const;
    bool has_factor(const std::string &label) const;

    double norm() const;

   private:
    std::vector<std::string> labels_;
    std::vector<Complex> amps_;
};

/// Reduced operator on the kept factors (in increasing factor order).
ComplexMatrix partial_trace(const PureState &s, std::span<const std::size_t> keep);

/// Reduced operator of a multi-qubit density operator; `num_factors` qubits
/// with factor 0 most significant.
ComplexMatrix partial_trace(const ComplexMatrix &rho, std::size_t num_factors,
                            std::span<const std::size_t> keep);

/// Validated two-qubit state on A (x) B: Hermitian, unit trace and PSD.
class DensityMatrix {
   public:
    explicit DensityMatrix(ComplexMatrix m);

    static DensityMatrix from_pure(const PureState &s);
    static DensityMatrix maximally_mixed();

    const ComplexMatrix &matrix() const {
        return m_;
    }
    Complex operator()(std::size_t row, std::size_t col) const {
        return m_(row, col);
    }
    double purity() const;

    /// Single-qubit reductions.
    ComplexMatrix reduced_a() const;
    ComplexMatrix reduced_b() const;

   private:
    ComplexMatrix m_;
};

/// Transposes the second (B) factor in the computational product basis.
ComplexMatrix partial_transpose(const ComplexMatrix &rho);
ComplexMatrix partial_transpose(const DensityMatrix &rho);

}  // namespace qdl

#endif
