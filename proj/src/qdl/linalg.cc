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

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace qdl {

namespace {

void require_same_dim(const ComplexMatrix &a, const ComplexMatrix &b) {
    if (a.dim() != b.dim()) {
        throw DimensionError("matrix dimensions differ: " + std::to_string(a.dim()) + " vs " +
                             std::to_string(b.dim()));
    }
}

void require_dim(std::size_t dim) {
    if (dim == 0 || dim > kMaxDim) {
        throw DimensionError("matrix dimension " + std::to_string(dim) + " outside [1, " +
                             std::to_string(kMaxDim) + "]");
    }
}

bool is_finite(Complex z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

double off_diagonal_norm(const ComplexMatrix &a) {
    double sum = 0;
    for (std::size_t i = 0; i < a.dim(); ++i) {
        for (std::size_t j = 0; j < a.dim(); ++j) {
            if (i != j) {
                sum += std::norm(a(i, j));
            }
        }
    }
    return std::sqrt(sum);
}

double frobenius_norm(const ComplexMatrix &a) {
    double sum = 0;
    for (Complex z : a.entries()) {
        sum += std::norm(z);
    }
    return std::sqrt(sum);
}

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t dim) : dim_(dim), entries_(dim * dim) {
    require_dim(dim);
}

ComplexMatrix::ComplexMatrix(std::size_t dim, std::vector<Complex> entries)
    : dim_(dim), entries_(std::move(entries)) {
    require_dim(dim);
    if (entries_.size() != dim * dim) {
        throw DimensionError("expected " + std::to_string(dim * dim) + " entries, got " +
                             std::to_string(entries_.size()));
    }
    if (!all_finite()) {
        throw ContractError("matrix has non-finite entries");
    }
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows)
    : dim_(rows.size()) {
    require_dim(dim_);
    entries_.reserve(dim_ * dim_);
    for (const auto &row : rows) {
        if (row.size() != dim_) {
            throw DimensionError("matrix rows must all have length " + std::to_string(dim_));
        }
        entries_.insert(entries_.end(), row.begin(), row.end());
    }
    if (!all_finite()) {
        throw ContractError("matrix has non-finite entries");
    }
}

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
    ComplexMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        m(i, i) = 1;
    }
    return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> values) {
    ComplexMatrix m(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) {
        m(i, i) = values[i];
    }
    return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix out(dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
        for (std::size_t j = 0; j < dim_; ++j) {
            out(j, i) = std::conj((*this)(i, j));
        }
    }
    return out;
}

ComplexMatrix ComplexMatrix::transpose() const {
    ComplexMatrix out(dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
        for (std::size_t j = 0; j < dim_; ++j) {
            out(j, i) = (*this)(i, j);
        }
    }
    return out;
}

Complex ComplexMatrix::trace() const {
    Complex sum = 0;
    for (std::size_t i = 0; i < dim_; ++i) {
        sum += (*this)(i, i);
    }
    return sum;
}

bool ComplexMatrix::all_finite() const {
    return std::all_of(entries_.begin(), entries_.end(), is_finite);
}

double ComplexMatrix::hermiticity_defect() const {
    double worst = 0;
    for (std::size_t i = 0; i < dim_; ++i) {
        for (std::size_t j = i; j < dim_; ++j) {
            worst = std::max(worst, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
        }
    }
    return worst;
}

ComplexMatrix &ComplexMatrix::operator+=(const ComplexMatrix &other) {
    require_same_dim(*this, other);
    for (std::size_t k = 0; k < entries_.size(); ++k) {
        entries_[k] += other.entries_[k];
    }
    return *this;
}

ComplexMatrix &ComplexMatrix::operator-=(const ComplexMatrix &other) {
    require_same_dim(*this, other);
    for (std::size_t k = 0; k < entries_.size(); ++k) {
        entries_[k] -= other.entries_[k];
    }
    return *this;
}

ComplexMatrix &ComplexMatrix::operator*=(Complex scale) {
    for (auto &z : entries_) {
        z *= scale;
    }
    return *this;
}

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix &b) {
    a += b;
    return a;
}

ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix &b) {
    a -= b;
    return a;
}

ComplexMatrix operator*(Complex scale, ComplexMatrix m) {
    m *= scale;
    return m;
}

ComplexMatrix operator*(const ComplexMatrix &a, const ComplexMatrix &b) {
    require_same_dim(a, b);
    const std::size_t n = a.dim();
    ComplexMatrix out(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < n; ++k) {
            const Complex aik = a(i, k);
            if (aik == Complex{}) {
                continue;
            }
            for (std::size_t j = 0; j < n; ++j) {
                out(i, j) += aik * b(k, j);
            }
        }
    }
    return out;
}

std::vector<Complex> operator*(const ComplexMatrix &m, std::span<const Complex> v) {
    if (v.size() != m.dim()) {
        throw DimensionError("vector length does not match matrix dimension");
    }
    std::vector<Complex> out(m.dim());
    for (std::size_t i = 0; i < m.dim(); ++i) {
        for (std::size_t j = 0; j < m.dim(); ++j) {
            out[i] += m(i, j) * v[j];
        }
    }
    return out;
}

double max_abs_diff(const ComplexMatrix &a, const ComplexMatrix &b) {
    require_same_dim(a, b);
    double worst = 0;
    for (std::size_t k = 0; k < a.entries().size(); ++k) {
        worst = std::max(worst, std::abs(a.entries()[k] - b.entries()[k]));
    }
    return worst;
}

ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b) {
    const std::size_t n = a.dim() * b.dim();
    if (n > kMaxDim) {
        throw DimensionError("kron result dimension " + std::to_string(n) + " exceeds " +
                             std::to_string(kMaxDim));
    }
    if (!a.all_finite() || !b.all_finite()) {
        throw ContractError("kron of non-finite matrix");
    }
    ComplexMatrix out(n);
    for (std::size_t i = 0; i < a.dim(); ++i) {
        for (std::size_t j = 0; j < a.dim(); ++j) {
            for (std::size_t k = 0; k < b.dim(); ++k) {
                for (std::size_t l = 0; l < b.dim(); ++l) {
                    out(i * b.dim() + k, j * b.dim() + l) = a(i, j) * b(k, l);
                }
            }
        }
    }
    return out;
}

ComplexMatrix outer(std::span<const Complex> v) {
    ComplexMatrix out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        for (std::size_t j = 0; j < v.size(); ++j) {
            out(i, j) = v[i] * std::conj(v[j]);
        }
    }
    return out;
}

ComplexMatrix pauli_x() {
    return {{0, 1}, {1, 0}};
}

ComplexMatrix pauli_y() {
    return {{0, Complex{0, -1}}, {Complex{0, 1}, 0}};
}

ComplexMatrix pauli_z() {
    return {{1, 0}, {0, -1}};
}

Eigensystem hermitian_eigensystem(const ComplexMatrix &m) {
    if (!m.all_finite()) {
        throw ContractError("eigensolver input has non-finite entries");
    }
    if (m.hermiticity_defect() > kPsdTol) {
        throw ContractError("eigensolver input is not Hermitian (defect " +
                            std::to_string(m.hermiticity_defect()) + ")");
    }
    constexpr int kMaxSweeps = 100;
    const std::size_t n = m.dim();
    const double threshold = 1e-14 * std::max(1.0, frobenius_norm(m));

    ComplexMatrix a = m;
    // Hermitize so rotations act on an exactly Hermitian matrix.
    for (std::size_t i = 0; i < n; ++i) {
        a(i, i) = a(i, i).real();
        for (std::size_t j = i + 1; j < n; ++j) {
            Complex avg = 0.5 * (a(i, j) + std::conj(a(j, i)));
            a(i, j) = avg;
            a(j, i) = std::conj(avg);
        }
    }
    ComplexMatrix v = ComplexMatrix::identity(n);

    int sweep = 0;
    for (; sweep < kMaxSweeps && off_diagonal_norm(a) >= threshold; ++sweep) {
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double g = std::abs(a(p, q));
                if (g == 0) {
                    continue;
                }
                const Complex phase = a(p, q) / g;
                const double tau = (a(q, q).real() - a(p, p).real()) / (2 * g);
                const double t = (tau >= 0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1 + tau * tau));
                const double c = 1 / std::sqrt(1 + t * t);
                const double s = t * c;
                // J = diag(1, conj(phase)) * [[c, s], [-s, c]] on the (p, q) plane.
                const Complex jpp = c;
                const Complex jpq = s;
                const Complex jqp = -s * std::conj(phase);
                const Complex jqq = c * std::conj(phase);

                // a <- a J
                for (std::size_t k = 0; k < n; ++k) {
                    const Complex akp = a(k, p);
                    const Complex akq = a(k, q);
                    a(k, p) = akp * jpp + akq * jqp;
                    a(k, q) = akp * jpq + akq * jqq;
                }
                // a <- J^dagger a
                for (std::size_t k = 0; k < n; ++k) {
                    const Complex apk = a(p, k);
                    const Complex aqk = a(q, k);
                    a(p, k) = std::conj(jpp) * apk + std::conj(jqp) * aqk;
                    a(q, k) = std::conj(jpq) * apk + std::conj(jqq) * aqk;
                }
                a(p, q) = 0;
                a(q, p) = 0;
                a(p, p) = a(p, p).real();
                a(q, q) = a(q, q).real();

                for (std::size_t k = 0; k < n; ++k) {
                    const Complex vkp = v(k, p);
                    const Complex vkq = v(k, q);
                    v(k, p) = vkp * jpp + vkq * jqp;
                    v(k, q) = vkp * jpq + vkq * jqq;
                }
            }
        }
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
        return a(x, x).real() > a(y, y).real();
    });

    Eigensystem result;
    result.sweeps = sweep;
    result.values.reserve(n);
    result.vectors = ComplexMatrix(n);
    for (std::size_t k = 0; k < n; ++k) {
        result.values.push_back(a(order[k], order[k]).real());
        for (std::size_t row = 0; row < n; ++row) {
            result.vectors(row, k) = v(row, order[k]);
        }
    }
    return result;
}

std::vector<double> hermitian_eigenvalues(const ComplexMatrix &m) {
    return hermitian_eigensystem(m).values;
}

PureState::PureState(std::vector<std::string> labels, std::vector<Complex> amps)
    : labels_(std::move(labels)), amps_(std::move(amps)) {
    if (labels_.empty()) {
        throw std::invalid_argument("pure state needs at least one factor");
    }
    if ((std::size_t{1} << labels_.size()) > kMaxDim) {
        throw DimensionError("pure state with " + std::to_string(labels_.size()) +
                             " qubits exceeds dimension " + std::to_string(kMaxDim));
    }
    if (amps_.size() != (std::size_t{1} << labels_.size())) {
        throw DimensionError("amplitude count does not match number of qubits");
    }
    for (std::size_t i = 0; i < labels_.size(); ++i) {
        for (std::size_t j = i + 1; j < labels_.size(); ++j) {
            if (labels_[i] == labels_[j]) {
                throw std::invalid_argument("duplicate factor label '" + labels_[i] + "'");
            }
        }
    }
    if (!std::all_of(amps_.begin(), amps_.end(), is_finite)) {
        throw ContractError("pure state has non-finite amplitudes");
    }
    if (std::abs(norm() - 1) > kStructureTol) {
        throw ContractError("pure state is not normalized (norm " + std::to_string(norm()) + ")");
    }
}

Complex PureState::amp(std::initializer_list<int> bits) const {
    if (bits.size() != labels_.size()) {
        throw std::invalid_argument("basis label needs one bit per factor");
    }
    std::size_t index = 0;
    for (int b : bits) {
        index = (index << 1) | static_cast<std::size_t>(b & 1);
    }
    return amps_[index];
}

std::size_t PureState::factor_index(const std::string &label) const {
    auto it = std::find(labels_.begin(), labels_.end(), label);
    if (it == labels_.end()) {
        throw std::invalid_argument("state has no factor labeled '" + label + "'");
    }
    return static_cast<std::size_t>(it - labels_.begin());
}

bool PureState::has_factor(const std::string &label) const {
    return std::find(labels_.begin(), labels_.end(), label) != labels_.end();
}

double PureState::norm() const {
    double sum = 0;
    for (Complex z : amps_) {
        sum += std::norm(z);
    }
    return std::sqrt(sum);
}

namespace {

std::vector<std::size_t> checked_keep(std::span<const std::size_t> keep, std::size_t num_factors) {
    std::vector<std::size_t> sorted(keep.begin(), keep.end());
    std::sort(sorted.begin(), sorted.end());
    if (sorted.empty()) {
        throw std::invalid_argument("partial trace must keep at least one factor");
    }
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw std::invalid_argument("partial trace keep set has duplicates");
    }
    if (sorted.back() >= num_factors) {
        throw std::invalid_argument("partial trace keeps factor " + std::to_string(sorted.back()) +
                                    " of " + std::to_string(num_factors));
    }
    return sorted;
}

/// Splits a full basis index into (kept, traced) sub-indices.
std::pair<std::size_t, std::size_t> split_index(std::size_t index, std::size_t num_factors,
                                                const std::vector<bool> &is_kept) {
    std::size_t kept = 0;
    std::size_t traced = 0;
    for (std::size_t f = 0; f < num_factors; ++f) {
        const std::size_t bit = (index >> (num_factors - 1 - f)) & 1;
        if (is_kept[f]) {
            kept = (kept << 1) | bit;
        } else {
            traced = (traced << 1) | bit;
        }
    }
    return {kept, traced};
}

}  // namespace

ComplexMatrix partial_trace(const PureState &s, std::span<const std::size_t> keep) {
    const std::size_t n = s.num_factors();
    const auto kept = checked_keep(keep, n);
    std::vector<bool> is_kept(n, false);
    for (auto f : kept) {
        is_kept[f] = true;
    }
    const std::size_t kept_dim = std::size_t{1} << kept.size();
    const std::size_t traced_dim = s.size() / kept_dim;

    // amplitudes reshaped to kept_dim x traced_dim; result is M M^dagger.
    std::vector<Complex> reshaped(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
        auto [k, t] = split_index(i, n, is_kept);
        reshaped[k * traced_dim + t] = s.amp(i);
    }
    ComplexMatrix out(kept_dim);
    for (std::size_t i = 0; i < kept_dim; ++i) {
        for (std::size_t j = 0; j < kept_dim; ++j) {
            Complex sum = 0;
            for (std::size_t t = 0; t < traced_dim; ++t) {
                sum += reshaped[i * traced_dim + t] * std::conj(reshaped[j * traced_dim + t]);
            }
            out(i, j) = sum;
        }
    }
    return out;
}

ComplexMatrix partial_trace(const ComplexMatrix &rho, std::size_t num_factors,
                            std::span<const std::size_t> keep) {
    if ((std::size_t{1} << num_factors) != rho.dim()) {
        throw DimensionError("operator dimension does not match factor count");
    }
    const auto kept = checked_keep(keep, num_factors);
    std::vector<bool> is_kept(num_factors, false);
    for (auto f : kept) {
        is_kept[f] = true;
    }
    ComplexMatrix out(std::size_t{1} << kept.size());
    for (std::size_t i = 0; i < rho.dim(); ++i) {
        auto [ki, ti] = split_index(i, num_factors, is_kept);
        for (std::size_t j = 0; j < rho.dim(); ++j) {
            auto [kj, tj] = split_index(j, num_factors, is_kept);
            if (ti == tj) {
                out(ki, kj) += rho(i, j);
            }
        }
    }
    return out;
}

DensityMatrix::DensityMatrix(ComplexMatrix m) : m_(std::move(m)) {
    if (m_.dim() != 4) {
        throw DimensionError("two-qubit density matrix must be 4x4");
    }
    if (!m_.all_finite()) {
        throw ContractError("density matrix has non-finite entries");
    }
    if (m_.hermiticity_defect() > kStructureTol) {
        throw ContractError("density matrix is not Hermitian");
    }
    if (std::abs(m_.trace() - Complex{1}) > kStructureTol) {
        throw ContractError("density matrix trace differs from 1");
    }
    if (hermitian_eigenvalues(m_).back() < -kPsdTol) {
        throw ContractError("density matrix has a negative eigenvalue");
    }
}

DensityMatrix DensityMatrix::from_pure(const PureState &s) {
    if (s.num_factors() != 2) {
        throw DimensionError("from_pure expects a two-qubit state");
    }
    return DensityMatrix(outer(s.amps()));
}

DensityMatrix DensityMatrix::maximally_mixed() {
    return DensityMatrix(0.25 * ComplexMatrix::identity(4));
}

double DensityMatrix::purity() const {
    return (m_ * m_).trace().real();
}

ComplexMatrix DensityMatrix::reduced_a() const {
    const std::size_t keep[] = {0};
    return partial_trace(m_, 2, keep);
}

ComplexMatrix DensityMatrix::reduced_b() const {
    const std::size_t keep[] = {1};
    return partial_trace(m_, 2, keep);
}

ComplexMatrix partial_transpose(const ComplexMatrix &rho) {
    if (rho.dim() != 4) {
        throw DimensionError("partial transpose is defined here for 2x2 systems only");
    }
    ComplexMatrix out(4);
    for (std::size_t m = 0; m < 2; ++m) {
        for (std::size_t n = 0; n < 2; ++n) {
            for (std::size_t mp = 0; mp < 2; ++mp) {
                for (std::size_t np = 0; np < 2; ++np) {
                    out(2 * m + n, 2 * mp + np) = rho(2 * m + np, 2 * mp + n);
                }
            }
        }
    }
    return out;
}

ComplexMatrix partial_transpose(const DensityMatrix &rho) {
    return partial_transpose(rho.matrix());
}

}  // namespace qdl
