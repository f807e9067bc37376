// Copyright 2026 The quditsim Authors
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

#ifndef QUDITSIM_DENSE_H
#define QUDITSIM_DENSE_H

#include <complex>
#include <cstddef>
#include <map>
#include <vector>

#include "quditsim/circuit.h"

namespace quditsim {

using Complex = std::complex<double>;
using CVector = std::vector<Complex>;

inline constexpr size_t kDefaultAmplitudeCap = 1'000'000;

/// Throws CapExceeded when d^n exceeds `cap`; otherwise returns d^n.
size_t checked_dimension(int d, int n, size_t cap = kDefaultAmplitudeCap);

/// Square complex matrix, row-major.
class DenseMatrix {
   public:
    DenseMatrix() = default;
    explicit DenseMatrix(size_t dim);

    static DenseMatrix identity(size_t dim);
    static DenseMatrix diagonal(const CVector &entries);

    size_t dim() const {
        return dim_;
    }
    Complex &operator()(size_t r, size_t c) {
        return data_[r * dim_ + c];
    }
    Complex operator()(size_t r, size_t c) const {
        return data_[r * dim_ + c];
    }

    DenseMatrix operator*(const DenseMatrix &rhs) const;
    DenseMatrix operator*(Complex scalar) const;
    CVector operator*(const CVector &v) const;
    DenseMatrix adjoint() const;
    DenseMatrix pow(int e) const;

    double max_abs_diff(const DenseMatrix &other) const;
    bool is_unitary(double tol) const;
    /// Returns c when *this ≈ c·other for a scalar c; nullopt-like NaN otherwise.
    Complex proportionality(const DenseMatrix &other, double tol) const;

   private:
    size_t dim_ = 0;
    std::vector<Complex> data_;
};

namespace dense {

DenseMatrix x(int d);
DenseMatrix z(int d);
DenseMatrix p(int d);
DenseMatrix h(int d);
/// The qudit T gate M_d.
DenseMatrix t(int d);

}  // namespace dense

/// Brute-force statevector over (Z_d)^n. Qudit 0 is the most significant digit
/// of the basis index, the same convention as StabilizerState::dense_vector.
class DenseState {
   public:
    /// |0…0⟩
    DenseState(int d, int n, size_t cap = kDefaultAmplitudeCap);
    DenseState(int d, int n, CVector amplitudes, size_t cap = kDefaultAmplitudeCap);

    int d() const {
        return d_;
    }
    int n() const {
        return n_;
    }
    const CVector &amplitudes() const {
        return amps_;
    }
    CVector &amplitudes() {
        return amps_;
    }

    void apply_single(int q, const DenseMatrix &u);
    void apply_diagonal(int q, const CVector &diag);
    void apply_csum(int control, int target, int power = 1);
    void apply_gate(const Gate &gate);

    /// |v⟩⟨v| on qudit q, unnormalized.
    void project(int q, int v);
    double norm() const;
    void normalize();

    Complex inner(const DenseState &other) const;
    size_t stride(int q) const;

   private:
    int d_;
    int n_;
    CVector amps_;
};

/// Applies a gate (X, Z, P, H, CSUM, T = M_d) to a copy of the state.
DenseState apply_gate_dense(const DenseState &state, const Gate &gate);

/// Marginal Born distribution over the listed qudits, keyed by outcome tuple.
std::map<std::vector<int>, double> exact_distribution(const DenseState &state, const std::vector<int> &measured_qudits);

/// Exact distribution over all MEASURE outcomes of a circuit started from |0…0⟩,
/// branching on every mid-circuit measurement.
std::map<std::vector<int>, double> dense_circuit_distribution(const Circuit &circuit, size_t cap = kDefaultAmplitudeCap);

/// Kronecker product of state vectors.
CVector kron(const CVector &a, const CVector &b);

}  // namespace quditsim

#endif
