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

#include "quditsim/dense.h"

#include <cmath>
#include <limits>
#include <numbers>

#include "quditsim/error.h"
#include "quditsim/exact_phase.h"
#include "quditsim/field.h"
#include "quditsim/magic.h"

namespace quditsim {

size_t checked_dimension(int d, int n, size_t cap) {
    require_odd_prime(d);
    if (n < 0) {
        throw Error(ErrorCode::InvalidArgument, "negative qudit count");
    }
    size_t dim = 1;
    for (int i = 0; i < n; i++) {
        if (dim > cap / static_cast<size_t>(d)) {
            throw Error(ErrorCode::CapExceeded,
                        std::to_string(d) + "^" + std::to_string(n) + " amplitudes exceed cap " + std::to_string(cap));
        }
        dim *= static_cast<size_t>(d);
    }
    return dim;
}

DenseMatrix::DenseMatrix(size_t dim) : dim_(dim), data_(dim * dim) {
}

DenseMatrix DenseMatrix::identity(size_t dim) {
    DenseMatrix m(dim);
    for (size_t i = 0; i < dim; i++) {
        m(i, i) = 1;
    }
    return m;
}

DenseMatrix DenseMatrix::diagonal(const CVector &entries) {
    DenseMatrix m(entries.size());
    for (size_t i = 0; i < entries.size(); i++) {
        m(i, i) = entries[i];
    }
    return m;
}

DenseMatrix DenseMatrix::operator*(const DenseMatrix &rhs) const {
    DenseMatrix out(dim_);
    for (size_t i = 0; i < dim_; i++) {
        for (size_t k = 0; k < dim_; k++) {
            Complex a = (*this)(i, k);
            if (a == Complex(0)) {
                continue;
            }
            for (size_t j = 0; j < dim_; j++) {
                out(i, j) += a * rhs(k, j);
            }
        }
    }
    return out;
}

DenseMatrix DenseMatrix::operator*(Complex scalar) const {
    DenseMatrix out = *this;
    for (auto &v : out.data_) {
        v *= scalar;
    }
    return out;
}

CVector DenseMatrix::operator*(const CVector &v) const {
    CVector out(dim_);
    for (size_t i = 0; i < dim_; i++) {
        for (size_t j = 0; j < dim_; j++) {
            out[i] += (*this)(i, j) * v[j];
        }
    }
    return out;
}

DenseMatrix DenseMatrix::adjoint() const {
    DenseMatrix out(dim_);
    for (size_t i = 0; i < dim_; i++) {
        for (size_t j = 0; j < dim_; j++) {
            out(j, i) = std::conj((*this)(i, j));
        }
    }
    return out;
}

DenseMatrix DenseMatrix::pow(int e) const {
    if (e < 0) {
        return adjoint().pow(-e);
    }
    DenseMatrix out = identity(dim_);
    for (int i = 0; i < e; i++) {
        out = out * *this;
    }
    return out;
}

double DenseMatrix::max_abs_diff(const DenseMatrix &other) const {
    double worst = 0;
    for (size_t i = 0; i < data_.size(); i++) {
        worst = std::max(worst, std::abs(data_[i] - other.data_[i]));
    }
    return worst;
}

bool DenseMatrix::is_unitary(double tol) const {
    return ((*this) * adjoint()).max_abs_diff(identity(dim_)) < tol;
}

Complex DenseMatrix::proportionality(const DenseMatrix &other, double tol) const {
    constexpr double nan = std::numeric_limits<double>::quiet_NaN();
    size_t pivot = 0;
    for (size_t i = 0; i < data_.size(); i++) {
        if (std::abs(other.data_[i]) > std::abs(other.data_[pivot])) {
            pivot = i;
        }
    }
    if (data_.empty() || std::abs(other.data_[pivot]) < tol) {
        return {nan, nan};
    }
    Complex c = data_[pivot] / other.data_[pivot];
    if (max_abs_diff(other * c) > tol) {
        return {nan, nan};
    }
    return c;
}

namespace dense {

DenseMatrix x(int d) {
    DenseMatrix m(d);
    for (int k = 0; k < d; k++) {
        m(mod(k + 1, d), k) = 1;
    }
    return m;
}

DenseMatrix z(int d) {
    CVector diag(d);
    for (int k = 0; k < d; k++) {
        diag[k] = std::polar(1.0, 2 * std::numbers::pi * k / d);
    }
    return DenseMatrix::diagonal(diag);
}

DenseMatrix p(int d) {
    CVector diag(d);
    for (int k = 0; k < d; k++) {
        diag[k] = std::polar(1.0, 2 * std::numbers::pi * mod(static_cast<int64_t>(k) * (k - 1) / 2, d) / d);
    }
    return DenseMatrix::diagonal(diag);
}

DenseMatrix h(int d) {
    DenseMatrix m(d);
    double norm = 1 / std::sqrt(static_cast<double>(d));
    for (int j = 0; j < d; j++) {
        for (int k = 0; k < d; k++) {
            m(j, k) = std::polar(norm, 2 * std::numbers::pi * mod(static_cast<int64_t>(j) * k, d) / d);
        }
    }
    return m;
}

DenseMatrix t(int d) {
    return build_M(d).dense();
}

}  // namespace dense

DenseState::DenseState(int d, int n, size_t cap) : d_(d), n_(n), amps_(checked_dimension(d, n, cap)) {
    amps_[0] = 1;
}

DenseState::DenseState(int d, int n, CVector amplitudes, size_t cap) : d_(d), n_(n), amps_(std::move(amplitudes)) {
    if (amps_.size() != checked_dimension(d, n, cap)) {
        throw Error(ErrorCode::InvalidArgument, "amplitude vector length is not d^n");
    }
}

size_t DenseState::stride(int q) const {
    if (q < 0 || q >= n_) {
        throw Error(ErrorCode::IndexOutOfRange, "qudit " + std::to_string(q) + " out of range");
    }
    size_t s = 1;
    for (int i = q + 1; i < n_; i++) {
        s *= static_cast<size_t>(d_);
    }
    return s;
}

void DenseState::apply_single(int q, const DenseMatrix &u) {
    size_t s = stride(q);
    size_t block = s * static_cast<size_t>(d_);
    CVector in(d_);
    for (size_t base = 0; base < amps_.size(); base += block) {
        for (size_t off = 0; off < s; off++) {
            for (int j = 0; j < d_; j++) {
                in[j] = amps_[base + off + j * s];
            }
            for (int j = 0; j < d_; j++) {
                Complex acc = 0;
                for (int k = 0; k < d_; k++) {
                    acc += u(j, k) * in[k];
                }
                amps_[base + off + j * s] = acc;
            }
        }
    }
}

void DenseState::apply_diagonal(int q, const CVector &diag) {
    size_t s = stride(q);
    for (size_t i = 0; i < amps_.size(); i++) {
        amps_[i] *= diag[(i / s) % d_];
    }
}

void DenseState::apply_csum(int control, int target, int power) {
    if (control == target) {
        throw Error(ErrorCode::SameQudit, "CSUM control and target coincide");
    }
    size_t sc = stride(control);
    size_t st = stride(target);
    CVector out(amps_.size());
    for (size_t i = 0; i < amps_.size(); i++) {
        int c = static_cast<int>((i / sc) % d_);
        int t = static_cast<int>((i / st) % d_);
        int nt = mod(t + static_cast<int64_t>(power) * c, d_);
        out[i + (static_cast<int64_t>(nt) - t) * static_cast<int64_t>(st)] = amps_[i];
    }
    amps_ = std::move(out);
}

void DenseState::apply_gate(const Gate &gate) {
    switch (gate.kind) {
        case GateKind::X:
            apply_single(gate.q0, dense::x(d_).pow(mod(gate.power, d_)));
            break;
        case GateKind::Z:
            apply_single(gate.q0, dense::z(d_).pow(mod(gate.power, d_)));
            break;
        case GateKind::P:
            apply_single(gate.q0, dense::p(d_).pow(mod(gate.power, d_)));
            break;
        case GateKind::H:
            apply_single(gate.q0, dense::h(d_));
            break;
        case GateKind::CSUM:
            apply_csum(gate.q0, gate.q1, gate.power);
            break;
        case GateKind::T:
            apply_single(gate.q0, dense::t(d_));
            break;
        case GateKind::Measure:
            throw Error(ErrorCode::InvalidArgument, "measurement is not a unitary gate");
    }
}

void DenseState::project(int q, int v) {
    size_t s = stride(q);
    for (size_t i = 0; i < amps_.size(); i++) {
        if (static_cast<int>((i / s) % d_) != v) {
            amps_[i] = 0;
        }
    }
}

double DenseState::norm() const {
    double acc = 0;
    for (const auto &a : amps_) {
        acc += std::norm(a);
    }
    return std::sqrt(acc);
}

void DenseState::normalize() {
    double n = norm();
    if (n == 0) {
        throw Error(ErrorCode::DegenerateNorm, "cannot normalize the zero vector");
    }
    for (auto &a : amps_) {
        a /= n;
    }
}

Complex DenseState::inner(const DenseState &other) const {
    Complex acc = 0;
    for (size_t i = 0; i < amps_.size(); i++) {
        acc += std::conj(amps_[i]) * other.amps_[i];
    }
    return acc;
}

DenseState apply_gate_dense(const DenseState &state, const Gate &gate) {
    DenseState out = state;
    out.apply_gate(gate);
    return out;
}

std::map<std::vector<int>, double> exact_distribution(const DenseState &state, const std::vector<int> &measured_qudits) {
    std::vector<size_t> strides;
    for (int q : measured_qudits) {
        strides.push_back(state.stride(q));
    }
    std::map<std::vector<int>, double> dist;
    std::vector<int> key(measured_qudits.size());
    const auto &amps = state.amplitudes();
    for (size_t i = 0; i < amps.size(); i++) {
        double p = std::norm(amps[i]);
        if (p == 0) {
            continue;
        }
        for (size_t m = 0; m < strides.size(); m++) {
            key[m] = static_cast<int>((i / strides[m]) % state.d());
        }
        dist[key] += p;
    }
    return dist;
}

namespace {

void branch(const Circuit &circuit, size_t pos, DenseState state, double weight, std::vector<int> &outcomes,
            std::map<std::vector<int>, double> &dist) {
    for (; pos < circuit.gates.size(); pos++) {
        const Gate &g = circuit.gates[pos];
        if (g.kind != GateKind::Measure) {
            state.apply_gate(g);
            continue;
        }
        for (int v = 0; v < circuit.d; v++) {
            DenseState child = state;
            child.project(g.q0, v);
            double n = child.norm();
            double p = n * n;
            if (p < 1e-14) {
                continue;
            }
            for (auto &a : child.amplitudes()) {
                a /= n;
            }
            outcomes.push_back(v);
            branch(circuit, pos + 1, std::move(child), weight * p, outcomes, dist);
            outcomes.pop_back();
        }
        return;
    }
    dist[outcomes] += weight;
}

}  // namespace

std::map<std::vector<int>, double> dense_circuit_distribution(const Circuit &circuit, size_t cap) {
    std::map<std::vector<int>, double> dist;
    std::vector<int> outcomes;
    branch(circuit, 0, DenseState(circuit.d, circuit.n, cap), 1.0, outcomes, dist);
    return dist;
}

CVector kron(const CVector &a, const CVector &b) {
    CVector out;
    out.reserve(a.size() * b.size());
    for (const auto &x : a) {
        for (const auto &y : b) {
            out.push_back(x * y);
        }
    }
    return out;
}

}  // namespace quditsim
