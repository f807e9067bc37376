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

#include "quditsim/clifford.h"

#include "quditsim/error.h"
#include "quditsim/gauss_sum.h"

namespace quditsim {

namespace {

struct Entries {
    int a, b, c, dd;
};

Entries entries(const FpMatrix &f) {
    return {f(0, 0), f(0, 1), f(1, 0), f(1, 1)};
}

FpMatrix make_f(int d, int a, int b, int c, int dd) {
    FpMatrix f(d, 2, 2);
    f(0, 0) = mod(a, d);
    f(0, 1) = mod(b, d);
    f(1, 0) = mod(c, d);
    f(1, 1) = mod(dd, d);
    return f;
}

}  // namespace

WeylIndex::WeylIndex(const FpScalar &x_, const FpScalar &z_) : d(x_.modulus()), x(x_.value()), z(z_.value()) {
    if (x_.modulus() != z_.modulus()) {
        throw Error(ErrorCode::InvalidArgument, "Weyl index components from different fields");
    }
}

WeylIndex WeylIndex::operator+(const WeylIndex &other) const {
    return WeylIndex(FpScalar(x + other.x, d), FpScalar(z + other.z, d));
}

int symplectic_product(const WeylIndex &a, const WeylIndex &b) {
    return mod(static_cast<int64_t>(a.z) * b.x - static_cast<int64_t>(a.x) * b.z, a.d);
}

std::pair<WeylIndex, ExactPhase> weyl_compose(const WeylIndex &a, const WeylIndex &b) {
    return {a + b, ExactPhase::tau(a.d, symplectic_product(a, b))};
}

DenseMatrix dense_weyl(const WeylIndex &a) {
    int d = a.d;
    DenseMatrix m(d);
    Complex pre = ExactPhase::tau(d, static_cast<int64_t>(a.x) * a.z).to_complex();
    // τ^{xz} X^x Z^z |k⟩ = τ^{xz} ω^{zk} |k + x⟩
    for (int k = 0; k < d; k++) {
        m(mod(k + a.x, d), k) = pre * ExactPhase::omega(d, static_cast<int64_t>(a.z) * k).to_complex();
    }
    return m;
}

WeylIndex apply_symplectic(const FpMatrix &f, const WeylIndex &a) {
    int d = a.d;
    return WeylIndex(FpScalar(static_cast<int64_t>(f(0, 0)) * a.x + static_cast<int64_t>(f(0, 1)) * a.z, d),
                     FpScalar(static_cast<int64_t>(f(1, 0)) * a.x + static_cast<int64_t>(f(1, 1)) * a.z, d));
}

CliffordElement::CliffordElement(FpMatrix f, WeylIndex chi, ExactPhase phase)
    : f_(std::move(f)), chi_(chi), phase_(phase) {
    if (f_.rows() != 2 || f_.cols() != 2 || f_.determinant() != 1) {
        throw Error(ErrorCode::InvalidArgument, "symplectic part must be 2x2 with determinant 1: " + f_.str());
    }
    if (chi_.d != f_.d() || phase_.d() != f_.d()) {
        throw Error(ErrorCode::InvalidArgument, "Clifford components from different dimensions");
    }
}

CliffordElement CliffordElement::identity(int d) {
    return CliffordElement(FpMatrix::identity(d, 2), WeylIndex::zero(d), ExactPhase::one(d));
}

CliffordElement CliffordElement::hadamard(int d) {
    // F = [[0, −1], [1, 0]]: ⟨j|U_F|k⟩ = d^{-1/2} τ^{2jk} = d^{-1/2} ω^{jk}.
    return CliffordElement(make_f(d, 0, -1, 1, 0), WeylIndex::zero(d), ExactPhase::one(d));
}

CliffordElement CliffordElement::phase_gate(int d) {
    Zd f{d};
    // P = D_{(0, −2̄)}·U_F with F = [[1, 0], [1, 1]]: τ^{k²} ω^{−2̄k} = ω^{2̄k(k−1)}.
    return CliffordElement(make_f(d, 1, 0, 1, 1), WeylIndex(FpScalar(0, d), FpScalar(f.neg(f.half()), d)),
                           ExactPhase::one(d));
}

CliffordElement CliffordElement::pauli_x(int d) {
    return CliffordElement(FpMatrix::identity(d, 2), WeylIndex(FpScalar(1, d), FpScalar(0, d)), ExactPhase::one(d));
}

CliffordElement CliffordElement::pauli_z(int d) {
    return CliffordElement(FpMatrix::identity(d, 2), WeylIndex(FpScalar(0, d), FpScalar(1, d)), ExactPhase::one(d));
}

CliffordElement CliffordElement::shear(int d, int gamma, const WeylIndex &chi) {
    return CliffordElement(make_f(d, 1, 0, gamma, 1), chi, ExactPhase::one(d));
}

bool CliffordElement::operator==(const CliffordElement &other) const {
    return f_ == other.f_ && chi_ == other.chi_ && phase_ == other.phase_;
}

ExactPhase weil_entry(const FpMatrix &f, int row, int col) {
    int d = f.d();
    Zd z{d};
    auto [a, b, c, dd] = entries(f);
    int j = mod(row, d);
    int k = mod(col, d);
    if (b != 0) {
        int binv = z.inv(b);
        int64_t e = z.mul(binv, z.reduce(static_cast<int64_t>(a) * k * k - 2LL * j * k + static_cast<int64_t>(dd) * j * j));
        return ExactPhase::tau(d, e) * ExactPhase::sqrt_d_power(d, -1);
    }
    if (j != z.mul(a, k)) {
        return ExactPhase::zero(d);
    }
    return ExactPhase::tau(d, z.reduce(static_cast<int64_t>(z.mul(a, c)) * k * k));
}

ExactPhase weil_cocycle(const FpMatrix &f1, const FpMatrix &f2) {
    int d = f1.d();
    Zd z{d};
    FpMatrix f12 = f1 * f2;
    // Compare ⟨0|U_{F1}U_{F2}|0⟩ with ⟨0|U_{F1F2}|0⟩; both are nonzero.
    ExactPhase target = weil_entry(f12, 0, 0);
    ExactPhase product(d);
    if (f1(0, 1) == 0) {
        // U_{F1}† |0⟩ ∝ |0⟩ with ⟨0|U_{F1}|0⟩ = 1.
        product = weil_entry(f2, 0, 0);
    } else if (f2(0, 1) == 0) {
        product = weil_entry(f1, 0, 0);
    } else {
        // Σ_l d^{-1} τ^{β̄1α1 l² + β̄2δ2 l²}
        int coeff = z.add(z.mul(z.inv(f1(0, 1)), f1(0, 0)), z.mul(z.inv(f2(0, 1)), f2(1, 1)));
        product = exp_sum_quadratic(d, z.mul(z.half(), coeff), 0) * ExactPhase::sqrt_d_power(d, -2);
    }
    // target is exactly 1 or d^{-1/2}.
    return product * ExactPhase::sqrt_d_power(d, -target.half_power());
}

CliffordElement clifford_compose(const CliffordElement &a, const CliffordElement &b) {
    // a·b = φa φb D_χa U_Fa D_χb U_Fb = φa φb D_χa D_{Fa χb} U_Fa U_Fb
    WeylIndex moved = apply_symplectic(a.f(), b.chi());
    auto [chi, weyl_phase] = weyl_compose(a.chi(), moved);
    ExactPhase phase = a.phase() * b.phase() * weyl_phase * weil_cocycle(a.f(), b.f());
    return CliffordElement(a.f() * b.f(), chi, phase);
}

DenseMatrix dense_weil(const FpMatrix &f) {
    int d = f.d();
    DenseMatrix m(d);
    for (int j = 0; j < d; j++) {
        for (int k = 0; k < d; k++) {
            ExactPhase e = weil_entry(f, j, k);
            if (!e.is_zero()) {
                m(j, k) = e.to_complex();
            }
        }
    }
    return m;
}

DenseMatrix dense_matrix(const CliffordElement &c) {
    return (dense_weyl(c.chi()) * dense_weil(c.f())) * c.phase().to_complex();
}

std::pair<WeylIndex, ExactPhase> conjugate_weyl(const CliffordElement &c, const WeylIndex &a) {
    WeylIndex image = apply_symplectic(c.f(), a);
    return {image, ExactPhase::omega(c.d(), symplectic_product(c.chi(), image))};
}

int element_order(const CliffordElement &c) {
    int d = c.d();
    CliffordElement power = c;
    WeylIndex zero = WeylIndex::zero(d);
    FpMatrix id = FpMatrix::identity(d, 2);
    // |SL(2, Z_d)| = d(d²−1) bounds the order of F, and the Weyl part then has order ≤ d.
    int64_t bound = static_cast<int64_t>(d) * (static_cast<int64_t>(d) * d - 1) * d;
    for (int64_t m = 1; m <= bound; m++) {
        if (power.f() == id && power.chi() == zero) {
            return static_cast<int>(m);
        }
        power = clifford_compose(power, c);
    }
    throw Error(ErrorCode::InvalidArgument, "element order exceeds group bound");
}

}  // namespace quditsim
