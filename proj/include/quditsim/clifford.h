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

#ifndef QUDITSIM_CLIFFORD_H
#define QUDITSIM_CLIFFORD_H

#include <utility>

#include "quditsim/dense.h"
#include "quditsim/exact_phase.h"
#include "quditsim/field.h"

namespace quditsim {

/// Index (x, z) of the single-qudit Weyl operator D_{(x,z)} = τ^{xz} X^x Z^z.
struct WeylIndex {
    int d;
    int x;
    int z;

    WeylIndex(const FpScalar &x, const FpScalar &z);
    static WeylIndex zero(int d) {
        return WeylIndex(FpScalar(0, d), FpScalar(0, d));
    }

    WeylIndex operator+(const WeylIndex &other) const;
    bool operator==(const WeylIndex &other) const = default;
};

/// ⟨a, b⟩ = z_a·x_b − x_a·z_b.
int symplectic_product(const WeylIndex &a, const WeylIndex &b);

/// D_a·D_b = τ^{⟨a,b⟩}·D_{a+b}; returns (a + b, τ^{⟨a,b⟩}).
std::pair<WeylIndex, ExactPhase> weyl_compose(const WeylIndex &a, const WeylIndex &b);

DenseMatrix dense_weyl(const WeylIndex &a);

/// F·a for a 2×2 matrix F acting on (x, z).
WeylIndex apply_symplectic(const FpMatrix &f, const WeylIndex &a);

/// A single-qudit Clifford phase·D_χ·U_F with F ∈ SL(2, Z_d).
///
/// U_F is the Weil representative: for F = [[α, β], [γ, δ]]
///   β ≠ 0: ⟨j|U_F|k⟩ = d^{-1/2}·τ^{β̄(αk² − 2jk + δj²)}
///   β = 0: U_F|k⟩ = τ^{αγk²}|αk⟩
/// so that U_F·D_a·U_F† = D_{Fa} exactly.
class CliffordElement {
   public:
    /// Throws InvalidArgument unless F is 2×2 with determinant 1.
    CliffordElement(FpMatrix f, WeylIndex chi, ExactPhase phase);

    static CliffordElement identity(int d);
    /// H|j⟩ = d^{-1/2} Σ_k ω^{jk}|k⟩
    static CliffordElement hadamard(int d);
    /// P|j⟩ = ω^{j(j−1)/2}|j⟩
    static CliffordElement phase_gate(int d);
    static CliffordElement pauli_x(int d);
    static CliffordElement pauli_z(int d);
    /// D_χ·U_F with F = [[1, 0], [γ, 1]].
    static CliffordElement shear(int d, int gamma, const WeylIndex &chi);

    int d() const {
        return f_.d();
    }
    const FpMatrix &f() const {
        return f_;
    }
    const WeylIndex &chi() const {
        return chi_;
    }
    const ExactPhase &phase() const {
        return phase_;
    }

    bool operator==(const CliffordElement &other) const;

   private:
    FpMatrix f_;
    WeylIndex chi_;
    ExactPhase phase_;
};

/// The exact matrix element ⟨row|U_F|col⟩ of the Weil representative.
ExactPhase weil_entry(const FpMatrix &f, int row, int col);

/// U_{F1}·U_{F2} = c·U_{F1F2}; returns c.
ExactPhase weil_cocycle(const FpMatrix &f1, const FpMatrix &f2);

/// Exact product a·b.
CliffordElement clifford_compose(const CliffordElement &a, const CliffordElement &b);

DenseMatrix dense_matrix(const CliffordElement &c);
DenseMatrix dense_weil(const FpMatrix &f);

/// C·D_a·C† = phase·D_{Fa}; returns (Fa, phase) with phase = ω^{⟨χ, Fa⟩}.
std::pair<WeylIndex, ExactPhase> conjugate_weyl(const CliffordElement &c, const WeylIndex &a);

/// Smallest m ≥ 1 with C^m ∝ I.
int element_order(const CliffordElement &c);

}  // namespace quditsim

#endif
