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

#ifndef QUDITSIM_MAGIC_H
#define QUDITSIM_MAGIC_H

#include <cstdint>
#include <vector>

#include "quditsim/clifford.h"
#include "quditsim/dense.h"
#include "quditsim/exact_phase.h"
#include "quditsim/stabilizer_state.h"

namespace quditsim {

/// The qudit T gate M_d = diag(e^{2πi λ_j / d^m}).
struct MagicGateSpec {
    int d;
    /// 2 for d = 3, 1 otherwise.
    int m;
    std::vector<int64_t> lambdas;
    std::vector<ExactPhase> diagonal;

    DenseMatrix dense() const;
};

/// λ_j = d^{m−2}·[d·C(j,3) − j·C(d,3) + C(d+1,4)] reduced mod d^m.
MagicGateSpec build_M(int d);

/// U_v = Σ_k ω^{v_k}|k⟩⟨k| with v_k = 12̄·k·(γ' + k(6z' + (2k − 3)γ')) + k·ε'.
/// For d = 3 the entries are ξ^{v_k}, ξ = e^{2πi/9}, v = (0, 6z'+2γ'+3ε', 6z'+γ'+6ε') mod 9.
std::vector<ExactPhase> build_Uv(int d, int z_prime, int gamma_prime, int epsilon_prime);

/// C_d = M·X·M†, written as phase·X·P.
struct OrbitClifford {
    CliffordElement element;
    /// The scalar in front of X·P: e^{−2πi/9} for d = 3, ω^{−3̄} otherwise.
    ExactPhase phase;
};

OrbitClifford build_C(int d);

/// Applies C_d^j to qudit q as the word (phase·X·P)^j.
void apply_c_power(StabilizerState &state, int q, int j);

/// α(d, p) = ⟨+|Z^{−p}·M·|+⟩ = (1/d)·Tr(Z^{−p}M).
Complex alpha(int d, int p);

/// α = phase·S with S = (1/d)·Σ_j ω^{6̄ j(j² − ψ)}, ψ = d² − 3d + 3 + 6p. d > 3.
struct DepressedAlpha {
    ExactPhase phase;
    Complex cubic_sum;
    int psi;

    Complex value() const {
        return phase.to_complex() * cubic_sum;
    }
};

DepressedAlpha alpha_depressed(int d, int p);

/// argmax_p |α(d, p)|, smallest p on ties.
int optimal_p(int d);

/// β_j = √d·⟨0̃|C^j|0̃⟩, exact.
ExactPhase beta(int d, int j, int p);

/// M|+⟩ = (α/(d|α|²))·Σ_j |j̃⟩ with |j̃⟩ = C^j·Z^p|+⟩.
struct OrbitDecomposition {
    int d;
    int p;
    Complex alpha;
    /// +1 or −1: α/|α| = sign·ω^{C(d,4)/d − p} for d > 3; sign of Re(α) for d = 3.
    int sign;
    /// α/(d|α|²)
    Complex prefactor;
    std::vector<StabilizerState> states;
    std::vector<Complex> betas;
};

OrbitDecomposition orbit(int d, int p);

}  // namespace quditsim

#endif
