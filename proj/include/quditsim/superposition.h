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

#ifndef QUDITSIM_SUPERPOSITION_H
#define QUDITSIM_SUPERPOSITION_H

#include <vector>

#include "quditsim/circuit.h"
#include "quditsim/dense.h"
#include "quditsim/stabilizer_state.h"

namespace quditsim {

struct Term {
    Complex coefficient;
    StabilizerState state;
};

/// Σ_a c_a |s_a⟩ over canonical-form stabilizer states.
using Superposition = std::vector<Term>;

/// ⟨bra|ket⟩ from pairwise exact inner products. Rows are reduced in a fixed
/// order, so the result does not depend on `threads`.
Complex overlap(const Superposition &bra, const Superposition &ket, int threads = 1);

double norm_squared(const Superposition &s, int threads = 1);

/// Applies a Clifford gate (X, Z, P, H, CSUM) to every term.
void apply_clifford(Superposition &s, const Gate &gate);

/// Drops exactly-zero terms.
void prune_zero_terms(Superposition &s);

CVector dense_vector(const Superposition &s, size_t cap = kDefaultAmplitudeCap);

}  // namespace quditsim

#endif
