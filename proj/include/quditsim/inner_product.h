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

#ifndef QUDITSIM_INNER_PRODUCT_H
#define QUDITSIM_INNER_PRODUCT_H

#include "quditsim/exact_phase.h"
#include "quditsim/field.h"
#include "quditsim/stabilizer_state.h"

namespace quditsim {

/// {G1·u1 + h1} ∩ {G2·u2 + h2} parametrized by w: u_i = S_i·w + e_i.
struct AffineIntersection {
    bool empty = true;
    FpMatrix s1;
    FpVector e1;
    FpMatrix s2;
    FpVector e2;
    /// The intersection itself, x = G·w + h.
    FpMatrix g;
    FpVector h;
};

AffineIntersection intersect_affine(const FpMatrix &g1, const FpVector &h1, const FpMatrix &g2, const FpVector &h2);

/// Pᵀ·Q·P = diag(lambda) with P invertible.
struct Diagonalization {
    FpMatrix p;
    FpVector lambda;
};

Diagonalization diagonalize_quadratic(const FpMatrix &q);

/// ⟨b|a⟩, exact.
ExactPhase inner(const StabilizerState &a, const StabilizerState &b);

}  // namespace quditsim

#endif
