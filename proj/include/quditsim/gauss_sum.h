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

#ifndef QUDITSIM_GAUSS_SUM_H
#define QUDITSIM_GAUSS_SUM_H

#include "quditsim/exact_phase.h"
#include "quditsim/field.h"

namespace quditsim {

/// Closed-form value of Σ_j ω^{f·j(j−1)/2 + g·j}.
///
/// For f ≠ 0 the sum is ω^{−2̄f(f̄g−2̄)²}·(2̄f/d)·√d, times i when d ≡ 3 mod 4.
/// For f = 0 it collapses to d·δ_{g,0}; `phase` then holds d or exactly zero.
struct GaussSumResult {
    ExactPhase phase;
    bool is_kronecker;
    FpScalar kronecker_arg;

    const ExactPhase &value() const {
        return phase;
    }
};

GaussSumResult quadratic_gauss_sum(const FpScalar &f, const FpScalar &g);

/// Σ_n ω^{a n²} for a ≢ 0: (a/d)·√d·(1 or i).
ExactPhase square_gauss_sum(int d, int a);

/// Σ_{j∈Z_d} ω^{a j² + b j}, exact. Zero exactly when a ≡ 0 and b ≢ 0.
ExactPhase exp_sum_quadratic(int d, int a, int b);

}  // namespace quditsim

#endif
