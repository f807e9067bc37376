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

#ifndef QUDITSIM_GADGET_H
#define QUDITSIM_GADGET_H

#include <random>
#include <utility>
#include <vector>

#include "quditsim/superposition.h"

namespace quditsim {

/// Outcome probabilities of a measurement and the normalized post-measurement
/// superposition for every outcome with nonzero probability.
struct MeasurementBranches {
    /// Raw ⟨ψ|Π_v|ψ⟩; sums to ⟨ψ|ψ⟩.
    std::vector<double> probabilities;
    /// Empty for outcomes with probability below 1e-14.
    std::vector<Superposition> branches;

    double total() const;
};

/// Computational-basis measurement of qudit q.
MeasurementBranches computational_branches(const Superposition &s, int q, int threads = 1);

/// Measurement of Z_q·Z_a^{−1}; outcome k ↔ eigenvalue ω^k ↔ x_q − x_a ≡ k.
MeasurementBranches zzinv_branches(const Superposition &s, int q, int a, int threads = 1);

/// Draws an outcome from (unnormalized) probabilities. Throws DegenerateNorm if all vanish.
int sample_outcome(const std::vector<double> &probabilities, std::mt19937_64 &rng);

std::pair<int, Superposition> measure_computational(const Superposition &s, int q, std::mt19937_64 &rng,
                                                    int threads = 1);
std::pair<int, Superposition> measure_observable_ZZinv(const Superposition &s, int q, int a, std::mt19937_64 &rng,
                                                       int threads = 1);

/// After outcome k of the Z⊗Z⁻¹ measurement: CSUM⁻¹(q→a), X^{−k} and C^k on q,
/// then X^k on a. Leaves M|ψ⟩ on q and |0⟩ on a when the ancilla held M|+⟩.
void apply_gadget_correction(StabilizerState &s, int q, int a, int k);
void apply_gadget_correction(Superposition &s, int q, int a, int k);

}  // namespace quditsim

#endif
