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

#ifndef QUDITSIM_APPROX_RANK_H
#define QUDITSIM_APPROX_RANK_H

#include <cstdint>
#include <functional>
#include <random>

#include "quditsim/field.h"
#include "quditsim/magic.h"
#include "quditsim/superposition.h"

namespace quditsim {

/// A k-dimensional code in F_d^t with generator [1_k | G̃].
class LinearCode {
   public:
    /// `g_tilde` is k×(t−k).
    LinearCode(int d, int t, FpMatrix g_tilde);

    static LinearCode full(int d, int t);
    static LinearCode trivial(int d, int t);

    int d() const {
        return d_;
    }
    int t() const {
        return t_;
    }
    int k() const {
        return k_;
    }
    const FpMatrix &g_tilde() const {
        return g_tilde_;
    }
    /// d^k
    uint64_t size() const;

    /// k×t generator [1_k | G̃].
    FpMatrix generator() const;
    FpVector encode(const FpVector &message) const;

    /// Visits the codewords of the messages in [first, last) of the lexicographic
    /// message order (last digit fastest), updating the word incrementally.
    void for_each_codeword(const std::function<void(const FpVector &)> &visit, uint64_t first = 0,
                           uint64_t last = UINT64_MAX) const;
    std::vector<FpVector> codewords() const;

   private:
    int d_;
    int t_;
    int k_;
    FpMatrix g_tilde_;
};

/// k = ⌈1 − 2t·log_d|α| − log_d δ⌉.
struct KChoice {
    int k;
    int64_t unclamped;
    bool clamped;
};

/// Clamps k to [0, t]; k = t is the exact decomposition.
KChoice choose_k(int t, double delta, double alpha_abs, int d);
/// Throws InfeasiblePrecision when the formula exceeds t.
int choose_k_strict(int t, double delta, double alpha_abs, int d);
/// Smallest δ reachable with k ≤ t: d^{1 − t(1 + 2·log_d|α|)}.
double delta_max(int t, double alpha_abs, int d);

/// G̃ entries i.i.d. uniform over Z_d.
LinearCode sample_code(int d, int t, int k, std::mt19937_64 &rng);

/// Z(L) = Σ_{x∈L} Π_{l: x_l≠0} β_{x_l}·d^{−|x|/2}, i.e. Σ_{x∈L} ⟨0̃^t|x̃⟩.
/// Throws NonRealZ when the imaginary part exceeds 1e-10.
double z_of_code(const LinearCode &code, const std::vector<Complex> &betas, int threads = 1);
Complex z_of_code_complex(const LinearCode &code, const std::vector<Complex> &betas, int threads = 1);

struct ApproxStateCert {
    LinearCode code;
    double z;
    /// d^k|α|^{2t}/Z = |⟨L|M^{⊗t}⟩|²
    double fidelity;
    double delta;
    /// (1 + d^k|α|^{2t})(1 + δ)
    double threshold;
    bool accepted;
    int trials;
};

/// Draws codes until Z(L) ≤ threshold; throws NoCodeFound after `max_trials`
/// draws (default ⌈1/δ⌉).
ApproxStateCert find_code(int t, double delta, const OrbitDecomposition &magic, std::mt19937_64 &rng,
                          int max_trials = 0, int threads = 1);

/// |L⟩ = (d^k Z)^{−1/2} Σ_{x∈L} ⊗_l |x̃_l⟩
Superposition build_approx_state(const LinearCode &code, const OrbitDecomposition &magic, double z);

}  // namespace quditsim

#endif
