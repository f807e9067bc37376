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

#ifndef QUDITSIM_STABILIZER_STATE_H
#define QUDITSIM_STABILIZER_STATE_H

#include <cstddef>

#include "quditsim/dense.h"
#include "quditsim/exact_phase.h"
#include "quditsim/field.h"

namespace quditsim {

/// q(u) = 2̄·uᵀQu + L·u + constant over Z_d, Q symmetric.
struct QuadraticForm {
    FpMatrix q;
    FpVector l;
    int constant = 0;

    static QuadraticForm zero(int d, size_t k);

    int d() const {
        return q.d();
    }
    size_t vars() const {
        return l.size();
    }
    int evaluate(const FpVector &u) const;
    /// q(S·w + e) as a form in w.
    QuadraticForm pullback(const FpMatrix &s, const FpVector &e) const;
    QuadraticForm operator-(const QuadraticForm &other) const;
};

/// amp · Σ_{u ∈ Z_d^k} ω^{q(u)} |G·u + h⟩ with G an n×k matrix of full column rank.
///
/// The form's constant is always folded into amp. A state annihilated by a
/// projection keeps its last (G, h, q) but has an exactly zero amplitude.
class StabilizerState {
   public:
    StabilizerState(FpMatrix g, FpVector h, QuadraticForm form, ExactPhase amplitude);

    /// |x⟩
    static StabilizerState basis_state(int d, const FpVector &x);
    /// |+⟩^{⊗n} = d^{-n/2} Σ_x |x⟩
    static StabilizerState plus_state(int d, int n);

    int d() const {
        return g_.d();
    }
    int n() const {
        return static_cast<int>(h_.size());
    }
    size_t k() const {
        return g_.cols();
    }
    const FpMatrix &g() const {
        return g_;
    }
    const FpVector &h() const {
        return h_;
    }
    const QuadraticForm &form() const {
        return form_;
    }
    const ExactPhase &amplitude() const {
        return amp_;
    }
    bool is_zero() const {
        return amp_.is_zero();
    }

    void apply_x(int q, int power = 1);
    void apply_z(int q, int power = 1);
    void apply_p(int q, int power = 1);
    void apply_h(int q);
    /// |a, b⟩ → |a, b + power·a⟩; throws SameQudit when control == target.
    void apply_csum(int control, int target, int power = 1);
    void scale(const ExactPhase &factor);

    /// Projector |v⟩⟨v| on qudit q, unnormalized.
    void project_qudit(int q, int v);
    /// Projector onto {x : c·x = v}, unnormalized.
    void project_linear(const FpVector &c, int v);

    /// Change of variables u = S·w + e; the caller keeps G·S of full column rank
    /// or follows with canonicalize().
    void substitute(const FpMatrix &s, const FpVector &e);

    /// Restores full column rank of G by summing out redundant variables exactly.
    void canonicalize();

    /// ⟨x|ψ⟩
    ExactPhase amplitude_at(const FpVector &x) const;
    /// Throws CapExceeded when d^n > cap.
    CVector dense_vector(size_t cap = kDefaultAmplitudeCap) const;

    /// Throws InvalidArgument if the representation breaks its invariants.
    void check_invariants() const;

   private:
    void require_qudit(int q) const;
    void drop_variable(size_t j);
    void sum_out(size_t j);

    FpMatrix g_;
    FpVector h_;
    QuadraticForm form_;
    ExactPhase amp_;
};

/// |a⟩ ⊗ |b⟩, a on the leading qudits.
StabilizerState tensor(const StabilizerState &a, const StabilizerState &b);

/// Rewrites a form given in x-coordinates as a form on the parametrization
/// x = G·u + h. Same as pulling back along (G, h).
QuadraticForm x_form_to_u_form(const QuadraticForm &x_form, const FpMatrix &g, const FpVector &h);

}  // namespace quditsim

#endif
