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

#ifndef QUDITSIM_GADGET_CHECK_H
#define QUDITSIM_GADGET_CHECK_H

#include <cmath>
#include <functional>

#include "quditsim/approx_rank.h"
#include "quditsim/dense.h"
#include "quditsim/gadget.h"
#include "quditsim/magic.h"

namespace quditsim::testing {

/// Runs a measurement-free circuit through the gadget pipeline with the exact
/// (k = t) ancilla and the given data input, following every gadget outcome.
/// Returns the worst deviation of any branch from dense(U)|ψ⟩ ⊗ |0^t⟩ after
/// removing one global phase common to all branches, and the worst deviation
/// of the outcome probabilities from uniform.
struct GadgetCheck {
    double state_error = 0;
    double probability_error = 0;
    int branches = 0;
};

inline GadgetCheck check_gadget_pipeline(const Circuit &circuit, const StabilizerState &input) {
    int d = circuit.d;
    GadgetizedCircuit gc = gadgetize(circuit);
    DenseState dense(d, circuit.n, input.dense_vector());
    for (const auto &g : circuit.gates) {
        dense = apply_gate_dense(dense, g);
    }
    CVector target = dense.amplitudes();
    target = kron(target, DenseState(d, gc.t).amplitudes());

    Superposition start;
    if (gc.t == 0) {
        start.push_back({1, input});
    } else {
        OrbitDecomposition o = orbit(d, optimal_p(d));
        LinearCode full = LinearCode::full(d, gc.t);
        for (auto &term : build_approx_state(full, o, z_of_code(full, o.betas))) {
            start.push_back({term.coefficient, tensor(input, term.state)});
        }
    }

    GadgetCheck out;
    bool have_phase = false;
    Complex phase = 1;
    std::function<void(Superposition, size_t)> walk = [&](Superposition s, size_t i) {
        for (; i < gc.ops.size() && gc.ops[i].kind == GadgetOp::Kind::Clifford; i++) {
            apply_clifford(s, gc.ops[i].gate);
        }
        if (i == gc.ops.size()) {
            CVector v = dense_vector(s);
            Complex ov = 0;
            for (size_t x = 0; x < v.size(); x++) {
                ov += std::conj(target[x]) * v[x];
            }
            if (!have_phase) {
                phase = ov / std::abs(ov);
                have_phase = true;
            }
            for (size_t x = 0; x < v.size(); x++) {
                out.state_error = std::max(out.state_error, std::abs(v[x] - phase * target[x]));
            }
            out.branches++;
            return;
        }
        const GadgetOp &op = gc.ops[i];
        MeasurementBranches b = zzinv_branches(s, op.data, op.ancilla);
        for (int k = 0; k < d; k++) {
            out.probability_error = std::max(out.probability_error, std::abs(b.probabilities[k] - 1.0 / d));
            if (b.probabilities[k] == 0) {
                continue;
            }
            apply_gadget_correction(b.branches[k], op.data, op.ancilla, k);
            walk(std::move(b.branches[k]), i + 1);
        }
    };
    walk(start, 0);
    return out;
}

}  // namespace quditsim::testing

#endif
