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

#include "quditsim/superposition.h"

#include "parallel.h"
#include "quditsim/error.h"
#include "quditsim/inner_product.h"

namespace quditsim {

Complex overlap(const Superposition &bra, const Superposition &ket, int threads) {
    std::vector<Complex> rows(bra.size());
    internal::parallel_for(bra.size(), threads, [&](size_t a) {
        Complex acc = 0;
        for (const auto &term : ket) {
            acc += term.coefficient * inner(term.state, bra[a].state).to_complex();
        }
        rows[a] = std::conj(bra[a].coefficient) * acc;
    });
    Complex total = 0;
    for (const auto &r : rows) {
        total += r;
    }
    return total;
}

double norm_squared(const Superposition &s, int threads) {
    std::vector<double> rows(s.size());
    internal::parallel_for(s.size(), threads, [&](size_t a) {
        Complex off = 0;
        for (size_t b = a + 1; b < s.size(); b++) {
            off += s[b].coefficient * inner(s[b].state, s[a].state).to_complex();
        }
        double diag = std::norm(s[a].coefficient) * inner(s[a].state, s[a].state).to_complex().real();
        rows[a] = diag + 2 * std::real(std::conj(s[a].coefficient) * off);
    });
    double total = 0;
    for (double r : rows) {
        total += r;
    }
    return total;
}

void apply_clifford(Superposition &s, const Gate &gate) {
    for (auto &term : s) {
        StabilizerState &st = term.state;
        switch (gate.kind) {
            case GateKind::X:
                st.apply_x(gate.q0, gate.power);
                break;
            case GateKind::Z:
                st.apply_z(gate.q0, gate.power);
                break;
            case GateKind::P:
                st.apply_p(gate.q0, gate.power);
                break;
            case GateKind::H:
                st.apply_h(gate.q0);
                break;
            case GateKind::CSUM:
                st.apply_csum(gate.q0, gate.q1, gate.power);
                break;
            default:
                throw Error(ErrorCode::InvalidArgument, std::string(gate_name(gate.kind)) + " is not a Clifford gate",
                            gate.line);
        }
    }
}

void prune_zero_terms(Superposition &s) {
    std::erase_if(s, [](const Term &t) { return t.state.is_zero() || t.coefficient == Complex(0); });
}

CVector dense_vector(const Superposition &s, size_t cap) {
    if (s.empty()) {
        throw Error(ErrorCode::InvalidArgument, "empty superposition has no dimension");
    }
    CVector out(checked_dimension(s[0].state.d(), s[0].state.n(), cap));
    for (const auto &term : s) {
        CVector v = term.state.dense_vector(cap);
        for (size_t i = 0; i < v.size(); i++) {
            out[i] += term.coefficient * v[i];
        }
    }
    return out;
}

}  // namespace quditsim
