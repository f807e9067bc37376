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

#ifndef QUDITSIM_CIRCUIT_H
#define QUDITSIM_CIRCUIT_H

#include <string>
#include <string_view>
#include <vector>

namespace quditsim {

enum class GateKind { X, Z, P, H, CSUM, T, Measure };

std::string_view gate_name(GateKind kind);

struct Gate {
    GateKind kind;
    /// Target qudit, or the control for CSUM.
    int q0;
    /// CSUM target; -1 otherwise.
    int q1 = -1;
    /// Power for X, Z, P and CSUM.
    int power = 1;
    /// Source line, 0 when built programmatically.
    int line = 0;

    bool is_clifford() const {
        return kind != GateKind::T && kind != GateKind::Measure;
    }
};

/// A Clifford+T circuit acting on n qudits of dimension d, initialized in |0…0⟩.
struct Circuit {
    int d = 3;
    int n = 0;
    std::vector<Gate> gates;

    int t_count() const;
    int measurement_count() const;
};

/// Parses the line-oriented circuit format:
///
///     d <prime>
///     n <count>
///     X <q> [a] | Z <q> [a] | P <q> [a]
///     H <q>
///     CSUM <control> <target>
///     T <q>
///     MEASURE <q>
///
/// '#' starts a comment. `d` must come first and `n` second.
Circuit parse_circuit(std::string_view text);

/// Checks qudit indices and the dimension; throws the same errors as the parser.
void validate_circuit(const Circuit &circuit);

/// One step of a gadgetized circuit.
struct GadgetOp {
    enum class Kind { Clifford, Inject, Measure };
    Kind kind;
    /// For Clifford and Measure steps.
    Gate gate;
    /// For Inject steps: the data qudit receiving the T gate and its ancilla.
    int data = -1;
    int ancilla = -1;
};

/// A Clifford+T circuit rewritten as Clifford gates on n + t qudits where every
/// T consumes a magic-state ancilla (qudits n, n+1, …) through a
/// Z⊗Z⁻¹ measurement and an outcome-dependent Clifford correction.
struct GadgetizedCircuit {
    int d = 3;
    int n_data = 0;
    int t = 0;
    std::vector<GadgetOp> ops;

    int total_qudits() const {
        return n_data + t;
    }
};

GadgetizedCircuit gadgetize(const Circuit &circuit);

}  // namespace quditsim

#endif
