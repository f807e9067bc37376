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

#include "quditsim/circuit.h"

#include <charconv>
#include <sstream>

#include "quditsim/error.h"
#include "quditsim/field.h"

namespace quditsim {

std::string_view gate_name(GateKind kind) {
    switch (kind) {
        case GateKind::X:
            return "X";
        case GateKind::Z:
            return "Z";
        case GateKind::P:
            return "P";
        case GateKind::H:
            return "H";
        case GateKind::CSUM:
            return "CSUM";
        case GateKind::T:
            return "T";
        case GateKind::Measure:
            return "MEASURE";
    }
    return "?";
}

int Circuit::t_count() const {
    int t = 0;
    for (const auto &g : gates) {
        t += g.kind == GateKind::T;
    }
    return t;
}

int Circuit::measurement_count() const {
    int m = 0;
    for (const auto &g : gates) {
        m += g.kind == GateKind::Measure;
    }
    return m;
}

namespace {

std::vector<std::string> tokenize(std::string_view line) {
    std::vector<std::string> out;
    std::istringstream in{std::string(line)};
    std::string tok;
    while (in >> tok) {
        out.push_back(tok);
    }
    return out;
}

int64_t parse_int(const std::string &tok, int line) {
    int64_t v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || ptr != tok.data() + tok.size()) {
        throw Error(ErrorCode::SyntaxError, "expected an integer, got '" + tok + "'", line);
    }
    return v;
}

void check_gate(const Gate &g, int n) {
    auto check = [&](int q) {
        if (q < 0 || q >= n) {
            throw Error(ErrorCode::IndexOutOfRange,
                        "qudit " + std::to_string(q) + " out of range for n=" + std::to_string(n), g.line);
        }
    };
    check(g.q0);
    if (g.kind == GateKind::CSUM) {
        check(g.q1);
        if (g.q0 == g.q1) {
            throw Error(ErrorCode::SameQudit, "CSUM control and target coincide", g.line);
        }
    }
}

}  // namespace

Circuit parse_circuit(std::string_view text) {
    Circuit c;
    bool have_d = false;
    bool have_n = false;
    int line_no = 0;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) {
            end = text.size();
        }
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        line_no++;
        if (auto hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        auto toks = tokenize(line);
        if (toks.empty()) {
            continue;
        }
        const std::string &op = toks[0];
        auto arity = [&](size_t lo, size_t hi) {
            if (toks.size() - 1 < lo || toks.size() - 1 > hi) {
                throw Error(ErrorCode::SyntaxError, "wrong number of arguments to '" + op + "'", line_no);
            }
        };
        if (!have_d) {
            if (op != "d") {
                throw Error(ErrorCode::SyntaxError, "the first statement must be 'd <prime>'", line_no);
            }
            arity(1, 1);
            int64_t d = parse_int(toks[1], line_no);
            if (d < 3 || d > 1'000'003 || !is_prime(d)) {
                throw Error(ErrorCode::NonPrimeDimension, "dimension " + toks[1] + " is not an odd prime", line_no);
            }
            c.d = static_cast<int>(d);
            have_d = true;
            continue;
        }
        if (!have_n) {
            if (op != "n") {
                throw Error(ErrorCode::SyntaxError, "the second statement must be 'n <count>'", line_no);
            }
            arity(1, 1);
            int64_t n = parse_int(toks[1], line_no);
            if (n < 1 || n > 1'000'000) {
                throw Error(ErrorCode::SyntaxError, "qudit count must be positive", line_no);
            }
            c.n = static_cast<int>(n);
            have_n = true;
            continue;
        }
        Gate g{GateKind::X, 0};
        g.line = line_no;
        if (op == "X" || op == "Z" || op == "P") {
            arity(1, 2);
            g.kind = op == "X" ? GateKind::X : op == "Z" ? GateKind::Z : GateKind::P;
            g.q0 = static_cast<int>(parse_int(toks[1], line_no));
            if (toks.size() == 3) {
                g.power = mod(parse_int(toks[2], line_no), c.d);
            }
        } else if (op == "H" || op == "T" || op == "MEASURE") {
            arity(1, 1);
            g.kind = op == "H" ? GateKind::H : op == "T" ? GateKind::T : GateKind::Measure;
            g.q0 = static_cast<int>(parse_int(toks[1], line_no));
        } else if (op == "CSUM") {
            arity(2, 2);
            g.kind = GateKind::CSUM;
            g.q0 = static_cast<int>(parse_int(toks[1], line_no));
            g.q1 = static_cast<int>(parse_int(toks[2], line_no));
        } else if (op == "d" || op == "n") {
            throw Error(ErrorCode::SyntaxError, "'" + op + "' may appear only once, at the top", line_no);
        } else {
            throw Error(ErrorCode::SyntaxError, "unknown statement '" + op + "'", line_no);
        }
        check_gate(g, c.n);
        c.gates.push_back(g);
    }
    if (!have_d || !have_n) {
        throw Error(ErrorCode::SyntaxError, "missing 'd' or 'n' header", line_no);
    }
    return c;
}

void validate_circuit(const Circuit &circuit) {
    require_odd_prime(circuit.d);
    if (circuit.n < 1) {
        throw Error(ErrorCode::InvalidArgument, "qudit count must be positive");
    }
    for (const auto &g : circuit.gates) {
        check_gate(g, circuit.n);
    }
}

GadgetizedCircuit gadgetize(const Circuit &circuit) {
    validate_circuit(circuit);
    GadgetizedCircuit out;
    out.d = circuit.d;
    out.n_data = circuit.n;
    for (const auto &g : circuit.gates) {
        GadgetOp op{GadgetOp::Kind::Clifford, g};
        if (g.kind == GateKind::T) {
            op.kind = GadgetOp::Kind::Inject;
            op.data = g.q0;
            op.ancilla = circuit.n + out.t;
            out.t++;
        } else if (g.kind == GateKind::Measure) {
            op.kind = GadgetOp::Kind::Measure;
        }
        out.ops.push_back(op);
    }
    return out;
}

}  // namespace quditsim
