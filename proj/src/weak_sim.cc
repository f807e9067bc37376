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

#include "quditsim/weak_sim.h"

#include <cmath>

#include "json.hpp"
#include "quditsim/dense.h"
#include "quditsim/error.h"
#include "quditsim/gadget.h"
#include "quditsim/magic.h"

namespace quditsim {

struct WeakSimulator::Node {
    /// Index of the Inject/Measure op this node is waiting on; ops.size() at a leaf.
    size_t op_index = 0;
    Superposition state;
    bool expanded = false;
    /// Normalized outcome probabilities.
    std::vector<double> probabilities;
    std::vector<std::unique_ptr<Node>> children;
};

std::string SampleRecord::to_json() const {
    nlohmann::ordered_json j;
    j["outcomes"] = outcomes;
    j["gadget_outcomes"] = gadget_outcomes;
    j["chi"] = chi;
    j["fidelity"] = code_fidelity;
    return j.dump();
}

double total_variation(const OutcomeDistribution &a, const OutcomeDistribution &b) {
    double tv = 0;
    for (const auto &[x, p] : a) {
        auto it = b.find(x);
        tv += std::abs(p - (it == b.end() ? 0 : it->second));
    }
    for (const auto &[x, p] : b) {
        if (!a.count(x)) {
            tv += p;
        }
    }
    return tv / 2;
}

WeakSimulator::WeakSimulator(const Circuit &circuit, const SimConfig &config)
    : circuit_(circuit), config_(config), gadgets_(gadgetize(circuit)) {
    if (!(config.delta > 0 && config.delta < 1)) {
        throw Error(ErrorCode::InvalidArgument, "delta must lie in (0, 1)");
    }
    int d = circuit.d;
    std::mt19937_64 code_rng(config.seed);
    std::seed_seq sampling_seed{static_cast<uint32_t>(config.seed), static_cast<uint32_t>(config.seed >> 32), 0x5a17u};
    rng_.seed(sampling_seed);

    StabilizerState data = StabilizerState::basis_state(d, FpVector(circuit.n, 0));
    if (gadgets_.t == 0) {
        initial_.push_back({1, data});
    } else {
        int p = config.p_override ? *config.p_override : optimal_p(d);
        OrbitDecomposition magic = orbit(d, p);
        cert_ = find_code(gadgets_.t, config.delta, magic, code_rng, config.max_code_trials, config.threads);
        chi_ = cert_->code.size();
        fidelity_ = cert_->fidelity;
        for (auto &term : build_approx_state(cert_->code, magic, cert_->z)) {
            initial_.push_back({term.coefficient, tensor(data, term.state)});
        }
    }
    reset_cache();

    if (config.dense_check) {
        dense_tvd_ = total_variation(exact_distribution(), dense_circuit_distribution(circuit));
    }
}

WeakSimulator::~WeakSimulator() = default;

int WeakSimulator::k() const {
    return cert_ ? cert_->code.k() : 0;
}

std::unique_ptr<WeakSimulator::Node> WeakSimulator::make_node(Superposition state, size_t op_index) {
    for (; op_index < gadgets_.ops.size(); op_index++) {
        const GadgetOp &op = gadgets_.ops[op_index];
        if (op.kind != GadgetOp::Kind::Clifford) {
            break;
        }
        apply_clifford(state, op.gate);
    }
    auto node = std::make_unique<Node>();
    node->op_index = op_index;
    node->state = std::move(state);
    cached_terms_ += node->state.size();
    return node;
}

void WeakSimulator::expand(Node &node) {
    const GadgetOp &op = gadgets_.ops[node.op_index];
    MeasurementBranches b = op.kind == GadgetOp::Kind::Inject
                                ? zzinv_branches(node.state, op.data, op.ancilla, config_.threads)
                                : computational_branches(node.state, op.gate.q0, config_.threads);
    double total = b.total();
    if (!(total > 1e-14)) {
        throw Error(ErrorCode::DegenerateNorm, "all outcome probabilities vanish at op " + std::to_string(node.op_index));
    }
    max_completeness_error_ = std::max(max_completeness_error_, std::abs(total - 1));
    int d = gadgets_.d;
    node.probabilities.resize(d);
    node.children.resize(d);
    for (int v = 0; v < d; v++) {
        node.probabilities[v] = b.probabilities[v] / total;
        if (b.probabilities[v] == 0) {
            continue;
        }
        if (op.kind == GadgetOp::Kind::Inject) {
            apply_gadget_correction(b.branches[v], op.data, op.ancilla, v);
        }
        node.children[v] = make_node(std::move(b.branches[v]), node.op_index + 1);
    }
    node.expanded = true;
    // The parent's terms are no longer needed once the children exist.
    cached_terms_ -= node.state.size();
    node.state = Superposition();
}

void WeakSimulator::reset_cache() {
    root_.reset();
    cached_terms_ = 0;
    root_ = make_node(initial_, 0);
}

SampleRecord WeakSimulator::sample() {
    if (cached_terms_ > config_.cache_terms) {
        reset_cache();
    }
    SampleRecord rec;
    rec.chi = chi_;
    rec.code_fidelity = fidelity_;
    Node *node = root_.get();
    while (node->op_index < gadgets_.ops.size()) {
        if (!node->expanded) {
            expand(*node);
        }
        int v = sample_outcome(node->probabilities, rng_);
        if (gadgets_.ops[node->op_index].kind == GadgetOp::Kind::Inject) {
            rec.gadget_outcomes.push_back(v);
        } else {
            rec.outcomes.push_back(v);
        }
        node = node->children[v].get();
    }
    return rec;
}

std::vector<SampleRecord> WeakSimulator::sample(size_t count) {
    std::vector<SampleRecord> out;
    out.reserve(count);
    for (size_t i = 0; i < count; i++) {
        out.push_back(sample());
    }
    return out;
}

void WeakSimulator::collect(Node &node, double weight, std::vector<int> &outcomes, OutcomeDistribution &out) {
    if (node.op_index == gadgets_.ops.size()) {
        out[outcomes] += weight;
        return;
    }
    if (!node.expanded) {
        expand(node);
    }
    bool is_measure = gadgets_.ops[node.op_index].kind == GadgetOp::Kind::Measure;
    for (size_t v = 0; v < node.children.size(); v++) {
        if (!node.children[v]) {
            continue;
        }
        if (is_measure) {
            outcomes.push_back(static_cast<int>(v));
        }
        collect(*node.children[v], weight * node.probabilities[v], outcomes, out);
        if (is_measure) {
            outcomes.pop_back();
        }
    }
}

OutcomeDistribution WeakSimulator::exact_distribution() {
    OutcomeDistribution out;
    std::vector<int> outcomes;
    collect(*root_, 1, outcomes, out);
    return out;
}

}  // namespace quditsim
