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

#ifndef QUDITSIM_WEAK_SIM_H
#define QUDITSIM_WEAK_SIM_H

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "quditsim/approx_rank.h"
#include "quditsim/circuit.h"
#include "quditsim/superposition.h"

namespace quditsim {

struct SimConfig {
    double delta = 0.01;
    uint64_t seed = 1;
    /// 0 means ⌈1/δ⌉.
    int max_code_trials = 0;
    std::optional<int> p_override;
    /// Compare the exact |L⟩-substituted distribution with the dense oracle at construction.
    bool dense_check = false;
    int threads = 1;
    /// Upper bound on the number of stabilizer terms kept in the branch cache.
    size_t cache_terms = 1u << 22;
};

struct SampleRecord {
    std::vector<int> outcomes;
    std::vector<int> gadget_outcomes;
    double code_fidelity = 1;
    uint64_t chi = 1;

    /// {"outcomes":[...],"gadget_outcomes":[...],"chi":K,"fidelity":F}
    std::string to_json() const;
};

using OutcomeDistribution = std::map<std::vector<int>, double>;

double total_variation(const OutcomeDistribution &a, const OutcomeDistribution &b);

/// Samples the circuit with every T replaced by injection of a certified
/// approximation |L⟩ of the t-fold magic state.
///
/// Branches already visited are cached, so repeated samples only pay for the
/// outcome draws. The cache never changes results, only timing.
class WeakSimulator {
   public:
    WeakSimulator(const Circuit &circuit, const SimConfig &config);
    ~WeakSimulator();
    WeakSimulator(const WeakSimulator &) = delete;
    WeakSimulator &operator=(const WeakSimulator &) = delete;

    SampleRecord sample();
    std::vector<SampleRecord> sample(size_t count);

    /// Exact output distribution over MEASURE outcomes of the |L⟩-substituted
    /// circuit, gadget outcomes marginalized.
    OutcomeDistribution exact_distribution();

    uint64_t chi() const {
        return chi_;
    }
    double fidelity() const {
        return fidelity_;
    }
    int t() const {
        return gadgets_.t;
    }
    int k() const;
    /// Empty when t = 0.
    const std::optional<ApproxStateCert> &certificate() const {
        return cert_;
    }
    /// Largest |Σ_v p_v − 1| seen at any measurement so far.
    double max_completeness_error() const {
        return max_completeness_error_;
    }
    /// Set when config.dense_check is on.
    std::optional<double> dense_tvd() const {
        return dense_tvd_;
    }
    const GadgetizedCircuit &gadgetized() const {
        return gadgets_;
    }

   private:
    struct Node;

    std::unique_ptr<Node> make_node(Superposition state, size_t op_index);
    void expand(Node &node);
    void reset_cache();
    void collect(Node &node, double weight, std::vector<int> &outcomes, OutcomeDistribution &out);

    Circuit circuit_;
    SimConfig config_;
    GadgetizedCircuit gadgets_;
    std::optional<ApproxStateCert> cert_;
    Superposition initial_;
    uint64_t chi_ = 1;
    double fidelity_ = 1;
    double max_completeness_error_ = 0;
    std::optional<double> dense_tvd_;
    std::mt19937_64 rng_;
    std::unique_ptr<Node> root_;
    size_t cached_terms_ = 0;
};

}  // namespace quditsim

#endif
