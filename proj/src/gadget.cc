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

#include "quditsim/gadget.h"

#include <cmath>

#include "quditsim/error.h"
#include "quditsim/magic.h"

namespace quditsim {

namespace {

constexpr double kZeroProbability = 1e-14;

template <typename Project>
MeasurementBranches branch_on(const Superposition &s, int d, int threads, const Project &project) {
    MeasurementBranches out;
    out.probabilities.resize(d);
    out.branches.resize(d);
    for (int v = 0; v < d; v++) {
        Superposition b = s;
        for (auto &term : b) {
            project(term.state, v);
        }
        prune_zero_terms(b);
        double p = b.empty() ? 0 : norm_squared(b, threads);
        if (p < kZeroProbability) {
            out.probabilities[v] = 0;
            continue;
        }
        out.probabilities[v] = p;
        double scale = 1 / std::sqrt(p);
        for (auto &term : b) {
            term.coefficient *= scale;
        }
        out.branches[v] = std::move(b);
    }
    return out;
}

int dimension_of(const Superposition &s) {
    if (s.empty()) {
        throw Error(ErrorCode::DegenerateNorm, "measuring an empty superposition");
    }
    return s.front().state.d();
}

}  // namespace

double MeasurementBranches::total() const {
    double t = 0;
    for (double p : probabilities) {
        t += p;
    }
    return t;
}

MeasurementBranches computational_branches(const Superposition &s, int q, int threads) {
    return branch_on(s, dimension_of(s), threads, [q](StabilizerState &st, int v) { st.project_qudit(q, v); });
}

MeasurementBranches zzinv_branches(const Superposition &s, int q, int a, int threads) {
    int d = dimension_of(s);
    int n = s.front().state.n();
    if (q == a) {
        throw Error(ErrorCode::SameQudit, "Z⊗Z⁻¹ on a single qudit");
    }
    FpVector c(n, 0);
    c.at(q) = 1;
    c.at(a) = d - 1;
    return branch_on(s, d, threads, [&c](StabilizerState &st, int v) { st.project_linear(c, v); });
}

int sample_outcome(const std::vector<double> &probabilities, std::mt19937_64 &rng) {
    double total = 0;
    for (double p : probabilities) {
        total += p;
    }
    if (!(total > kZeroProbability)) {
        throw Error(ErrorCode::DegenerateNorm, "all outcome probabilities vanish");
    }
    double r = std::uniform_real_distribution<double>(0, total)(rng);
    int last = 0;
    for (size_t v = 0; v < probabilities.size(); v++) {
        if (probabilities[v] <= 0) {
            continue;
        }
        last = static_cast<int>(v);
        if (r < probabilities[v]) {
            return last;
        }
        r -= probabilities[v];
    }
    return last;
}

std::pair<int, Superposition> measure_computational(const Superposition &s, int q, std::mt19937_64 &rng,
                                                    int threads) {
    MeasurementBranches b = computational_branches(s, q, threads);
    int v = sample_outcome(b.probabilities, rng);
    return {v, std::move(b.branches[v])};
}

std::pair<int, Superposition> measure_observable_ZZinv(const Superposition &s, int q, int a, std::mt19937_64 &rng,
                                                       int threads) {
    MeasurementBranches b = zzinv_branches(s, q, a, threads);
    int k = sample_outcome(b.probabilities, rng);
    return {k, std::move(b.branches[k])};
}

void apply_gadget_correction(StabilizerState &s, int q, int a, int k) {
    int d = s.d();
    k = mod(k, d);
    // (x_q, x_q − k) → (x_q, −k)
    s.apply_csum(q, a, d - 1);
    // C^k·X^{−k} = M·X^k·M†·X^{−k} on the data qudit
    s.apply_x(q, d - k);
    apply_c_power(s, q, k);
    s.apply_x(a, k);
}

void apply_gadget_correction(Superposition &s, int q, int a, int k) {
    for (auto &term : s) {
        apply_gadget_correction(term.state, q, a, k);
    }
}

}  // namespace quditsim
