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

#include <boost/math/distributions/chi_squared.hpp>
#include <cmath>

#include "gtest/gtest.h"
#include "quditsim/dense.h"
#include "quditsim/error.h"
#include "quditsim/weak_sim.h"

using namespace quditsim;

namespace {

const char *kMixed =
    "d 3\n"
    "n 2\n"
    "H 0\n"
    "T 0\n"
    "CSUM 0 1\n"
    "H 1\n"
    "T 1\n"
    "H 0\n"
    "T 0\n"
    "H 0\n"
    "MEASURE 0\n"
    "H 1\n"
    "MEASURE 1\n";

double chi_square_p_value(const OutcomeDistribution &expected, const std::vector<SampleRecord> &samples) {
    std::map<std::vector<int>, double> counts;
    for (const auto &s : samples) {
        counts[s.outcomes] += 1;
    }
    double stat = 0;
    int cells = 0;
    for (const auto &[x, p] : expected) {
        if (p * samples.size() < 1e-9) {
            continue;
        }
        double e = p * samples.size();
        double o = counts.count(x) ? counts[x] : 0;
        stat += (o - e) * (o - e) / e;
        cells++;
    }
    if (cells < 2) {
        return 1;
    }
    boost::math::chi_squared dist(cells - 1);
    return boost::math::cdf(boost::math::complement(dist, stat));
}

}  // namespace

TEST(weak_sim, clifford_circuit_is_exact) {
    Circuit c = parse_circuit("d 5\nn 2\nH 0\nCSUM 0 1\nP 1 2\nH 1\nMEASURE 0\nMEASURE 1\n");
    SimConfig cfg;
    cfg.dense_check = true;
    WeakSimulator sim(c, cfg);
    EXPECT_EQ(sim.chi(), 1u);
    EXPECT_EQ(sim.t(), 0);
    EXPECT_NEAR(*sim.dense_tvd(), 0, 1e-12);
    SampleRecord r = sim.sample();
    EXPECT_EQ(r.outcomes.size(), 2u);
    EXPECT_TRUE(r.gadget_outcomes.empty());
    EXPECT_EQ(r.chi, 1u);
}

TEST(weak_sim, exact_ancilla_reproduces_dense_distribution) {
    for (int d : {3, 5}) {
        std::string ds = "d " + std::to_string(d) + "\n";
        Circuit c = parse_circuit(ds + "n 2\nH 0\nT 0\nH 0\nCSUM 0 1\nT 1\nH 1\nMEASURE 0\nMEASURE 1\n");
        SimConfig cfg;
        cfg.delta = 1e-9;
        cfg.dense_check = true;
        WeakSimulator sim(c, cfg);
        EXPECT_EQ(sim.k(), 2);
        EXPECT_NEAR(sim.fidelity(), 1, 1e-10);
        EXPECT_LT(*sim.dense_tvd(), 1e-10) << d;
        EXPECT_LT(sim.max_completeness_error(), 1e-10);
    }
}

TEST(weak_sim, approximate_ancilla_is_within_bound) {
    Circuit c = parse_circuit(kMixed);
    for (double delta : {0.3, 0.1, 0.01}) {
        SimConfig cfg;
        cfg.delta = delta;
        cfg.seed = 7;
        cfg.dense_check = true;
        WeakSimulator sim(c, cfg);
        EXPECT_GE(sim.fidelity(), 1 - 2 * delta);
        EXPECT_LE(*sim.dense_tvd(), std::sqrt(1 - sim.fidelity()) + 1e-10) << delta;
        EXPECT_LT(sim.max_completeness_error(), 1e-10);
        double total = 0;
        for (const auto &[x, p] : sim.exact_distribution()) {
            total += p;
        }
        EXPECT_NEAR(total, 1, 1e-12);
    }
}

TEST(weak_sim, measurement_probabilities_from_certified_state) {
    // Two T gates then measure both data qudits directly.
    Circuit c = parse_circuit("d 3\nn 2\nH 0\nH 1\nT 0\nT 1\nH 0\nH 1\nMEASURE 0\nMEASURE 1\n");
    SimConfig cfg;
    cfg.delta = 0.2;
    cfg.dense_check = true;
    WeakSimulator sim(c, cfg);
    EXPECT_LE(*sim.dense_tvd(), std::sqrt(1 - sim.fidelity()) + 1e-10);
}

TEST(weak_sim, seed_determinism) {
    Circuit c = parse_circuit(kMixed);
    SimConfig cfg;
    cfg.delta = 0.05;
    cfg.seed = 99;
    WeakSimulator a(c, cfg);
    WeakSimulator b(c, cfg);
    std::string sa, sb;
    for (int i = 0; i < 500; i++) {
        sa += a.sample().to_json() + "\n";
        sb += b.sample().to_json() + "\n";
    }
    EXPECT_EQ(sa, sb);
    cfg.seed = 100;
    WeakSimulator other(c, cfg);
    std::string so;
    for (int i = 0; i < 500; i++) {
        so += other.sample().to_json() + "\n";
    }
    EXPECT_NE(sa, so);
}

TEST(weak_sim, cache_reset_does_not_change_stream) {
    Circuit c = parse_circuit(kMixed);
    SimConfig cfg;
    cfg.delta = 0.05;
    WeakSimulator cached(c, cfg);
    cfg.cache_terms = 1;
    WeakSimulator uncached(c, cfg);
    for (int i = 0; i < 200; i++) {
        EXPECT_EQ(cached.sample().to_json(), uncached.sample().to_json());
    }
}

TEST(weak_sim, samples_fit_exact_distribution) {
    Circuit c = parse_circuit(kMixed);
    SimConfig cfg;
    cfg.delta = 0.01;
    cfg.seed = 3;
    WeakSimulator sim(c, cfg);
    OutcomeDistribution exact = sim.exact_distribution();
    std::vector<SampleRecord> samples = sim.sample(20000);
    EXPECT_GT(chi_square_p_value(exact, samples), 0.001);
    for (const auto &s : samples) {
        EXPECT_EQ(s.gadget_outcomes.size(), 3u);
        for (int v : s.outcomes) {
            EXPECT_TRUE(v >= 0 && v < 3);
        }
    }
}

TEST(weak_sim, json_record_layout) {
    SampleRecord r{{1, 2}, {0}, 0.5, 9};
    EXPECT_EQ(r.to_json(), R"({"outcomes":[1,2],"gadget_outcomes":[0],"chi":9,"fidelity":0.5})");
}

TEST(weak_sim, rejects_bad_delta) {
    Circuit c = parse_circuit("d 3\nn 1\nT 0\n");
    SimConfig cfg;
    cfg.delta = 0;
    EXPECT_THROW(WeakSimulator(c, cfg), Error);
}
