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

#include <cmath>
#include <random>
#include <set>

#include "gtest/gtest.h"
#include "quditsim/approx_rank.h"
#include "quditsim/error.h"
#include "quditsim/inner_product.h"

using namespace quditsim;

namespace {

CVector magic_tensor_power(int d, int t) {
    MagicGateSpec m = build_M(d);
    CVector one(d);
    for (int j = 0; j < d; j++) {
        one[j] = m.diagonal[j].to_complex() / std::sqrt(static_cast<double>(d));
    }
    CVector out = {1};
    for (int i = 0; i < t; i++) {
        out = kron(out, one);
    }
    return out;
}

/// Σ_{x∈L} ⟨0̃^t|x̃⟩ through tensor products and exact inner products.
Complex brute_z(const LinearCode &code, const OrbitDecomposition &o) {
    StabilizerState zero = o.states[0];
    for (int l = 1; l < code.t(); l++) {
        zero = tensor(zero, o.states[0]);
    }
    Complex z = 0;
    for (const auto &w : code.codewords()) {
        StabilizerState s = o.states[w[0]];
        for (int l = 1; l < code.t(); l++) {
            s = tensor(s, o.states[w[l]]);
        }
        z += inner(s, zero).to_complex();
    }
    return z;
}

}  // namespace

TEST(approx_rank, choose_k_examples) {
    EXPECT_EQ(choose_k(10, 0.1, 0.84403, 3).k, 7);
    KChoice c = choose_k(1, 0.9, 0.84403, 3);
    EXPECT_EQ(c.k, 1);
    EXPECT_TRUE(c.clamped);
    EXPECT_EQ(c.unclamped, 2);
    // δ → 1⁻ leaves ⌈1 − 2t·log_d|α|⌉
    double a = 0.84403;
    EXPECT_EQ(choose_k(20, 1 - 1e-12, a, 3).k, static_cast<int>(std::ceil(1 - 40 * std::log(a) / std::log(3.0))));
    try {
        choose_k_strict(1, 0.9, a, 3);
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::InfeasiblePrecision);
    }
    EXPECT_EQ(choose_k_strict(10, 0.1, a, 3), 7);
    EXPECT_THROW(choose_k(3, 0, a, 3), Error);
    EXPECT_THROW(choose_k(3, 1.5, a, 3), Error);
    // At δ just above δ_max, k = t is feasible.
    for (int t = 1; t < 12; t++) {
        double dm = delta_max(t, a, 3);
        if (dm < 1) {
            EXPECT_LE(choose_k(t, std::min(dm * 1.0001, 0.999), a, 3).unclamped, t);
            EXPECT_GT(choose_k(t, dm * 0.9, a, 3).unclamped, t);
        }
    }
}

TEST(approx_rank, code_sampling) {
    std::mt19937_64 r1(5), r2(5);
    LinearCode a = sample_code(3, 6, 3, r1);
    LinearCode b = sample_code(3, 6, 3, r2);
    EXPECT_EQ(a.g_tilde(), b.g_tilde());
    EXPECT_EQ(sample_code(3, 4, 0, r1).codewords(), (std::vector<FpVector>{FpVector(4, 0)}));
    EXPECT_EQ(sample_code(3, 2, 2, r1).size(), 9u);
    for (int d : {3, 5}) {
        LinearCode c = sample_code(d, 5, 2, r1);
        auto words = c.codewords();
        EXPECT_EQ(std::set<FpVector>(words.begin(), words.end()).size(), static_cast<size_t>(d * d));
        EXPECT_EQ(c.generator().rank(), 2u);
        for (const auto &w : words) {
            FpVector msg(w.begin(), w.begin() + 2);
            EXPECT_EQ(c.encode(msg), w);
        }
    }
}

TEST(approx_rank, z_of_trivial_and_full_codes) {
    for (int d : {3, 5, 7}) {
        OrbitDecomposition o = orbit(d, optimal_p(d));
        double a2 = std::norm(o.alpha);
        EXPECT_NEAR(z_of_code(LinearCode::trivial(d, 4), o.betas), 1, 1e-15);
        EXPECT_NEAR(z_of_code(LinearCode::full(d, 1), o.betas), d * a2, 1e-12);
        EXPECT_NEAR(z_of_code(LinearCode::full(d, 3), o.betas), std::pow(d * a2, 3), 1e-10);
    }
}

TEST(approx_rank, z_matches_brute_force_sum) {
    std::mt19937_64 rng(31);
    OrbitDecomposition o = orbit(3, 0);
    for (int t = 1; t <= 6; t++) {
        for (int k = 0; k <= std::min(t, 3); k++) {
            for (int rep = 0; rep < 3; rep++) {
                LinearCode c = sample_code(3, t, k, rng);
                Complex brute = brute_z(c, o);
                EXPECT_LT(std::abs(brute.imag()), 1e-10);
                EXPECT_LT(std::abs(z_of_code_complex(c, o.betas) - brute), 1e-10) << t << " " << k;
            }
        }
    }
}

TEST(approx_rank, fidelity_identity_holds_densely) {
    std::mt19937_64 rng(32);
    struct Case {
        int d, tmax;
    };
    for (Case cs : {Case{3, 6}, Case{5, 3}}) {
        OrbitDecomposition o = orbit(cs.d, optimal_p(cs.d));
        for (int t = 1; t <= cs.tmax; t++) {
            CVector target = magic_tensor_power(cs.d, t);
            for (int k = 0; k <= t; k++) {
                LinearCode c = sample_code(cs.d, t, k, rng);
                double z = z_of_code(c, o.betas);
                Superposition l = build_approx_state(c, o, z);
                EXPECT_EQ(l.size(), c.size());
                EXPECT_NEAR(norm_squared(l), 1, 1e-10);
                CVector lv = dense_vector(l);
                Complex ov = 0;
                for (size_t i = 0; i < lv.size(); i++) {
                    ov += std::conj(lv[i]) * target[i];
                }
                double predicted = std::pow(cs.d, k) * std::pow(std::abs(o.alpha), 2 * t) / z;
                EXPECT_NEAR(std::norm(ov), predicted, 1e-10) << cs.d << " " << t << " " << k;
            }
        }
    }
}

TEST(approx_rank, find_code_certificates) {
    std::mt19937_64 rng(33);
    OrbitDecomposition o3 = orbit(3, 0);
    ApproxStateCert exact = find_code(1, 0.5, o3, rng);
    EXPECT_EQ(exact.code.k(), 1);
    EXPECT_NEAR(exact.fidelity, 1, 1e-12);

    ApproxStateCert cert = find_code(6, 0.05, o3, rng, 200);
    EXPECT_TRUE(cert.accepted);
    EXPECT_LE(cert.z, cert.threshold);
    EXPECT_GE(cert.fidelity, 1 - 2 * cert.delta);
    CVector lv = dense_vector(build_approx_state(cert.code, o3, cert.z));
    CVector target = magic_tensor_power(3, 6);
    Complex ov = 0;
    for (size_t i = 0; i < lv.size(); i++) {
        ov += std::conj(lv[i]) * target[i];
    }
    EXPECT_NEAR(std::norm(ov), cert.fidelity, 1e-10);
}

TEST(approx_rank, z_is_independent_of_thread_count) {
    std::mt19937_64 rng(34);
    OrbitDecomposition o = orbit(3, 0);
    LinearCode c = sample_code(3, 10, 7, rng);
    EXPECT_EQ(z_of_code_complex(c, o.betas, 1), z_of_code_complex(c, o.betas, 4));
}
