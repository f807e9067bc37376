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

#include <random>

#include "gtest/gtest.h"
#include "quditsim/dense.h"
#include "quditsim/error.h"
#include "quditsim/inner_product.h"
#include "quditsim/stabilizer_state.h"
#include "test_util.h"

using namespace quditsim;
using quditsim::testing::max_diff;

TEST(stabilizer_state, basis_and_plus_states) {
    auto s = StabilizerState::basis_state(3, {1, 2});
    CVector v = s.dense_vector();
    ASSERT_EQ(v.size(), 9u);
    // qudit 0 is the most significant digit
    EXPECT_EQ(v[1 * 3 + 2], Complex(1));
    auto plus = StabilizerState::plus_state(5, 2);
    for (const auto &a : plus.dense_vector()) {
        EXPECT_NEAR(std::abs(a - Complex(0.2)), 0, 1e-15);
    }
}

TEST(stabilizer_state, hadamard_on_zero_gives_uniform_superposition) {
    auto s = StabilizerState::basis_state(3, {0});
    s.apply_h(0);
    EXPECT_EQ(s.k(), 1u);
    for (const auto &a : s.dense_vector()) {
        EXPECT_NEAR(std::abs(a - Complex(1 / std::sqrt(3.0))), 0, 1e-15);
    }
}

TEST(stabilizer_state, h_squared_is_parity_and_h_fourth_is_identity) {
    for (int d : {3, 5, 7}) {
        auto s = StabilizerState::basis_state(d, {2});
        s.apply_h(0);
        s.apply_h(0);
        EXPECT_EQ(s.k(), 0u);
        EXPECT_EQ(s.h()[0], d - 2);
        EXPECT_EQ(s.amplitude(), ExactPhase::one(d));
        s.apply_h(0);
        s.apply_h(0);
        EXPECT_EQ(s.h()[0], 2);
        EXPECT_EQ(s.amplitude(), ExactPhase::one(d));
    }
}

TEST(stabilizer_state, random_gate_words_match_dense_oracle_with_global_phase) {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 500; trial++) {
        int d = trial % 2 ? 5 : 3;
        int n = 1 + trial % 3;
        int length = std::uniform_int_distribution<int>(1, 50)(rng);
        StabilizerState s = StabilizerState::basis_state(d, FpVector(n, 0));
        DenseState ref(d, n);
        for (int i = 0; i < length; i++) {
            Gate g = quditsim::testing::random_clifford_gate(d, n, rng);
            quditsim::testing::apply_to_state(s, g);
            ref.apply_gate(g);
            s.check_invariants();
        }
        ASSERT_LT(max_diff(s.dense_vector(), ref.amplitudes()), 1e-10) << "trial " << trial;
    }
}

TEST(stabilizer_state, amplitude_at_agrees_with_dense_vector) {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 50; trial++) {
        auto s = quditsim::testing::random_state(3, 3, 30, rng);
        CVector v = s.dense_vector();
        for (int idx = 0; idx < 27; idx++) {
            FpVector x = {idx / 9, (idx / 3) % 3, idx % 3};
            EXPECT_LT(std::abs(s.amplitude_at(x).to_complex() - v[idx]), 1e-12);
        }
    }
}

TEST(stabilizer_state, projections_match_dense_projectors) {
    std::mt19937_64 rng(6);
    for (int trial = 0; trial < 200; trial++) {
        int d = trial % 2 ? 5 : 3;
        auto s = quditsim::testing::random_state(d, 3, 25, rng);
        int q = static_cast<int>(rng() % 3);
        int v = static_cast<int>(rng() % d);
        DenseState ref(d, 3, s.dense_vector());
        ref.project(q, v);
        s.project_qudit(q, v);
        s.check_invariants();
        EXPECT_LT(max_diff(s.dense_vector(), ref.amplitudes()), 1e-12);

        // x_0 − x_2 ≡ v
        auto t = quditsim::testing::random_state(d, 3, 25, rng);
        CVector expected = t.dense_vector();
        for (size_t i = 0; i < expected.size(); i++) {
            int x0 = static_cast<int>(i / (d * d)), x2 = static_cast<int>(i % d);
            if (mod(x0 - x2, d) != v) {
                expected[i] = 0;
            }
        }
        t.project_linear({1, 0, d - 1}, v);
        EXPECT_LT(max_diff(t.dense_vector(), expected), 1e-12);
    }
}

TEST(stabilizer_state, inconsistent_projection_gives_exact_zero) {
    auto s = StabilizerState::basis_state(3, {1});
    s.project_qudit(0, 2);
    EXPECT_TRUE(s.is_zero());
    EXPECT_TRUE(inner(s, s).is_zero());
    s.apply_h(0);
    s.apply_p(0);
    EXPECT_TRUE(s.is_zero());
}

TEST(stabilizer_state, tensor_product) {
    std::mt19937_64 rng(8);
    auto a = quditsim::testing::random_state(3, 2, 20, rng);
    auto b = quditsim::testing::random_state(3, 1, 20, rng);
    EXPECT_LT(max_diff(tensor(a, b).dense_vector(), kron(a.dense_vector(), b.dense_vector())), 1e-12);
}

TEST(stabilizer_state, errors) {
    auto s = StabilizerState::plus_state(3, 2);
    try {
        s.apply_csum(1, 1);
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::SameQudit);
    }
    try {
        s.apply_h(2);
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::IndexOutOfRange);
    }
    auto big = StabilizerState::plus_state(3, 13);
    try {
        big.dense_vector();
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::CapExceeded);
    }
    EXPECT_THROW(StabilizerState::basis_state(9, {0}), Error);
}

TEST(stabilizer_state, x_form_converts_to_u_form) {
    // ω^{q̃(x)} on the affine space x = G·u + h equals ω^{q(u)} for the pulled-back form.
    std::mt19937_64 rng(9);
    int d = 5;
    for (int trial = 0; trial < 50; trial++) {
        QuadraticForm xf = QuadraticForm::zero(d, 3);
        for (int a = 0; a < 3; a++) {
            for (int b = a; b < 3; b++) {
                xf.q(a, b) = xf.q(b, a) = static_cast<int>(rng() % d);
            }
            xf.l[a] = static_cast<int>(rng() % d);
        }
        FpMatrix g(d, 3, 2);
        for (int r = 0; r < 3; r++) {
            for (int c = 0; c < 2; c++) {
                g(r, c) = static_cast<int>(rng() % d);
            }
        }
        FpVector h = {static_cast<int>(rng() % d), static_cast<int>(rng() % d), static_cast<int>(rng() % d)};
        QuadraticForm uf = x_form_to_u_form(xf, g, h);
        for (int u0 = 0; u0 < d; u0++) {
            for (int u1 = 0; u1 < d; u1++) {
                FpVector u = {u0, u1};
                FpVector x = g * u;
                for (int i = 0; i < 3; i++) {
                    x[i] = mod(x[i] + h[i], d);
                }
                EXPECT_EQ(uf.evaluate(u), xf.evaluate(x));
            }
        }
    }
}
