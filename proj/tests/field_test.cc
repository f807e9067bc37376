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

#include <complex>
#include <numbers>
#include <random>
#include <set>

#include "gtest/gtest.h"
#include "quditsim/error.h"
#include "quditsim/exact_phase.h"
#include "quditsim/field.h"
#include "quditsim/gauss_sum.h"

using namespace quditsim;

namespace {

std::complex<double> brute_gauss(int d, int f, int g) {
    std::complex<double> acc = 0;
    for (int j = 0; j < d; j++) {
        int64_t e = static_cast<int64_t>(f) * j * (j - 1) / 2 + static_cast<int64_t>(g) * j;
        acc += std::polar(1.0, 2 * std::numbers::pi * static_cast<double>(mod(e, d)) / d);
    }
    return acc;
}

int brute_inverse(int a, int d) {
    for (int b = 1; b < d; b++) {
        if (a * b % d == 1) {
            return b;
        }
    }
    return -1;
}

}  // namespace

TEST(field, primality) {
    EXPECT_TRUE(is_prime(3));
    EXPECT_TRUE(is_prime(97));
    EXPECT_FALSE(is_prime(1));
    EXPECT_FALSE(is_prime(91));
    EXPECT_THROW(FpScalar(1, 4), Error);
    EXPECT_THROW(FpScalar(1, 2), Error);
    EXPECT_THROW(require_odd_prime(9), Error);
    EXPECT_NO_THROW(FpScalar(-1, 11));
    EXPECT_EQ(FpScalar(-1, 11).value(), 10);
}

TEST(field, inverse_examples) {
    EXPECT_EQ(inverse(FpScalar(1, 5)).value(), 1);
    EXPECT_EQ(inverse(FpScalar(2, 5)).value(), brute_inverse(2, 5));
    EXPECT_EQ(inverse(FpScalar(2, 5)).value(), 3);
    EXPECT_EQ(inverse(FpScalar(3, 7)).value(), brute_inverse(3, 7));
    EXPECT_EQ(inverse(FpScalar(3, 7)).value(), 5);
    try {
        inverse(FpScalar(0, 7));
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::ZeroInverse);
    }
}

TEST(field, inverse_is_involution) {
    for (int d : {3, 5, 7, 11, 13, 97}) {
        for (int a = 1; a < d; a++) {
            FpScalar x(a, d);
            EXPECT_EQ((x * inverse(x)).value(), 1);
            EXPECT_EQ(inverse(inverse(x)), x);
        }
    }
}

TEST(field, legendre_examples) {
    EXPECT_EQ(legendre(FpScalar(0, 5)), 0);
    EXPECT_EQ(legendre(FpScalar(4, 5)), 1);
    EXPECT_EQ(legendre(FpScalar(2, 5)), -1);
}

TEST(field, legendre_matches_square_enumeration_and_is_multiplicative) {
    for (int d : {3, 5, 7, 11, 13}) {
        std::set<int> squares;
        for (int x = 1; x < d; x++) {
            squares.insert(x * x % d);
        }
        for (int a = 1; a < d; a++) {
            EXPECT_EQ(legendre(FpScalar(a, d)), squares.count(a) ? 1 : -1);
            for (int b = 1; b < d; b++) {
                EXPECT_EQ(legendre(FpScalar(a * b, d)), legendre(FpScalar(a, d)) * legendre(FpScalar(b, d)));
            }
        }
    }
}

TEST(gauss_sum, kronecker_branch) {
    auto r = quadratic_gauss_sum(FpScalar(0, 5), FpScalar(0, 5));
    EXPECT_TRUE(r.is_kronecker);
    EXPECT_NEAR(std::abs(r.value().to_complex() - std::complex<double>(5, 0)), 0, 1e-12);
    auto z = quadratic_gauss_sum(FpScalar(0, 5), FpScalar(2, 5));
    EXPECT_TRUE(z.is_kronecker);
    EXPECT_TRUE(z.value().is_zero());
    EXPECT_EQ(z.kronecker_arg.value(), 2);
}

TEST(gauss_sum, pure_square_sums) {
    // Σ_n e^{2πi n²/5} = √5 and Σ_n e^{2πi n²/3} = i√3.
    auto five = square_gauss_sum(5, 1).to_complex();
    EXPECT_NEAR(std::abs(five - std::complex<double>(std::sqrt(5.0), 0)), 0, 1e-12);
    auto three = square_gauss_sum(3, 1).to_complex();
    EXPECT_NEAR(std::abs(three - std::complex<double>(0, std::sqrt(3.0))), 0, 1e-12);
    // The same sums through the (f, g) parametrization: f·j(j−1)/2 + g·j = j² when f = 2, g = 1.
    EXPECT_NEAR(std::abs(quadratic_gauss_sum(FpScalar(2, 5), FpScalar(1, 5)).value().to_complex() - five), 0, 1e-12);
    EXPECT_NEAR(std::abs(quadratic_gauss_sum(FpScalar(2, 3), FpScalar(1, 3)).value().to_complex() - three), 0, 1e-12);
}

TEST(gauss_sum, closed_form_matches_brute_force_for_every_pair) {
    for (int d : {3, 5, 7, 11, 13}) {
        for (int f = 0; f < d; f++) {
            for (int g = 0; g < d; g++) {
                auto closed = quadratic_gauss_sum(FpScalar(f, d), FpScalar(g, d));
                EXPECT_EQ(closed.is_kronecker, f == 0);
                EXPECT_LT(std::abs(closed.value().to_complex() - brute_gauss(d, f, g)), 1e-12)
                    << "d=" << d << " f=" << f << " g=" << g;
            }
        }
    }
}

TEST(gauss_sum, exp_sum_quadratic_matches_brute_force) {
    for (int d : {3, 5, 7, 11}) {
        for (int a = 0; a < d; a++) {
            for (int b = 0; b < d; b++) {
                std::complex<double> acc = 0;
                for (int j = 0; j < d; j++) {
                    acc += std::polar(1.0, 2 * std::numbers::pi * ((a * j * j + b * j) % d) / d);
                }
                EXPECT_LT(std::abs(exp_sum_quadratic(d, a, b).to_complex() - acc), 1e-12);
            }
        }
    }
}

TEST(exact_phase, embeds_the_needed_roots) {
    int d = 3;
    auto omega = ExactPhase::omega(d, 1).to_complex();
    EXPECT_NEAR(std::abs(omega - std::polar(1.0, 2 * std::numbers::pi / 3)), 0, 1e-15);
    auto tau = ExactPhase::tau(d, 1).to_complex();
    EXPECT_NEAR(std::abs(tau - std::polar(1.0, (d + 1) * std::numbers::pi / d)), 0, 1e-15);
    EXPECT_EQ(ExactPhase::tau(d, 1).pow(d), ExactPhase::one(d));
    EXPECT_EQ(ExactPhase::imaginary_unit(d).pow(2), ExactPhase::sign(d, -1));
    EXPECT_EQ(ExactPhase::root(d, 8).pow(9), ExactPhase::one(d));
    EXPECT_EQ(ExactPhase::sqrt_d_power(d, 1).pow(2), ExactPhase::sqrt_d_power(d, 2));
}

TEST(exact_phase, multiplication_is_a_homomorphism) {
    std::mt19937_64 rng(7);
    for (int d : {3, 5, 7}) {
        std::uniform_int_distribution<int64_t> root(0, ExactPhase::granularity(d) - 1);
        std::uniform_int_distribution<int64_t> half(-20, 20);
        for (int trial = 0; trial < 200; trial++) {
            ExactPhase a = ExactPhase::root(d, root(rng)) * ExactPhase::sqrt_d_power(d, half(rng));
            ExactPhase b = ExactPhase::root(d, root(rng)) * ExactPhase::sqrt_d_power(d, half(rng));
            ExactPhase c = ExactPhase::root(d, root(rng)) * ExactPhase::sqrt_d_power(d, half(rng));
            EXPECT_EQ((a * b) * c, a * (b * c));
            EXPECT_EQ(a * b, b * a);
            auto lhs = (a * b * c).to_complex();
            auto rhs = a.to_complex() * b.to_complex() * c.to_complex();
            EXPECT_LT(std::abs(lhs - rhs), 1e-12 * std::abs(rhs));
            EXPECT_LT(std::abs(a.conj().to_complex() - std::conj(a.to_complex())), 1e-12 * a.magnitude());
        }
    }
}

TEST(exact_phase, large_half_powers_convert_accurately) {
    ExactPhase p = ExactPhase::sqrt_d_power(5, 64) * ExactPhase::root(5, 17);
    double expected = std::pow(5.0, 32);
    EXPECT_LT(std::abs(std::abs(p.to_complex()) - expected), 1e-12 * expected);
    EXPECT_TRUE((p * ExactPhase::zero(5)).is_zero());
}

TEST(linear_algebra, rank_and_solve) {
    FpMatrix a(5, 3, 3);
    a(0, 0) = 1, a(0, 1) = 2, a(0, 2) = 3;
    a(1, 0) = 2, a(1, 1) = 4, a(1, 2) = 1;
    a(2, 0) = 1, a(2, 1) = 0, a(2, 2) = 0;
    EXPECT_EQ(a.rank(), 2u);
    EXPECT_EQ(a.determinant(), 0);
    auto sol = solve_affine(a, {1, 2, 3});
    ASSERT_TRUE(sol.has_value());
    EXPECT_EQ(a * sol->particular, (FpVector{1, 2, 3}));
    ASSERT_EQ(sol->kernel.cols(), 1u);
    EXPECT_EQ(a * sol->kernel.col(0), (FpVector{0, 0, 0}));
    EXPECT_FALSE(solve_affine(a, {1, 0, 0}).has_value());
    EXPECT_EQ(FpMatrix::identity(7, 4).determinant(), 1);
}
