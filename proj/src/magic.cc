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

#include "quditsim/magic.h"

#include <cmath>

#include "quditsim/error.h"
#include "quditsim/inner_product.h"

namespace quditsim {

namespace {

int64_t binomial(int64_t n, int64_t k) {
    if (k < 0 || k > n) {
        return 0;
    }
    int64_t r = 1;
    for (int64_t i = 1; i <= k; i++) {
        r = r * (n - k + i) / i;
    }
    return r;
}

int64_t ipow(int64_t b, int e) {
    int64_t r = 1;
    for (int i = 0; i < e; i++) {
        r *= b;
    }
    return r;
}

/// Root exponent (units of 2π/8d²) of e^{2πi λ / d^m}.
int64_t lambda_root(int d, int m, int64_t lambda) {
    return lambda * (ExactPhase::granularity(d) / ipow(d, m));
}

ExactPhase c_phase(int d) {
    MagicGateSpec spec = build_M(d);
    return spec.diagonal[1] * spec.diagonal[0].conj();
}

}  // namespace

DenseMatrix MagicGateSpec::dense() const {
    CVector diag;
    for (const auto &e : diagonal) {
        diag.push_back(e.to_complex());
    }
    return DenseMatrix::diagonal(diag);
}

MagicGateSpec build_M(int d) {
    if (d < 3 || !is_prime(d)) {
        throw Error(ErrorCode::UnsupportedDimension, "M_d needs an odd prime dimension, got " + std::to_string(d));
    }
    MagicGateSpec spec{d, d == 3 ? 2 : 1, {}, {}};
    int64_t dm = ipow(d, spec.m);
    for (int j = 0; j < d; j++) {
        int64_t raw = d * binomial(j, 3) - j * binomial(d, 3) + binomial(d + 1, 4);
        // d^{m−2} is 1 for d = 3 and 1/d otherwise; the bracket is divisible by d when d > 3.
        int64_t lambda = spec.m == 2 ? raw : raw / d;
        lambda = ((lambda % dm) + dm) % dm;
        spec.lambdas.push_back(lambda);
        spec.diagonal.push_back(ExactPhase::root(d, lambda_root(d, spec.m, lambda)));
    }
    return spec;
}

std::vector<ExactPhase> build_Uv(int d, int z_prime, int gamma_prime, int epsilon_prime) {
    require_odd_prime(d);
    std::vector<ExactPhase> out;
    if (d == 3) {
        // ξ = e^{2πi/9}, exponents mod 9
        int64_t v[3] = {0, 6LL * z_prime + 2LL * gamma_prime + 3LL * epsilon_prime,
                        6LL * z_prime + gamma_prime + 6LL * epsilon_prime};
        for (int64_t e : v) {
            out.push_back(ExactPhase::root(d, 8 * (((e % 9) + 9) % 9)));
        }
        return out;
    }
    Zd f{d};
    int inv12 = f.inv(f.reduce(12));
    for (int k = 0; k < d; k++) {
        int64_t inner = gamma_prime + static_cast<int64_t>(k) * (6LL * z_prime + (2LL * k - 3) * gamma_prime);
        int vk = f.reduce(static_cast<int64_t>(inv12) * f.reduce(static_cast<int64_t>(k) * f.reduce(inner)) +
                          static_cast<int64_t>(k) * epsilon_prime);
        out.push_back(ExactPhase::omega(d, vk));
    }
    return out;
}

OrbitClifford build_C(int d) {
    ExactPhase phase = c_phase(d);
    CliffordElement xp = clifford_compose(CliffordElement::pauli_x(d), CliffordElement::phase_gate(d));
    return {CliffordElement(xp.f(), xp.chi(), xp.phase() * phase), phase};
}

void apply_c_power(StabilizerState &state, int q, int j) {
    int d = state.d();
    if (j < 0) {
        throw Error(ErrorCode::InvalidArgument, "negative power of C");
    }
    if (j == 0) {
        return;
    }
    ExactPhase phase = c_phase(d);
    for (int i = 0; i < j; i++) {
        state.apply_p(q);
        state.apply_x(q);
    }
    state.scale(phase.pow(j));
}

Complex alpha(int d, int p) {
    MagicGateSpec spec = build_M(d);
    Complex acc = 0;
    for (int j = 0; j < d; j++) {
        acc += (ExactPhase::omega(d, -static_cast<int64_t>(p) * j) * spec.diagonal[j]).to_complex();
    }
    return acc / static_cast<double>(d);
}

DepressedAlpha alpha_depressed(int d, int p) {
    require_odd_prime(d);
    if (d == 3) {
        throw Error(ErrorCode::UnsupportedDimension, "the depressed cubic form needs 6 invertible mod d");
    }
    Zd f{d};
    int psi = f.reduce(static_cast<int64_t>(d) * d - 3LL * d + 3 + 6LL * p);
    int inv6 = f.inv(6);
    Complex s = 0;
    for (int j = 0; j < d; j++) {
        int e = f.mul(inv6, f.mul(j, f.sub(f.mul(j, j), psi)));
        s += ExactPhase::omega(d, e).to_complex();
    }
    s /= static_cast<double>(d);
    ExactPhase phase = ExactPhase::omega(d, binomial(d, 4) / d - p);
    return {phase, s, psi};
}

int optimal_p(int d) {
    int best = 0;
    double best_abs = -1;
    for (int p = 0; p < d; p++) {
        double a = std::abs(alpha(d, p));
        if (a > best_abs + 1e-12) {
            best = p;
            best_abs = a;
        }
    }
    return best;
}

ExactPhase beta(int d, int j, int p) {
    require_odd_prime(d);
    j = mod(j, d);
    p = mod(p, d);
    if (j == 0) {
        return ExactPhase::one(d);
    }
    if (d == 3) {
        if (p == 0) {
            // e^{∓iπ/18}
            return ExactPhase::root(d, j == 1 ? -2 : 2);
        }
        StabilizerState base = StabilizerState::plus_state(d, 1);
        base.apply_z(0, p);
        StabilizerState moved = base;
        apply_c_power(moved, 0, j);
        return ExactPhase::sqrt_d_power(d, 1) * inner(moved, base);
    }
    Zd f{d};
    int half = f.half();
    int cube = f.sub(f.inv(6), f.mul(half, f.mul(half, half)));
    int64_t e = static_cast<int64_t>(f.mul(cube, f.mul(j, f.mul(j, j)))) - static_cast<int64_t>(f.add(p, half)) * j;
    ExactPhase out = ExactPhase::omega(d, e) * ExactPhase::sign(d, legendre(2LL * j, d));
    if (d % 4 == 3) {
        out *= ExactPhase::imaginary_unit(d);
    }
    return out;
}

OrbitDecomposition orbit(int d, int p) {
    require_odd_prime(d);
    p = mod(p, d);
    OrbitDecomposition out{d, p, alpha(d, p), 1, 0, {}, {}};
    double mag = std::abs(out.alpha);
    if (mag < 1e-12) {
        throw Error(ErrorCode::InvalidArgument, "alpha(" + std::to_string(d) + ", " + std::to_string(p) + ") vanishes");
    }
    out.prefactor = out.alpha / (d * mag * mag);
    if (d > 3) {
        Complex ref = ExactPhase::omega(d, binomial(d, 4) / d - p).to_complex();
        out.sign = std::real(out.alpha / (ref * mag)) < 0 ? -1 : 1;
    }
    StabilizerState base = StabilizerState::plus_state(d, 1);
    base.apply_z(0, p);
    for (int j = 0; j < d; j++) {
        StabilizerState s = base;
        apply_c_power(s, 0, j);
        out.states.push_back(std::move(s));
        out.betas.push_back(beta(d, j, p).to_complex());
    }
    return out;
}

}  // namespace quditsim
