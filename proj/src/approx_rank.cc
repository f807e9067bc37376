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

#include "quditsim/approx_rank.h"

#include <cmath>

#include "parallel.h"
#include "quditsim/error.h"

namespace quditsim {

LinearCode::LinearCode(int d, int t, FpMatrix g_tilde)
    : d_(d), t_(t), k_(static_cast<int>(g_tilde.rows())), g_tilde_(std::move(g_tilde)) {
    require_odd_prime(d);
    if (t < 0 || k_ > t || g_tilde_.cols() != static_cast<size_t>(t - k_) || g_tilde_.d() != d) {
        throw Error(ErrorCode::InvalidArgument, "standard-form generator has the wrong shape");
    }
}

LinearCode LinearCode::full(int d, int t) {
    return LinearCode(d, t, FpMatrix(d, t, 0));
}

LinearCode LinearCode::trivial(int d, int t) {
    return LinearCode(d, t, FpMatrix(d, 0, t));
}

uint64_t LinearCode::size() const {
    uint64_t s = 1;
    for (int i = 0; i < k_; i++) {
        s *= static_cast<uint64_t>(d_);
    }
    return s;
}

FpMatrix LinearCode::generator() const {
    FpMatrix g(d_, k_, t_);
    for (int i = 0; i < k_; i++) {
        g(i, i) = 1;
        for (int c = 0; c < t_ - k_; c++) {
            g(i, k_ + c) = g_tilde_(i, c);
        }
    }
    return g;
}

FpVector LinearCode::encode(const FpVector &message) const {
    if (message.size() != static_cast<size_t>(k_)) {
        throw Error(ErrorCode::InvalidArgument, "message length differs from code dimension");
    }
    return generator().transpose() * message;
}

void LinearCode::for_each_codeword(const std::function<void(const FpVector &)> &visit, uint64_t first,
                                   uint64_t last) const {
    last = std::min(last, size());
    if (first >= last) {
        return;
    }
    Zd f{d_};
    FpVector message(k_, 0);
    uint64_t rest = first;
    for (int i = k_ - 1; i >= 0; i--) {
        message[i] = static_cast<int>(rest % d_);
        rest /= d_;
    }
    FpVector word = encode(message);
    for (uint64_t index = first;;) {
        visit(word);
        if (++index == last) {
            return;
        }
        // Each digit that ticks adds its generator row once, including on wrap.
        for (int i = k_ - 1; i >= 0; i--) {
            word[i] = f.add(word[i], 1);
            for (int c = 0; c < t_ - k_; c++) {
                word[k_ + c] = f.add(word[k_ + c], g_tilde_(i, c));
            }
            if (++message[i] < d_) {
                break;
            }
            message[i] = 0;
        }
    }
}

std::vector<FpVector> LinearCode::codewords() const {
    std::vector<FpVector> out;
    for_each_codeword([&](const FpVector &w) { out.push_back(w); });
    return out;
}

KChoice choose_k(int t, double delta, double alpha_abs, int d) {
    if (!(delta > 0 && delta < 1)) {
        throw Error(ErrorCode::InvalidArgument, "delta must lie in (0, 1)");
    }
    if (!(alpha_abs > 0 && alpha_abs < 1)) {
        throw Error(ErrorCode::InvalidArgument, "|alpha| must lie in (0, 1)");
    }
    if (t < 0) {
        throw Error(ErrorCode::InvalidArgument, "negative T count");
    }
    double logd = std::log(static_cast<double>(d));
    double raw = 1 - 2 * t * std::log(alpha_abs) / logd - std::log(delta) / logd;
    auto unclamped = static_cast<int64_t>(std::ceil(raw - 1e-9));
    KChoice out{static_cast<int>(std::clamp<int64_t>(unclamped, 0, t)), unclamped, unclamped > t || unclamped < 0};
    return out;
}

int choose_k_strict(int t, double delta, double alpha_abs, int d) {
    KChoice c = choose_k(t, delta, alpha_abs, d);
    if (c.unclamped > t) {
        throw Error(ErrorCode::InfeasiblePrecision,
                    "delta=" + std::to_string(delta) + " needs k=" + std::to_string(c.unclamped) + " > t=" +
                        std::to_string(t) + "; smallest reachable delta is " + std::to_string(delta_max(t, alpha_abs, d)));
    }
    return c.k;
}

double delta_max(int t, double alpha_abs, int d) {
    double logd = std::log(static_cast<double>(d));
    return std::pow(static_cast<double>(d), 1 - t * (1 + 2 * std::log(alpha_abs) / logd));
}

LinearCode sample_code(int d, int t, int k, std::mt19937_64 &rng) {
    if (k < 0 || k > t) {
        throw Error(ErrorCode::InvalidArgument, "code dimension outside [0, t]");
    }
    FpMatrix g(d, k, t - k);
    std::uniform_int_distribution<int> digit(0, d - 1);
    for (int r = 0; r < k; r++) {
        for (int c = 0; c < t - k; c++) {
            g(r, c) = digit(rng);
        }
    }
    return LinearCode(d, t, std::move(g));
}

Complex z_of_code_complex(const LinearCode &code, const std::vector<Complex> &betas, int threads) {
    int d = code.d();
    if (betas.size() != static_cast<size_t>(d)) {
        throw Error(ErrorCode::InvalidArgument, "need one beta per orbit element");
    }
    std::vector<Complex> weight(d);
    weight[0] = 1;
    for (int v = 1; v < d; v++) {
        weight[v] = betas[v] / std::sqrt(static_cast<double>(d));
    }
    // Fixed block partition so the reduction order does not depend on `threads`.
    uint64_t total = code.size();
    uint64_t blocks = std::min<uint64_t>(total, 64);
    uint64_t per = (total + blocks - 1) / blocks;
    std::vector<Complex> partial(blocks);
    internal::parallel_for(blocks, threads, [&](size_t b) {
        Complex acc = 0;
        code.for_each_codeword(
            [&](const FpVector &w) {
                Complex term = 1;
                for (int x : w) {
                    term *= weight[x];
                }
                acc += term;
            },
            b * per, std::min(total, (b + 1) * per));
        partial[b] = acc;
    });
    Complex z = 0;
    for (const auto &p : partial) {
        z += p;
    }
    return z;
}

double z_of_code(const LinearCode &code, const std::vector<Complex> &betas, int threads) {
    Complex z = z_of_code_complex(code, betas, threads);
    if (std::abs(z.imag()) > 1e-10) {
        throw Error(ErrorCode::NonRealZ, "Z(L) has imaginary part " + std::to_string(z.imag()));
    }
    return z.real();
}

ApproxStateCert find_code(int t, double delta, const OrbitDecomposition &magic, std::mt19937_64 &rng, int max_trials,
                          int threads) {
    int d = magic.d;
    double a = std::abs(magic.alpha);
    int k = choose_k(t, delta, a, d).k;
    if (max_trials <= 0) {
        max_trials = static_cast<int>(std::ceil(1 / delta));
    }
    double signal = std::pow(static_cast<double>(d), k) * std::pow(a, 2 * t);
    double threshold = (1 + signal) * (1 + delta);
    for (int trial = 1; trial <= max_trials; trial++) {
        LinearCode code = sample_code(d, t, k, rng);
        double z = z_of_code(code, magic.betas, threads);
        if (z <= threshold) {
            return {std::move(code), z, signal / z, delta, threshold, true, trial};
        }
    }
    throw Error(ErrorCode::NoCodeFound,
                "no code with Z <= " + std::to_string(threshold) + " in " + std::to_string(max_trials) + " draws");
}

Superposition build_approx_state(const LinearCode &code, const OrbitDecomposition &magic, double z) {
    if (!(z > 0)) {
        throw Error(ErrorCode::InvalidArgument, "Z(L) must be positive");
    }
    Complex coefficient = 1 / std::sqrt(static_cast<double>(code.size()) * z);
    Superposition out;
    out.reserve(code.size());
    code.for_each_codeword([&](const FpVector &w) {
        if (w.empty()) {
            out.push_back({coefficient, StabilizerState::basis_state(magic.d, {})});
            return;
        }
        StabilizerState s = magic.states[w[0]];
        for (size_t l = 1; l < w.size(); l++) {
            s = tensor(s, magic.states[w[l]]);
        }
        out.push_back({coefficient, std::move(s)});
    });
    return out;
}

}  // namespace quditsim
