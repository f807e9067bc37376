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

#ifndef QUDITSIM_EXACT_PHASE_H
#define QUDITSIM_EXACT_PHASE_H

#include <complex>
#include <cstdint>
#include <string>

#include "quditsim/field.h"

namespace quditsim {

/// An exactly tracked complex number d^{s/2} · e^{2πi r / (8d²)}, or zero.
///
/// The root granularity 8d² embeds ω = e^{2πi/d}, τ = ω^{2̄}, e^{2πi/d²}, i and
/// -1 simultaneously, so every amplitude produced by Clifford gates, Gauss sums
/// and the qudit T gate stays in this group. Multiplication is exact.
class ExactPhase {
   public:
    /// The number 1 for dimension d.
    explicit ExactPhase(int d);

    static ExactPhase one(int d) {
        return ExactPhase(d);
    }
    static ExactPhase zero(int d);
    /// e^{2πi·exponent/(8d²)}
    static ExactPhase root(int d, int64_t exponent);
    /// ω^k with ω = e^{2πi/d}.
    static ExactPhase omega(int d, int64_t k);
    /// τ^k with τ = e^{(d+1)πi/d}.
    static ExactPhase tau(int d, int64_t k);
    /// d^{s/2}
    static ExactPhase sqrt_d_power(int d, int64_t s);
    /// ±1
    static ExactPhase sign(int d, int s);
    static ExactPhase imaginary_unit(int d);

    static int64_t granularity(int d) {
        return 8LL * d * d;
    }

    int d() const {
        return d_;
    }
    bool is_zero() const {
        return zero_;
    }
    int64_t root_exponent() const {
        return root_;
    }
    int64_t half_power() const {
        return half_power_;
    }

    ExactPhase operator*(const ExactPhase &other) const;
    ExactPhase &operator*=(const ExactPhase &other);
    ExactPhase conj() const;
    ExactPhase pow(int64_t e) const;
    bool operator==(const ExactPhase &other) const;

    std::complex<double> to_complex() const;
    double magnitude() const;

    std::string str() const;

   private:
    void normalize();

    int d_;
    int64_t root_ = 0;
    int64_t half_power_ = 0;
    bool zero_ = false;
};

}  // namespace quditsim

#endif
