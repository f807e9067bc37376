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

#include "quditsim/gauss_sum.h"

namespace quditsim {

ExactPhase square_gauss_sum(int d, int a) {
    Zd f{d};
    a = f.reduce(a);
    ExactPhase out = ExactPhase::sqrt_d_power(d, 1) * ExactPhase::sign(d, legendre(a, d));
    if (d % 4 == 3) {
        out *= ExactPhase::imaginary_unit(d);
    }
    return out;
}

ExactPhase exp_sum_quadratic(int d, int a, int b) {
    Zd f{d};
    a = f.reduce(a);
    b = f.reduce(b);
    if (a == 0) {
        return b == 0 ? ExactPhase::sqrt_d_power(d, 2) : ExactPhase::zero(d);
    }
    // a j² + b j = a (j + b/(2a))² − b²/(4a)
    int shift = f.neg(f.mul(f.mul(b, b), f.inv(f.mul(4 % d, a))));
    return ExactPhase::omega(d, shift) * square_gauss_sum(d, a);
}

GaussSumResult quadratic_gauss_sum(const FpScalar &f, const FpScalar &g) {
    int d = f.modulus();
    Zd z{d};
    if (f.is_zero()) {
        ExactPhase v = g.is_zero() ? ExactPhase::sqrt_d_power(d, 2) : ExactPhase::zero(d);
        return GaussSumResult{v, true, g};
    }
    int half = z.half();
    int f_inv = z.inv(f.value());
    // ω^{−2̄f(f̄g−2̄)²}·(2̄f/d)·√d·(i when d ≡ 3 mod 4)
    int inner = z.sub(z.mul(f_inv, g.value()), half);
    int exponent = z.neg(z.mul(z.mul(half, f.value()), z.mul(inner, inner)));
    ExactPhase v = ExactPhase::omega(d, exponent) * ExactPhase::sign(d, legendre(z.mul(half, f.value()), d)) *
                   ExactPhase::sqrt_d_power(d, 1);
    if (d % 4 == 3) {
        v *= ExactPhase::imaginary_unit(d);
    }
    return GaussSumResult{v, false, FpScalar(0, d)};
}

}  // namespace quditsim
