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

#include "quditsim/inner_product.h"

#include "quditsim/error.h"
#include "quditsim/gauss_sum.h"

namespace quditsim {

AffineIntersection intersect_affine(const FpMatrix &g1, const FpVector &h1, const FpMatrix &g2, const FpVector &h2) {
    int d = g1.d();
    Zd f{d};
    size_t n = g1.rows();
    if (g2.rows() != n || h1.size() != n || h2.size() != n) {
        throw Error(ErrorCode::InvalidArgument, "intersecting affine spaces of different ambient dimension");
    }
    size_t k1 = g1.cols(), k2 = g2.cols();
    // [G1 | −G2]·(u1; u2) = h2 − h1
    FpMatrix a(d, n, k1 + k2);
    FpVector b(n);
    for (size_t r = 0; r < n; r++) {
        for (size_t c = 0; c < k1; c++) {
            a(r, c) = g1(r, c);
        }
        for (size_t c = 0; c < k2; c++) {
            a(r, k1 + c) = f.neg(g2(r, c));
        }
        b[r] = f.sub(h2[r], h1[r]);
    }
    AffineIntersection out;
    auto sol = solve_affine(a, b);
    if (!sol) {
        return out;
    }
    out.empty = false;
    size_t m = sol->kernel.cols();
    out.s1 = FpMatrix(d, k1, m);
    out.s2 = FpMatrix(d, k2, m);
    out.e1.assign(sol->particular.begin(), sol->particular.begin() + static_cast<std::ptrdiff_t>(k1));
    out.e2.assign(sol->particular.begin() + static_cast<std::ptrdiff_t>(k1), sol->particular.end());
    for (size_t c = 0; c < m; c++) {
        for (size_t r = 0; r < k1; r++) {
            out.s1(r, c) = sol->kernel(r, c);
        }
        for (size_t r = 0; r < k2; r++) {
            out.s2(r, c) = sol->kernel(k1 + r, c);
        }
    }
    out.g = g1 * out.s1;
    out.h = g1 * out.e1;
    for (size_t r = 0; r < n; r++) {
        out.h[r] = f.add(out.h[r], h1[r]);
    }
    return out;
}

Diagonalization diagonalize_quadratic(const FpMatrix &q) {
    int d = q.d();
    Zd f{d};
    size_t k = q.rows();
    FpMatrix a = q;
    FpMatrix p = FpMatrix::identity(d, k);
    auto swap = [&](size_t i, size_t j) {
        a.swap_cols(i, j);
        for (size_t c = 0; c < k; c++) {
            std::swap(a(i, c), a(j, c));
        }
        p.swap_cols(i, j);
    };
    // A ← EᵀAE for E = I + factor·e_src e_dstᵀ, i.e. col/row dst += factor·col/row src.
    auto add = [&](size_t dst, size_t src, int factor) {
        a.add_col_multiple(dst, src, factor);
        for (size_t c = 0; c < k; c++) {
            a(dst, c) = f.add(a(dst, c), f.mul(factor, a(src, c)));
        }
        p.add_col_multiple(dst, src, factor);
    };
    for (size_t i = 0; i < k; i++) {
        if (a(i, i) == 0) {
            size_t j = i + 1;
            while (j < k && a(i, j) == 0) {
                j++;
            }
            if (j == k) {
                continue;
            }
            if (a(j, j) != 0) {
                swap(i, j);
            } else {
                // a_ii' = a_ii + 2a_ij + a_jj = 2a_ij ≠ 0
                add(i, j, 1);
            }
        }
        int inv = f.inv(a(i, i));
        for (size_t j = i + 1; j < k; j++) {
            int factor = f.neg(f.mul(a(j, i), inv));
            if (factor != 0) {
                add(j, i, factor);
            }
        }
    }
    Diagonalization out{std::move(p), FpVector(k)};
    for (size_t i = 0; i < k; i++) {
        out.lambda[i] = a(i, i);
    }
    return out;
}

ExactPhase inner(const StabilizerState &a, const StabilizerState &b) {
    int d = a.d();
    if (b.d() != d || b.n() != a.n()) {
        throw Error(ErrorCode::InvalidArgument, "inner product of states on different spaces");
    }
    if (a.is_zero() || b.is_zero()) {
        return ExactPhase::zero(d);
    }
    AffineIntersection meet = intersect_affine(a.g(), a.h(), b.g(), b.h());
    if (meet.empty) {
        return ExactPhase::zero(d);
    }
    // Σ_w ω^{qa(S1 w + e1) − qb(S2 w + e2)} over the intersection.
    QuadraticForm diff = a.form().pullback(meet.s1, meet.e1) - b.form().pullback(meet.s2, meet.e2);
    Diagonalization diag = diagonalize_quadratic(diff.q);
    Zd f{d};
    size_t m = diff.vars();
    ExactPhase result = a.amplitude() * b.amplitude().conj() * ExactPhase::omega(d, diff.constant);
    for (size_t i = 0; i < m; i++) {
        int64_t lin = 0;
        for (size_t r = 0; r < m; r++) {
            lin += static_cast<int64_t>(diff.l[r]) * diag.p(r, i);
        }
        result *= exp_sum_quadratic(d, f.mul(f.half(), diag.lambda[i]), f.reduce(lin));
        if (result.is_zero()) {
            break;
        }
    }
    return result;
}

}  // namespace quditsim
