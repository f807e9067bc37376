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

#include "quditsim/stabilizer_state.h"

#include "quditsim/error.h"
#include "quditsim/gauss_sum.h"

namespace quditsim {

QuadraticForm QuadraticForm::zero(int d, size_t k) {
    return {FpMatrix(d, k, k), FpVector(k, 0), 0};
}

int QuadraticForm::evaluate(const FpVector &u) const {
    Zd f{d()};
    int64_t quad = 0;
    size_t k = vars();
    for (size_t a = 0; a < k; a++) {
        if (u[a] == 0) {
            continue;
        }
        int64_t row = 0;
        for (size_t b = 0; b < k; b++) {
            row += static_cast<int64_t>(q(a, b)) * u[b];
        }
        quad += f.reduce(row) * static_cast<int64_t>(u[a]);
    }
    return f.reduce(static_cast<int64_t>(f.half()) * f.reduce(quad) + dot(f, l, u) + constant);
}

QuadraticForm QuadraticForm::pullback(const FpMatrix &s, const FpVector &e) const {
    Zd f{d()};
    FpMatrix qs = q * s;
    FpMatrix st = s.transpose();
    QuadraticForm out;
    out.q = st * qs;
    // L' = eᵀQS + LS
    FpVector eq = q * e;
    FpVector lsum(s.cols(), 0);
    for (size_t c = 0; c < s.cols(); c++) {
        int64_t acc = 0;
        for (size_t r = 0; r < s.rows(); r++) {
            acc += static_cast<int64_t>(eq[r] + l[r]) * s(r, c);
        }
        lsum[c] = f.reduce(acc);
    }
    out.l = std::move(lsum);
    out.constant = f.reduce(static_cast<int64_t>(f.half()) * dot(f, e, eq) + dot(f, l, e) + constant);
    return out;
}

QuadraticForm QuadraticForm::operator-(const QuadraticForm &other) const {
    Zd f{d()};
    QuadraticForm out = *this;
    for (size_t a = 0; a < vars(); a++) {
        for (size_t b = 0; b < vars(); b++) {
            out.q(a, b) = f.sub(q(a, b), other.q(a, b));
        }
        out.l[a] = f.sub(l[a], other.l[a]);
    }
    out.constant = f.sub(constant, other.constant);
    return out;
}

StabilizerState::StabilizerState(FpMatrix g, FpVector h, QuadraticForm form, ExactPhase amplitude)
    : g_(std::move(g)), h_(std::move(h)), form_(std::move(form)), amp_(amplitude) {
    if (form_.constant != 0) {
        amp_ *= ExactPhase::omega(d(), form_.constant);
        form_.constant = 0;
    }
    check_invariants();
}

StabilizerState StabilizerState::basis_state(int d, const FpVector &x) {
    require_odd_prime(d);
    FpVector h(x.size());
    for (size_t i = 0; i < x.size(); i++) {
        h[i] = mod(x[i], d);
    }
    return StabilizerState(FpMatrix(d, x.size(), 0), std::move(h), QuadraticForm::zero(d, 0), ExactPhase::one(d));
}

StabilizerState StabilizerState::plus_state(int d, int n) {
    require_odd_prime(d);
    return StabilizerState(FpMatrix::identity(d, n), FpVector(n, 0), QuadraticForm::zero(d, n),
                           ExactPhase::sqrt_d_power(d, -n));
}

void StabilizerState::require_qudit(int q) const {
    if (q < 0 || q >= n()) {
        throw Error(ErrorCode::IndexOutOfRange, "qudit " + std::to_string(q) + " out of range for n=" + std::to_string(n()));
    }
}

void StabilizerState::apply_x(int q, int power) {
    require_qudit(q);
    h_[q] = mod(static_cast<int64_t>(h_[q]) + power, d());
}

void StabilizerState::apply_z(int q, int power) {
    require_qudit(q);
    Zd f{d()};
    int a = f.reduce(power);
    for (size_t c = 0; c < k(); c++) {
        form_.l[c] = f.add(form_.l[c], f.mul(a, g_(q, c)));
    }
    amp_ *= ExactPhase::omega(d(), static_cast<int64_t>(a) * h_[q]);
}

void StabilizerState::apply_p(int q, int power) {
    require_qudit(q);
    Zd f{d()};
    int a = f.reduce(power);
    int hq = h_[q];
    // a·2̄·x(x−1) with x = g·u + h_q
    int lin = f.sub(f.mul(a, hq), f.mul(a, f.half()));
    for (size_t r = 0; r < k(); r++) {
        int gr = g_(q, r);
        if (gr == 0) {
            continue;
        }
        for (size_t c = 0; c < k(); c++) {
            form_.q(r, c) = f.add(form_.q(r, c), f.mul(f.mul(a, gr), g_(q, c)));
        }
        form_.l[r] = f.add(form_.l[r], f.mul(lin, gr));
    }
    amp_ *= ExactPhase::omega(d(), f.mul(f.mul(a, f.half()), f.sub(f.mul(hq, hq), hq)));
}

void StabilizerState::apply_csum(int control, int target, int power) {
    require_qudit(control);
    require_qudit(target);
    if (control == target) {
        throw Error(ErrorCode::SameQudit, "CSUM control and target coincide");
    }
    Zd f{d()};
    int a = f.reduce(power);
    for (size_t c = 0; c < k(); c++) {
        g_(target, c) = f.add(g_(target, c), f.mul(a, g_(control, c)));
    }
    h_[target] = f.add(h_[target], f.mul(a, h_[control]));
}

void StabilizerState::apply_h(int q) {
    require_qudit(q);
    if (is_zero()) {
        return;
    }
    // H|x⟩ = d^{-1/2} Σ_v ω^{v·x_q}|…v…⟩: the new variable v couples to g·u + h_q.
    size_t kk = k();
    FpVector gq = g_.row(q);
    FpVector col(n(), 0);
    col[q] = 1;
    for (size_t c = 0; c < kk; c++) {
        g_(q, c) = 0;
    }
    g_.append_col(col);
    FpMatrix nq(d(), kk + 1, kk + 1);
    for (size_t r = 0; r < kk; r++) {
        for (size_t c = 0; c < kk; c++) {
            nq(r, c) = form_.q(r, c);
        }
        nq(r, kk) = gq[r];
        nq(kk, r) = gq[r];
    }
    form_.q = std::move(nq);
    form_.l.push_back(h_[q]);
    h_[q] = 0;
    amp_ *= ExactPhase::sqrt_d_power(d(), -1);
    canonicalize();
}

void StabilizerState::scale(const ExactPhase &factor) {
    amp_ *= factor;
}

void StabilizerState::project_qudit(int q, int v) {
    require_qudit(q);
    FpVector c(n(), 0);
    c[q] = 1;
    project_linear(c, v);
}

void StabilizerState::project_linear(const FpVector &c, int v) {
    if (static_cast<int>(c.size()) != n()) {
        throw Error(ErrorCode::InvalidArgument, "projection coefficient length mismatch");
    }
    if (is_zero()) {
        return;
    }
    Zd f{d()};
    FpVector r(k(), 0);
    for (size_t col = 0; col < k(); col++) {
        int64_t acc = 0;
        for (int i = 0; i < n(); i++) {
            acc += static_cast<int64_t>(c[i]) * g_(i, col);
        }
        r[col] = f.reduce(acc);
    }
    int rhs = f.sub(f.reduce(v), f.reduce(dot(f, c, h_)));
    size_t pivot = 0;
    while (pivot < r.size() && r[pivot] == 0) {
        pivot++;
    }
    if (pivot == r.size()) {
        if (rhs != 0) {
            amp_ = ExactPhase::zero(d());
        }
        return;
    }
    // u_pivot = r̄_p (rhs − Σ_{m≠p} r_m u_m)
    size_t kk = k();
    int rinv = f.inv(r[pivot]);
    FpMatrix s(d(), kk, kk - 1);
    FpVector e(kk, 0);
    e[pivot] = f.mul(rinv, rhs);
    for (size_t m = 0, w = 0; m < kk; m++) {
        if (m == pivot) {
            continue;
        }
        s(m, w) = 1;
        s(pivot, w) = f.neg(f.mul(rinv, r[m]));
        w++;
    }
    substitute(s, e);
}

void StabilizerState::substitute(const FpMatrix &s, const FpVector &e) {
    Zd f{d()};
    FpVector ge = g_ * e;
    for (size_t i = 0; i < h_.size(); i++) {
        h_[i] = f.add(h_[i], ge[i]);
    }
    g_ = g_ * s;
    form_ = form_.pullback(s, e);
    if (form_.constant != 0) {
        amp_ *= ExactPhase::omega(d(), form_.constant);
        form_.constant = 0;
    }
}

void StabilizerState::drop_variable(size_t j) {
    g_.remove_col(j);
    form_.q.remove_col(j);
    form_.q.remove_row(j);
    form_.l.erase(form_.l.begin() + static_cast<std::ptrdiff_t>(j));
}

void StabilizerState::sum_out(size_t j) {
    Zd f{d()};
    int qjj = form_.q(j, j);
    int lj = form_.l[j];
    FpVector coupling = form_.q.row(j);
    drop_variable(j);
    coupling.erase(coupling.begin() + static_cast<std::ptrdiff_t>(j));
    size_t kk = k();
    if (qjj != 0) {
        // Σ_u ω^{2̄q_jj u² + u(l_j + c·w)} = G(2̄q_jj)·ω^{−2̄ q̄_jj (l_j + c·w)²}
        int inv = f.inv(qjj);
        amp_ *= square_gauss_sum(d(), f.mul(f.half(), qjj));
        amp_ *= ExactPhase::omega(d(), f.neg(f.mul(f.mul(f.half(), inv), f.mul(lj, lj))));
        for (size_t a = 0; a < kk; a++) {
            if (coupling[a] == 0) {
                continue;
            }
            int ca = f.mul(inv, coupling[a]);
            for (size_t b = 0; b < kk; b++) {
                form_.q(a, b) = f.sub(form_.q(a, b), f.mul(ca, coupling[b]));
            }
            form_.l[a] = f.sub(form_.l[a], f.mul(ca, lj));
        }
        return;
    }
    size_t pivot = 0;
    while (pivot < kk && coupling[pivot] == 0) {
        pivot++;
    }
    if (pivot == kk) {
        if (lj == 0) {
            amp_ *= ExactPhase::sqrt_d_power(d(), 2);
        } else {
            amp_ = ExactPhase::zero(d());
        }
        return;
    }
    // Σ_u ω^{u(l_j + c·w)} = d·[c·w = −l_j]
    amp_ *= ExactPhase::sqrt_d_power(d(), 2);
    int cinv = f.inv(coupling[pivot]);
    FpMatrix s(d(), kk, kk - 1);
    FpVector e(kk, 0);
    e[pivot] = f.neg(f.mul(cinv, lj));
    for (size_t m = 0, w = 0; m < kk; m++) {
        if (m == pivot) {
            continue;
        }
        s(m, w) = 1;
        s(pivot, w) = f.neg(f.mul(cinv, coupling[m]));
        w++;
    }
    substitute(s, e);
}

void StabilizerState::canonicalize() {
    Zd f{d()};
    while (!is_zero()) {
        size_t kk = k();
        FpMatrix work = g_;
        FpMatrix t = FpMatrix::identity(d(), kk);
        size_t rank = 0;
        for (int r = 0; r < n() && rank < kk; r++) {
            size_t c = rank;
            while (c < kk && work(r, c) == 0) {
                c++;
            }
            if (c == kk) {
                continue;
            }
            work.swap_cols(rank, c);
            t.swap_cols(rank, c);
            int inv = f.inv(work(r, rank));
            for (size_t other = rank + 1; other < kk; other++) {
                int factor = f.neg(f.mul(work(r, other), inv));
                if (factor != 0) {
                    work.add_col_multiple(other, rank, factor);
                    t.add_col_multiple(other, rank, factor);
                }
            }
            rank++;
        }
        if (rank == kk) {
            return;
        }
        substitute(t, FpVector(kk, 0));
        sum_out(kk - 1);
    }
}

ExactPhase StabilizerState::amplitude_at(const FpVector &x) const {
    if (static_cast<int>(x.size()) != n()) {
        throw Error(ErrorCode::InvalidArgument, "basis label length mismatch");
    }
    if (is_zero()) {
        return amp_;
    }
    Zd f{d()};
    FpVector rhs(x.size());
    for (size_t i = 0; i < x.size(); i++) {
        rhs[i] = f.sub(f.reduce(x[i]), h_[i]);
    }
    auto sol = solve_affine(g_, rhs);
    if (!sol) {
        return ExactPhase::zero(d());
    }
    return amp_ * ExactPhase::omega(d(), form_.evaluate(sol->particular));
}

CVector StabilizerState::dense_vector(size_t cap) const {
    size_t dim = checked_dimension(d(), n(), cap);
    CVector out(dim);
    if (is_zero()) {
        return out;
    }
    int dd = d();
    Zd f{dd};
    std::vector<Complex> roots(dd);
    for (int j = 0; j < dd; j++) {
        roots[j] = ExactPhase::omega(dd, j).to_complex();
    }
    Complex a = amp_.to_complex();
    size_t kk = k();
    FpVector u(kk, 0);
    while (true) {
        size_t index = 0;
        for (int i = 0; i < n(); i++) {
            int64_t xi = h_[i];
            for (size_t c = 0; c < kk; c++) {
                xi += static_cast<int64_t>(g_(i, c)) * u[c];
            }
            index = index * dd + static_cast<size_t>(f.reduce(xi));
        }
        out[index] += a * roots[form_.evaluate(u)];
        size_t pos = 0;
        while (pos < kk && ++u[pos] == dd) {
            u[pos] = 0;
            pos++;
        }
        if (pos == kk) {
            break;
        }
    }
    return out;
}

void StabilizerState::check_invariants() const {
    auto fail = [](const std::string &what) { throw Error(ErrorCode::InvalidArgument, "stabilizer state: " + what); };
    int dd = d();
    if (h_.size() != g_.rows()) {
        fail("h length differs from G rows");
    }
    if (form_.q.rows() != k() || form_.q.cols() != k() || form_.l.size() != k()) {
        fail("quadratic form shape differs from G columns");
    }
    if (form_.d() != dd || amp_.d() != dd) {
        fail("components from different dimensions");
    }
    if (!form_.q.is_symmetric()) {
        fail("Q not symmetric");
    }
    if (!is_zero() && g_.rank() != k()) {
        fail("G lacks full column rank");
    }
    for (int v : h_) {
        if (v < 0 || v >= dd) {
            fail("h entry out of range");
        }
    }
}

StabilizerState tensor(const StabilizerState &a, const StabilizerState &b) {
    int d = a.d();
    if (b.d() != d) {
        throw Error(ErrorCode::InvalidArgument, "tensor of states with different dimensions");
    }
    size_t n1 = a.n(), n2 = b.n(), k1 = a.k(), k2 = b.k();
    FpMatrix g(d, n1 + n2, k1 + k2);
    FpMatrix q(d, k1 + k2, k1 + k2);
    for (size_t r = 0; r < n1; r++) {
        for (size_t c = 0; c < k1; c++) {
            g(r, c) = a.g()(r, c);
        }
    }
    for (size_t r = 0; r < n2; r++) {
        for (size_t c = 0; c < k2; c++) {
            g(n1 + r, k1 + c) = b.g()(r, c);
        }
    }
    for (size_t r = 0; r < k1; r++) {
        for (size_t c = 0; c < k1; c++) {
            q(r, c) = a.form().q(r, c);
        }
    }
    for (size_t r = 0; r < k2; r++) {
        for (size_t c = 0; c < k2; c++) {
            q(k1 + r, k1 + c) = b.form().q(r, c);
        }
    }
    FpVector h = a.h();
    h.insert(h.end(), b.h().begin(), b.h().end());
    FpVector l = a.form().l;
    l.insert(l.end(), b.form().l.begin(), b.form().l.end());
    return StabilizerState(std::move(g), std::move(h), QuadraticForm{std::move(q), std::move(l), 0},
                           a.amplitude() * b.amplitude());
}

QuadraticForm x_form_to_u_form(const QuadraticForm &x_form, const FpMatrix &g, const FpVector &h) {
    return x_form.pullback(g, h);
}

}  // namespace quditsim
