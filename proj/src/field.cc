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

#include "quditsim/field.h"

#include <sstream>
#include <tuple>
#include <utility>

#include "quditsim/error.h"

namespace quditsim {

bool is_prime(int64_t n) {
    if (n < 2) {
        return false;
    }
    for (int64_t p = 2; p * p <= n; p++) {
        if (n % p == 0) {
            return false;
        }
    }
    return true;
}

void require_odd_prime(int64_t d) {
    if (d == 2 || !is_prime(d)) {
        throw Error(ErrorCode::NonPrimeDimension, "dimension " + std::to_string(d) + " is not an odd prime");
    }
}

int Zd::pow(int a, int64_t e) const {
    int64_t base = reduce(a);
    if (e < 0) {
        base = inv(static_cast<int>(base));
        e = -e;
    }
    int64_t result = 1;
    while (e > 0) {
        if (e & 1) {
            result = result * base % d;
        }
        base = base * base % d;
        e >>= 1;
    }
    return static_cast<int>(result);
}

int Zd::inv(int a) const {
    a = reduce(a);
    if (a == 0) {
        throw Error(ErrorCode::ZeroInverse, "0 has no inverse modulo " + std::to_string(d));
    }
    // Extended Euclid.
    int64_t r0 = d, r1 = a, s0 = 0, s1 = 1;
    while (r1 != 0) {
        int64_t q = r0 / r1;
        std::tie(r0, r1) = std::make_pair(r1, r0 - q * r1);
        std::tie(s0, s1) = std::make_pair(s1, s0 - q * s1);
    }
    return reduce(s0);
}

FpScalar::FpScalar(int64_t value, int d) : value_(0), d_(d) {
    require_odd_prime(d);
    value_ = mod(value, d);
}

void FpScalar::require_same_field(const FpScalar &other) const {
    if (d_ != other.d_) {
        throw Error(ErrorCode::InvalidArgument, "mixed moduli " + std::to_string(d_) + " and " + std::to_string(other.d_));
    }
}

FpScalar FpScalar::operator+(const FpScalar &other) const {
    require_same_field(other);
    return FpScalar(Zd{d_}.add(value_, other.value_), d_, Unchecked{});
}

FpScalar FpScalar::operator-(const FpScalar &other) const {
    require_same_field(other);
    return FpScalar(Zd{d_}.sub(value_, other.value_), d_, Unchecked{});
}

FpScalar FpScalar::operator*(const FpScalar &other) const {
    require_same_field(other);
    return FpScalar(Zd{d_}.mul(value_, other.value_), d_, Unchecked{});
}

FpScalar FpScalar::operator-() const {
    return FpScalar(Zd{d_}.neg(value_), d_, Unchecked{});
}

FpScalar inverse(const FpScalar &a) {
    return FpScalar(Zd{a.modulus()}.inv(a.value()), a.modulus());
}

int legendre(int64_t a, int d) {
    Zd f{d};
    int r = f.reduce(a);
    if (r == 0) {
        return 0;
    }
    return f.pow(r, (d - 1) / 2) == 1 ? 1 : -1;
}

int legendre(const FpScalar &a) {
    return legendre(a.value(), a.modulus());
}

int dot(const Zd &f, const FpVector &a, const FpVector &b) {
    int64_t acc = 0;
    for (size_t i = 0; i < a.size(); i++) {
        acc += static_cast<int64_t>(a[i]) * b[i];
    }
    return f.reduce(acc);
}

FpMatrix::FpMatrix(int d, size_t rows, size_t cols) : d_(d), rows_(rows), cols_(cols), data_(rows * cols, 0) {
}

FpMatrix FpMatrix::identity(int d, size_t n) {
    FpMatrix m(d, n, n);
    for (size_t i = 0; i < n; i++) {
        m(i, i) = 1;
    }
    return m;
}

FpMatrix FpMatrix::operator*(const FpMatrix &rhs) const {
    if (cols_ != rhs.rows_) {
        throw Error(ErrorCode::InvalidArgument, "matrix shape mismatch");
    }
    FpMatrix out(d_, rows_, rhs.cols_);
    for (size_t i = 0; i < rows_; i++) {
        for (size_t j = 0; j < rhs.cols_; j++) {
            int64_t acc = 0;
            for (size_t k = 0; k < cols_; k++) {
                acc += static_cast<int64_t>((*this)(i, k)) * rhs(k, j);
            }
            out(i, j) = mod(acc, d_);
        }
    }
    return out;
}

FpVector FpMatrix::operator*(const FpVector &rhs) const {
    if (cols_ != rhs.size()) {
        throw Error(ErrorCode::InvalidArgument, "matrix-vector shape mismatch");
    }
    FpVector out(rows_, 0);
    for (size_t i = 0; i < rows_; i++) {
        int64_t acc = 0;
        for (size_t k = 0; k < cols_; k++) {
            acc += static_cast<int64_t>((*this)(i, k)) * rhs[k];
        }
        out[i] = mod(acc, d_);
    }
    return out;
}

FpMatrix FpMatrix::transpose() const {
    FpMatrix out(d_, cols_, rows_);
    for (size_t i = 0; i < rows_; i++) {
        for (size_t j = 0; j < cols_; j++) {
            out(j, i) = (*this)(i, j);
        }
    }
    return out;
}

FpVector FpMatrix::row(size_t r) const {
    return FpVector(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_);
}

FpVector FpMatrix::col(size_t c) const {
    FpVector out(rows_);
    for (size_t i = 0; i < rows_; i++) {
        out[i] = (*this)(i, c);
    }
    return out;
}

bool FpMatrix::row_is_zero(size_t r) const {
    for (size_t c = 0; c < cols_; c++) {
        if ((*this)(r, c) != 0) {
            return false;
        }
    }
    return true;
}

bool FpMatrix::col_is_zero(size_t c) const {
    for (size_t r = 0; r < rows_; r++) {
        if ((*this)(r, c) != 0) {
            return false;
        }
    }
    return true;
}

bool FpMatrix::is_symmetric() const {
    if (rows_ != cols_) {
        return false;
    }
    for (size_t i = 0; i < rows_; i++) {
        for (size_t j = i + 1; j < cols_; j++) {
            if ((*this)(i, j) != (*this)(j, i)) {
                return false;
            }
        }
    }
    return true;
}

void FpMatrix::remove_col(size_t c) {
    std::vector<int> out;
    out.reserve(rows_ * (cols_ - 1));
    for (size_t i = 0; i < rows_; i++) {
        for (size_t j = 0; j < cols_; j++) {
            if (j != c) {
                out.push_back((*this)(i, j));
            }
        }
    }
    data_ = std::move(out);
    cols_--;
}

void FpMatrix::remove_row(size_t r) {
    data_.erase(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_);
    rows_--;
}

void FpMatrix::append_col(const FpVector &column) {
    if (column.size() != rows_) {
        throw Error(ErrorCode::InvalidArgument, "column length mismatch");
    }
    std::vector<int> out;
    out.reserve(rows_ * (cols_ + 1));
    for (size_t i = 0; i < rows_; i++) {
        for (size_t j = 0; j < cols_; j++) {
            out.push_back((*this)(i, j));
        }
        out.push_back(mod(column[i], d_));
    }
    data_ = std::move(out);
    cols_++;
}

void FpMatrix::swap_cols(size_t a, size_t b) {
    if (a == b) {
        return;
    }
    for (size_t i = 0; i < rows_; i++) {
        std::swap((*this)(i, a), (*this)(i, b));
    }
}

void FpMatrix::add_col_multiple(size_t dst, size_t src, int factor) {
    Zd f{d_};
    factor = f.reduce(factor);
    if (factor == 0) {
        return;
    }
    for (size_t i = 0; i < rows_; i++) {
        (*this)(i, dst) = f.add((*this)(i, dst), f.mul(factor, (*this)(i, src)));
    }
}

namespace {

// Row echelon form in place; returns pivot columns.
std::vector<size_t> row_reduce(FpMatrix &m, size_t cols_to_reduce) {
    Zd f{m.d()};
    std::vector<size_t> pivots;
    size_t row = 0;
    for (size_t c = 0; c < cols_to_reduce && row < m.rows(); c++) {
        size_t p = row;
        while (p < m.rows() && m(p, c) == 0) {
            p++;
        }
        if (p == m.rows()) {
            continue;
        }
        if (p != row) {
            for (size_t j = 0; j < m.cols(); j++) {
                std::swap(m(p, j), m(row, j));
            }
        }
        int s = f.inv(m(row, c));
        for (size_t j = 0; j < m.cols(); j++) {
            m(row, j) = f.mul(m(row, j), s);
        }
        for (size_t r = 0; r < m.rows(); r++) {
            if (r == row || m(r, c) == 0) {
                continue;
            }
            int factor = m(r, c);
            for (size_t j = 0; j < m.cols(); j++) {
                m(r, j) = f.sub(m(r, j), f.mul(factor, m(row, j)));
            }
        }
        pivots.push_back(c);
        row++;
    }
    return pivots;
}

}  // namespace

size_t FpMatrix::rank() const {
    FpMatrix copy = *this;
    return row_reduce(copy, cols_).size();
}

int FpMatrix::determinant() const {
    if (rows_ != cols_) {
        throw Error(ErrorCode::InvalidArgument, "determinant of non-square matrix");
    }
    Zd f{d_};
    FpMatrix m = *this;
    int det = 1;
    for (size_t c = 0; c < cols_; c++) {
        size_t p = c;
        while (p < rows_ && m(p, c) == 0) {
            p++;
        }
        if (p == rows_) {
            return 0;
        }
        if (p != c) {
            for (size_t j = 0; j < cols_; j++) {
                std::swap(m(p, j), m(c, j));
            }
            det = f.neg(det);
        }
        det = f.mul(det, m(c, c));
        int s = f.inv(m(c, c));
        for (size_t r = c + 1; r < rows_; r++) {
            int factor = f.mul(m(r, c), s);
            if (factor == 0) {
                continue;
            }
            for (size_t j = c; j < cols_; j++) {
                m(r, j) = f.sub(m(r, j), f.mul(factor, m(c, j)));
            }
        }
    }
    return det;
}

std::string FpMatrix::str() const {
    std::ostringstream out;
    for (size_t i = 0; i < rows_; i++) {
        out << "[";
        for (size_t j = 0; j < cols_; j++) {
            out << (j ? " " : "") << (*this)(i, j);
        }
        out << "]\n";
    }
    return out.str();
}

std::optional<AffineSolution> solve_affine(const FpMatrix &a, const FpVector &b) {
    if (b.size() != a.rows()) {
        throw Error(ErrorCode::InvalidArgument, "right-hand side length mismatch");
    }
    Zd f{a.d()};
    size_t n = a.cols();
    FpMatrix aug(a.d(), a.rows(), n + 1);
    for (size_t i = 0; i < a.rows(); i++) {
        for (size_t j = 0; j < n; j++) {
            aug(i, j) = a(i, j);
        }
        aug(i, n) = f.reduce(b[i]);
    }
    std::vector<size_t> pivots = row_reduce(aug, n);
    for (size_t r = pivots.size(); r < aug.rows(); r++) {
        if (aug(r, n) != 0) {
            return std::nullopt;
        }
    }
    std::vector<bool> is_pivot(n, false);
    for (size_t c : pivots) {
        is_pivot[c] = true;
    }
    AffineSolution sol{FpVector(n, 0), FpMatrix(a.d(), n, n - pivots.size())};
    for (size_t r = 0; r < pivots.size(); r++) {
        sol.particular[pivots[r]] = aug(r, n);
    }
    size_t k = 0;
    for (size_t free = 0; free < n; free++) {
        if (is_pivot[free]) {
            continue;
        }
        sol.kernel(free, k) = 1;
        for (size_t r = 0; r < pivots.size(); r++) {
            sol.kernel(pivots[r], k) = f.neg(aug(r, free));
        }
        k++;
    }
    return sol;
}

}  // namespace quditsim
