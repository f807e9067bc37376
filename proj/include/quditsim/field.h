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

#ifndef QUDITSIM_FIELD_H
#define QUDITSIM_FIELD_H

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace quditsim {

bool is_prime(int64_t n);

/// Throws NonPrimeDimension unless d is an odd prime.
void require_odd_prime(int64_t d);

/// Floor modulus, always in [0, d).
inline int mod(int64_t a, int64_t d) {
    int64_t r = a % d;
    return static_cast<int>(r < 0 ? r + d : r);
}

/// Raw arithmetic helpers on residues in [0, d). Callers guarantee d is an odd
/// prime; these sit on the hot paths of the stabilizer code.
struct Zd {
    int d;

    int reduce(int64_t a) const {
        return mod(a, d);
    }
    int add(int a, int b) const {
        int r = a + b;
        return r >= d ? r - d : r;
    }
    int sub(int a, int b) const {
        int r = a - b;
        return r < 0 ? r + d : r;
    }
    int neg(int a) const {
        return a == 0 ? 0 : d - a;
    }
    int mul(int a, int b) const {
        return static_cast<int>(static_cast<int64_t>(a) * b % d);
    }
    int pow(int a, int64_t e) const;
    /// Throws ZeroInverse when a ≡ 0.
    int inv(int a) const;
    /// The inverse of 2.
    int half() const {
        return (d + 1) / 2;
    }
};

/// An element of Z_d for an odd prime d.
class FpScalar {
   public:
    /// Reduces `value` into [0, d); throws NonPrimeDimension unless d is an odd prime.
    FpScalar(int64_t value, int d);

    int value() const {
        return value_;
    }
    int modulus() const {
        return d_;
    }
    bool is_zero() const {
        return value_ == 0;
    }

    FpScalar operator+(const FpScalar &other) const;
    FpScalar operator-(const FpScalar &other) const;
    FpScalar operator*(const FpScalar &other) const;
    FpScalar operator-() const;
    bool operator==(const FpScalar &other) const = default;

   private:
    struct Unchecked {};
    FpScalar(int value, int d, Unchecked) : value_(value), d_(d) {
    }
    void require_same_field(const FpScalar &other) const;

    int value_;
    int d_;
};

/// Multiplicative inverse; throws ZeroInverse for 0.
FpScalar inverse(const FpScalar &a);

/// Legendre symbol (a/d) in {-1, 0, +1}.
int legendre(const FpScalar &a);
int legendre(int64_t a, int d);

using FpVector = std::vector<int>;

/// Dense row-major matrix over Z_d.
class FpMatrix {
   public:
    FpMatrix() = default;
    FpMatrix(int d, size_t rows, size_t cols);

    static FpMatrix identity(int d, size_t n);

    int d() const {
        return d_;
    }
    size_t rows() const {
        return rows_;
    }
    size_t cols() const {
        return cols_;
    }

    int &operator()(size_t r, size_t c) {
        return data_[r * cols_ + c];
    }
    int operator()(size_t r, size_t c) const {
        return data_[r * cols_ + c];
    }

    FpMatrix operator*(const FpMatrix &rhs) const;
    FpVector operator*(const FpVector &rhs) const;
    bool operator==(const FpMatrix &other) const = default;

    FpMatrix transpose() const;
    FpVector row(size_t r) const;
    FpVector col(size_t c) const;
    bool row_is_zero(size_t r) const;
    bool col_is_zero(size_t c) const;
    bool is_symmetric() const;

    void remove_col(size_t c);
    void remove_row(size_t r);
    void append_col(const FpVector &column);
    void swap_cols(size_t a, size_t b);
    /// col[dst] += factor * col[src]
    void add_col_multiple(size_t dst, size_t src, int factor);

    size_t rank() const;
    /// Determinant of a square matrix.
    int determinant() const;

    std::string str() const;

   private:
    int d_ = 3;
    size_t rows_ = 0;
    size_t cols_ = 0;
    std::vector<int> data_;
};

/// Solution set {particular + kernel·w} of A·x = b over Z_d.
struct AffineSolution {
    FpVector particular;
    /// Columns span the kernel of A; kernel.rows() == A.cols().
    FpMatrix kernel;
};

/// Gaussian elimination over Z_d; nullopt when the system is inconsistent.
std::optional<AffineSolution> solve_affine(const FpMatrix &a, const FpVector &b);

/// Vector helpers.
int dot(const Zd &f, const FpVector &a, const FpVector &b);

}  // namespace quditsim

#endif
