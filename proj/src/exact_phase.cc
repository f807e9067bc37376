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

#include "quditsim/exact_phase.h"

#include <cmath>
#include <numbers>
#include <sstream>

#include "quditsim/error.h"

namespace quditsim {

ExactPhase::ExactPhase(int d) : d_(d) {
}

ExactPhase ExactPhase::zero(int d) {
    ExactPhase z(d);
    z.zero_ = true;
    return z;
}

ExactPhase ExactPhase::root(int d, int64_t exponent) {
    ExactPhase p(d);
    p.root_ = exponent;
    p.normalize();
    return p;
}

ExactPhase ExactPhase::omega(int d, int64_t k) {
    return root(d, 8LL * d * mod(k, d));
}

ExactPhase ExactPhase::tau(int d, int64_t k) {
    return omega(d, static_cast<int64_t>(Zd{d}.half()) * mod(k, d));
}

ExactPhase ExactPhase::sqrt_d_power(int d, int64_t s) {
    ExactPhase p(d);
    p.half_power_ = s;
    return p;
}

ExactPhase ExactPhase::sign(int d, int s) {
    return root(d, s < 0 ? 4LL * d * d : 0);
}

ExactPhase ExactPhase::imaginary_unit(int d) {
    return root(d, 2LL * d * d);
}

void ExactPhase::normalize() {
    if (zero_) {
        root_ = 0;
        half_power_ = 0;
        return;
    }
    int64_t n = granularity(d_);
    root_ %= n;
    if (root_ < 0) {
        root_ += n;
    }
}

ExactPhase ExactPhase::operator*(const ExactPhase &other) const {
    ExactPhase out = *this;
    out *= other;
    return out;
}

ExactPhase &ExactPhase::operator*=(const ExactPhase &other) {
    if (d_ != other.d_) {
        throw Error(ErrorCode::InvalidArgument, "phases of different dimensions");
    }
    if (zero_ || other.zero_) {
        zero_ = true;
    } else {
        root_ += other.root_;
        half_power_ += other.half_power_;
    }
    normalize();
    return *this;
}

ExactPhase ExactPhase::conj() const {
    ExactPhase out = *this;
    out.root_ = -out.root_;
    out.normalize();
    return out;
}

ExactPhase ExactPhase::pow(int64_t e) const {
    if (zero_) {
        if (e <= 0) {
            throw Error(ErrorCode::InvalidArgument, "non-positive power of zero");
        }
        return *this;
    }
    ExactPhase out = *this;
    int64_t n = granularity(d_);
    out.root_ = static_cast<int64_t>((static_cast<__int128>(root_) * e) % n);
    out.half_power_ = half_power_ * e;
    out.normalize();
    return out;
}

bool ExactPhase::operator==(const ExactPhase &other) const {
    if (d_ != other.d_) {
        return false;
    }
    if (zero_ || other.zero_) {
        return zero_ == other.zero_;
    }
    return root_ == other.root_ && half_power_ == other.half_power_;
}

double ExactPhase::magnitude() const {
    if (zero_) {
        return 0.0;
    }
    return std::pow(static_cast<double>(d_), 0.5 * static_cast<double>(half_power_));
}

std::complex<double> ExactPhase::to_complex() const {
    if (zero_) {
        return {0.0, 0.0};
    }
    int64_t n = granularity(d_);
    int64_t r = root_ > n / 2 ? root_ - n : root_;
    double angle = 2.0 * std::numbers::pi * static_cast<double>(r) / static_cast<double>(n);
    return std::polar(magnitude(), angle);
}

std::string ExactPhase::str() const {
    if (zero_) {
        return "0";
    }
    std::ostringstream out;
    out << "d^(" << half_power_ << "/2)*exp(2pi i*" << root_ << "/" << granularity(d_) << ")";
    return out.str();
}

}  // namespace quditsim
