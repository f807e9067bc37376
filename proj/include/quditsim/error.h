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

#ifndef QUDITSIM_ERROR_H
#define QUDITSIM_ERROR_H

#include <stdexcept>
#include <string>
#include <string_view>

namespace quditsim {

enum class ErrorCode {
    InvalidArgument,
    ZeroInverse,
    NonPrimeDimension,
    UnsupportedDimension,
    CapExceeded,
    SameQudit,
    IndexOutOfRange,
    SyntaxError,
    InfeasiblePrecision,
    NoCodeFound,
    NonRealZ,
    DegenerateNorm,
};

std::string_view error_code_name(ErrorCode code);

/// Every failure raised by the library. `line()` is nonzero only for circuit
/// parse errors.
class Error : public std::runtime_error {
   public:
    Error(ErrorCode code, const std::string &message, int line = 0);

    ErrorCode code() const noexcept {
        return code_;
    }
    int line() const noexcept {
        return line_;
    }

   private:
    ErrorCode code_;
    int line_;
};

}  // namespace quditsim

#endif
