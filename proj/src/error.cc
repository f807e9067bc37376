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

#include "quditsim/error.h"

namespace quditsim {

std::string_view error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::InvalidArgument:
            return "InvalidArgument";
        case ErrorCode::ZeroInverse:
            return "ZeroInverse";
        case ErrorCode::NonPrimeDimension:
            return "NonPrimeDimension";
        case ErrorCode::UnsupportedDimension:
            return "UnsupportedDimension";
        case ErrorCode::CapExceeded:
            return "CapExceeded";
        case ErrorCode::SameQudit:
            return "SameQudit";
        case ErrorCode::IndexOutOfRange:
            return "IndexOutOfRange";
        case ErrorCode::SyntaxError:
            return "SyntaxError";
        case ErrorCode::InfeasiblePrecision:
            return "InfeasiblePrecision";
        case ErrorCode::NoCodeFound:
            return "NoCodeFound";
        case ErrorCode::NonRealZ:
            return "NonRealZ";
        case ErrorCode::DegenerateNorm:
            return "DegenerateNorm";
    }
    return "Unknown";
}

Error::Error(ErrorCode code, const std::string &message, int line)
    : std::runtime_error(std::string(error_code_name(code)) + ": " + message), code_(code), line_(line) {
}

}  // namespace quditsim
