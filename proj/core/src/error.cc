// Copyright 2026 The qcs Authors
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

#include "qcs/error.h"

namespace qcs {

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::invalid_sparsity:
            return "invalid-sparsity";
        case ErrorKind::invalid_size:
            return "invalid-size";
        case ErrorKind::capacity:
            return "capacity";
        case ErrorKind::exhaustion:
            return "exhaustion";
        case ErrorKind::shape:
            return "shape";
        case ErrorKind::structure:
            return "structure";
        case ErrorKind::unsupported_term:
            return "unsupported-term";
        case ErrorKind::degenerate_column:
            return "degenerate-column";
        case ErrorKind::bad_qubit:
            return "bad-qubit";
        case ErrorKind::invalid_argument:
            return "invalid-argument";
        case ErrorKind::parse:
            return "parse";
    }
    return "unknown";
}

Error::Error(ErrorKind kind, const std::string &message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {
}

void fail(ErrorKind kind, const std::string &message) {
    throw Error(kind, message);
}

}  // namespace qcs
