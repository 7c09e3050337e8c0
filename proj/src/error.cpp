// Copyright 2026 The dits Authors
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

#include "dits/error.hpp"

namespace dits {

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::EmptyBlock: return "EmptyBlock";
        case ErrorKind::OverlappingBlocks: return "OverlappingBlocks";
        case ErrorKind::NotExhaustive: return "NotExhaustive";
        case ErrorKind::UnknownLabel: return "UnknownLabel";
        case ErrorKind::DuplicateLabel: return "DuplicateLabel";
        case ErrorKind::GroundMismatch: return "GroundMismatch";
        case ErrorKind::BoundExceeded: return "BoundExceeded";
        case ErrorKind::SyntaxError: return "SyntaxError";
        case ErrorKind::UnboundVariable: return "UnboundVariable";
        case ErrorKind::BudgetExceeded: return "BudgetExceeded";
        case ErrorKind::InvalidProbability: return "InvalidProbability";
        case ErrorKind::InvalidDensity: return "InvalidDensity";
        case ErrorKind::ZeroProbabilityOutcome: return "ZeroProbabilityOutcome";
        case ErrorKind::DuplicateEigenvalue: return "DuplicateEigenvalue";
        case ErrorKind::DegenerateDSD: return "DegenerateDSD";
        case ErrorKind::DimensionMismatch: return "DimensionMismatch";
        case ErrorKind::NotCommuting: return "NotCommuting";
        case ErrorKind::SingularMap: return "SingularMap";
        case ErrorKind::EmptyState: return "EmptyState";
        case ErrorKind::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

ParseError::ParseError(const std::string& message, std::size_t token_index, std::size_t offset)
    : Error(ErrorKind::SyntaxError,
            message + " (token " + std::to_string(token_index) + ", offset " + std::to_string(offset) + ")"),
      token_index_(token_index),
      offset_(offset) {}

}  // namespace dits
