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

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace dits {

enum class ErrorKind {
    EmptyBlock,
    OverlappingBlocks,
    NotExhaustive,
    UnknownLabel,
    DuplicateLabel,
    GroundMismatch,
    BoundExceeded,
    SyntaxError,
    UnboundVariable,
    BudgetExceeded,
    InvalidProbability,
    InvalidDensity,
    ZeroProbabilityOutcome,
    DuplicateEigenvalue,
    DegenerateDSD,
    DimensionMismatch,
    NotCommuting,
    SingularMap,
    EmptyState,
    InvalidArgument,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library. `kind()` is stable and meant for
/// callers that branch on the failure; `what()` is for humans.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message);

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

/// Parse failure in formula or partition text. `token_index` counts tokens
/// from zero, `offset` is the byte offset into the input.
class ParseError : public Error {
public:
    ParseError(const std::string& message, std::size_t token_index, std::size_t offset);

    std::size_t token_index() const noexcept { return token_index_; }
    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t token_index_;
    std::size_t offset_;
};

}  // namespace dits
