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

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace dits {

/// Exact rational, always kept in canonical (reduced) form.
using Rational = mpq_class;

/// Accepts "3", "-2/6", "0.25". Throws Error(InvalidArgument) on anything else.
Rational parse_rational(std::string_view text);

/// "4/9", "-3", "0".
std::string to_string(const Rational& q);

/// Fixed-point decimal rendering, rounded half away from zero.
std::string to_decimal(const Rational& q, int digits = 6);

/// Exact square root when q is the square of a rational.
std::optional<Rational> exact_sqrt(const Rational& q);

/// Comma separated fractions, e.g. "1/3,1/4,5/12".
std::vector<Rational> parse_rational_list(std::string_view text);

}  // namespace dits
