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

#include <string>
#include <string_view>

#include "dits/partition.hpp"

namespace dits {

/// Parses "a|b,c" or, for single-character labels, "a|bc".
///
/// A block without commas is read as one label when the ground set knows it
/// as a whole, and otherwise as a run of single-character labels. Whitespace
/// around labels is ignored.
Partition parse_partition(std::string_view text, const GroundPtr& ground);

/// Same, inferring the ground set from the labels in order of appearance.
Partition parse_partition(std::string_view text);

/// Canonical text form: "a|bc" when every label is one character,
/// otherwise "a|b,c".
std::string format_partition(const Partition& pi);

/// "{a,c}" style rendering of an index set.
std::string format_subset(const GroundSet& ground, const std::vector<std::size_t>& indices);

}  // namespace dits
