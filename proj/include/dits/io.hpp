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
#include <vector>

#include <json.hpp>

#include "dits/density.hpp"
#include "dits/logic.hpp"
#include "dits/observables.hpp"
#include "dits/partition.hpp"
#include "dits/z2dyn.hpp"

namespace dits {

using json = nlohmann::json;

// Partitions: {"ground":["a","b","c"],"blocks":[["a"],["b","c"]]}
json to_json(const Partition& pi);
Partition partition_from_json(const json& j);

// Density matrices: {"ground":[...], "entries":[[{"radicand":"1/9"}, ...], ...]}
json to_json(const DensityMatrix& rho);
DensityMatrix density_from_json(const json& j);

// Attributes: {"values":{"a":"1","b":"1","c":"2"}}; ground order from `ground`.
json to_json(const Attribute& f);
Attribute attribute_from_json(const json& j, const GroundPtr& ground);
/// Ground from an explicit "ground" array, else the sorted keys of "values".
Attribute attribute_from_json(const json& j);

// DSDs: [[["1","1"]], [["1","-1"]]], a list of subspaces, each a list of vectors.
json to_json(const DSD& dsd);
DSD dsd_from_json(const json& j);

// Spectral data: {"eigenvalues":["1","-1"], "dsd": <DSD>}
SpectralData spectral_from_json(const json& j);

json to_json(const Vector& v);
json to_json(const Matrix& m);
json to_json(const Subspace& s);

json to_json(const ValidityReport& report, const Formula& f);
json to_json(const StateMixture& mixture);

struct HasseDiagram {
    std::vector<Partition> nodes;                             // RGS order
    std::vector<std::pair<std::size_t, std::size_t>> edges;   // (lower, upper): upper covers lower
};

/// Covering relation of the partition lattice: pi covers sigma iff sigma ≾ pi
/// and pi has exactly one more block.
HasseDiagram hasse_diagram(const GroundPtr& ground, std::size_t bound = 6);

struct DotOptions {
    std::string graph_name = "partitions";
    std::vector<Partition> highlight;
};

/// DOT digraph, bottom 0_U drawn lowest, edges pointing up the lattice.
std::string to_dot(const HasseDiagram& diagram, const DotOptions& options = {});
json to_json(const HasseDiagram& diagram);

/// Two lattices side by side, Π(U) and Π(U') for the double-slit basis
/// change, with the partition that groups {a, c} highlighted in each.
std::string double_slit_lattices_dot();

}  // namespace dits
