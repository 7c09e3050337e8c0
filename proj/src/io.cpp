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

#include "dits/io.hpp"

#include <algorithm>
#include <sstream>

#include "dits/error.hpp"
#include "dits/notation.hpp"

namespace dits {
namespace {

Rational rational_from_json(const json& j) {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return Rational(std::to_string(j.get<long long>()));
    throw Error(ErrorKind::InvalidArgument, "expected a fraction string, got " + j.dump());
}

Vector vector_from_json(const json& j) {
    if (!j.is_array()) throw Error(ErrorKind::InvalidArgument, "expected an array of fractions");
    Vector v;
    for (const auto& x : j) v.push_back(rational_from_json(x));
    return v;
}

GroundPtr ground_from_json(const json& j) {
    if (!j.is_array()) throw Error(ErrorKind::InvalidArgument, "\"ground\" must be an array of labels");
    return make_ground(j.get<std::vector<std::string>>());
}

}  // namespace

json to_json(const Partition& pi) {
    json blocks = json::array();
    for (const auto& block : pi.blocks()) {
        json labels = json::array();
        for (std::size_t i : block) labels.push_back(pi.ground().label(i));
        blocks.push_back(std::move(labels));
    }
    return {{"ground", pi.ground().labels()}, {"blocks", std::move(blocks)}};
}

Partition partition_from_json(const json& j) {
    try {
        return make_partition(ground_from_json(j.at("ground")),
                              j.at("blocks").get<std::vector<std::vector<std::string>>>());
    } catch (const json::exception& e) {
        throw Error(ErrorKind::InvalidArgument, std::string("malformed partition JSON: ") + e.what());
    }
}

json to_json(const DensityMatrix& rho) {
    json rows = json::array();
    for (std::size_t i = 0; i < rho.dimension(); ++i) {
        json row = json::array();
        for (std::size_t k = 0; k < rho.dimension(); ++k) row.push_back({{"radicand", to_string(rho.radicand(i, k))}});
        rows.push_back(std::move(row));
    }
    return {{"ground", rho.ground().labels()}, {"entries", std::move(rows)}};
}

DensityMatrix density_from_json(const json& j) {
    try {
        GroundPtr ground = ground_from_json(j.at("ground"));
        const auto& rows = j.at("entries");
        std::vector<Rational> radicands;
        if (rows.size() != ground->size()) throw Error(ErrorKind::InvalidDensity, "row count differs from ground");
        for (const auto& row : rows) {
            if (row.size() != ground->size()) throw Error(ErrorKind::InvalidDensity, "ragged density matrix");
            for (const auto& entry : row) radicands.push_back(rational_from_json(entry.at("radicand")));
        }
        return DensityMatrix(std::move(ground), std::move(radicands));
    } catch (const json::exception& e) {
        throw Error(ErrorKind::InvalidArgument, std::string("malformed density JSON: ") + e.what());
    }
}

json to_json(const Attribute& f) {
    json values = json::object();
    for (std::size_t i = 0; i < f.values().size(); ++i) values[f.ground().label(i)] = to_string(f(i));
    return {{"ground", f.ground().labels()}, {"values", std::move(values)}};
}

Attribute attribute_from_json(const json& j, const GroundPtr& ground) {
    try {
        const auto& values = j.at("values");
        std::vector<Rational> out(ground->size());
        std::vector<bool> seen(ground->size(), false);
        for (auto it = values.begin(); it != values.end(); ++it) {
            auto idx = ground->index_of(it.key());
            if (!idx) throw Error(ErrorKind::UnknownLabel, "'" + it.key() + "' is not in the ground set");
            out[*idx] = rational_from_json(it.value());
            seen[*idx] = true;
        }
        for (std::size_t i = 0; i < seen.size(); ++i) {
            if (!seen[i]) throw Error(ErrorKind::NotExhaustive, "no value for '" + ground->label(i) + "'");
        }
        return Attribute(ground, std::move(out));
    } catch (const json::exception& e) {
        throw Error(ErrorKind::InvalidArgument, std::string("malformed attribute JSON: ") + e.what());
    }
}

Attribute attribute_from_json(const json& j) {
    if (j.contains("ground")) return attribute_from_json(j, ground_from_json(j.at("ground")));
    std::vector<std::string> labels;
    for (auto it = j.at("values").begin(); it != j.at("values").end(); ++it) labels.push_back(it.key());
    return attribute_from_json(j, make_ground(std::move(labels)));
}

json to_json(const Vector& v) {
    json out = json::array();
    for (const auto& x : v) out.push_back(to_string(x));
    return out;
}

json to_json(const Matrix& m) {
    json out = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(to_json(m.row(r)));
    return out;
}

json to_json(const Subspace& s) {
    json basis = json::array();
    for (const auto& v : s.basis()) basis.push_back(to_json(v));
    return {{"dimension", s.dim()}, {"basis", std::move(basis)}};
}

json to_json(const DSD& dsd) {
    json out = json::array();
    for (const auto& basis : dsd.bases()) {
        json sub = json::array();
        for (const auto& v : basis) sub.push_back(to_json(v));
        out.push_back(std::move(sub));
    }
    return out;
}

DSD dsd_from_json(const json& j) {
    if (!j.is_array() || j.empty()) throw Error(ErrorKind::DegenerateDSD, "DSD must be a non-empty array");
    std::vector<std::vector<Vector>> subspaces;
    std::size_t ambient = 0;
    for (const auto& sub : j) {
        std::vector<Vector> basis;
        for (const auto& v : sub) {
            basis.push_back(vector_from_json(v));
            ambient = basis.back().size();
        }
        subspaces.push_back(std::move(basis));
    }
    return DSD(ambient, std::move(subspaces));
}

SpectralData spectral_from_json(const json& j) {
    try {
        return {vector_from_json(j.at("eigenvalues")), dsd_from_json(j.at("dsd"))};
    } catch (const json::exception& e) {
        throw Error(ErrorKind::InvalidArgument, std::string("malformed operator JSON: ") + e.what());
    }
}

json to_json(const ValidityReport& report, const Formula& f) {
    json out = {
        {"formula", to_string(f)},
        {"status", report.status == ValidityReport::Status::ValidUpToBound ? "valid-up-to-bound" : "counterexample"},
        {"bound", report.bound},
    };
    if (report.witness) {
        json assignment = json::object();
        for (const auto& [name, part] : report.witness->assignment) assignment[name] = format_partition(part);
        out["witness"] = {
            {"n", report.witness->n},
            {"assignment", std::move(assignment)},
            {"result", format_partition(report.witness->result)},
        };
    } else {
        out["witness"] = nullptr;
    }
    return out;
}

json to_json(const StateMixture& mixture) {
    json out = json::array();
    for (const auto& c : mixture.components()) {
        json labels = json::array();
        for (std::size_t i : c.state.members()) labels.push_back(c.state.ground().label(i));
        out.push_back({{"state", std::move(labels)}, {"probability", to_string(c.probability)}});
    }
    return out;
}

HasseDiagram hasse_diagram(const GroundPtr& ground, std::size_t bound) {
    HasseDiagram d;
    d.nodes = all_partitions(ground, bound);
    for (std::size_t lo = 0; lo < d.nodes.size(); ++lo) {
        for (std::size_t hi = 0; hi < d.nodes.size(); ++hi) {
            if (d.nodes[hi].block_count() == d.nodes[lo].block_count() + 1 && refines(d.nodes[lo], d.nodes[hi])) {
                d.edges.emplace_back(lo, hi);
            }
        }
    }
    return d;
}

namespace {

std::string quoted(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out + "\"";
}

void dot_body(std::ostringstream& out, const HasseDiagram& d, const std::string& prefix,
              const std::vector<Partition>& highlight, const std::string& indent) {
    for (std::size_t i = 0; i < d.nodes.size(); ++i) {
        const bool marked = std::find(highlight.begin(), highlight.end(), d.nodes[i]) != highlight.end();
        out << indent << prefix << i << " [label=" << quoted(format_partition(d.nodes[i]));
        if (marked) out << ", style=filled, fillcolor=lightblue";
        out << "];\n";
    }
    for (const auto& [lo, hi] : d.edges) out << indent << prefix << lo << " -> " << prefix << hi << ";\n";
}

}  // namespace

std::string to_dot(const HasseDiagram& diagram, const DotOptions& options) {
    std::ostringstream out;
    out << "digraph " << quoted(options.graph_name) << " {\n";
    out << "  rankdir=BT;\n  node [shape=box];\n";
    dot_body(out, diagram, "p", options.highlight, "  ");
    out << "}\n";
    return out.str();
}

json to_json(const HasseDiagram& diagram) {
    json nodes = json::array();
    for (const auto& p : diagram.nodes) nodes.push_back(format_partition(p));
    json edges = json::array();
    for (const auto& [lo, hi] : diagram.edges) edges.push_back({lo, hi});
    return {{"ground", diagram.nodes.front().ground().labels()}, {"nodes", nodes}, {"edges", edges}};
}

std::string double_slit_lattices_dot() {
    GroundPtr screen = make_ground({"a", "b", "c"});
    GroundPtr evolved = make_ground({"a'", "b'", "c'"});
    const HasseDiagram left = hasse_diagram(screen);
    const HasseDiagram right = hasse_diagram(evolved);
    // {a,c} = {a} + {c} in U, and {a,c} = {a'} + {c'} in U'.
    const Partition left_mark = make_partition(screen, {{"a", "c"}, {"b"}});
    const Partition right_mark = make_partition(evolved, {{"a'", "c'"}, {"b'"}});

    std::ostringstream out;
    out << "digraph \"double-slit\" {\n  rankdir=BT;\n  node [shape=box];\n";
    out << "  subgraph cluster_U {\n    label=\"Pi(U), U = {a,b,c}\";\n";
    dot_body(out, left, "u", {left_mark}, "    ");
    out << "  }\n  subgraph cluster_U_prime {\n    label=\"Pi(U'), a' = {a,b}, b' = {a,b,c}, c' = {b,c}\";\n";
    dot_body(out, right, "v", {right_mark}, "    ");
    out << "  }\n}\n";
    return out.str();
}

}  // namespace dits
