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

#include "dits/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "dits/density.hpp"
#include "dits/entropy.hpp"
#include "dits/error.hpp"
#include "dits/io.hpp"
#include "dits/logic.hpp"
#include "dits/notation.hpp"
#include "dits/observables.hpp"
#include "dits/z2dyn.hpp"

namespace dits {
namespace {

struct NumberFormat {
    bool decimal = false;

    std::string operator()(const Rational& q) const { return decimal ? to_decimal(q, 6) : to_string(q); }

    std::string operator()(const SqrtRational& s) const {
        if (!decimal) return s.to_string();
        std::ostringstream os;
        os << std::fixed << std::setprecision(6) << s.to_double();
        return os.str();
    }

    std::string bits(double x) const {
        std::ostringstream os;
        os << std::fixed << std::setprecision(6) << x;
        return os.str();
    }
};

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string pair_label(const GroundSet& g, std::size_t i, std::size_t k) {
    return "(" + g.label(i) + "," + g.label(k) + ")";
}

void print_matrix(std::ostream& out, const DensityMatrix& m, const NumberFormat& fmt, const std::string& indent) {
    const std::size_t n = m.dimension();
    std::vector<std::vector<std::string>> cells(n, std::vector<std::string>(n));
    std::size_t width = 1;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < n; ++k) {
            cells[i][k] = fmt(m.entry(i, k));
            width = std::max(width, cells[i][k].size());
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        out << indent << "[";
        for (std::size_t k = 0; k < n; ++k) {
            out << (k ? "  " : " ") << std::setw(static_cast<int>(width)) << cells[i][k];
        }
        out << " ]\n";
    }
}

ProbGroundSet probabilities_for(const GroundPtr& ground, const std::string& text) {
    if (text.empty()) return ProbGroundSet::uniform(ground);
    return ProbGroundSet(ground, parse_rational_list(text));
}

std::string read_json_argument(const std::string& arg) {
    if (!arg.empty() && (arg.front() == '{' || arg.front() == '[')) return arg;
    std::ifstream in(arg);
    if (!in) throw Error(ErrorKind::InvalidArgument, "cannot open '" + arg + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

json parse_json_text(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw Error(ErrorKind::InvalidArgument, std::string("invalid JSON: ") + e.what());
    }
}

// "a=1,b=1,c=2"
Attribute parse_attribute(const std::string& text, GroundPtr ground) {
    std::vector<std::string> labels;
    std::vector<Rational> values;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto eq = item.find('=');
        if (eq == std::string::npos) throw Error(ErrorKind::InvalidArgument, "expected label=value, got '" + item + "'");
        labels.push_back(item.substr(0, eq));
        values.push_back(parse_rational(item.substr(eq + 1)));
    }
    if (!ground) ground = make_ground(labels);
    json j = {{"values", json::object()}};
    for (std::size_t i = 0; i < labels.size(); ++i) j["values"][labels[i]] = to_string(values[i]);
    return attribute_from_json(j, ground);
}

// ---------------------------------------------------------------- partition

struct PartitionArgs {
    std::string text;
    std::string ground;
    std::string with;
    bool as_json = false;
};

int cmd_partition(const PartitionArgs& a, std::ostream& out) {
    GroundPtr ground;
    Partition pi = a.ground.empty() ? parse_partition(a.text)
                                    : parse_partition(a.text, make_ground([&] {
                                          std::vector<std::string> labels;
                                          std::stringstream ss(a.ground);
                                          std::string l;
                                          while (std::getline(ss, l, ',')) labels.push_back(l);
                                          return labels;
                                      }()));
    ground = pi.ground_ptr();
    const auto dits_pairs = ditset(pi).pairs();

    std::optional<Partition> sigma;
    if (!a.with.empty()) sigma = parse_partition(a.with, ground);

    if (a.as_json) {
        json j = {{"partition", to_json(pi)}, {"text", format_partition(pi)}, {"blocks", pi.block_count()}};
        json d = json::array();
        for (const auto& [i, k] : dits_pairs) d.push_back({ground->label(i), ground->label(k)});
        j["ditset"] = std::move(d);
        if (sigma) {
            j["with"] = format_partition(*sigma);
            j["join"] = format_partition(join(pi, *sigma));
            j["meet"] = format_partition(meet(pi, *sigma));
            j["implies"] = format_partition(implication(pi, *sigma));
            j["implied_by"] = format_partition(implication(*sigma, pi));
            j["refines"] = refines(pi, *sigma);
            j["refined_by"] = refines(*sigma, pi);
        }
        out << j.dump(2) << "\n";
        return kExitOk;
    }

    out << "partition  " << format_partition(pi) << "\n";
    out << "blocks     " << pi.block_count() << "\n";
    out << "ditset     " << dits_pairs.size() << " pairs:";
    for (const auto& [i, k] : dits_pairs) out << " " << pair_label(*ground, i, k);
    out << "\n";
    if (sigma) {
        const std::string p = format_partition(pi);
        const std::string s = format_partition(*sigma);
        out << "with       " << s << "\n";
        out << "join       " << format_partition(join(pi, *sigma)) << "\n";
        out << "meet       " << format_partition(meet(pi, *sigma)) << "\n";
        out << p << " => " << s << "  = " << format_partition(implication(pi, *sigma)) << "\n";
        out << s << " => " << p << "  = " << format_partition(implication(*sigma, pi)) << "\n";
        out << p << " refines-below " << s << "  " << yes_no(refines(pi, *sigma)) << "\n";
        out << s << " refines-below " << p << "  " << yes_no(refines(*sigma, pi)) << "\n";
    }
    return kExitOk;
}

// ------------------------------------------------------------------ entropy

struct EntropyArgs {
    std::string text;
    std::string probs;
    std::string with;
    bool table = false;
    bool as_json = false;
};

int cmd_entropy(const EntropyArgs& a, const NumberFormat& fmt, std::ostream& out) {
    const Partition pi = parse_partition(a.text);
    const ProbGroundSet p = probabilities_for(pi.ground_ptr(), a.probs);
    if (a.table) {
        out << entropy_table_tsv(p);
        return kExitOk;
    }
    const Rational h = logical_entropy(pi, p);
    const double H = shannon_entropy(pi, p);
    std::optional<Partition> sigma;
    if (!a.with.empty()) sigma = parse_partition(a.with, pi.ground_ptr());

    if (a.as_json) {
        json bp = json::array();
        for (const auto& b : block_probs(pi, p)) bp.push_back(fmt(b.probability));
        json j = {{"partition", format_partition(pi)},
                  {"block_probabilities", bp},
                  {"logical_entropy", fmt(h)},
                  {"logical_entropy_ditsum", fmt(logical_entropy_ditsum(pi, p))},
                  {"shannon_bits", H},
                  {"dit_to_bit", dit_to_bit_check(pi, p)}};
        if (sigma) {
            const auto c = compound_logical(pi, *sigma, p);
            const auto s = compound_shannon(pi, *sigma, p);
            j["with"] = format_partition(*sigma);
            j["logical"] = {{"joint", fmt(c.joint)},
                            {"conditional", fmt(c.pi_given_sigma)},
                            {"conditional_reverse", fmt(c.sigma_given_pi)},
                            {"mutual", fmt(c.mutual)}};
            j["shannon"] = {{"joint", s.joint},
                            {"conditional", s.pi_given_sigma},
                            {"conditional_reverse", s.sigma_given_pi},
                            {"mutual", s.mutual}};
        }
        out << j.dump(2) << "\n";
        return kExitOk;
    }

    out << "partition    " << format_partition(pi) << "\n";
    out << "Pr(blocks)  ";
    for (const auto& b : block_probs(pi, p)) {
        out << " " << format_subset(pi.ground(), pi.blocks()[b.block]) << "=" << fmt(b.probability);
    }
    out << "\n";
    out << "h            " << fmt(h) << "\n";
    out << "h (ditsum)   " << fmt(logical_entropy_ditsum(pi, p)) << "\n";
    out << "H (bits)     " << fmt.bits(H) << "\n";
    out << "dit-to-bit   " << (dit_to_bit_check(pi, p) ? "ok" : "MISMATCH") << "\n";
    if (sigma) {
        const auto c = compound_logical(pi, *sigma, p);
        const auto s = compound_shannon(pi, *sigma, p);
        out << "with         " << format_partition(*sigma) << "\n";
        out << "h(pi v s)    " << fmt(c.joint) << "    H " << fmt.bits(s.joint) << "\n";
        out << "h(pi|s)      " << fmt(c.pi_given_sigma) << "    H " << fmt.bits(s.pi_given_sigma) << "\n";
        out << "h(s|pi)      " << fmt(c.sigma_given_pi) << "    H " << fmt.bits(s.sigma_given_pi) << "\n";
        out << "m(pi;s)      " << fmt(c.mutual) << "    I " << fmt.bits(s.mutual) << "\n";
    }
    return kExitOk;
}

// ------------------------------------------------------------------ measure

struct MeasureArgs {
    std::string state;
    std::string probs;
    std::string by;
    bool golden = false;
    bool as_json = false;
};

int cmd_measure(MeasureArgs a, const NumberFormat& fmt, std::ostream& out) {
    if (a.golden) {
        a.state = "a|bc";
        a.probs = "1/3,1/4,5/12";
        a.by = "ab|c";
    }
    if (a.state.empty() || a.by.empty()) throw Error(ErrorKind::InvalidArgument, "measure needs --state and --by");
    const Partition pi = parse_partition(a.state);
    const GroundPtr& ground = pi.ground_ptr();
    const Partition sigma = parse_partition(a.by, ground);
    const ProbGroundSet p = probabilities_for(ground, a.probs);

    const DensityMatrix before = rho(pi, p);
    const DensityMatrix after = luders_mixture(before, sigma);
    const Partition joined = join(pi, sigma);
    const auto zeroed = state_reduction_audit(before, sigma);
    Rational zeroed_squares = 0;
    for (const auto& [i, k] : zeroed) zeroed_squares += before.radicand(i, k);
    const Rational h_before = quantum_logical_entropy(before);
    const Rational h_after = quantum_logical_entropy(after);
    const auto outcomes = measurement_outcomes(before, sigma);

    if (a.as_json) {
        json z = json::array();
        for (const auto& [i, k] : zeroed) z.push_back({ground->label(i), ground->label(k)});
        json outs = json::array();
        for (const auto& o : outcomes) {
            json labels = json::array();
            for (std::size_t i : o.mask.indices()) labels.push_back(ground->label(i));
            outs.push_back({{"block", labels},
                            {"probability", fmt(o.result.probability)},
                            {"state", to_json(o.result.state)}});
        }
        json probs = json::array();
        for (const auto& x : p.probs()) probs.push_back(fmt(x));
        json j = {{"ground", ground->labels()},
                  {"probs", probs},
                  {"state", format_partition(pi)},
                  {"by", format_partition(sigma)},
                  {"rho", to_json(before)},
                  {"rho_hat", to_json(after)},
                  {"join", format_partition(joined)},
                  {"theorem_join", after == rho(joined, p)},
                  {"zeroed", z},
                  {"h_before", fmt(h_before)},
                  {"h_after", fmt(h_after)},
                  {"delta_h", fmt(Rational(h_after - h_before))},
                  {"zeroed_square_sum", fmt(zeroed_squares)},
                  {"theorem_entropy_increase", h_after - h_before == zeroed_squares},
                  {"h_partition", fmt(logical_entropy(pi, p))},
                  {"outcomes", outs}};
        out << j.dump(2) << "\n";
        return kExitOk;
    }

    out << "state          " << format_partition(pi) << "\n";
    out << "probabilities ";
    for (std::size_t i = 0; i < p.size(); ++i) out << " " << ground->label(i) << "=" << fmt(p.p(i));
    out << "\n";
    out << "measured by    " << format_partition(sigma) << "\n\n";
    out << "rho(pi):\n";
    print_matrix(out, before, fmt, "  ");
    out << "rho-hat (Lueders mixture):\n";
    print_matrix(out, after, fmt, "  ");
    out << "\n";
    out << "pi v sigma                 " << format_partition(joined) << "\n";
    out << "rho-hat == rho(pi v sigma) " << yes_no(after == rho(joined, p)) << "\n";
    out << "zeroed coherences         ";
    if (zeroed.empty()) out << " none";
    for (const auto& [i, k] : zeroed) out << " " << pair_label(*ground, i, k);
    out << "\n";
    out << "h(pi)                      " << fmt(logical_entropy(pi, p)) << "\n";
    out << "h(rho)                     " << fmt(h_before) << "\n";
    out << "h(rho-hat)                 " << fmt(h_after) << "\n";
    out << "delta h                    " << fmt(Rational(h_after - h_before)) << "\n";
    out << "sum of zeroed squares      " << fmt(zeroed_squares) << "\n";
    out << "\noutcomes (Lueders rule):\n";
    for (const auto& o : outcomes) {
        out << "  " << format_subset(*ground, o.mask.indices()) << "  probability " << fmt(o.result.probability)
            << "\n";
        print_matrix(out, o.result.state, fmt, "    ");
    }
    return kExitOk;
}

// -------------------------------------------------------------------- logic

struct LogicArgs {
    std::string formula;
    std::size_t max_n = 4;
    std::size_t threads = 1;
    std::size_t budget = ValidityOptions{}.budget;
    bool classical = false;
};

int cmd_logic(const LogicArgs& a, std::ostream& out) {
    const Formula f = parse_formula(a.formula);
    json j;
    if (a.classical) {
        if (auto cex = classical_counterexample(f)) {
            json assignment = json::object();
            for (const auto& [name, value] : *cex) assignment[name] = value ? 1 : 0;
            j = {{"formula", to_string(f)}, {"status", "classically-invalid"}, {"witness", assignment}};
            out << j.dump(2) << "\n";
            return kExitCounterexample;
        }
    }
    const ValidityReport report = check_validity(f, {a.max_n, a.budget, a.threads});
    j = to_json(report, f);
    out << j.dump(2) << "\n";
    return report.status == ValidityReport::Status::ValidUpToBound ? kExitOk : kExitCounterexample;
}

// --------------------------------------------------------------- observable

struct ObservableArgs {
    std::vector<std::string> attrs;
    std::vector<std::string> operators;
    bool as_json = false;
};

int cmd_observable(const ObservableArgs& a, std::ostream& out) {
    if (a.attrs.empty() && a.operators.empty()) {
        throw Error(ErrorKind::InvalidArgument, "observable needs --attr or --operator");
    }
    json j = json::object();
    std::ostringstream text;

    if (!a.attrs.empty()) {
        std::vector<Attribute> attrs;
        GroundPtr ground;
        for (const auto& s : a.attrs) {
            attrs.push_back(parse_attribute(s, ground));
            ground = attrs.back().ground_ptr();
        }
        json list = json::array();
        for (const auto& f : attrs) {
            const Partition level = inverse_image_partition(f);
            list.push_back({{"attribute", to_json(f)},
                            {"inverse_image", format_partition(level)},
                            {"spectral_check", set_spectral_check(f)}});
            text << "attribute";
            for (std::size_t i = 0; i < f.values().size(); ++i) {
                text << " " << f.ground().label(i) << "=" << to_string(f(i));
            }
            text << "\n  inverse image  " << format_partition(level) << "\n";
            text << "  spectral check " << (set_spectral_check(f) ? "ok" : "FAILED") << "\n";
        }
        Partition joined = Partition::indiscrete(ground);
        for (const auto& f : attrs) joined = join(joined, inverse_image_partition(f));
        const bool complete = csca_complete(attrs);
        j["attributes"] = list;
        j["join"] = format_partition(joined);
        j["csca_complete"] = complete;
        text << "join of level sets  " << format_partition(joined) << "\n";
        text << "CSCA complete       " << yes_no(complete) << "\n";
        if (complete) {
            text << "value tuples       ";
            const auto tuples = value_tuples(attrs);
            for (std::size_t i = 0; i < tuples.size(); ++i) {
                text << " " << ground->label(i) << "=(";
                for (std::size_t t = 0; t < tuples[i].size(); ++t) text << (t ? "," : "") << to_string(tuples[i][t]);
                text << ")";
            }
            text << "\n";
        }
    }

    if (!a.operators.empty()) {
        if (a.operators.size() > 2) throw Error(ErrorKind::InvalidArgument, "at most two --operator arguments");
        std::vector<SpectralData> specs;
        for (const auto& arg : a.operators) specs.push_back(spectral_from_json(parse_json_text(read_json_argument(arg))));
        json ops = json::array();
        for (const auto& s : specs) {
            const Operator op = operator_from_dsd(s);
            ops.push_back({{"matrix", to_json(op.matrix())}, {"eigenvalues", to_json(s.eigenvalues)}});
            text << "operator\n";
            for (std::size_t r = 0; r < op.dimension(); ++r) text << "  " << to_string(op.matrix().row(r)) << "\n";
        }
        j["operators"] = ops;
        if (specs.size() == 2) {
            const Matrix c = commutator(operator_from_dsd(specs[0]), operator_from_dsd(specs[1]));
            const Subspace ker = kernel_space(c);
            const Subspace se = simultaneous_eigenspace(specs[0].dsd, specs[1].dsd);
            const Compatibility kind = classify(specs[0], specs[1]);
            j["commutator"] = to_json(c);
            j["kernel"] = to_json(ker);
            j["simultaneous_eigenspace"] = to_json(se);
            j["se_equals_kernel"] = se == ker;
            j["classification"] = to_string(kind);
            text << "commutator\n";
            for (std::size_t r = 0; r < c.rows(); ++r) text << "  " << to_string(c.row(r)) << "\n";
            text << "dim ker[F,G]       " << ker.dim() << "\n";
            text << "dim SE             " << se.dim() << "\n";
            text << "SE == ker[F,G]     " << yes_no(se == ker) << "\n";
            text << "classification     " << to_string(kind) << "\n";
        }
    }

    if (a.as_json) {
        out << j.dump(2) << "\n";
    } else {
        out << text.str();
    }
    return kExitOk;
}

// -------------------------------------------------------------- double-slit

struct DoubleSlitArgs {
    int which = 2;
    std::size_t trials = 0;
    std::uint64_t seed = 1;
    bool bars = false;
    bool as_json = false;
    bool dot = false;
};

int cmd_double_slit(const DoubleSlitArgs& a, const NumberFormat& fmt, std::ostream& out) {
    if (a.dot) {
        out << double_slit_lattices_dot();
        return kExitOk;
    }
    const DoubleSlitSetup setup = double_slit_setup();
    const auto steps = double_slit_steps(a.which, setup);
    const StateMixture wall = run_pipeline(setup.at_screen, steps);
    const auto dist = wall.singleton_distribution();
    std::map<std::uint64_t, std::size_t> counts;
    if (a.trials > 0) counts = sample_pipeline(setup.at_screen, steps, std::nullopt, a.trials, a.seed);

    if (a.as_json) {
        json d = json::object();
        for (std::size_t i = 0; i < dist.size(); ++i) d[setup.ground->label(i)] = fmt(dist[i]);
        json j = {{"case", a.which}, {"nonsingular", is_nonsingular(setup.dynamics.map())}, {"distribution", d}};
        if (a.trials > 0) {
            json c = json::object();
            for (std::size_t i = 0; i < dist.size(); ++i) {
                auto it = counts.find(std::uint64_t{1} << i);
                c[setup.ground->label(i)] = it == counts.end() ? 0 : it->second;
            }
            j["trials"] = a.trials;
            j["seed"] = a.seed;
            j["counts"] = c;
        }
        out << j.dump(2) << "\n";
        return kExitOk;
    }

    out << "case " << a.which << (a.which == 1 ? ": distinctions at the screen" : ": no distinctions at the screen")
        << "\n";
    out << "dynamics nonsingular over GF(2): " << yes_no(is_nonsingular(setup.dynamics.map())) << "\n";
    for (std::size_t i = 0; i < dist.size(); ++i) {
        out << "  " << setup.ground->label(i) << "  " << std::setw(4) << fmt(dist[i]);
        if (a.bars) out << "  " << std::string(static_cast<std::size_t>(Rational(dist[i] * 40).get_d() + 0.5), '#');
        if (a.trials > 0) {
            auto it = counts.find(std::uint64_t{1} << i);
            out << "  sampled " << (it == counts.end() ? 0 : it->second) << "/" << a.trials;
        }
        out << "\n";
    }
    return kExitOk;
}

// ------------------------------------------------------------------ lattice

int cmd_lattice(std::size_t n, const std::string& format, std::ostream& out) {
    if (n < 1 || n > 6) throw Error(ErrorKind::BoundExceeded, "lattice export supports 1 <= n <= 6");
    const HasseDiagram d = hasse_diagram(letter_ground(n), 6);
    if (format == "json") {
        out << to_json(d).dump(2) << "\n";
    } else {
        out << to_dot(d, {"partitions_" + std::to_string(n), {}});
    }
    return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"dits: partition logic, logical entropy and skeletal measurement, in exact arithmetic"};
    app.require_subcommand(1);
    NumberFormat fmt;
    app.add_flag("--decimal", fmt.decimal, "Print decimals instead of exact fractions");

    PartitionArgs part;
    auto* sub_part = app.add_subcommand("partition", "Inspect a partition and combine it with another");
    sub_part->add_option("partition", part.text, "Partition text, e.g. \"a|bc\"")->required();
    sub_part->add_option("--ground", part.ground, "Comma separated ground labels (default: as they appear)");
    sub_part->add_option("--with", part.with, "Second partition for join, meet and implication");
    sub_part->add_flag("--json", part.as_json, "JSON output");

    EntropyArgs ent;
    auto* sub_ent = app.add_subcommand("entropy", "Logical and Shannon entropy of a partition");
    sub_ent->add_option("partition", ent.text, "Partition text")->required();
    sub_ent->add_option("--probs", ent.probs, "Point probabilities, e.g. 1/3,1/4,5/12 (default uniform)");
    sub_ent->add_option("--with", ent.with, "Second partition for joint, conditional and mutual entropy");
    sub_ent->add_flag("--table", ent.table, "TSV table over every partition of the ground set");
    sub_ent->add_flag("--json", ent.as_json, "JSON output");

    MeasureArgs meas;
    auto* sub_meas = app.add_subcommand("measure", "Lueders measurement of a partition state");
    sub_meas->add_option("--state", meas.state, "State partition, e.g. \"a|bc\"");
    sub_meas->add_option("--probs", meas.probs, "Point probabilities (default uniform)");
    sub_meas->add_option("--by", meas.by, "Inverse-image partition of the measured attribute");
    sub_meas->add_flag("--golden", meas.golden, "Use a|bc, p = (1/3, 1/4, 5/12), measured by ab|c");
    sub_meas->add_flag("--json", meas.as_json, "JSON output");

    LogicArgs logic;
    auto* sub_logic = app.add_subcommand("logic", "Bounded validity check of a partition-logic formula");
    sub_logic->add_option("formula", logic.formula, "Formula, e.g. \"p => (p \\/ s)\"")->required();
    sub_logic->add_option("--max-n", logic.max_n, "Largest ground-set size to search")->capture_default_str();
    sub_logic->add_option("--threads", logic.threads, "Worker threads")->capture_default_str();
    sub_logic->add_option("--budget", logic.budget, "Maximum assignments to evaluate")->capture_default_str();
    sub_logic->add_flag("--classical", logic.classical, "Try the two-element Boolean algebra first");

    ObservableArgs obs;
    auto* sub_obs = app.add_subcommand("observable", "Attributes, operators, commutators and completeness");
    sub_obs->add_option("--attr", obs.attrs, "Attribute as label=value pairs, e.g. a=1,b=1,c=2 (repeatable)");
    sub_obs->add_option("--operator", obs.operators,
                        "Operator JSON {\"eigenvalues\":[...],\"dsd\":[...]} inline or as a file (up to two)");
    sub_obs->add_flag("--json", obs.as_json, "JSON output");

    DoubleSlitArgs slit;
    auto* sub_slit = app.add_subcommand("double-slit", "Skeletal double-slit distributions over GF(2)");
    sub_slit->add_option("--case", slit.which, "1: detectors at the slits, 2: none")->check(CLI::IsMember({1, 2}));
    sub_slit->add_option("--trials", slit.trials, "Monte Carlo trials alongside the exact result");
    sub_slit->add_option("--seed", slit.seed, "Seed for --trials")->capture_default_str();
    sub_slit->add_flag("--bars", slit.bars, "ASCII bar chart");
    sub_slit->add_flag("--json", slit.as_json, "JSON output");
    sub_slit->add_flag("--dot", slit.dot, "DOT of both partition lattices with {a,c} highlighted");

    std::size_t lattice_n = 3;
    std::string lattice_format = "dot";
    auto* sub_lat = app.add_subcommand("lattice", "Hasse diagram of the partition lattice");
    sub_lat->add_option("--n", lattice_n, "Ground-set size (1..6)")->required();
    sub_lat->add_option("--format", lattice_format, "dot or json")
        ->check(CLI::IsMember({"dot", "json"}))
        ->capture_default_str();

    std::vector<const char*> argv{"dits"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitError;
    }

    try {
        if (sub_part->parsed()) return cmd_partition(part, out);
        if (sub_ent->parsed()) return cmd_entropy(ent, fmt, out);
        if (sub_meas->parsed()) return cmd_measure(meas, fmt, out);
        if (sub_logic->parsed()) return cmd_logic(logic, out);
        if (sub_obs->parsed()) return cmd_observable(obs, out);
        if (sub_slit->parsed()) return cmd_double_slit(slit, fmt, out);
        if (sub_lat->parsed()) return cmd_lattice(lattice_n, lattice_format, out);
    } catch (const BudgetExceeded& e) {
        err << "error: " << e.what() << " (fully searched up to n = " << e.reached() << ")\n";
        return kExitError;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitError;
}

}  // namespace dits
