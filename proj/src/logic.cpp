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

#include "dits/logic.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <limits>
#include <set>
#include <thread>

#include "dits/error.hpp"

namespace dits {

// ------------------------------------------------------------------ Formula

Formula::Formula(Kind kind, std::string name, std::shared_ptr<const Formula> lhs, std::shared_ptr<const Formula> rhs)
    : kind_(kind), name_(std::move(name)), lhs_(std::move(lhs)), rhs_(std::move(rhs)) {}

Formula Formula::var(std::string name) { return Formula(Kind::Var, std::move(name), nullptr, nullptr); }
Formula Formula::top() { return Formula(Kind::Top, {}, nullptr, nullptr); }
Formula Formula::bottom() { return Formula(Kind::Bottom, {}, nullptr, nullptr); }

Formula Formula::join(Formula lhs, Formula rhs) {
    return Formula(Kind::Join, {}, std::make_shared<const Formula>(std::move(lhs)),
                   std::make_shared<const Formula>(std::move(rhs)));
}

Formula Formula::meet(Formula lhs, Formula rhs) {
    return Formula(Kind::Meet, {}, std::make_shared<const Formula>(std::move(lhs)),
                   std::make_shared<const Formula>(std::move(rhs)));
}

Formula Formula::implies(Formula lhs, Formula rhs) {
    return Formula(Kind::Implies, {}, std::make_shared<const Formula>(std::move(lhs)),
                   std::make_shared<const Formula>(std::move(rhs)));
}

bool operator==(const Formula& a, const Formula& b) {
    if (a.kind_ != b.kind_) return false;
    switch (a.kind_) {
        case Formula::Kind::Var: return a.name_ == b.name_;
        case Formula::Kind::Top:
        case Formula::Kind::Bottom: return true;
        default: return *a.lhs_ == *b.lhs_ && *a.rhs_ == *b.rhs_;
    }
}

// ------------------------------------------------------------------- parser

namespace {

enum class Tok { Ident, Top, Bottom, Join, Meet, Implies, LParen, RParen, End };

struct Token {
    Tok type;
    std::string text;
    std::size_t offset;
};

std::vector<Token> tokenize(std::string_view s) {
    std::vector<Token> out;
    std::size_t i = 0;
    auto starts = [&](std::string_view lit) { return s.substr(i, lit.size()) == lit; };
    while (i < s.size()) {
        const char c = s[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        const std::size_t at = i;
        if (std::isalpha(static_cast<unsigned char>(c))) {
            while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_')) ++i;
            out.push_back({Tok::Ident, std::string(s.substr(at, i - at)), at});
        } else if (c == '0' || c == '1') {
            ++i;
            out.push_back({c == '1' ? Tok::Top : Tok::Bottom, std::string(1, c), at});
        } else if (starts("\\/") || starts("∨")) {
            i += starts("\\/") ? 2 : 3;
            out.push_back({Tok::Join, std::string(s.substr(at, i - at)), at});
        } else if (starts("/\\") || starts("∧")) {
            i += starts("/\\") ? 2 : 3;
            out.push_back({Tok::Meet, std::string(s.substr(at, i - at)), at});
        } else if (starts("=>") || starts("⇒")) {
            i += starts("=>") ? 2 : 3;
            out.push_back({Tok::Implies, std::string(s.substr(at, i - at)), at});
        } else if (c == '(' || c == ')') {
            ++i;
            out.push_back({c == '(' ? Tok::LParen : Tok::RParen, std::string(1, c), at});
        } else {
            throw ParseError("unexpected character '" + std::string(1, c) + "'", out.size(), at);
        }
    }
    out.push_back({Tok::End, {}, s.size()});
    return out;
}

class Parser {
public:
    explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

    Formula parse() {
        Formula f = implies();
        if (peek().type != Tok::End) fail("expected end of formula");
        return f;
    }

private:
    const Token& peek() const { return tokens_[pos_]; }

    [[noreturn]] void fail(const std::string& what) const {
        const Token& t = peek();
        std::string found = t.type == Tok::End ? "end of input" : "'" + t.text + "'";
        throw ParseError(what + ", found " + found, pos_, t.offset);
    }

    Formula implies() {
        Formula lhs = join();
        if (peek().type == Tok::Implies) {
            ++pos_;
            return Formula::implies(std::move(lhs), implies());
        }
        return lhs;
    }

    Formula join() {
        Formula lhs = meet();
        while (peek().type == Tok::Join) {
            ++pos_;
            lhs = Formula::join(std::move(lhs), meet());
        }
        return lhs;
    }

    Formula meet() {
        Formula lhs = atom();
        while (peek().type == Tok::Meet) {
            ++pos_;
            lhs = Formula::meet(std::move(lhs), atom());
        }
        return lhs;
    }

    Formula atom() {
        const Token& t = peek();
        switch (t.type) {
            case Tok::Ident: ++pos_; return Formula::var(t.text);
            case Tok::Top: ++pos_; return Formula::top();
            case Tok::Bottom: ++pos_; return Formula::bottom();
            case Tok::LParen: {
                ++pos_;
                Formula inner = implies();
                if (peek().type != Tok::RParen) fail("expected ')'");
                ++pos_;
                return inner;
            }
            default: fail("expected a variable, 0, 1 or '('");
        }
    }

    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
};

int precedence(Formula::Kind kind) {
    switch (kind) {
        case Formula::Kind::Implies: return 1;
        case Formula::Kind::Join: return 2;
        case Formula::Kind::Meet: return 3;
        default: return 4;
    }
}

void render(const Formula& f, std::string& out) {
    switch (f.kind()) {
        case Formula::Kind::Var: out += f.name(); return;
        case Formula::Kind::Top: out += '1'; return;
        case Formula::Kind::Bottom: out += '0'; return;
        default: break;
    }
    const int prec = precedence(f.kind());
    const bool right_assoc = f.kind() == Formula::Kind::Implies;
    auto child = [&](const Formula& c, bool on_left) {
        const int cp = precedence(c.kind());
        const bool wrap = cp < prec || (cp == prec && (right_assoc ? on_left : !on_left));
        if (wrap) out += '(';
        render(c, out);
        if (wrap) out += ')';
    };
    child(f.lhs(), true);
    switch (f.kind()) {
        case Formula::Kind::Join: out += " \\/ "; break;
        case Formula::Kind::Meet: out += " /\\ "; break;
        default: out += " => "; break;
    }
    child(f.rhs(), false);
}

void collect(const Formula& f, std::set<std::string>& names) {
    if (f.kind() == Formula::Kind::Var) names.insert(f.name());
    if (f.is_binary()) {
        collect(f.lhs(), names);
        collect(f.rhs(), names);
    }
}

}  // namespace

Formula parse_formula(std::string_view text) {
    return Parser(tokenize(text)).parse();
}

std::string to_string(const Formula& f) {
    std::string out;
    render(f, out);
    return out;
}

std::vector<std::string> variables(const Formula& f) {
    std::set<std::string> names;
    collect(f, names);
    return {names.begin(), names.end()};
}

// --------------------------------------------------------------- evaluation

namespace {

// Variables resolved to slots so the search loop avoids map lookups.
Partition eval_slots(const Formula& f, const std::vector<std::string>& names,
                     const std::vector<const Partition*>& values, const GroundPtr& ground) {
    switch (f.kind()) {
        case Formula::Kind::Var: {
            auto it = std::lower_bound(names.begin(), names.end(), f.name());
            return *values[static_cast<std::size_t>(it - names.begin())];
        }
        case Formula::Kind::Top: return Partition::discrete(ground);
        case Formula::Kind::Bottom: return Partition::indiscrete(ground);
        case Formula::Kind::Join:
            return join(eval_slots(f.lhs(), names, values, ground), eval_slots(f.rhs(), names, values, ground));
        case Formula::Kind::Meet:
            return meet(eval_slots(f.lhs(), names, values, ground), eval_slots(f.rhs(), names, values, ground));
        case Formula::Kind::Implies:
            return implication(eval_slots(f.lhs(), names, values, ground),
                               eval_slots(f.rhs(), names, values, ground));
    }
    throw Error(ErrorKind::InvalidArgument, "corrupt formula");
}

}  // namespace

Partition eval(const Formula& f, const Assignment& assignment, const GroundPtr& ground) {
    std::vector<std::string> names = variables(f);
    std::vector<const Partition*> values;
    for (const auto& name : names) {
        auto it = assignment.find(name);
        if (it == assignment.end()) throw Error(ErrorKind::UnboundVariable, "no partition assigned to '" + name + "'");
        require_same_ground(it->second.ground_ptr(), ground);
        values.push_back(&it->second);
    }
    return eval_slots(f, names, values, ground);
}

bool eval_boolean(const Formula& f, const std::map<std::string, bool>& assignment) {
    switch (f.kind()) {
        case Formula::Kind::Var: {
            auto it = assignment.find(f.name());
            if (it == assignment.end()) throw Error(ErrorKind::UnboundVariable, "no value for '" + f.name() + "'");
            return it->second;
        }
        case Formula::Kind::Top: return true;
        case Formula::Kind::Bottom: return false;
        case Formula::Kind::Join: return eval_boolean(f.lhs(), assignment) || eval_boolean(f.rhs(), assignment);
        case Formula::Kind::Meet: return eval_boolean(f.lhs(), assignment) && eval_boolean(f.rhs(), assignment);
        case Formula::Kind::Implies: return !eval_boolean(f.lhs(), assignment) || eval_boolean(f.rhs(), assignment);
    }
    return false;
}

std::optional<std::map<std::string, bool>> classical_counterexample(const Formula& f) {
    const auto names = variables(f);
    if (names.size() > 24) throw Error(ErrorKind::BudgetExceeded, "too many variables for a truth table");
    const std::size_t rows = std::size_t{1} << names.size();
    for (std::size_t row = 0; row < rows; ++row) {
        std::map<std::string, bool> values;
        for (std::size_t v = 0; v < names.size(); ++v) {
            values[names[v]] = (row >> (names.size() - 1 - v)) & 1U;
        }
        if (!eval_boolean(f, values)) return values;
    }
    return std::nullopt;
}

// ----------------------------------------------------------------- validity

BudgetExceeded::BudgetExceeded(std::size_t reached, const std::string& message)
    : Error(ErrorKind::BudgetExceeded, message), reached_(reached) {}

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

// Smallest falsifying assignment index at one ground size, kNone if valid.
// Index digits are base |parts|, first variable most significant.
std::size_t search_size(const Formula& f, const std::vector<std::string>& names, const std::vector<Partition>& parts,
                        const GroundPtr& ground, std::size_t total, std::size_t threads) {
    const std::size_t base = parts.size();
    std::atomic<std::size_t> best{kNone};

    auto worker = [&](std::size_t first, std::size_t stride) {
        std::vector<const Partition*> values(names.size());
        for (std::size_t idx = first; idx < total; idx += stride) {
            if (idx >= best.load(std::memory_order_relaxed)) return;
            std::size_t rest = idx;
            for (std::size_t v = names.size(); v-- > 0;) {
                values[v] = &parts[rest % base];
                rest /= base;
            }
            if (!eval_slots(f, names, values, ground).is_discrete()) {
                std::size_t current = best.load();
                while (idx < current && !best.compare_exchange_weak(current, idx)) {
                }
                return;
            }
        }
    };

    if (threads <= 1) {
        worker(0, 1);
    } else {
        std::vector<std::thread> pool;
        for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker, t, threads);
        for (auto& th : pool) th.join();
    }
    return best.load();
}

}  // namespace

ValidityReport check_validity(const Formula& f, const ValidityOptions& options) {
    if (options.max_n < 2) throw Error(ErrorKind::InvalidArgument, "validity search needs max_n >= 2");
    const auto names = variables(f);
    ValidityReport report;
    report.bound = 1;
    std::size_t spent = 0;

    for (std::size_t n = 2; n <= options.max_n; ++n) {
        mpz_class bell = bell_number(n);
        mpz_class count;
        mpz_pow_ui(count.get_mpz_t(), bell.get_mpz_t(), names.size());
        if (count + spent > options.budget) {
            throw BudgetExceeded(report.bound, "searching n = " + std::to_string(n) + " needs " + count.get_str() +
                                                   " assignments; budget allows " +
                                                   std::to_string(options.budget - spent) + " more");
        }
        const std::size_t total = count.get_ui();
        spent += total;

        GroundPtr ground = letter_ground(n);
        std::vector<Partition> parts = all_partitions(ground, n);
        const std::size_t found = search_size(f, names, parts, ground, total, options.threads);
        if (found != kNone) {
            Counterexample witness{n, {}, Partition::discrete(ground)};
            std::vector<const Partition*> values(names.size());
            std::size_t rest = found;
            for (std::size_t v = names.size(); v-- > 0;) {
                values[v] = &parts[rest % parts.size()];
                rest /= parts.size();
            }
            for (std::size_t v = 0; v < names.size(); ++v) witness.assignment.emplace_back(names[v], *values[v]);
            witness.result = eval_slots(f, names, values, ground);
            report.status = ValidityReport::Status::Counterexample;
            report.bound = n;
            report.witness = std::move(witness);
            return report;
        }
        report.bound = n;
    }
    return report;
}

}  // namespace dits
