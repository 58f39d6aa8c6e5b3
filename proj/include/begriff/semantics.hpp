#pragma once

// Truth tables for propositional formulas and Tarskian evaluation over finite
// interpretations, with exhaustive bounded equivalence checking.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "ast.hpp"
#include "modern.hpp"

namespace begriff {

class QuantifiedInput : public Error {
public:
    using Error::Error;
};
class UnboundVariable : public Error {
public:
    using Error::Error;
};
class MissingSymbol : public Error {
public:
    using Error::Error;
};
class SignatureTooLarge : public Error {
public:
    using Error::Error;
};

enum class ValueStyle { WF, TF };

inline const char* truth_letter(bool v, ValueStyle style = ValueStyle::WF) {
    if (style == ValueStyle::TF) return v ? "T" : "F";
    return v ? "w" : "f";
}

// ---------------------------------------------------------------------------
// Propositional layer
// ---------------------------------------------------------------------------

using Assignment = std::map<std::string, bool>;

namespace detail {

// Visits a propositional formula in reading order: a conditional's
// consequent comes before its condition, as in the diagram, where the
// consequent sits on the upper row.
template <class Pre, class Post>
void walk_propositional(const Formula& f, Pre&& pre, Post&& post) {
    pre(f);
    std::visit(
        [&](const auto& x) {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, AtomF>) {
                if (!std::holds_alternative<Prop>(x.atom))
                    throw QuantifiedInput("truth tables need proposition letters, got '" +
                                          print_atom(x.atom) + "'");
            } else if constexpr (std::is_same_v<T, Not>) {
                walk_propositional(x.body, pre, post);
            } else if constexpr (std::is_same_v<T, Cond>) {
                walk_propositional(x.consequent, pre, post);
                walk_propositional(x.condition, pre, post);
            } else if constexpr (std::is_same_v<T, And> || std::is_same_v<T, Or>) {
                walk_propositional(x.left, pre, post);
                walk_propositional(x.right, pre, post);
            } else {
                throw QuantifiedInput("truth tables need quantifier-free input");
            }
        },
        f->value);
    post(f);
}

}  // namespace detail

// Proposition letters in reading order. Throws QuantifiedInput on
// quantifiers or non-propositional atoms.
inline std::vector<std::string> proposition_letters(const Formula& f) {
    std::vector<std::string> out;
    detail::walk_propositional(
        f,
        [&](const Formula& g) {
            if (const auto* a = as<AtomF>(g))
                if (const auto* p = std::get_if<Prop>(&a->atom))
                    if (std::find(out.begin(), out.end(), p->name) == out.end()) out.push_back(p->name);
        },
        [](const Formula&) {});
    return out;
}

inline bool eval_propositional(const Formula& f, const Assignment& a) {
    return std::visit(
        [&](const auto& x) -> bool {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, AtomF>) {
                const auto* p = std::get_if<Prop>(&x.atom);
                if (!p) throw QuantifiedInput("truth tables need proposition letters");
                auto it = a.find(p->name);
                if (it == a.end()) throw UnboundVariable("no truth value for '" + p->name + "'");
                return it->second;
            } else if constexpr (std::is_same_v<T, Not>) {
                return !eval_propositional(x.body, a);
            } else if constexpr (std::is_same_v<T, Cond>) {
                return !eval_propositional(x.condition, a) || eval_propositional(x.consequent, a);
            } else if constexpr (std::is_same_v<T, And>) {
                return eval_propositional(x.left, a) && eval_propositional(x.right, a);
            } else if constexpr (std::is_same_v<T, Or>) {
                return eval_propositional(x.left, a) || eval_propositional(x.right, a);
            } else {
                throw QuantifiedInput("truth tables need quantifier-free input");
            }
        },
        f->value);
}

// All 2^n assignments: first letter most significant, w before f.
inline std::vector<Assignment> assignments(const std::vector<std::string>& letters) {
    if (letters.size() > 24) throw SignatureTooLarge("more than 24 proposition letters");
    std::vector<Assignment> out;
    const std::uint64_t rows = std::uint64_t{1} << letters.size();
    out.reserve(rows);
    for (std::uint64_t r = 0; r < rows; ++r) {
        Assignment a;
        for (std::size_t i = 0; i < letters.size(); ++i) {
            std::uint64_t bit = std::uint64_t{1} << (letters.size() - 1 - i);
            a[letters[i]] = (r & bit) == 0;
        }
        out.push_back(std::move(a));
    }
    return out;
}

struct TruthRow {
    Assignment assignment;
    bool output;
};

struct TruthTable {
    std::vector<std::string> variables;
    std::vector<TruthRow> rows;
};

inline TruthTable truth_table(const Formula& f) {
    TruthTable t;
    t.variables = proposition_letters(f);
    for (auto& a : assignments(t.variables)) {
        bool out = eval_propositional(f, a);
        t.rows.push_back({std::move(a), out});
    }
    return t;
}

// The first assignment (over the letters of a, then new letters of b) on
// which the two formulas differ.
inline std::optional<Assignment> propositional_counterexample(const Formula& a, const Formula& b) {
    std::vector<std::string> letters = proposition_letters(a);
    for (auto& v : proposition_letters(b))
        if (std::find(letters.begin(), letters.end(), v) == letters.end()) letters.push_back(v);
    for (auto& asg : assignments(letters))
        if (eval_propositional(a, asg) != eval_propositional(b, asg)) return asg;
    return std::nullopt;
}

inline bool equivalent_propositional(const Formula& a, const Formula& b) {
    return !propositional_counterexample(a, b).has_value();
}

// Plain-text grid: one column per letter, then one per compound subformula
// in evaluation order, the last being the formula itself.
inline std::string format_truth_table(const Formula& f, ValueStyle style = ValueStyle::WF) {
    TruthTable table = truth_table(f);
    std::vector<std::string> headers = table.variables;
    std::vector<Formula> columns;
    for (const auto& v : table.variables) columns.push_back(prop(v));
    detail::walk_propositional(
        f, [](const Formula&) {},
        [&](const Formula& g) {
            if (is<AtomF>(g)) return;
            std::string text = print_modern(g);
            if (std::find(headers.begin(), headers.end(), text) != headers.end()) return;
            headers.push_back(std::move(text));
            columns.push_back(g);
        });

    auto line = [&](const std::vector<std::string>& cells) {
        std::string s;
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (i > 0) s += " | ";
            s += cells[i];
            if (i + 1 < cells.size()) s.append(headers[i].size() - cells[i].size(), ' ');
        }
        return s + "\n";
    };

    std::string out = line(headers);
    for (const auto& row : table.rows) {
        std::vector<std::string> cells;
        for (const auto& c : columns) cells.emplace_back(truth_letter(eval_propositional(c, row.assignment), style));
        out += line(cells);
    }
    return out;
}

inline std::string format_assignment(const std::vector<std::string>& order, const Assignment& a,
                                     ValueStyle style = ValueStyle::WF) {
    std::string s;
    for (const auto& v : order) {
        if (!s.empty()) s += ' ';
        s += v + "=" + truth_letter(a.at(v), style);
    }
    return s;
}

// ---------------------------------------------------------------------------
// Finite models
// ---------------------------------------------------------------------------

using Symbol = std::pair<std::string, int>;  // name, arity
using Tuple = std::vector<int>;
using Environment = std::map<std::string, int>;

// Comparison atoms are uninterpreted. An interpretation supplies binary
// tables for "<", "<=", "=" and "in"; ">=", ">", "!=" and "notin" denote
// their complements.
struct Interpretation {
    int domain_size = 1;
    std::map<Symbol, std::set<Tuple>> predicate_tables;
    std::map<std::string, int> constant_values;
    std::map<Symbol, std::vector<int>> function_tables;  // values in lexicographic tuple order
};

inline ComparisonOp base_relation(ComparisonOp op, bool& complemented) {
    switch (op) {
    case ComparisonOp::GE:
    case ComparisonOp::GT:
    case ComparisonOp::NE:
    case ComparisonOp::NOTIN:
        complemented = true;
        return complement(op);
    default:
        complemented = false;
        return op;
    }
}

inline Symbol relation_symbol(ComparisonOp base) { return {spelling(base), 2}; }

inline std::size_t tuple_index(const Tuple& t, int domain_size) {
    std::size_t idx = 0;
    for (int v : t) idx = idx * static_cast<std::size_t>(domain_size) + static_cast<std::size_t>(v);
    return idx;
}

inline int eval_term(const Term& t, const Interpretation& i, const Environment& env) {
    return std::visit(
        [&](const auto& x) -> int {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, Variable>) {
                auto it = env.find(x.name);
                if (it == env.end()) throw UnboundVariable("variable '" + x.name + "' is unbound");
                return it->second;
            } else if constexpr (std::is_same_v<T, Constant>) {
                auto it = i.constant_values.find(x.name);
                if (it == i.constant_values.end()) throw MissingSymbol("constant '" + x.name + "' is uninterpreted");
                return it->second;
            } else {
                Tuple args;
                for (const auto& a : x.args) args.push_back(eval_term(a, i, env));
                auto it = i.function_tables.find({x.function, static_cast<int>(args.size())});
                if (it == i.function_tables.end())
                    throw MissingSymbol("function '" + x.function + "/" + std::to_string(args.size()) +
                                        "' is uninterpreted");
                return it->second.at(tuple_index(args, i.domain_size));
            }
        },
        t.value);
}

namespace detail {

inline bool holds(const Interpretation& i, const Symbol& s, const Tuple& t) {
    auto it = i.predicate_tables.find(s);
    if (it == i.predicate_tables.end())
        throw MissingSymbol("predicate '" + s.first + "/" + std::to_string(s.second) + "' is uninterpreted");
    return it->second.count(t) > 0;
}

inline bool eval_atom(const Atom& a, const Interpretation& i, const Environment& env) {
    if (const auto* p = std::get_if<Prop>(&a)) return holds(i, {p->name, 0}, {});
    if (const auto* p = std::get_if<Pred>(&a)) {
        Tuple t;
        for (const auto& arg : p->args) t.push_back(eval_term(arg, i, env));
        return holds(i, {p->name, static_cast<int>(t.size())}, t);
    }
    const auto& c = std::get<Compare>(a);
    bool complemented = false;
    ComparisonOp base = base_relation(c.op, complemented);
    bool v = holds(i, relation_symbol(base), {eval_term(c.left, i, env), eval_term(c.right, i, env)});
    return complemented ? !v : v;
}

}  // namespace detail

// Guarded blocks read classically: forall x [G] . P as forall x (G -> P),
// exists x [G] . P as exists x (G & P).
inline bool eval(const Formula& f, const Interpretation& i, const Environment& env = {}) {
    return std::visit(
        [&](const auto& x) -> bool {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, AtomF>) {
                return detail::eval_atom(x.atom, i, env);
            } else if constexpr (std::is_same_v<T, Not>) {
                return !eval(x.body, i, env);
            } else if constexpr (std::is_same_v<T, Cond>) {
                return !eval(x.condition, i, env) || eval(x.consequent, i, env);
            } else if constexpr (std::is_same_v<T, And>) {
                return eval(x.left, i, env) && eval(x.right, i, env);
            } else if constexpr (std::is_same_v<T, Or>) {
                return eval(x.left, i, env) || eval(x.right, i, env);
            } else {
                const QuantBlock& b = x.block;
                const bool universal = b.kind == QuantKind::FORALL;
                Environment inner = env;
                // Odometer over the block's variables.
                std::vector<int> values(b.vars.size(), 0);
                while (true) {
                    for (std::size_t k = 0; k < b.vars.size(); ++k) inner[b.vars[k]] = values[k];
                    bool guard = !b.guard || eval(*b.guard, i, inner);
                    if (universal && guard && !eval(x.body, i, inner)) return false;
                    if (!universal && guard && eval(x.body, i, inner)) return true;
                    std::size_t k = b.vars.size();
                    while (k > 0 && ++values[k - 1] == i.domain_size) values[--k] = 0;
                    if (k == 0) break;
                }
                return universal;
            }
        },
        f->value);
}

// Symbols a formula needs interpreted, in order of first appearance.
struct Signature {
    std::vector<Symbol> predicates;         // propositions have arity 0
    std::vector<ComparisonOp> relations;    // base relations only
    std::vector<std::string> constants;
    std::vector<Symbol> functions;
    std::vector<std::string> free_variables;
};

namespace detail {

template <class T>
void add_unique(std::vector<T>& v, const T& x) {
    if (std::find(v.begin(), v.end(), x) == v.end()) v.push_back(x);
}

inline void collect_term(const Term& t, Signature& s) {
    if (const auto* c = std::get_if<Constant>(&t.value)) {
        add_unique(s.constants, c->name);
    } else if (const auto* app = std::get_if<Application>(&t.value)) {
        add_unique(s.functions, Symbol{app->function, static_cast<int>(app->args.size())});
        for (const auto& a : app->args) collect_term(a, s);
    }
}

inline void collect(const Formula& f, Signature& s) {
    if (const auto* a = as<AtomF>(f)) {
        if (const auto* p = std::get_if<Prop>(&a->atom)) {
            add_unique(s.predicates, Symbol{p->name, 0});
        } else if (const auto* p = std::get_if<Pred>(&a->atom)) {
            add_unique(s.predicates, Symbol{p->name, static_cast<int>(p->args.size())});
            for (const auto& t : p->args) collect_term(t, s);
        } else {
            const auto& c = std::get<Compare>(a->atom);
            bool complemented;
            add_unique(s.relations, base_relation(c.op, complemented));
            collect_term(c.left, s);
            collect_term(c.right, s);
        }
        return;
    }
    for (const auto& c : children(f)) collect(c, s);
}

}  // namespace detail

inline Signature signature_of(const std::vector<Formula>& formulas) {
    Signature s;
    for (const auto& f : formulas) {
        detail::collect(f, s);
        for (const auto& v : free_variables(f)) detail::add_unique(s.free_variables, v);
    }
    return s;
}

// Hard cap on the number of interpretations enumerated at one domain size.
inline constexpr double kMaxInterpretationsLog2 = 24.0;

namespace detail {

inline std::uint64_t ipow(std::uint64_t base, std::uint64_t exp) {
    std::uint64_t r = 1;
    while (exp-- > 0) r *= base;
    return r;
}

}  // namespace detail

// Steps through every (interpretation, environment) pair of a signature at
// one domain size. Predicate tables count as binary numbers whose bit k is
// the k-th tuple in lexicographic order; the last symbol varies fastest.
class InterpretationEnumerator {
public:
    InterpretationEnumerator(Signature sig, int domain_size) : sig_(std::move(sig)), n_(domain_size) {
        if (n_ < 1) throw Error("domain size must be at least 1");
        if (log2_size(sig_, n_) > kMaxInterpretationsLog2)
            throw SignatureTooLarge("interpretation space at domain size " + std::to_string(n_) +
                                    " exceeds 2^24");
        const std::uint64_t n = static_cast<std::uint64_t>(n_);
        for (const auto& p : sig_.predicates) radices_.push_back(std::uint64_t{1} << detail::ipow(n, p.second));
        for (std::size_t k = 0; k < sig_.relations.size(); ++k) radices_.push_back(std::uint64_t{1} << (n * n));
        for (std::size_t k = 0; k < sig_.constants.size(); ++k) radices_.push_back(n);
        for (const auto& fn : sig_.functions) radices_.push_back(detail::ipow(n, detail::ipow(n, fn.second)));
        for (std::size_t k = 0; k < sig_.free_variables.size(); ++k) radices_.push_back(n);
        digits_.assign(radices_.size(), 0);
    }

    static double log2_size(const Signature& s, int domain_size) {
        const double n = domain_size;
        const double lg = std::log2(n);
        double bits = 0;
        for (const auto& p : s.predicates) bits += std::pow(n, p.second);
        bits += static_cast<double>(s.relations.size()) * n * n;
        bits += static_cast<double>(s.constants.size()) * lg;
        for (const auto& fn : s.functions) bits += std::pow(n, fn.second) * lg;
        bits += static_cast<double>(s.free_variables.size()) * lg;
        return bits;
    }

    // Writes the current pair and advances; false once exhausted.
    bool next(Interpretation& interp, Environment& env) {
        if (done_) return false;
        decode(interp, env);
        std::size_t k = digits_.size();
        while (k > 0 && ++digits_[k - 1] == radices_[k - 1]) digits_[--k] = 0;
        if (k == 0) done_ = true;
        return true;
    }

private:
    std::vector<Tuple> tuples(int arity) const {
        std::vector<Tuple> out;
        Tuple t(static_cast<std::size_t>(arity), 0);
        while (true) {
            out.push_back(t);
            int k = arity;
            while (k > 0 && ++t[static_cast<std::size_t>(k - 1)] == n_) t[static_cast<std::size_t>(--k)] = 0;
            if (k == 0) break;
        }
        return out;
    }

    std::set<Tuple> table(std::uint64_t bits, int arity) const {
        std::set<Tuple> out;
        auto all = tuples(arity);
        for (std::size_t k = 0; k < all.size(); ++k)
            if (bits & (std::uint64_t{1} << k)) out.insert(all[k]);
        return out;
    }

    void decode(Interpretation& interp, Environment& env) const {
        interp = Interpretation{};
        interp.domain_size = n_;
        env.clear();
        std::size_t d = 0;
        for (const auto& p : sig_.predicates) interp.predicate_tables[p] = table(digits_[d++], p.second);
        for (auto r : sig_.relations) interp.predicate_tables[relation_symbol(r)] = table(digits_[d++], 2);
        for (const auto& c : sig_.constants) interp.constant_values[c] = static_cast<int>(digits_[d++]);
        for (const auto& fn : sig_.functions) {
            std::uint64_t code = digits_[d++];
            std::vector<int> values(detail::ipow(static_cast<std::uint64_t>(n_), static_cast<std::uint64_t>(fn.second)));
            for (auto& v : values) {
                v = static_cast<int>(code % static_cast<std::uint64_t>(n_));
                code /= static_cast<std::uint64_t>(n_);
            }
            interp.function_tables[fn] = std::move(values);
        }
        for (const auto& v : sig_.free_variables) env[v] = static_cast<int>(digits_[d++]);
    }

    Signature sig_;
    int n_;
    std::vector<std::uint64_t> radices_;
    std::vector<std::uint64_t> digits_;
    bool done_ = false;
};

struct Counterexample {
    Interpretation interpretation;
    Environment environment;
};

// First interpretation, by ascending domain size, on which a and b differ.
// A bounded search: nullopt means no counterexample up to max_domain.
inline std::optional<Counterexample> bounded_counterexample(const Formula& a, const Formula& b, int max_domain) {
    Signature sig = signature_of({a, b});
    if (InterpretationEnumerator::log2_size(sig, max_domain) > kMaxInterpretationsLog2)
        throw SignatureTooLarge("interpretation space at domain size " + std::to_string(max_domain) +
                                " exceeds 2^24");
    for (int n = 1; n <= max_domain; ++n) {
        InterpretationEnumerator it(sig, n);
        Interpretation interp;
        Environment env;
        while (it.next(interp, env))
            if (eval(a, interp, env) != eval(b, interp, env)) return Counterexample{interp, env};
    }
    return std::nullopt;
}

inline bool equivalent_bounded(const Formula& a, const Formula& b, int max_domain) {
    return !bounded_counterexample(a, b, max_domain).has_value();
}

// "domain=2 A=w F={0} R={(0,1)} <={(0,0)} c=1 f=[1,0] x:=0"
inline std::string format_counterexample(const Counterexample& c, const Signature& sig,
                                         ValueStyle style = ValueStyle::WF) {
    const Interpretation& i = c.interpretation;
    std::string s = "domain=" + std::to_string(i.domain_size);
    auto set_text = [](const std::set<Tuple>& tuples) {
        std::string t = "{";
        bool first = true;
        for (const auto& tup : tuples) {
            if (!first) t += ',';
            first = false;
            if (tup.size() == 1) {
                t += std::to_string(tup[0]);
                continue;
            }
            t += '(';
            for (std::size_t k = 0; k < tup.size(); ++k) {
                if (k > 0) t += ',';
                t += std::to_string(tup[k]);
            }
            t += ')';
        }
        return t + "}";
    };
    for (const auto& p : sig.predicates) {
        const auto& table = i.predicate_tables.at(p);
        s += ' ' + p.first + '=';
        s += p.second == 0 ? std::string(truth_letter(!table.empty(), style)) : set_text(table);
    }
    for (auto r : sig.relations) s += std::string(" ") + spelling(r) + "=" + set_text(i.predicate_tables.at(relation_symbol(r)));
    for (const auto& k : sig.constants) s += ' ' + k + '=' + std::to_string(i.constant_values.at(k));
    for (const auto& fn : sig.functions) {
        s += ' ' + fn.first + "=[";
        const auto& values = i.function_tables.at(fn);
        for (std::size_t k = 0; k < values.size(); ++k) {
            if (k > 0) s += ',';
            s += std::to_string(values[k]);
        }
        s += ']';
    }
    for (const auto& v : sig.free_variables) s += ' ' + v + ":=" + std::to_string(c.environment.at(v));
    return s;
}

}  // namespace begriff
