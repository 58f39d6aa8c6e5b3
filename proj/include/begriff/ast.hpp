#pragma once

// Formula AST shared by the modern notation and the Begriffsschrift.
//
// Terms, atoms and formulas are immutable values. Formula is a cheap handle
// onto a shared, never-mutated node, so copying subtrees is O(1) and every
// operation in the library is a pure function over these values.

#include <cstddef>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace begriff {

// Base class of every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Raised when an operation that needs kernel form receives And/Or/exists.
class KernelError : public Error {
public:
    using Error::Error;
};

// ---------------------------------------------------------------------------
// Terms
// ---------------------------------------------------------------------------

struct Term;

struct Variable {
    std::string name;
};

// Decimal literals ("0") and opaque set names ("Nat", "X").
struct Constant {
    std::string name;
};

struct Application {
    std::string function;
    std::vector<Term> args;
};

struct Term {
    std::variant<Variable, Constant, Application> value;

    static Term var(std::string name) { return {Variable{std::move(name)}}; }
    static Term constant(std::string name) { return {Constant{std::move(name)}}; }
    static Term apply(std::string function, std::vector<Term> args) {
        if (args.empty()) throw Error("application of '" + function + "' needs at least one argument");
        return {Application{std::move(function), std::move(args)}};
    }
};

inline bool operator==(const Variable& a, const Variable& b) { return a.name == b.name; }
inline bool operator==(const Constant& a, const Constant& b) { return a.name == b.name; }
inline bool operator==(const Application& a, const Application& b);
inline bool operator==(const Term& a, const Term& b) { return a.value == b.value; }
inline bool operator==(const Application& a, const Application& b) {
    return a.function == b.function && a.args == b.args;
}

// ---------------------------------------------------------------------------
// Atoms
// ---------------------------------------------------------------------------

enum class ComparisonOp { LT, LE, GT, GE, EQ, NE, IN, NOTIN };

// ASCII spelling used by both printers.
inline const char* spelling(ComparisonOp op) {
    switch (op) {
    case ComparisonOp::LT: return "<";
    case ComparisonOp::LE: return "<=";
    case ComparisonOp::GT: return ">";
    case ComparisonOp::GE: return ">=";
    case ComparisonOp::EQ: return "=";
    case ComparisonOp::NE: return "!=";
    case ComparisonOp::IN: return "in";
    case ComparisonOp::NOTIN: return "notin";
    }
    return "?";
}

// The operator whose relation is the complement of op's.
inline ComparisonOp complement(ComparisonOp op) {
    switch (op) {
    case ComparisonOp::LT: return ComparisonOp::GE;
    case ComparisonOp::GE: return ComparisonOp::LT;
    case ComparisonOp::LE: return ComparisonOp::GT;
    case ComparisonOp::GT: return ComparisonOp::LE;
    case ComparisonOp::EQ: return ComparisonOp::NE;
    case ComparisonOp::NE: return ComparisonOp::EQ;
    case ComparisonOp::IN: return ComparisonOp::NOTIN;
    case ComparisonOp::NOTIN: return ComparisonOp::IN;
    }
    return op;
}

struct Prop {
    std::string name;
};

struct Pred {
    std::string name;
    std::vector<Term> args;
};

struct Compare {
    Term left;
    ComparisonOp op;
    Term right;
};

inline bool operator==(const Prop& a, const Prop& b) { return a.name == b.name; }
inline bool operator==(const Pred& a, const Pred& b) { return a.name == b.name && a.args == b.args; }
inline bool operator==(const Compare& a, const Compare& b) {
    return a.op == b.op && a.left == b.left && a.right == b.right;
}

using Atom = std::variant<Prop, Pred, Compare>;

// ---------------------------------------------------------------------------
// Formulas
// ---------------------------------------------------------------------------

enum class QuantKind { FORALL, EXISTS };

struct FormulaNode;

class Formula {
public:
    Formula() = delete;
    explicit Formula(std::shared_ptr<const FormulaNode> node) : node_(std::move(node)) {}

    const FormulaNode& node() const { return *node_; }
    const FormulaNode* operator->() const { return node_.get(); }

    // Identity of the shared node; equal identity implies structural equality.
    const void* identity() const { return node_.get(); }

private:
    std::shared_ptr<const FormulaNode> node_;
};

struct QuantBlock {
    QuantKind kind;
    std::vector<std::string> vars;
    std::optional<Formula> guard;
};

struct AtomF {
    Atom atom;
};
struct Not {
    Formula body;
};
// Frege's conditional stroke: condition => consequent.
struct Cond {
    Formula condition;
    Formula consequent;
};
struct And {
    Formula left;
    Formula right;
};
struct Or {
    Formula left;
    Formula right;
};
struct Quant {
    QuantBlock block;
    Formula body;
};

struct FormulaNode {
    std::variant<AtomF, Not, Cond, And, Or, Quant> value;
};

template <class T>
const T* as(const Formula& f) {
    return std::get_if<T>(&f->value);
}

template <class T>
bool is(const Formula& f) {
    return std::holds_alternative<T>(f->value);
}

// Constructors ---------------------------------------------------------------

inline Formula make(FormulaNode node) {
    return Formula(std::make_shared<const FormulaNode>(std::move(node)));
}

inline Formula atom(Atom a) { return make({AtomF{std::move(a)}}); }
inline Formula prop(std::string name) { return atom(Prop{std::move(name)}); }
inline Formula pred(std::string name, std::vector<Term> args) {
    if (args.empty()) throw Error("predicate '" + name + "' needs at least one argument");
    return atom(Pred{std::move(name), std::move(args)});
}
inline Formula compare(Term left, ComparisonOp op, Term right) {
    return atom(Compare{std::move(left), op, std::move(right)});
}
inline Formula negation(Formula body) { return make({Not{std::move(body)}}); }
inline Formula conditional(Formula condition, Formula consequent) {
    return make({Cond{std::move(condition), std::move(consequent)}});
}
inline Formula conjunction(Formula left, Formula right) {
    return make({And{std::move(left), std::move(right)}});
}
inline Formula disjunction(Formula left, Formula right) {
    return make({Or{std::move(left), std::move(right)}});
}

inline Formula quantified(QuantBlock block, Formula body) {
    if (block.vars.empty()) throw Error("quantifier block binds no variables");
    for (std::size_t i = 0; i < block.vars.size(); ++i)
        for (std::size_t j = i + 1; j < block.vars.size(); ++j)
            if (block.vars[i] == block.vars[j])
                throw Error("variable '" + block.vars[i] + "' bound twice in one block");
    return make({Quant{std::move(block), std::move(body)}});
}
inline Formula forall(std::vector<std::string> vars, Formula body,
                      std::optional<Formula> guard = std::nullopt) {
    return quantified({QuantKind::FORALL, std::move(vars), std::move(guard)}, std::move(body));
}
inline Formula exists(std::vector<std::string> vars, Formula body,
                      std::optional<Formula> guard = std::nullopt) {
    return quantified({QuantKind::EXISTS, std::move(vars), std::move(guard)}, std::move(body));
}

// Content stroke (asserted=false) or judgment stroke (asserted=true) over a formula.
struct Judgment {
    bool asserted = false;
    Formula body;

    static Judgment content(Formula f) { return {false, std::move(f)}; }
    static Judgment judge(Formula f) { return {true, std::move(f)}; }
};

// ---------------------------------------------------------------------------
// Structural utilities
// ---------------------------------------------------------------------------

// Node-for-node identity; no alpha-renaming, no commutativity.
inline bool structurally_equal(const Formula& a, const Formula& b) {
    if (a.identity() == b.identity()) return true;
    if (a->value.index() != b->value.index()) return false;
    return std::visit(
        [&](const auto& x) -> bool {
            using T = std::decay_t<decltype(x)>;
            const T& y = std::get<T>(b->value);
            if constexpr (std::is_same_v<T, AtomF>) {
                return x.atom == y.atom;
            } else if constexpr (std::is_same_v<T, Not>) {
                return structurally_equal(x.body, y.body);
            } else if constexpr (std::is_same_v<T, Cond>) {
                return structurally_equal(x.condition, y.condition) &&
                       structurally_equal(x.consequent, y.consequent);
            } else if constexpr (std::is_same_v<T, And> || std::is_same_v<T, Or>) {
                return structurally_equal(x.left, y.left) && structurally_equal(x.right, y.right);
            } else {
                if (x.block.kind != y.block.kind || x.block.vars != y.block.vars) return false;
                if (x.block.guard.has_value() != y.block.guard.has_value()) return false;
                if (x.block.guard && !structurally_equal(*x.block.guard, *y.block.guard)) return false;
                return structurally_equal(x.body, y.body);
            }
        },
        a->value);
}

inline bool operator==(const Formula& a, const Formula& b) { return structurally_equal(a, b); }

inline bool structurally_equal(const Judgment& a, const Judgment& b) {
    return a.asserted == b.asserted && structurally_equal(a.body, b.body);
}

inline bool operator==(const Judgment& a, const Judgment& b) { return structurally_equal(a, b); }

// Direct subformulas in a fixed order: Cond -> {condition, consequent},
// And/Or -> {left, right}, Quant -> {guard?, body}.
inline std::vector<Formula> children(const Formula& f) {
    return std::visit(
        [](const auto& x) -> std::vector<Formula> {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, AtomF>) {
                return {};
            } else if constexpr (std::is_same_v<T, Not>) {
                return {x.body};
            } else if constexpr (std::is_same_v<T, Cond>) {
                return {x.condition, x.consequent};
            } else if constexpr (std::is_same_v<T, And> || std::is_same_v<T, Or>) {
                return {x.left, x.right};
            } else {
                if (x.block.guard) return {*x.block.guard, x.body};
                return {x.body};
            }
        },
        f->value);
}

// Rebuilds f's node kind over new children (same order as children()).
inline Formula with_children(const Formula& f, const std::vector<Formula>& kids) {
    auto need = [&](std::size_t n) {
        if (kids.size() != n) throw Error("with_children: wrong number of children");
    };
    return std::visit(
        [&](const auto& x) -> Formula {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, AtomF>) {
                need(0);
                return f;
            } else if constexpr (std::is_same_v<T, Not>) {
                need(1);
                return negation(kids[0]);
            } else if constexpr (std::is_same_v<T, Cond>) {
                need(2);
                return conditional(kids[0], kids[1]);
            } else if constexpr (std::is_same_v<T, And>) {
                need(2);
                return conjunction(kids[0], kids[1]);
            } else if constexpr (std::is_same_v<T, Or>) {
                need(2);
                return disjunction(kids[0], kids[1]);
            } else {
                QuantBlock block = x.block;
                if (block.guard) {
                    need(2);
                    block.guard = kids[0];
                    return quantified(std::move(block), kids[1]);
                }
                need(1);
                return quantified(std::move(block), kids[0]);
            }
        },
        f->value);
}

namespace detail {

inline void term_variables(const Term& t, std::set<std::string>& out) {
    if (const auto* v = std::get_if<Variable>(&t.value)) {
        out.insert(v->name);
    } else if (const auto* app = std::get_if<Application>(&t.value)) {
        for (const auto& arg : app->args) term_variables(arg, out);
    }
}

inline void atom_variables(const Atom& a, std::set<std::string>& out) {
    if (const auto* p = std::get_if<Pred>(&a)) {
        for (const auto& arg : p->args) term_variables(arg, out);
    } else if (const auto* c = std::get_if<Compare>(&a)) {
        term_variables(c->left, out);
        term_variables(c->right, out);
    }
}

}  // namespace detail

inline std::set<std::string> free_variables(const Formula& f) {
    std::set<std::string> out;
    if (const auto* a = as<AtomF>(f)) {
        detail::atom_variables(a->atom, out);
        return out;
    }
    if (const auto* q = as<Quant>(f)) {
        out = free_variables(q->body);
        if (q->block.guard) out.merge(free_variables(*q->block.guard));
        for (const auto& v : q->block.vars) out.erase(v);
        return out;
    }
    for (const auto& child : children(f)) out.merge(free_variables(child));
    return out;
}

// Number of nodes of each kind, used by layout and acceptance counts.
struct NodeCounts {
    std::size_t atoms = 0, nots = 0, conds = 0, ands = 0, ors = 0, foralls = 0, exists = 0;
};

inline NodeCounts count_nodes(const Formula& f) {
    NodeCounts n;
    auto walk = [&](auto&& self, const Formula& g) -> void {
        std::visit(
            [&](const auto& x) {
                using T = std::decay_t<decltype(x)>;
                if constexpr (std::is_same_v<T, AtomF>) ++n.atoms;
                else if constexpr (std::is_same_v<T, Not>) ++n.nots;
                else if constexpr (std::is_same_v<T, Cond>) ++n.conds;
                else if constexpr (std::is_same_v<T, And>) ++n.ands;
                else if constexpr (std::is_same_v<T, Or>) ++n.ors;
                else if (x.block.kind == QuantKind::FORALL) ++n.foralls;
                else ++n.exists;
            },
            g->value);
        for (const auto& c : children(g)) self(self, c);
    };
    walk(walk, f);
    return n;
}

}  // namespace begriff
