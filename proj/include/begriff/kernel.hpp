#pragma once

// Rewrites between the surface connectives {~, ->, &, |, forall, exists} and
// Frege's kernel {~, ->, forall}, plus negation by quantifier flipping.

#include <optional>
#include <string>
#include <vector>

#include "ast.hpp"

namespace begriff {

// How a guarded existential is encoded in the kernel.
//
// FAITHFUL:  exists x [G] . P  =>  ~forall x . ~(G -> P)
// CLASSICAL: exists x [G] . P  =>  ~forall x . ~(G & P), with & desugared
//
// The two differ semantically; FAITHFUL reproduces the hand-drawn figures.
// FAITHFUL also draws a guard G1 & G2 as two stacked conditions,
// G2 -> (G1 -> P), instead of desugaring the conjunction.
enum class EncodingMode { FAITHFUL, CLASSICAL };

// NESTED splits "forall m, k" into one concavity per letter; GROUPED keeps
// several letters over one concavity.
enum class BlockStyle { NESTED, GROUPED };

namespace detail {

inline void conjuncts(const Formula& f, std::vector<Formula>& out) {
    if (const auto* a = as<And>(f)) {
        conjuncts(a->left, out);
        conjuncts(a->right, out);
    } else {
        out.push_back(f);
    }
}

inline Formula wrap_forall(const std::vector<std::string>& vars, Formula body, BlockStyle blocks) {
    if (blocks == BlockStyle::GROUPED) return forall(vars, std::move(body));
    for (auto it = vars.rbegin(); it != vars.rend(); ++it) body = forall({*it}, std::move(body));
    return body;
}

}  // namespace detail

inline Formula desugar(const Formula& f, EncodingMode mode, BlockStyle blocks = BlockStyle::NESTED) {
    auto d = [&](const Formula& g) { return desugar(g, mode, blocks); };
    auto guarded = [&](const Formula& guard, Formula body) {
        if (mode == EncodingMode::CLASSICAL) return conditional(d(guard), std::move(body));
        std::vector<Formula> parts;
        detail::conjuncts(guard, parts);
        for (const auto& g : parts) body = conditional(d(g), std::move(body));
        return body;
    };
    return std::visit(
        [&](const auto& x) -> Formula {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, AtomF>) {
                return f;
            } else if constexpr (std::is_same_v<T, Not>) {
                return negation(d(x.body));
            } else if constexpr (std::is_same_v<T, Cond>) {
                return conditional(d(x.condition), d(x.consequent));
            } else if constexpr (std::is_same_v<T, Or>) {
                return conditional(negation(d(x.right)), d(x.left));
            } else if constexpr (std::is_same_v<T, And>) {
                return negation(conditional(d(x.right), negation(d(x.left))));
            } else {
                const QuantBlock& b = x.block;
                if (b.kind == QuantKind::FORALL) {
                    Formula inner = b.guard ? guarded(*b.guard, d(x.body)) : d(x.body);
                    return detail::wrap_forall(b.vars, std::move(inner), blocks);
                }
                Formula inner = d(x.body);
                if (b.guard) {
                    inner = mode == EncodingMode::FAITHFUL ? guarded(*b.guard, std::move(inner))
                                                           : d(conjunction(*b.guard, x.body));
                }
                return negation(detail::wrap_forall(b.vars, negation(std::move(inner)), blocks));
            }
        },
        f->value);
}

inline Judgment desugar(const Judgment& j, EncodingMode mode, BlockStyle blocks = BlockStyle::NESTED) {
    return {j.asserted, desugar(j.body, mode, blocks)};
}

// Kernel form: atoms, Not, Cond and guardless forall blocks (single-letter
// unless GROUPED is allowed).
inline bool is_kernel(const Formula& f, BlockStyle blocks = BlockStyle::NESTED) {
    if (is<And>(f) || is<Or>(f)) return false;
    if (const auto* q = as<Quant>(f)) {
        if (q->block.kind != QuantKind::FORALL || q->block.guard) return false;
        if (blocks == BlockStyle::NESTED && q->block.vars.size() != 1) return false;
    }
    for (const auto& c : children(f))
        if (!is_kernel(c, blocks)) return false;
    return true;
}

namespace detail {

// Follows a chain of guardless forall blocks with pairwise distinct letters.
inline Formula strip_forall_chain(const Formula& f, std::vector<std::string>& vars) {
    Formula cur = f;
    while (const auto* q = as<Quant>(cur)) {
        if (q->block.kind != QuantKind::FORALL || q->block.guard) break;
        bool clash = false;
        for (const auto& v : q->block.vars)
            for (const auto& w : vars)
                if (v == w) clash = true;
        if (clash) break;
        vars.insert(vars.end(), q->block.vars.begin(), q->block.vars.end());
        cur = q->body;
    }
    return cur;
}

// Under FAITHFUL, G2 -> (G1 -> P) is one guard G1 & G2 over P; otherwise
// only the outer condition is taken.
inline std::optional<Formula> split_guard(const Formula& f, EncodingMode mode, Formula& body) {
    std::vector<Formula> guards;
    Formula cur = f;
    while (const auto* c = as<Cond>(cur)) {
        if (is<Not>(c->condition)) break;
        guards.push_back(c->condition);
        cur = c->consequent;
        if (mode == EncodingMode::CLASSICAL) break;
    }
    if (guards.empty()) return std::nullopt;
    body = cur;
    Formula g = guards.back();
    for (auto it = guards.rbegin() + 1; it != guards.rend(); ++it) g = conjunction(g, *it);
    return g;
}

}  // namespace detail

// Reads kernel patterns back as surface connectives, outermost first, in the
// priority order: exists, and, or, double negation. Guardless forall blocks
// over a conditional become guarded blocks. Under FAITHFUL,
// ~forall x . ~(G -> P) is read back as the guarded exists x [G] . P and
// stacked conditions merge into one conjunctive guard.
inline Formula resugar(const Formula& f, EncodingMode mode = EncodingMode::CLASSICAL) {
    auto r = [&](const Formula& g) { return resugar(g, mode); };

    if (const auto* n = as<Not>(f)) {
        // exists: ~forall x... ~P
        std::vector<std::string> vars;
        Formula inner = detail::strip_forall_chain(n->body, vars);
        if (!vars.empty()) {
            if (const auto* m = as<Not>(inner)) {
                const Formula& matrix = m->body;
                if (mode == EncodingMode::FAITHFUL) {
                    Formula body = matrix;
                    if (auto guard = detail::split_guard(matrix, mode, body)) return exists(vars, r(body), r(*guard));
                    return exists(vars, r(matrix));
                }
                Formula body = r(matrix);
                if (const auto* a = as<And>(body)) return exists(vars, a->right, a->left);
                return exists(vars, body);
            }
        }
        if (const auto* c = as<Cond>(n->body)) {
            // and: ~(B -> ~A) reads A & B; otherwise ~(B -> A) reads B & ~A.
            if (const auto* a = as<Not>(c->consequent)) return conjunction(r(a->body), r(c->condition));
            return conjunction(r(c->condition), r(negation(c->consequent)));
        }
        if (const auto* m = as<Not>(n->body)) return r(m->body);
        return negation(r(n->body));
    }
    if (const auto* c = as<Cond>(f)) {
        if (const auto* b = as<Not>(c->condition)) return disjunction(r(c->consequent), r(b->body));
        return conditional(r(c->condition), r(c->consequent));
    }
    if (const auto* q = as<Quant>(f)) {
        std::vector<std::string> vars;
        Formula inner = detail::strip_forall_chain(f, vars);
        if (!vars.empty()) {
            Formula body = inner;
            if (auto guard = detail::split_guard(inner, mode, body)) return forall(vars, r(body), r(*guard));
        }
        QuantBlock block = q->block;
        if (block.guard) block.guard = r(*block.guard);
        return quantified(std::move(block), r(q->body));
    }
    return f;
}

inline Judgment resugar(const Judgment& j, EncodingMode mode = EncodingMode::CLASSICAL) {
    return {j.asserted, resugar(j.body, mode)};
}

inline Formula negate(const Formula& f);

namespace detail {

// Pushes the negations already present in f down to the atoms.
inline Formula positive(const Formula& f) {
    return std::visit(
        [&](const auto& x) -> Formula {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, AtomF>) {
                return f;
            } else if constexpr (std::is_same_v<T, Not>) {
                return negate(x.body);
            } else if constexpr (std::is_same_v<T, Cond>) {
                return conditional(positive(x.condition), positive(x.consequent));
            } else if constexpr (std::is_same_v<T, And>) {
                return conjunction(positive(x.left), positive(x.right));
            } else if constexpr (std::is_same_v<T, Or>) {
                return disjunction(positive(x.left), positive(x.right));
            } else {
                return quantified(x.block, positive(x.body));
            }
        },
        f->value);
}

}  // namespace detail

// Negation pushed inward: quantifier kinds flip with guards kept as they are,
// De Morgan on & and |, (B -> A) becomes B & ~A, comparisons flip their
// operator. The only Not nodes left sit directly above Prop/Pred atoms
// (guards excepted).
inline Formula negate(const Formula& f) {
    return std::visit(
        [&](const auto& x) -> Formula {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, AtomF>) {
                if (const auto* c = std::get_if<Compare>(&x.atom))
                    return compare(c->left, complement(c->op), c->right);
                return negation(f);
            } else if constexpr (std::is_same_v<T, Not>) {
                return detail::positive(x.body);
            } else if constexpr (std::is_same_v<T, Cond>) {
                return conjunction(detail::positive(x.condition), negate(x.consequent));
            } else if constexpr (std::is_same_v<T, And>) {
                return disjunction(negate(x.left), negate(x.right));
            } else if constexpr (std::is_same_v<T, Or>) {
                return conjunction(negate(x.left), negate(x.right));
            } else {
                QuantBlock block = x.block;
                block.kind = block.kind == QuantKind::FORALL ? QuantKind::EXISTS : QuantKind::FORALL;
                return quantified(std::move(block), negate(x.body));
            }
        },
        f->value);
}

inline Judgment negate(const Judgment& j) { return {j.asserted, negate(j.body)}; }

}  // namespace begriff
