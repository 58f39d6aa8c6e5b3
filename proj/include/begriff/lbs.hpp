#pragma once

// Linear Begriffsschrift serialization (LBS): a parenthesized encoding of
// kernel-form judgments.
//
//   lbs := "(judge" f ")" | "(content" f ")"
//   f   := "(not" f ")" | "(cond" f f ")" | "(all" ident+ ":" f? "=>" f ")" | atom
//
// In "(cond B A)" the condition B comes first and the consequent A second,
// following the diagram's bottom-left reading order.

#include <string>
#include <string_view>

#include "ast.hpp"
#include "lexer.hpp"
#include "modern.hpp"

namespace begriff {

namespace detail {

class LbsParser {
public:
    explicit LbsParser(std::string_view input) : cur_(tokenize(input)), atoms_(cur_, true) {}

    Judgment judgment() {
        if (!cur_.accept(Tok::LParen)) cur_.fail({"'('"});
        const Token& head = cur_.peek();
        bool asserted;
        if (head.kind == Tok::Ident && head.text == "judge") asserted = true;
        else if (head.kind == Tok::Ident && head.text == "content") asserted = false;
        else cur_.fail({"'judge'", "'content'"});
        cur_.next();
        Formula f = formula();
        if (!cur_.accept(Tok::RParen)) cur_.fail({"')'"});
        if (!cur_.at(Tok::End)) cur_.fail({"end of input"});
        return {asserted, std::move(f)};
    }

private:
    static bool non_kernel_keyword(const Token& t) {
        if (t.kind == Tok::Forall || t.kind == Tok::Exists) return true;
        return t.kind == Tok::Ident && (t.text == "and" || t.text == "or" || t.text == "ex" || t.text == "some");
    }

    Formula formula() {
        const Token& t = cur_.peek();
        switch (t.kind) {
        case Tok::Tilde:
        case Tok::Amp:
        case Tok::Bar:
        case Tok::Arrow:
            cur_.fail({"'('", "atom"}, "non-kernel connective " + describe(t) +
                                           ": LBS has only not, cond and all");
        default: break;
        }
        if (!cur_.accept(Tok::LParen)) return atoms_.atom();

        const Token& head = cur_.peek();
        if (non_kernel_keyword(head))
            cur_.fail({"'not'", "'cond'", "'all'"},
                      "non-kernel node " + describe(head) + ": LBS has only not, cond and all");
        if (head.kind != Tok::Ident) cur_.fail({"'not'", "'cond'", "'all'"});
        std::string name = head.text;
        Formula result = [&]() -> Formula {
            if (name == "not") {
                cur_.next();
                return negation(formula());
            }
            if (name == "cond") {
                cur_.next();
                Formula condition = formula();
                Formula consequent = formula();
                return conditional(std::move(condition), std::move(consequent));
            }
            if (name == "all") {
                cur_.next();
                return universal();
            }
            cur_.fail({"'not'", "'cond'", "'all'"});
        }();
        if (!cur_.accept(Tok::RParen)) cur_.fail({"')'"});
        return result;
    }

    Formula universal() {
        std::vector<std::string> vars;
        while (cur_.at(Tok::Ident)) {
            for (const auto& v : vars)
                if (v == cur_.peek().text)
                    cur_.fail({"distinct variable"}, "variable '" + v + "' bound twice");
            vars.push_back(cur_.next().text);
        }
        if (vars.empty()) cur_.fail({"identifier"});
        if (!cur_.accept(Tok::Colon)) cur_.fail({"identifier", "':'"});
        std::optional<Formula> guard;
        if (!cur_.accept(Tok::FatArrow)) {
            guard = formula();
            if (!cur_.accept(Tok::FatArrow)) cur_.fail({"'=>'"});
        }
        Formula body = formula();
        return quantified({QuantKind::FORALL, std::move(vars), std::move(guard)}, std::move(body));
    }

    TokenCursor cur_;
    AtomParser atoms_;
};

inline void print_lbs(const Formula& f, std::string& out) {
    std::visit(
        [&](const auto& x) {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, AtomF>) {
                out += print_atom(x.atom);
            } else if constexpr (std::is_same_v<T, Not>) {
                out += "(not ";
                print_lbs(x.body, out);
                out += ')';
            } else if constexpr (std::is_same_v<T, Cond>) {
                out += "(cond ";
                print_lbs(x.condition, out);
                out += ' ';
                print_lbs(x.consequent, out);
                out += ')';
            } else if constexpr (std::is_same_v<T, And>) {
                throw KernelError("conjunction has no kernel serialization; desugar first");
            } else if constexpr (std::is_same_v<T, Or>) {
                throw KernelError("disjunction has no kernel serialization; desugar first");
            } else {
                if (x.block.kind == QuantKind::EXISTS)
                    throw KernelError("existential block has no kernel serialization; desugar first");
                out += "(all ";
                for (const auto& v : x.block.vars) {
                    out += v;
                    out += ' ';
                }
                out += ": ";
                if (x.block.guard) {
                    print_lbs(*x.block.guard, out);
                    out += ' ';
                }
                out += "=> ";
                print_lbs(x.body, out);
                out += ')';
            }
        },
        f->value);
}

}  // namespace detail

inline Judgment parse_lbs(std::string_view input) { return detail::LbsParser(input).judgment(); }

// Canonical serialization. Throws KernelError on And/Or/exists nodes.
inline std::string print_lbs(const Judgment& j) {
    std::string out = j.asserted ? "(judge " : "(content ";
    detail::print_lbs(j.body, out);
    out += ')';
    return out;
}

}  // namespace begriff
