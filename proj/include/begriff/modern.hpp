#pragma once

// Modern linear notation: recursive-descent parser and minimal-parenthesis printer.
//
//   judgment := ("|-")? formula
//   formula  := quant | implies
//   quant    := ("forall" | "exists") varlist ("[" formula "]")? "." formula
//   implies  := or ("->" implies)?
//   or       := and ("|" and)*
//   and      := unary ("&" unary)*
//   unary    := "~" unary | "(" formula ")" | atom
//   atom     := term cmp term | ident "(" terms ")" | ident
//   term     := ident "(" terms ")" | ident | number

#include <string>
#include <string_view>
#include <vector>

#include "ast.hpp"
#include "lexer.hpp"

namespace begriff {

namespace detail {

class TokenCursor {
public:
    explicit TokenCursor(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

    const Token& peek(std::size_t ahead = 0) const {
        return tokens_[std::min(pos_ + ahead, tokens_.size() - 1)];
    }
    bool at(Tok k) const { return peek().kind == k; }
    bool accept(Tok k) {
        if (!at(k)) return false;
        ++pos_;
        return true;
    }
    const Token& next() {
        const Token& t = peek();
        if (pos_ + 1 < tokens_.size()) ++pos_;
        return t;
    }
    const Token& expect(Tok k) {
        if (!at(k)) fail({describe(k)});
        return next();
    }
    [[noreturn]] void fail(std::vector<std::string> expected, std::string note = {}) const {
        throw ParseError(peek().span, std::move(expected), describe(peek()), std::move(note));
    }

private:
    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
};

inline bool comparison_op(Tok t, ComparisonOp& op) {
    switch (t) {
    case Tok::Lt: op = ComparisonOp::LT; return true;
    case Tok::Le: op = ComparisonOp::LE; return true;
    case Tok::Gt: op = ComparisonOp::GT; return true;
    case Tok::Ge: op = ComparisonOp::GE; return true;
    case Tok::Eq: op = ComparisonOp::EQ; return true;
    case Tok::Ne: op = ComparisonOp::NE; return true;
    case Tok::In: op = ComparisonOp::IN; return true;
    case Tok::NotIn: op = ComparisonOp::NOTIN; return true;
    default: return false;
    }
}

inline const std::vector<std::string>& atom_starts() {
    static const std::vector<std::string> v{"'~'", "'('", "identifier", "number"};
    return v;
}

// Atom and term grammar, shared with the LBS parser. With adjacent_calls set,
// "f(" is an application only when no space separates the name from the
// parenthesis; LBS needs this to tell "(cond x in X (not ...))" apart.
class AtomParser {
public:
    explicit AtomParser(TokenCursor& cur, bool adjacent_calls = false) : cur_(cur), adjacent_(adjacent_calls) {}

    Term term() {
        if (cur_.at(Tok::Number)) return Term::constant(cur_.next().text);
        if (!cur_.at(Tok::Ident)) cur_.fail({"identifier", "number"});
        const Token& id = cur_.next();
        std::string name = id.text;
        const std::size_t name_end = id.span.end;
        if (!cur_.at(Tok::LParen) || (adjacent_ && cur_.peek().span.start != name_end))
            return Term::var(std::move(name));
        cur_.next();
        return Term::apply(std::move(name), arguments());
    }

    Formula atom() {
        if (!cur_.at(Tok::Ident) && !cur_.at(Tok::Number)) cur_.fail({"identifier", "number"});
        Term left = term();
        ComparisonOp op;
        if (comparison_op(cur_.peek().kind, op)) {
            cur_.next();
            Term right = term();
            // A bare name on the right of a membership test denotes a set.
            if (op == ComparisonOp::IN || op == ComparisonOp::NOTIN)
                if (const auto* v = std::get_if<Variable>(&right.value)) right = Term::constant(v->name);
            return compare(std::move(left), op, std::move(right));
        }
        if (auto* v = std::get_if<Variable>(&left.value)) return prop(std::move(v->name));
        if (auto* app = std::get_if<Application>(&left.value))
            return atom(Pred{std::move(app->function), std::move(app->args)});
        cur_.fail({"comparison operator"});
    }

private:
    Formula atom(Atom a) { return begriff::atom(std::move(a)); }

    std::vector<Term> arguments() {
        std::vector<Term> args;
        args.push_back(term());
        while (cur_.accept(Tok::Comma)) args.push_back(term());
        if (!cur_.accept(Tok::RParen)) cur_.fail({"','", "')'"});
        return args;
    }

    TokenCursor& cur_;
    bool adjacent_;
};

class ModernParser {
public:
    explicit ModernParser(std::string_view input) : cur_(tokenize(input)), atoms_(cur_) {}

    Judgment judgment() {
        bool asserted = cur_.accept(Tok::Turnstile);
        Formula f = formula();
        if (!cur_.at(Tok::End)) cur_.fail({"'&'", "'|'", "'->'", "end of input"});
        return {asserted, std::move(f)};
    }

private:
    Formula formula() {
        if (cur_.at(Tok::Forall) || cur_.at(Tok::Exists)) return quant();
        return implies();
    }

    Formula quant() {
        QuantKind kind = cur_.next().kind == Tok::Forall ? QuantKind::FORALL : QuantKind::EXISTS;
        std::vector<std::string> vars;
        do {
            const Token& t = cur_.peek();
            if (t.kind != Tok::Ident) cur_.fail({"identifier"});
            for (const auto& v : vars)
                if (v == t.text) cur_.fail({"distinct variable"}, "variable '" + t.text + "' bound twice");
            vars.push_back(cur_.next().text);
        } while (cur_.accept(Tok::Comma));
        std::optional<Formula> guard;
        if (cur_.accept(Tok::LBracket)) {
            guard = formula();
            if (!cur_.accept(Tok::RBracket)) cur_.fail({"']'"});
        }
        if (!cur_.accept(Tok::Dot)) cur_.fail(guard ? std::vector<std::string>{"'.'"}
                                                    : std::vector<std::string>{"','", "'['", "'.'"});
        Formula body = formula();
        return quantified({kind, std::move(vars), std::move(guard)}, std::move(body));
    }

    Formula implies() {
        Formula left = disjunctive();
        if (!cur_.accept(Tok::Arrow)) return left;
        return conditional(std::move(left), implies());
    }

    Formula disjunctive() {
        Formula left = conjunctive();
        while (cur_.accept(Tok::Bar)) left = disjunction(std::move(left), conjunctive());
        return left;
    }

    Formula conjunctive() {
        Formula left = unary();
        while (cur_.accept(Tok::Amp)) left = conjunction(std::move(left), unary());
        return left;
    }

    Formula unary() {
        if (cur_.accept(Tok::Tilde)) return negation(unary());
        if (cur_.accept(Tok::LParen)) {
            Formula f = formula();
            if (!cur_.accept(Tok::RParen)) cur_.fail({"')'"});
            return f;
        }
        if (!cur_.at(Tok::Ident) && !cur_.at(Tok::Number)) {
            if (cur_.at(Tok::Forall) || cur_.at(Tok::Exists))
                cur_.fail(atom_starts(), "a quantifier here must be parenthesized");
            cur_.fail(atom_starts());
        }
        return atoms_.atom();
    }

    TokenCursor cur_;
    AtomParser atoms_;
};

// Binding strength of a node in the modern grammar.
inline int precedence(const Formula& f) {
    if (is<Quant>(f)) return 0;
    if (is<Cond>(f)) return 1;
    if (is<Or>(f)) return 2;
    if (is<And>(f)) return 3;
    return 4;
}

inline void print_term(const Term& t, std::string& out) {
    std::visit(
        [&](const auto& x) {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, Application>) {
                out += x.function;
                out += '(';
                for (std::size_t i = 0; i < x.args.size(); ++i) {
                    if (i > 0) out += ',';
                    print_term(x.args[i], out);
                }
                out += ')';
            } else {
                out += x.name;
            }
        },
        t.value);
}

inline void print_modern(const Formula& f, int context, std::string& out);

inline void print_block(const QuantBlock& b, std::string& out) {
    out += b.kind == QuantKind::FORALL ? "forall " : "exists ";
    for (std::size_t i = 0; i < b.vars.size(); ++i) {
        if (i > 0) out += ", ";
        out += b.vars[i];
    }
    if (b.guard) {
        out += " [";
        print_modern(*b.guard, 0, out);
        out += ']';
    }
    out += " . ";
}

inline void print_modern(const Formula& f, int context, std::string& out) {
    if (precedence(f) < context) {
        out += '(';
        print_modern(f, 0, out);
        out += ')';
        return;
    }
    std::visit(
        [&](const auto& x) {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, AtomF>) {
                std::visit(
                    [&](const auto& a) {
                        using A = std::decay_t<decltype(a)>;
                        if constexpr (std::is_same_v<A, Prop>) {
                            out += a.name;
                        } else if constexpr (std::is_same_v<A, Pred>) {
                            print_term(Term::apply(a.name, a.args), out);
                        } else {
                            print_term(a.left, out);
                            out += ' ';
                            out += spelling(a.op);
                            out += ' ';
                            print_term(a.right, out);
                        }
                    },
                    x.atom);
            } else if constexpr (std::is_same_v<T, Not>) {
                out += '~';
                print_modern(x.body, 4, out);
            } else if constexpr (std::is_same_v<T, Cond>) {
                print_modern(x.condition, 2, out);
                out += " -> ";
                print_modern(x.consequent, 1, out);
            } else if constexpr (std::is_same_v<T, Or>) {
                print_modern(x.left, 2, out);
                out += " | ";
                print_modern(x.right, 3, out);
            } else if constexpr (std::is_same_v<T, And>) {
                print_modern(x.left, 3, out);
                out += " & ";
                print_modern(x.right, 4, out);
            } else {
                print_block(x.block, out);
                print_modern(x.body, 0, out);
            }
        },
        f->value);
}

}  // namespace detail

inline Judgment parse_modern(std::string_view input) { return detail::ModernParser(input).judgment(); }

inline std::string print_modern(const Formula& f) {
    std::string out;
    detail::print_modern(f, 0, out);
    return out;
}

inline std::string print_modern(const Judgment& j) {
    return (j.asserted ? "|- " : "") + print_modern(j.body);
}

// Text of an atomic formula, as used for diagram leaf labels.
inline std::string print_atom(const Atom& a) { return print_modern(atom(a)); }

inline std::string print_term(const Term& t) {
    std::string out;
    detail::print_term(t, out);
    return out;
}

}  // namespace begriff
