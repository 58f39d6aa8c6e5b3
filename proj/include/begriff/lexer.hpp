#pragma once

// Tokenizer shared by the modern-notation and LBS parsers.

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ast.hpp"

namespace begriff {

// Byte range [start, end) into the parsed input.
struct SourceSpan {
    std::size_t start = 0;
    std::size_t end = 0;
};

class ParseError : public Error {
public:
    ParseError(SourceSpan span, std::vector<std::string> expected, std::string found,
               std::string note = {})
        : Error(describe(span, expected, found, note)),
          span_(span),
          expected_(std::move(expected)),
          found_(std::move(found)),
          note_(std::move(note)) {}

    SourceSpan span() const { return span_; }
    const std::vector<std::string>& expected() const { return expected_; }
    const std::string& found() const { return found_; }
    const std::string& note() const { return note_; }

    // "expected X, Y or Z, found W" without the position prefix.
    std::string summary() const { return summarize(expected_, found_, note_); }

private:
    static std::string summarize(const std::vector<std::string>& expected, const std::string& found,
                                 const std::string& note) {
        std::string s;
        if (!note.empty()) s = note + "; ";
        s += "expected ";
        for (std::size_t i = 0; i < expected.size(); ++i) {
            if (i > 0) s += (i + 1 == expected.size()) ? " or " : ", ";
            s += expected[i];
        }
        return s + ", found " + found;
    }
    static std::string describe(SourceSpan span, const std::vector<std::string>& expected,
                                const std::string& found, const std::string& note) {
        return "at byte " + std::to_string(span.start) + ": " + summarize(expected, found, note);
    }

    SourceSpan span_;
    std::vector<std::string> expected_;
    std::string found_;
    std::string note_;
};

enum class Tok {
    Ident,
    Number,
    Forall,
    Exists,
    In,
    NotIn,
    Turnstile,  // |-
    Arrow,      // ->
    Bar,        // |
    Amp,        // &
    Tilde,      // ~
    LParen,
    RParen,
    LBracket,
    RBracket,
    Dot,
    Comma,
    Colon,
    FatArrow,  // =>
    Lt,
    Le,
    Gt,
    Ge,
    Eq,
    Ne,
    End,
};

inline const char* describe(Tok t) {
    switch (t) {
    case Tok::Ident: return "identifier";
    case Tok::Number: return "number";
    case Tok::Forall: return "'forall'";
    case Tok::Exists: return "'exists'";
    case Tok::In: return "'in'";
    case Tok::NotIn: return "'notin'";
    case Tok::Turnstile: return "'|-'";
    case Tok::Arrow: return "'->'";
    case Tok::Bar: return "'|'";
    case Tok::Amp: return "'&'";
    case Tok::Tilde: return "'~'";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::LBracket: return "'['";
    case Tok::RBracket: return "']'";
    case Tok::Dot: return "'.'";
    case Tok::Comma: return "','";
    case Tok::Colon: return "':'";
    case Tok::FatArrow: return "'=>'";
    case Tok::Lt: return "'<'";
    case Tok::Le: return "'<='";
    case Tok::Gt: return "'>'";
    case Tok::Ge: return "'>='";
    case Tok::Eq: return "'='";
    case Tok::Ne: return "'!='";
    case Tok::End: return "end of input";
    }
    return "?";
}

struct Token {
    Tok kind;
    std::string text;  // identifier/number spelling; normalized for aliases
    SourceSpan span;
};

inline std::string describe(const Token& t) {
    if (t.kind == Tok::Ident) return "identifier '" + t.text + "'";
    if (t.kind == Tok::Number) return "number '" + t.text + "'";
    return describe(t.kind);
}

inline bool is_identifier(std::string_view s) {
    if (s.empty() || !std::isalpha(static_cast<unsigned char>(s[0]))) return false;
    for (char c : s)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
    return true;
}

inline bool is_reserved(std::string_view s) {
    return s == "forall" || s == "exists" || s == "in" || s == "notin";
}

inline std::vector<Token> tokenize(std::string_view in) {
    struct Alias {
        std::string_view utf8;
        Tok kind;
        const char* text;
    };
    static constexpr Alias aliases[] = {
        {"∀", Tok::Forall, ""}, {"∃", Tok::Exists, ""}, {"¬", Tok::Tilde, ""},
        {"∧", Tok::Amp, ""},    {"∨", Tok::Bar, ""},    {"→", Tok::Arrow, ""},
        {"⇒", Tok::Arrow, ""},  {"≤", Tok::Le, ""},     {"≥", Tok::Ge, ""},
        {"∈", Tok::In, ""},     {"∉", Tok::NotIn, ""},  {"≠", Tok::Ne, ""},
        {"⊢", Tok::Turnstile, ""}, {"ℕ", Tok::Ident, "Nat"},
    };
    struct Punct {
        std::string_view text;
        Tok kind;
    };
    // Longest spellings first.
    static constexpr Punct puncts[] = {
        {"|-", Tok::Turnstile}, {"->", Tok::Arrow}, {"=>", Tok::FatArrow}, {"<=", Tok::Le},
        {">=", Tok::Ge},        {"!=", Tok::Ne},    {"|", Tok::Bar},       {"&", Tok::Amp},
        {"~", Tok::Tilde},      {"(", Tok::LParen}, {")", Tok::RParen},    {"[", Tok::LBracket},
        {"]", Tok::RBracket},   {".", Tok::Dot},    {",", Tok::Comma},     {":", Tok::Colon},
        {"<", Tok::Lt},         {">", Tok::Gt},     {"=", Tok::Eq},
    };

    std::vector<Token> out;
    std::size_t i = 0;
    while (i < in.size()) {
        unsigned char c = static_cast<unsigned char>(in[i]);
        if (std::isspace(c)) {
            ++i;
            continue;
        }
        if (std::isalpha(c)) {
            std::size_t j = i;
            while (j < in.size() && (std::isalnum(static_cast<unsigned char>(in[j])) || in[j] == '_')) ++j;
            std::string word(in.substr(i, j - i));
            Tok kind = Tok::Ident;
            if (word == "forall") kind = Tok::Forall;
            else if (word == "exists") kind = Tok::Exists;
            else if (word == "in") kind = Tok::In;
            else if (word == "notin") kind = Tok::NotIn;
            out.push_back({kind, std::move(word), {i, j}});
            i = j;
            continue;
        }
        if (std::isdigit(c)) {
            std::size_t j = i;
            while (j < in.size() && std::isdigit(static_cast<unsigned char>(in[j]))) ++j;
            if (j < in.size() && (std::isalpha(static_cast<unsigned char>(in[j])) || in[j] == '_'))
                throw ParseError({i, j + 1}, {"number"}, "'" + std::string(in.substr(i, j + 1 - i)) + "'",
                                 "identifiers must start with a letter");
            out.push_back({Tok::Number, std::string(in.substr(i, j - i)), {i, j}});
            i = j;
            continue;
        }
        bool matched = false;
        if (c >= 0x80) {
            for (const auto& a : aliases) {
                if (in.substr(i, a.utf8.size()) == a.utf8) {
                    out.push_back({a.kind, a.text, {i, i + a.utf8.size()}});
                    i += a.utf8.size();
                    matched = true;
                    break;
                }
            }
        } else {
            for (const auto& p : puncts) {
                if (in.substr(i, p.text.size()) == p.text) {
                    out.push_back({p.kind, std::string(p.text), {i, i + p.text.size()}});
                    i += p.text.size();
                    matched = true;
                    break;
                }
            }
        }
        if (!matched) {
            std::size_t len = 1;
            if (c >= 0xF0) len = 4;
            else if (c >= 0xE0) len = 3;
            else if (c >= 0xC0) len = 2;
            len = std::min(len, in.size() - i);
            throw ParseError({i, i + len}, {"token"}, "character '" + std::string(in.substr(i, len)) + "'");
        }
    }
    out.push_back({Tok::End, "", {in.size(), in.size()}});
    return out;
}

}  // namespace begriff
