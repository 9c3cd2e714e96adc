#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <cstddef>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace plagsim::frontend {

enum class TokenKind {
    Keyword,
    Identifier,
    IntLiteral,
    FloatLiteral,
    StringLiteral,
    CharLiteral,
    Operator,
    Punctuation,
    PreprocessorInclude,
};

inline std::string_view to_string(TokenKind kind) {
    switch (kind) {
        case TokenKind::Keyword: return "Keyword";
        case TokenKind::Identifier: return "Identifier";
        case TokenKind::IntLiteral: return "IntLiteral";
        case TokenKind::FloatLiteral: return "FloatLiteral";
        case TokenKind::StringLiteral: return "StringLiteral";
        case TokenKind::CharLiteral: return "CharLiteral";
        case TokenKind::Operator: return "Operator";
        case TokenKind::Punctuation: return "Punctuation";
        case TokenKind::PreprocessorInclude: return "PreprocessorInclude";
    }
    return "?";
}

// cout, cin and endl are library names and lex as identifiers.
inline constexpr std::array<std::string_view, 28> kKeywords = {
    "bool",   "break",  "case",     "char",     "const", "continue", "default",
    "do",     "double", "else",     "false",    "float", "for",      "if",
    "int",    "long",   "namespace", "return",  "short", "signed",   "sizeof",
    "static", "switch", "true",     "unsigned", "using", "void",     "while",
};

inline bool is_keyword(std::string_view word) {
    return std::find(kKeywords.begin(), kKeywords.end(), word) != kKeywords.end();
}

/// A lexeme with its position in the original source.
struct Token {
    TokenKind kind;
    std::string text;
    int line = 1;
    int column = 1;
};

/// Comparison unit for similarity: a token without its position.
struct Atom {
    TokenKind kind;
    std::string text;

    friend bool operator==(const Atom&, const Atom&) = default;
    friend auto operator<=>(const Atom&, const Atom&) = default;
};

struct AtomHash {
    std::size_t operator()(const Atom& atom) const noexcept {
        return std::hash<std::string>{}(atom.text) * 31u + static_cast<std::size_t>(atom.kind);
    }
};

struct TokenStream {
    std::vector<Atom> atoms;

    std::size_t size() const noexcept { return atoms.size(); }
    bool empty() const noexcept { return atoms.empty(); }

    friend bool operator==(const TokenStream&, const TokenStream&) = default;
};

inline TokenStream atoms_of(const std::vector<Token>& tokens) {
    TokenStream stream;
    stream.atoms.reserve(tokens.size());
    for (const auto& t : tokens) stream.atoms.push_back({t.kind, t.text});
    return stream;
}

}  // namespace plagsim::frontend
