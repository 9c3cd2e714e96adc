#pragma once

#include <array>
#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "plagsim/errors.hpp"
#include "plagsim/frontend/token.hpp"

namespace plagsim::frontend {

namespace detail {

// Longest first so that maximal munch falls out of a linear scan.
inline constexpr std::array<std::string_view, 38> kOperators = {
    "<<=", ">>=", "...", "->", "::", "<<", ">>", "<=", ">=", "==", "!=", "&&", "||",
    "++",  "--",  "+=",  "-=", "*=", "/=", "%=", "&=", "|=", "^=", "+",  "-",  "*",
    "/",   "%",   "<",   ">",  "=",  "!",  "&",  "|",  "^",  "~",  "?",  ".",
};

inline bool is_ident_start(char c) {
    return std::isalpha(static_cast<unsigned char>(c)) != 0 || c == '_';
}

inline bool is_ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_';
}

inline bool is_digit(char c) { return c >= '0' && c <= '9'; }

class Lexer {
public:
    explicit Lexer(std::string_view source) : src_(source) {}

    std::vector<Token> run() {
        std::vector<Token> out;
        while (true) {
            skip_trivia();
            if (at_end()) break;
            out.push_back(next_token());
        }
        return out;
    }

private:
    bool at_end() const { return pos_ >= src_.size(); }
    char peek(std::size_t ahead = 0) const {
        return pos_ + ahead < src_.size() ? src_[pos_ + ahead] : '\0';
    }

    // Advances one byte, treating \r\n and lone \r as a single line break.
    void advance() {
        const char c = src_[pos_++];
        if (c == '\n' || (c == '\r' && peek() != '\n')) {
            ++line_;
            column_ = 1;
        } else if (c != '\r') {
            ++column_;
        }
    }

    void skip_trivia() {
        while (!at_end()) {
            const char c = peek();
            if (c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v') {
                advance();
            } else if (c == '/' && peek(1) == '/') {
                while (!at_end() && peek() != '\n' && peek() != '\r') advance();
            } else if (c == '/' && peek(1) == '*') {
                const int line = line_;
                const int column = column_;
                advance();
                advance();
                while (!(peek() == '*' && peek(1) == '/')) {
                    if (at_end()) {
                        throw LexError(LexError::Kind::UnterminatedBlockComment,
                                       "unterminated block comment", line, column);
                    }
                    advance();
                }
                advance();
                advance();
            } else {
                return;
            }
        }
    }

    Token make(TokenKind kind, std::size_t begin, int line, int column) const {
        return Token{kind, std::string(src_.substr(begin, pos_ - begin)), line, column};
    }

    Token next_token() {
        const std::size_t begin = pos_;
        const int line = line_;
        const int column = column_;
        const char c = peek();

        if (c == '#') return include_directive(line, column);

        if (is_ident_start(c)) {
            while (is_ident_char(peek())) advance();
            Token tok = make(TokenKind::Identifier, begin, line, column);
            if (is_keyword(tok.text)) tok.kind = TokenKind::Keyword;
            return tok;
        }

        if (is_digit(c) || (c == '.' && is_digit(peek(1)))) return number(line, column);

        if (c == '"' || c == '\'') {
            quoted(c, line, column);
            return make(c == '"' ? TokenKind::StringLiteral : TokenKind::CharLiteral, begin, line,
                        column);
        }

        if (c == ';' || c == ',' || c == '(' || c == ')' || c == '[' || c == ']' || c == '{' ||
            c == '}' || (c == ':' && peek(1) != ':')) {
            advance();
            return make(TokenKind::Punctuation, begin, line, column);
        }

        for (std::string_view op : kOperators) {
            if (src_.substr(pos_, op.size()) == op) {
                for (std::size_t i = 0; i < op.size(); ++i) advance();
                return make(TokenKind::Operator, begin, line, column);
            }
        }

        throw LexError(LexError::Kind::IllegalCharacter,
                       "illegal character " + describe_byte(c), line, column);
    }

    static std::string describe_byte(char c) {
        const auto u = static_cast<unsigned char>(c);
        if (u >= 0x21 && u < 0x7f) return std::string("'") + c + "'";
        static constexpr char kHex[] = "0123456789abcdef";
        return std::string("0x") + kHex[u >> 4] + kHex[u & 0xf];
    }

    Token include_directive(int line, int column) {
        advance();
        while (peek() == ' ' || peek() == '\t') advance();
        const std::size_t word = pos_;
        while (is_ident_char(peek())) advance();
        if (src_.substr(word, pos_ - word) != "include") {
            throw LexError(LexError::Kind::IllegalCharacter,
                           "unsupported preprocessor directive", line, column);
        }
        while (peek() == ' ' || peek() == '\t') advance();
        const char open = peek();
        if (open != '<' && open != '"') {
            throw LexError(LexError::Kind::IllegalCharacter, "malformed #include", line_, column_);
        }
        const char close = open == '<' ? '>' : '"';
        const std::size_t name = pos_;
        const int name_line = line_;
        const int name_column = column_;
        advance();
        while (peek() != close) {
            if (at_end() || peek() == '\n' || peek() == '\r') {
                throw LexError(LexError::Kind::UnterminatedString, "unterminated header name",
                               name_line, name_column);
            }
            advance();
        }
        advance();
        return Token{TokenKind::PreprocessorInclude, std::string(src_.substr(name, pos_ - name)),
                     line, column};
    }

    Token number(int line, int column) {
        const std::size_t begin = pos_;
        bool is_float = false;
        if (peek() == '0' && (peek(1) == 'x' || peek(1) == 'X')) {
            advance();
            advance();
            while (std::isxdigit(static_cast<unsigned char>(peek())) != 0) advance();
        } else {
            while (is_digit(peek())) advance();
            if (peek() == '.' && peek(1) != '.') {
                is_float = true;
                advance();
                while (is_digit(peek())) advance();
            }
            if ((peek() == 'e' || peek() == 'E') &&
                (is_digit(peek(1)) ||
                 ((peek(1) == '+' || peek(1) == '-') && is_digit(peek(2))))) {
                is_float = true;
                advance();
                if (peek() == '+' || peek() == '-') advance();
                while (is_digit(peek())) advance();
            }
        }
        while (peek() == 'u' || peek() == 'U' || peek() == 'l' || peek() == 'L' ||
               (is_float && (peek() == 'f' || peek() == 'F'))) {
            advance();
        }
        if (is_ident_char(peek())) {
            throw LexError(LexError::Kind::IllegalCharacter, "malformed number literal", line_,
                           column_);
        }
        return make(is_float ? TokenKind::FloatLiteral : TokenKind::IntLiteral, begin, line,
                    column);
    }

    void quoted(char quote, int line, int column) {
        advance();
        while (peek() != quote) {
            if (at_end() || peek() == '\n' || peek() == '\r') {
                throw LexError(LexError::Kind::UnterminatedString,
                               quote == '"' ? "unterminated string literal"
                                            : "unterminated character literal",
                               line, column);
            }
            if (peek() == '\\') {
                advance();
                if (at_end()) continue;
            }
            advance();
        }
        advance();
    }

    std::string_view src_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int column_ = 1;
};

}  // namespace detail

/// Splits C++ source into tokens, dropping comments and whitespace.
///
/// `#include <h>` and `#include "h"` become a single PreprocessorInclude token
/// whose text is the header name with its delimiters. Throws LexError.
inline std::vector<Token> tokenize(std::string_view source) {
    return detail::Lexer(source).run();
}

}  // namespace plagsim::frontend
