#pragma once

#include <array>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "plagsim/errors.hpp"
#include "plagsim/frontend/syntax_tree.hpp"
#include "plagsim/frontend/token.hpp"

namespace plagsim::frontend {

namespace detail {

inline constexpr std::array<std::string_view, 12> kTypeKeywords = {
    "const", "static", "unsigned", "signed", "short", "long",
    "int",   "float",  "double",   "char",   "bool",  "void",
};

inline constexpr std::array<std::string_view, 11> kAssignOps = {
    "=", "+=", "-=", "*=", "/=", "%=", "<<=", ">>=", "&=", "|=", "^=",
};

// Binary precedence levels, loosest first.
inline const std::vector<std::vector<std::string_view>>& binary_levels() {
    static const std::vector<std::vector<std::string_view>> levels = {
        {"||"}, {"&&"}, {"|"}, {"^"}, {"&"}, {"==", "!="}, {"<", ">", "<=", ">="},
        {"<<", ">>"}, {"+", "-"}, {"*", "/", "%"},
    };
    return levels;
}

class Parser {
public:
    explicit Parser(std::span<const Token> tokens) : toks_(tokens) {}

    SyntaxTree run() {
        Node root;
        root.kind = NodeKind::Program;
        while (!at_end()) root.children.push_back(top_level());
        return SyntaxTree{std::move(root)};
    }

private:
    // ---- token access -------------------------------------------------

    bool at_end(std::size_t ahead = 0) const { return pos_ + ahead >= toks_.size(); }

    const Token* peek(std::size_t ahead = 0) const {
        return at_end(ahead) ? nullptr : &toks_[pos_ + ahead];
    }

    bool is(TokenKind kind, std::string_view text, std::size_t ahead = 0) const {
        const Token* t = peek(ahead);
        return t != nullptr && t->kind == kind && t->text == text;
    }
    bool is_kind(TokenKind kind, std::size_t ahead = 0) const {
        const Token* t = peek(ahead);
        return t != nullptr && t->kind == kind;
    }
    bool is_punct(std::string_view text, std::size_t ahead = 0) const {
        return is(TokenKind::Punctuation, text, ahead);
    }
    bool is_op(std::string_view text, std::size_t ahead = 0) const {
        return is(TokenKind::Operator, text, ahead);
    }
    bool is_kw(std::string_view text, std::size_t ahead = 0) const {
        return is(TokenKind::Keyword, text, ahead);
    }

    bool is_type_keyword(std::size_t ahead = 0) const {
        const Token* t = peek(ahead);
        if (t == nullptr || t->kind != TokenKind::Keyword) return false;
        for (auto kw : kTypeKeywords) {
            if (t->text == kw) return true;
        }
        return false;
    }

    const Token& take() { return toks_[pos_++]; }

    [[noreturn]] void fail(std::vector<std::string> expected) const {
        if (const Token* t = peek()) {
            throw ParseError(std::move(expected), "'" + t->text + "'", t->line, t->column);
        }
        int line = 1;
        int column = 1;
        if (!toks_.empty()) {
            line = toks_.back().line;
            column = toks_.back().column + static_cast<int>(toks_.back().text.size());
        }
        throw ParseError(std::move(expected), "end of input", line, column);
    }

    const Token& expect(TokenKind kind, std::string_view text) {
        if (!is(kind, text)) fail({"'" + std::string(text) + "'"});
        return take();
    }

    const Token& expect_identifier() {
        if (!is_kind(TokenKind::Identifier)) fail({"identifier"});
        return take();
    }

    static Node leaf(NodeKind kind, const Token& t) {
        Node n;
        n.kind = kind;
        n.text = t.text;
        n.token = t.kind;
        n.line = t.line;
        n.column = t.column;
        return n;
    }

    static Node node(NodeKind kind, const Token& at, std::string text = {}) {
        Node n;
        n.kind = kind;
        n.text = std::move(text);
        n.line = at.line;
        n.column = at.column;
        return n;
    }

    Node node_here(NodeKind kind, std::string text = {}) const {
        Node n;
        n.kind = kind;
        n.text = std::move(text);
        if (const Token* t = peek()) {
            n.line = t->line;
            n.column = t->column;
        }
        return n;
    }

    // ---- declarations -------------------------------------------------

    bool looks_like_declaration() const {
        if (is_type_keyword()) return true;
        if (!is_kind(TokenKind::Identifier)) return false;
        std::size_t i = 0;
        while (is_op("::", i + 1) && is_kind(TokenKind::Identifier, i + 2)) i += 2;
        return is_kind(TokenKind::Identifier, i + 1);
    }

    Node type_spec() {
        Node spec = node_here(NodeKind::TypeSpec);
        while (is_type_keyword()) spec.children.push_back(leaf(NodeKind::TypeWord, take()));
        if (spec.children.empty()) {
            spec.children.push_back(leaf(NodeKind::TypeWord, expect_identifier()));
            while (is_op("::") && is_kind(TokenKind::Identifier, 1)) {
                spec.children.push_back(leaf(NodeKind::TypeWord, take()));
                spec.children.push_back(leaf(NodeKind::TypeWord, take()));
            }
        }
        return spec;
    }

    Node top_level() {
        const Token& first = *peek();
        if (first.kind == TokenKind::PreprocessorInclude) return leaf(NodeKind::Include, take());
        if (is_kw("using")) {
            take();
            expect(TokenKind::Keyword, "namespace");
            Node n = node(NodeKind::UsingNamespace, first, expect_identifier().text);
            expect(TokenKind::Punctuation, ";");
            return n;
        }
        if (!looks_like_declaration()) fail({"declaration", "#include", "'using'"});

        Node spec = type_spec();
        if (is_kind(TokenKind::Identifier) && is_punct("(", 1)) return function(first, std::move(spec));
        return declaration_rest(first, std::move(spec));
    }

    Node function(const Token& first, Node spec) {
        Node name = leaf(NodeKind::Var, take());
        Node params = node_here(NodeKind::ParamList);
        expect(TokenKind::Punctuation, "(");
        if (!is_punct(")")) {
            while (true) {
                Node param = node_here(NodeKind::Param);
                if (!is_type_keyword() && !is_kind(TokenKind::Identifier)) fail({"parameter type"});
                param.children.push_back(type_spec());
                if (is_op("&") || is_kind(TokenKind::Identifier)) {
                    param.children.push_back(declarator());
                }
                params.children.push_back(std::move(param));
                if (!is_punct(",")) break;
                take();
            }
        }
        expect(TokenKind::Punctuation, ")");

        if (is_punct(";")) {
            take();
            Node decl = node(NodeKind::FunctionDecl, first);
            decl.children = {std::move(spec), std::move(name), std::move(params)};
            return decl;
        }
        if (!is_punct("{")) fail({"'{'", "';'"});
        Node def = node(NodeKind::FunctionDef, first);
        def.children = {std::move(spec), std::move(name), std::move(params), block()};
        return def;
    }

    Node declarator() {
        Node decl = node_here(NodeKind::Declarator);
        if (is_op("&")) {
            take();
            decl.text = "&";
        }
        decl.children.push_back(leaf(NodeKind::Var, expect_identifier()));
        while (is_punct("[")) {
            Node dim = node(NodeKind::ArrayDim, take());
            if (!is_punct("]")) dim.children.push_back(expression());
            expect(TokenKind::Punctuation, "]");
            decl.children.push_back(std::move(dim));
        }
        if (is_op("=")) {
            Node init = node(NodeKind::Init, take());
            init.children.push_back(is_punct("{") ? init_list() : assignment());
            decl.children.push_back(std::move(init));
        }
        return decl;
    }

    Node init_list() {
        Node list = node(NodeKind::InitList, expect(TokenKind::Punctuation, "{"));
        if (!is_punct("}")) {
            while (true) {
                list.children.push_back(is_punct("{") ? init_list() : assignment());
                if (!is_punct(",")) break;
                take();
            }
        }
        expect(TokenKind::Punctuation, "}");
        return list;
    }

    Node declaration_rest(const Token& first, Node spec) {
        Node stmt = node(NodeKind::DeclStmt, first);
        stmt.children.push_back(std::move(spec));
        while (true) {
            stmt.children.push_back(declarator());
            if (!is_punct(",")) break;
            take();
        }
        expect(TokenKind::Punctuation, ";");
        return stmt;
    }

    Node declaration() {
        const Token& first = *peek();
        Node spec = type_spec();
        return declaration_rest(first, std::move(spec));
    }

    // ---- statements ---------------------------------------------------

    Node block() {
        Node b = node(NodeKind::Block, expect(TokenKind::Punctuation, "{"));
        while (!is_punct("}")) {
            if (at_end()) fail({"statement", "'}'"});
            b.children.push_back(statement());
        }
        take();
        return b;
    }

    Node paren_condition() {
        expect(TokenKind::Punctuation, "(");
        Node cond = expression();
        expect(TokenKind::Punctuation, ")");
        return cond;
    }

    Node statement() {
        if (at_end()) fail({"statement"});
        const Token& first = *peek();

        if (is_punct("{")) return block();
        if (is_punct(";")) {
            take();
            return node(NodeKind::EmptyStmt, first);
        }
        if (first.kind == TokenKind::Keyword) {
            const std::string& kw = first.text;
            if (kw == "if") {
                take();
                Node n = node(NodeKind::If, first);
                n.children.push_back(paren_condition());
                n.children.push_back(statement());
                if (is_kw("else")) {
                    take();
                    n.children.push_back(statement());
                }
                return n;
            }
            if (kw == "while") {
                take();
                Node n = node(NodeKind::While, first);
                n.children.push_back(paren_condition());
                n.children.push_back(statement());
                return n;
            }
            if (kw == "do") {
                take();
                Node n = node(NodeKind::DoWhile, first);
                n.children.push_back(statement());
                expect(TokenKind::Keyword, "while");
                n.children.push_back(paren_condition());
                expect(TokenKind::Punctuation, ";");
                return n;
            }
            if (kw == "for") return for_statement();
            if (kw == "switch") {
                take();
                Node n = node(NodeKind::Switch, first);
                n.children.push_back(paren_condition());
                n.children.push_back(statement());
                return n;
            }
            if (kw == "case") {
                take();
                Node n = node(NodeKind::CaseLabel, first);
                n.children.push_back(conditional());
                expect(TokenKind::Punctuation, ":");
                return n;
            }
            if (kw == "default") {
                take();
                expect(TokenKind::Punctuation, ":");
                return node(NodeKind::DefaultLabel, first);
            }
            if (kw == "break" || kw == "continue") {
                take();
                expect(TokenKind::Punctuation, ";");
                return node(kw == "break" ? NodeKind::Break : NodeKind::Continue, first);
            }
            if (kw == "return") {
                take();
                Node n = node(NodeKind::Return, first);
                if (!is_punct(";")) n.children.push_back(expression());
                expect(TokenKind::Punctuation, ";");
                return n;
            }
        }
        if (looks_like_declaration()) return declaration();

        Node n = node(NodeKind::ExprStmt, first);
        n.children.push_back(expression());
        expect(TokenKind::Punctuation, ";");
        return n;
    }

    // Always four children: init statement, condition, step, body.
    Node for_statement() {
        Node n = node(NodeKind::For, take());
        expect(TokenKind::Punctuation, "(");

        if (is_punct(";")) {
            n.children.push_back(node(NodeKind::EmptyStmt, take()));
        } else if (looks_like_declaration()) {
            n.children.push_back(declaration());
        } else {
            Node init = node_here(NodeKind::ExprStmt);
            init.children.push_back(expression());
            expect(TokenKind::Punctuation, ";");
            n.children.push_back(std::move(init));
        }

        n.children.push_back(is_punct(";") ? node_here(NodeKind::Empty) : expression());
        expect(TokenKind::Punctuation, ";");
        n.children.push_back(is_punct(")") ? node_here(NodeKind::Empty) : expression());
        expect(TokenKind::Punctuation, ")");
        n.children.push_back(statement());
        return n;
    }

    // ---- expressions --------------------------------------------------

    Node expression() {
        Node lhs = assignment();
        while (is_punct(",")) {
            Node n = node(NodeKind::Binary, take(), ",");
            n.children.push_back(std::move(lhs));
            n.children.push_back(assignment());
            lhs = std::move(n);
        }
        return lhs;
    }

    Node assignment() {
        Node lhs = conditional();
        if (const Token* t = peek(); t != nullptr && t->kind == TokenKind::Operator) {
            for (auto op : kAssignOps) {
                if (t->text == op) {
                    Node n = node(NodeKind::Assign, take(), std::string(op));
                    n.children.push_back(std::move(lhs));
                    n.children.push_back(assignment());
                    return n;
                }
            }
        }
        return lhs;
    }

    Node conditional() {
        Node cond = binary(0);
        if (!is_op("?")) return cond;
        Node n = node(NodeKind::Ternary, take());
        n.children.push_back(std::move(cond));
        n.children.push_back(expression());
        expect(TokenKind::Punctuation, ":");
        n.children.push_back(assignment());
        return n;
    }

    Node binary(std::size_t level) {
        const auto& levels = binary_levels();
        if (level == levels.size()) return unary();
        Node lhs = binary(level + 1);
        while (true) {
            const Token* t = peek();
            if (t == nullptr || t->kind != TokenKind::Operator) return lhs;
            bool matched = false;
            for (auto op : levels[level]) matched = matched || t->text == op;
            if (!matched) return lhs;
            Node n = node(NodeKind::Binary, take(), t->text);
            n.children.push_back(std::move(lhs));
            n.children.push_back(binary(level + 1));
            lhs = std::move(n);
        }
    }

    Node unary() {
        if (at_end()) fail({"expression"});
        const Token& t = *peek();
        if (t.kind == TokenKind::Operator &&
            (t.text == "++" || t.text == "--" || t.text == "!" || t.text == "-" ||
             t.text == "+" || t.text == "~" || t.text == "&" || t.text == "*")) {
            Node n = node(NodeKind::Unary, take(), t.text);
            n.children.push_back(unary());
            return n;
        }
        if (is_kw("sizeof")) {
            take();
            if (is_punct("(") && is_type_keyword(1)) {
                Node n = node(NodeKind::SizeofType, t);
                take();
                n.children.push_back(type_spec());
                expect(TokenKind::Punctuation, ")");
                return n;
            }
            Node n = node(NodeKind::Unary, t, "sizeof");
            n.children.push_back(unary());
            return n;
        }
        if (is_punct("(") && is_type_keyword(1)) {
            Node n = node(NodeKind::Cast, take());
            n.children.push_back(type_spec());
            expect(TokenKind::Punctuation, ")");
            n.children.push_back(unary());
            return n;
        }
        return postfix();
    }

    Node postfix() {
        Node base = primary();
        while (true) {
            if (is_punct("[")) {
                Node n = node(NodeKind::Index, take());
                n.children.push_back(std::move(base));
                n.children.push_back(expression());
                expect(TokenKind::Punctuation, "]");
                base = std::move(n);
            } else if (is_punct("(")) {
                Node n = node(NodeKind::Call, take());
                n.children.push_back(std::move(base));
                if (!is_punct(")")) {
                    while (true) {
                        n.children.push_back(assignment());
                        if (!is_punct(",")) break;
                        take();
                    }
                }
                expect(TokenKind::Punctuation, ")");
                base = std::move(n);
            } else if (is_op(".")) {
                Node n = node(NodeKind::Member, take(), ".");
                n.children.push_back(std::move(base));
                n.children.push_back(leaf(NodeKind::Var, expect_identifier()));
                base = std::move(n);
            } else if (is_op("++") || is_op("--")) {
                Node n = node(NodeKind::Postfix, *peek(), peek()->text);
                take();
                n.children.push_back(std::move(base));
                base = std::move(n);
            } else {
                return base;
            }
        }
    }

    Node primary() {
        if (at_end()) fail({"expression"});
        const Token& t = *peek();
        switch (t.kind) {
            case TokenKind::Identifier: {
                Node name = leaf(NodeKind::Var, take());
                if (!(is_op("::") && is_kind(TokenKind::Identifier, 1))) return name;
                Node q = node(NodeKind::QualifiedName, t);
                q.children.push_back(std::move(name));
                while (is_op("::") && is_kind(TokenKind::Identifier, 1)) {
                    take();
                    q.children.push_back(leaf(NodeKind::Var, take()));
                }
                return q;
            }
            case TokenKind::IntLiteral:
            case TokenKind::FloatLiteral:
            case TokenKind::CharLiteral:
                return leaf(NodeKind::Literal, take());
            case TokenKind::StringLiteral: {
                Node first = leaf(NodeKind::Literal, take());
                if (!is_kind(TokenKind::StringLiteral)) return first;
                Node concat = node(NodeKind::StringConcat, t);
                concat.children.push_back(std::move(first));
                while (is_kind(TokenKind::StringLiteral)) {
                    concat.children.push_back(leaf(NodeKind::Literal, take()));
                }
                return concat;
            }
            case TokenKind::Keyword:
                if (t.text == "true" || t.text == "false") return leaf(NodeKind::Literal, take());
                break;
            case TokenKind::Punctuation:
                if (t.text == "(") {
                    Node n = node(NodeKind::Paren, take());
                    n.children.push_back(expression());
                    expect(TokenKind::Punctuation, ")");
                    return n;
                }
                break;
            default:
                break;
        }
        fail({"expression"});
    }

    std::span<const Token> toks_;
    std::size_t pos_ = 0;
};

}  // namespace detail

/// Builds a syntax tree for a whole translation unit. Throws ParseError.
inline SyntaxTree parse(std::span<const Token> tokens) { return detail::Parser(tokens).run(); }

}  // namespace plagsim::frontend
