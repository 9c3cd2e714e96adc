#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "plagsim/frontend/syntax_tree.hpp"
#include "plagsim/frontend/token.hpp"

namespace plagsim::frontend {

namespace detail {

class Linearizer {
public:
    TokenStream run(const Node& root) {
        emit(root);
        return std::move(out_);
    }

private:
    void kw(std::string_view text) { out_.atoms.push_back({TokenKind::Keyword, std::string(text)}); }
    void punct(std::string_view text) {
        out_.atoms.push_back({TokenKind::Punctuation, std::string(text)});
    }
    void op(std::string_view text) {
        // The comma operator lexes as punctuation.
        out_.atoms.push_back(
            {text == "," ? TokenKind::Punctuation : TokenKind::Operator, std::string(text)});
    }
    void atom(const Node& n) { out_.atoms.push_back({n.token, n.text}); }

    void separated(const Node& n, std::size_t from, std::string_view sep) {
        for (std::size_t i = from; i < n.children.size(); ++i) {
            if (i > from) punct(sep);
            emit(n.children[i]);
        }
    }

    void emit_children(const Node& n) {
        for (const auto& c : n.children) emit(c);
    }

    void emit(const Node& n) {
        const auto& c = n.children;
        switch (n.kind) {
            case NodeKind::Program:
            case NodeKind::TypeSpec:
            case NodeKind::StringConcat:
                emit_children(n);
                break;
            case NodeKind::Include:
            case NodeKind::TypeWord:
            case NodeKind::Var:
            case NodeKind::Literal:
                atom(n);
                break;
            case NodeKind::UsingNamespace:
                kw("using");
                kw("namespace");
                out_.atoms.push_back({TokenKind::Identifier, n.text});
                punct(";");
                break;
            case NodeKind::FunctionDef:
                emit(c[0]);
                emit(c[1]);
                emit(c[2]);
                emit(c[3]);
                break;
            case NodeKind::FunctionDecl:
                emit_children(n);
                punct(";");
                break;
            case NodeKind::ParamList:
                punct("(");
                separated(n, 0, ",");
                punct(")");
                break;
            case NodeKind::Param:
                emit_children(n);
                break;
            case NodeKind::Block:
                punct("{");
                emit_children(n);
                punct("}");
                break;
            case NodeKind::DeclStmt:
                emit(c[0]);
                separated(n, 1, ",");
                punct(";");
                break;
            case NodeKind::Declarator:
                if (!n.text.empty()) op(n.text);
                emit_children(n);
                break;
            case NodeKind::ArrayDim:
                punct("[");
                emit_children(n);
                punct("]");
                break;
            case NodeKind::Init:
                op("=");
                emit(c[0]);
                break;
            case NodeKind::InitList:
                punct("{");
                separated(n, 0, ",");
                punct("}");
                break;
            case NodeKind::ExprStmt:
                emit(c[0]);
                punct(";");
                break;
            case NodeKind::EmptyStmt:
                punct(";");
                break;
            case NodeKind::If:
                kw("if");
                punct("(");
                emit(c[0]);
                punct(")");
                emit(c[1]);
                if (c.size() > 2) {
                    kw("else");
                    emit(c[2]);
                }
                break;
            case NodeKind::While:
            case NodeKind::Switch:
                kw(n.kind == NodeKind::While ? "while" : "switch");
                punct("(");
                emit(c[0]);
                punct(")");
                emit(c[1]);
                break;
            case NodeKind::DoWhile:
                kw("do");
                emit(c[0]);
                kw("while");
                punct("(");
                emit(c[1]);
                punct(")");
                punct(";");
                break;
            case NodeKind::For:
                kw("for");
                punct("(");
                emit(c[0]);  // init statement carries its own ';'
                emit(c[1]);
                punct(";");
                emit(c[2]);
                punct(")");
                emit(c[3]);
                break;
            case NodeKind::CaseLabel:
                kw("case");
                emit(c[0]);
                punct(":");
                break;
            case NodeKind::DefaultLabel:
                kw("default");
                punct(":");
                break;
            case NodeKind::Break:
            case NodeKind::Continue:
                kw(n.kind == NodeKind::Break ? "break" : "continue");
                punct(";");
                break;
            case NodeKind::Return:
                kw("return");
                emit_children(n);
                punct(";");
                break;
            case NodeKind::Empty:
                break;
            case NodeKind::Assign:
            case NodeKind::Binary:
                emit(c[0]);
                op(n.text);
                emit(c[1]);
                break;
            case NodeKind::Unary:
                if (n.text == "sizeof") {
                    kw("sizeof");
                } else {
                    op(n.text);
                }
                emit(c[0]);
                break;
            case NodeKind::Postfix:
                emit(c[0]);
                op(n.text);
                break;
            case NodeKind::Ternary:
                emit(c[0]);
                op("?");
                emit(c[1]);
                punct(":");
                emit(c[2]);
                break;
            case NodeKind::Call:
                emit(c[0]);
                punct("(");
                separated(n, 1, ",");
                punct(")");
                break;
            case NodeKind::Index:
                emit(c[0]);
                punct("[");
                emit(c[1]);
                punct("]");
                break;
            case NodeKind::Member:
                emit(c[0]);
                op(".");
                emit(c[1]);
                break;
            case NodeKind::Paren:
                punct("(");
                emit(c[0]);
                punct(")");
                break;
            case NodeKind::Cast:
                punct("(");
                emit(c[0]);
                punct(")");
                emit(c[1]);
                break;
            case NodeKind::SizeofType:
                kw("sizeof");
                punct("(");
                emit(c[0]);
                punct(")");
                break;
            case NodeKind::QualifiedName:
                for (std::size_t i = 0; i < c.size(); ++i) {
                    if (i > 0) op("::");
                    emit(c[i]);
                }
                break;
        }
    }

    TokenStream out_;
};

}  // namespace detail

/// Depth-first serialization of a tree back into comparison atoms.
inline TokenStream linearize(const SyntaxTree& tree) { return detail::Linearizer{}.run(tree.root); }

/// Renders a stream as compilable text: one line per include, otherwise
/// atoms separated by single spaces.
inline std::string render(const TokenStream& stream) {
    std::string out;
    for (const auto& a : stream.atoms) {
        if (a.kind == TokenKind::PreprocessorInclude) {
            if (!out.empty() && out.back() != '\n') out += '\n';
            out += "#include";
            out += a.text;
            out += '\n';
            continue;
        }
        if (!out.empty() && out.back() != '\n') out += ' ';
        out += a.text;
    }
    return out;
}

/// One atom per line: `<kind>\t<text>`.
inline std::string dump(const TokenStream& stream) {
    std::string out;
    for (const auto& a : stream.atoms) {
        out += to_string(a.kind);
        out += '\t';
        out += a.text;
        out += '\n';
    }
    return out;
}

}  // namespace plagsim::frontend
