#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "plagsim/frontend/token.hpp"

namespace plagsim::frontend {

enum class NodeKind {
    Program,
    Include,
    UsingNamespace,
    FunctionDef,
    FunctionDecl,
    ParamList,
    Param,
    TypeSpec,
    TypeWord,
    Block,
    DeclStmt,
    Declarator,
    ArrayDim,
    Init,
    InitList,
    ExprStmt,
    EmptyStmt,
    If,
    While,
    DoWhile,
    For,
    Switch,
    CaseLabel,
    DefaultLabel,
    Break,
    Continue,
    Return,
    Empty,
    Assign,
    Binary,
    Unary,
    Postfix,
    Ternary,
    Call,
    Index,
    Member,
    Paren,
    Cast,
    SizeofType,
    Var,
    QualifiedName,
    Literal,
    StringConcat,
};

inline std::string_view to_string(NodeKind kind) {
    switch (kind) {
        case NodeKind::Program: return "Program";
        case NodeKind::Include: return "Include";
        case NodeKind::UsingNamespace: return "UsingNamespace";
        case NodeKind::FunctionDef: return "FunctionDef";
        case NodeKind::FunctionDecl: return "FunctionDecl";
        case NodeKind::ParamList: return "ParamList";
        case NodeKind::Param: return "Param";
        case NodeKind::TypeSpec: return "TypeSpec";
        case NodeKind::TypeWord: return "TypeWord";
        case NodeKind::Block: return "Block";
        case NodeKind::DeclStmt: return "DeclStmt";
        case NodeKind::Declarator: return "Declarator";
        case NodeKind::ArrayDim: return "ArrayDim";
        case NodeKind::Init: return "Init";
        case NodeKind::InitList: return "InitList";
        case NodeKind::ExprStmt: return "ExprStmt";
        case NodeKind::EmptyStmt: return "EmptyStmt";
        case NodeKind::If: return "If";
        case NodeKind::While: return "While";
        case NodeKind::DoWhile: return "DoWhile";
        case NodeKind::For: return "For";
        case NodeKind::Switch: return "Switch";
        case NodeKind::CaseLabel: return "CaseLabel";
        case NodeKind::DefaultLabel: return "DefaultLabel";
        case NodeKind::Break: return "Break";
        case NodeKind::Continue: return "Continue";
        case NodeKind::Return: return "Return";
        case NodeKind::Empty: return "Empty";
        case NodeKind::Assign: return "Assign";
        case NodeKind::Binary: return "Binary";
        case NodeKind::Unary: return "Unary";
        case NodeKind::Postfix: return "Postfix";
        case NodeKind::Ternary: return "Ternary";
        case NodeKind::Call: return "Call";
        case NodeKind::Index: return "Index";
        case NodeKind::Member: return "Member";
        case NodeKind::Paren: return "Paren";
        case NodeKind::Cast: return "Cast";
        case NodeKind::SizeofType: return "SizeofType";
        case NodeKind::Var: return "Var";
        case NodeKind::QualifiedName: return "QualifiedName";
        case NodeKind::Literal: return "Literal";
        case NodeKind::StringConcat: return "StringConcat";
    }
    return "?";
}

/// One node of the syntax tree.
///
/// `text` holds the operator for expression nodes, the lexeme for leaves
/// (Var, Literal, TypeWord, Include) and "&" on reference declarators.
/// `token` is the lexical kind of leaf text.
struct Node {
    NodeKind kind = NodeKind::Empty;
    std::string text;
    TokenKind token = TokenKind::Identifier;
    std::vector<Node> children;
    int line = 0;
    int column = 0;

    /// Structural equality; source positions are ignored.
    friend bool operator==(const Node& a, const Node& b) {
        return a.kind == b.kind && a.text == b.text && a.token == b.token &&
               a.children == b.children;
    }
};

struct SyntaxTree {
    Node root;

    friend bool operator==(const SyntaxTree&, const SyntaxTree&) = default;
};

namespace detail {

inline void dump_node(const Node& node, int depth, std::string& out) {
    out.append(static_cast<std::size_t>(depth) * 2, ' ');
    out += to_string(node.kind);
    if (node.kind == NodeKind::Literal || node.kind == NodeKind::TypeWord) {
        out += ' ';
        out += to_string(node.token);
    }
    if (!node.text.empty()) {
        out += ' ';
        out += node.text;
    }
    out += '\n';
    for (const auto& child : node.children) dump_node(child, depth + 1, out);
}

}  // namespace detail

/// One node per line, two spaces of indentation per level.
inline std::string dump(const SyntaxTree& tree) {
    std::string out;
    detail::dump_node(tree.root, 0, out);
    return out;
}

}  // namespace plagsim::frontend
