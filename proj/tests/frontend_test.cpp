#include <gtest/gtest.h>

#include <random>
#include <string>
#include <vector>

#include "plagsim/frontend/frontend.hpp"

using namespace plagsim;
using namespace plagsim::frontend;

namespace {

const char* const kSwapSolution = R"(#include<iostream.h>
#include<conio.h>
int main(){
int Arr[100],n,temp;
cout<<"Enter # of elements you want to insert ";
cin>>n;
for(int i=0;i<n;i=i+1)
{
cout<<"Enter element "<<i+1<<":";
cin>>Arr[i];
}
temp=Arr[0];
Arr[0]=Arr[n-1];
Arr[n-1]=temp;
cout<<"\nArray after swapping"<<endl;
for(i=0;i<n;i=i+1)
cout<<Arr[i]<<" ";
return 0;
}
)";

const char* const kSwapSolutionCommented = R"(#include<iostream.h>   // legacy header
#include<conio.h>
/* Swap the first and
   the last element */
int main(){
  int Arr[100],n,temp;   // storage
  cout<<"Enter # of elements you want to insert ";
  cin>>n;

  // read the array
  for(int i=0;i<n;i=i+1)
  {
      cout<<"Enter element "<<i+1<<":";
      cin>>Arr[i];
  }
  temp=Arr[0];          /* keep first */
  Arr[0]=Arr[n-1];
  Arr[n-1]=temp;
  cout<<"\nArray after swapping"<<endl;
  for(i=0;i<n;i=i+1)
      cout<<Arr[i]<<" ";
  return 0;   // done
}
)";

std::vector<Atom> atoms(std::initializer_list<std::pair<TokenKind, const char*>> list) {
    std::vector<Atom> out;
    for (auto [k, t] : list) out.push_back({k, t});
    return out;
}

std::string kinds_and_text(const std::vector<Token>& tokens) {
    std::string out;
    for (const auto& t : tokens) out += std::string(to_string(t.kind)) + "(" + t.text + ") ";
    return out;
}

}  // namespace

TEST(Lexer, SimpleDeclaration) {
    const auto tokens = tokenize("int x = 0 ;");
    EXPECT_EQ(atoms_of(tokens).atoms, atoms({{TokenKind::Keyword, "int"},
                                             {TokenKind::Identifier, "x"},
                                             {TokenKind::Operator, "="},
                                             {TokenKind::IntLiteral, "0"},
                                             {TokenKind::Punctuation, ";"}}));
    EXPECT_EQ(tokens[1].line, 1);
    EXPECT_EQ(tokens[1].column, 5);
}

TEST(Lexer, EmptySourceYieldsNoTokens) {
    EXPECT_TRUE(tokenize("").empty());
    EXPECT_TRUE(tokenize("  \n\t// only a comment\n/* and another */").empty());
}

TEST(Lexer, CommentsProduceNothing) {
    EXPECT_EQ(atoms_of(tokenize(kSwapSolution)), atoms_of(tokenize(kSwapSolutionCommented)));
}

TEST(Lexer, IncludeIsOneToken) {
    const auto tokens = tokenize("#include<iostream.h>\n# include \"my header.h\"\n");
    ASSERT_EQ(tokens.size(), 2u);
    EXPECT_EQ(tokens[0].kind, TokenKind::PreprocessorInclude);
    EXPECT_EQ(tokens[0].text, "<iostream.h>");
    EXPECT_EQ(tokens[1].text, "\"my header.h\"");
    EXPECT_EQ(tokens[1].line, 2);
}

TEST(Lexer, LibraryNamesAreIdentifiers) {
    for (const auto& t : tokenize("cout cin endl std")) EXPECT_EQ(t.kind, TokenKind::Identifier);
}

TEST(Lexer, LiteralsKeepExactLexeme) {
    const auto tokens = tokenize("00 0 3.5 1e3 2.5f 0x1F 10UL 'a' '\\n' \"a\\\"b\"");
    EXPECT_EQ(kinds_and_text(tokens),
              "IntLiteral(00) IntLiteral(0) FloatLiteral(3.5) FloatLiteral(1e3) "
              "FloatLiteral(2.5f) IntLiteral(0x1F) IntLiteral(10UL) CharLiteral('a') "
              "CharLiteral('\\n') StringLiteral(\"a\\\"b\") ");
}

TEST(Lexer, MaximalMunchOperators) {
    const auto tokens = tokenize("a<<=b>>c<=d==e&&f::g++ ? h : i");
    EXPECT_EQ(kinds_and_text(tokens),
              "Identifier(a) Operator(<<=) Identifier(b) Operator(>>) Identifier(c) "
              "Operator(<=) Identifier(d) Operator(==) Identifier(e) Operator(&&) "
              "Identifier(f) Operator(::) Identifier(g) Operator(++) Operator(?) "
              "Identifier(h) Punctuation(:) Identifier(i) ");
}

TEST(Lexer, LineEndingsAllCount) {
    const auto tokens = tokenize("a\r\nb\rc\nd");
    ASSERT_EQ(tokens.size(), 4u);
    EXPECT_EQ(tokens[1].line, 2);
    EXPECT_EQ(tokens[2].line, 3);
    EXPECT_EQ(tokens[3].line, 4);
    EXPECT_EQ(tokens[3].column, 1);
}

TEST(Lexer, UnterminatedString) {
    try {
        tokenize("int a;\n  cout << \"oops;\n");
        FAIL() << "expected LexError";
    } catch (const LexError& e) {
        EXPECT_EQ(e.kind(), LexError::Kind::UnterminatedString);
        EXPECT_EQ(e.line(), 2);
        EXPECT_EQ(e.column(), 11);
    }
}

TEST(Lexer, UnterminatedBlockComment) {
    try {
        tokenize("x /* never closed");
        FAIL() << "expected LexError";
    } catch (const LexError& e) {
        EXPECT_EQ(e.kind(), LexError::Kind::UnterminatedBlockComment);
        EXPECT_EQ(e.line(), 1);
        EXPECT_EQ(e.column(), 3);
    }
}

TEST(Lexer, IllegalCharacter) {
    try {
        tokenize("int a = 1;\nint $b;");
        FAIL() << "expected LexError";
    } catch (const LexError& e) {
        EXPECT_EQ(e.kind(), LexError::Kind::IllegalCharacter);
        EXPECT_EQ(e.line(), 2);
        EXPECT_EQ(e.column(), 5);
    }
    EXPECT_THROW(tokenize("#define N 10"), LexError);
}

TEST(Parser, MinimalProgram) {
    const auto tree = parse(tokenize("int main(){return 0;}"));
    ASSERT_EQ(tree.root.kind, NodeKind::Program);
    ASSERT_EQ(tree.root.children.size(), 1u);
    const Node& fn = tree.root.children[0];
    ASSERT_EQ(fn.kind, NodeKind::FunctionDef);
    EXPECT_EQ(fn.children[1].text, "main");
    const Node& body = fn.children[3];
    ASSERT_EQ(body.kind, NodeKind::Block);
    ASSERT_EQ(body.children.size(), 1u);
    EXPECT_EQ(body.children[0].kind, NodeKind::Return);
    EXPECT_EQ(body.children[0].children[0].text, "0");
}

TEST(Parser, ForLoopHasFourParts) {
    const auto tokens = tokenize("int main(){ for(i=0;i<n;i=i+1) cout<<Arr[i]<<\" \"; }");
    const auto tree = parse(tokens);
    const Node& loop = tree.root.children[0].children[3].children[0];
    ASSERT_EQ(loop.kind, NodeKind::For);
    ASSERT_EQ(loop.children.size(), 4u);

    const Node& init = loop.children[0];
    ASSERT_EQ(init.kind, NodeKind::ExprStmt);
    EXPECT_EQ(init.children[0].kind, NodeKind::Assign);
    EXPECT_EQ(init.children[0].children[0].text, "i");
    EXPECT_EQ(init.children[0].children[1].text, "0");

    const Node& cond = loop.children[1];
    EXPECT_EQ(cond.kind, NodeKind::Binary);
    EXPECT_EQ(cond.text, "<");

    const Node& step = loop.children[2];
    EXPECT_EQ(step.kind, NodeKind::Assign);
    EXPECT_EQ(step.children[1].kind, NodeKind::Binary);
    EXPECT_EQ(step.children[1].text, "+");

    // cout << Arr[i] << " " is left associative.
    const Node& body = loop.children[3];
    ASSERT_EQ(body.kind, NodeKind::ExprStmt);
    const Node& outer = body.children[0];
    EXPECT_EQ(outer.text, "<<");
    EXPECT_EQ(outer.children[1].text, "\" \"");
    EXPECT_EQ(outer.children[0].text, "<<");
    EXPECT_EQ(outer.children[0].children[0].text, "cout");
    EXPECT_EQ(outer.children[0].children[1].kind, NodeKind::Index);
}

TEST(Parser, EmptyForParts) {
    const auto tree = parse(tokenize("void f(){ for(;;) break; }"));
    const Node& loop = tree.root.children[0].children[3].children[0];
    ASSERT_EQ(loop.children.size(), 4u);
    EXPECT_EQ(loop.children[0].kind, NodeKind::EmptyStmt);
    EXPECT_EQ(loop.children[1].kind, NodeKind::Empty);
    EXPECT_EQ(loop.children[2].kind, NodeKind::Empty);
}

TEST(Parser, TruncatedForReportsEndOfInput) {
    try {
        parse(tokenize("int main(){for("));
        FAIL() << "expected ParseError";
    } catch (const ParseError& e) {
        EXPECT_EQ(e.found(), "end of input");
        EXPECT_EQ(e.line(), 1);
        EXPECT_EQ(e.column(), 16);
        EXPECT_FALSE(e.expected().empty());
    }
    // Outside a function body the loop keyword itself is the error.
    EXPECT_THROW(parse(tokenize("for(")), ParseError);
}

TEST(Parser, ErrorNamesExpectedAndFound) {
    try {
        parse(tokenize("int main() {\n  int x = ;\n}"));
        FAIL() << "expected ParseError";
    } catch (const ParseError& e) {
        EXPECT_EQ(e.found(), "';'");
        EXPECT_EQ(e.line(), 2);
        EXPECT_EQ(e.column(), 11);
        EXPECT_EQ(e.expected(), std::vector<std::string>{"expression"});
    }
}

TEST(Parser, TeachingSubsetConstructs) {
    const char* src = R"(
#include <iostream>
using namespace std;
const int SIZE = 5;
int add(int a, int b);
void show(int arr[], int n, int &count);
int main(void) {
    int a[SIZE] = {1, 2, 3}, total = 0;
    long long big = 10LL;
    float avg = (float) total / SIZE;
    char grade = 'A';
    bool ok = true;
    std::string name;
    do { total += a[--SIZE]; } while (total < 100 && !ok);
    switch (grade) {
        case 'A': cout << "top"; break;
        case 'B':
        case 'C': { cout << "mid"; break; }
        default: cout << "low";
    }
    if (total % 2 == 0) cout << "even"; else if (total > 3) cout << "odd"; else ;
    for (int i = 0, j = 10; i < j; i++, j--) continue;
    int x = ok ? add(1, 2) : -1;
    cin.get();
    getch();
    return sizeof(int) + sizeof x;
}
int add(int a, int b) { return a + b; }
)";
    const auto tokens = tokenize(src);
    const auto tree = parse(tokens);
    EXPECT_EQ(linearize(tree), atoms_of(tokens));
}

TEST(Linearize, ReproducesTokenSequence) {
    const auto tokens = tokenize(kSwapSolution);
    EXPECT_EQ(linearize(parse(tokens)), atoms_of(tokens));
}

TEST(Linearize, RenderedStreamIsAFixpoint) {
    const TokenStream stream = token_stream(kSwapSolution);
    const std::string text = render(stream);
    EXPECT_EQ(token_stream(text), stream);
    EXPECT_EQ(render(token_stream(text)), text);
}

TEST(Linearize, DumpsAreStable) {
    const auto tree = parse(tokenize(kSwapSolution));
    EXPECT_EQ(dump(tree), dump(parse(tokenize(kSwapSolutionCommented))));
    const std::string stream_dump = dump(linearize(tree));
    EXPECT_EQ(stream_dump.substr(0, 33), "PreprocessorInclude\t<iostream.h>\n");
    EXPECT_EQ(dump(parse(tokenize("int main(){return 0;}"))),
              "Program\n"
              "  FunctionDef\n"
              "    TypeSpec\n"
              "      TypeWord Keyword int\n"
              "    Var main\n"
              "    ParamList\n"
              "    Block\n"
              "      Return\n"
              "        Literal IntLiteral 0\n");
}

// Property tests: random layout and comment perturbations never change the
// stream; renaming any identifier always does.

namespace {

std::string relayout(const std::vector<Token>& tokens, std::mt19937& rng) {
    static const char* const kGaps[] = {" ", "  ", "\t", "\n", "\r\n", "\n\n  ", " /* c */ ",
                                        " // note\n", "/**/", "\n// x y z\n"};
    std::uniform_int_distribution<std::size_t> pick(0, std::size(kGaps) - 1);
    std::string out;
    for (const auto& t : tokens) {
        if (t.kind == TokenKind::PreprocessorInclude) {
            out += "\n#include" + t.text + "\n";
            continue;
        }
        out += kGaps[pick(rng)];
        out += t.text;
    }
    out += kGaps[pick(rng)];
    return out;
}

}  // namespace

TEST(FrontendProperties, LayoutAndCommentInvariance) {
    const auto tokens = tokenize(kSwapSolution);
    const TokenStream reference = linearize(parse(tokens));
    std::mt19937 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        const std::string variant = relayout(tokens, rng);
        ASSERT_EQ(token_stream(variant), reference) << variant;
    }
}

TEST(FrontendProperties, RenamingAnyIdentifierChangesStream) {
    const auto tokens = tokenize(kSwapSolution);
    const TokenStream reference = linearize(parse(tokens));
    for (std::size_t i = 0; i < tokens.size(); ++i) {
        if (tokens[i].kind != TokenKind::Identifier) continue;
        auto renamed = tokens;
        for (auto& t : renamed) {
            if (t.kind == TokenKind::Identifier && t.text == tokens[i].text) t.text += "_r";
        }
        EXPECT_NE(linearize(parse(renamed)), reference) << tokens[i].text;
    }
}

TEST(FrontendProperties, Deterministic) {
    EXPECT_EQ(dump(token_stream(kSwapSolution)), dump(token_stream(kSwapSolution)));
}
