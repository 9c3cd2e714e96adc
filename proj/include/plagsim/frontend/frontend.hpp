#pragma once

#include <string_view>

#include "plagsim/frontend/lexer.hpp"
#include "plagsim/frontend/linearize.hpp"
#include "plagsim/frontend/parser.hpp"
#include "plagsim/frontend/syntax_tree.hpp"
#include "plagsim/frontend/token.hpp"

namespace plagsim::frontend {

/// tokenize, parse, linearize.
inline TokenStream token_stream(std::string_view source) {
    const auto tokens = tokenize(source);
    return linearize(parse(tokens));
}

}  // namespace plagsim::frontend
