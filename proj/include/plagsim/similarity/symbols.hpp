#pragma once

#include <cstdint>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

#include "plagsim/frontend/token.hpp"

namespace plagsim::similarity {

/// Dense integer id of an atom; all sequence algorithms run on these.
using Symbol = std::uint32_t;
using SymbolSpan = std::span<const Symbol>;

/// Maps two streams onto a shared symbol alphabet.
inline std::pair<std::vector<Symbol>, std::vector<Symbol>> intern(
    const frontend::TokenStream& a, const frontend::TokenStream& b) {
    std::unordered_map<frontend::Atom, Symbol, frontend::AtomHash> ids;
    auto convert = [&ids](const frontend::TokenStream& s) {
        std::vector<Symbol> out;
        out.reserve(s.size());
        for (const auto& atom : s.atoms) {
            auto [it, inserted] = ids.try_emplace(atom, static_cast<Symbol>(ids.size()));
            out.push_back(it->second);
        }
        return out;
    };
    auto first = convert(a);
    auto second = convert(b);
    return {std::move(first), std::move(second)};
}

}  // namespace plagsim::similarity
