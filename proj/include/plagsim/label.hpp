#pragma once

#include <string>
#include <string_view>

#include "plagsim/errors.hpp"

namespace plagsim {

/// Gold or predicted class of a solution pair. P is the positive class.
enum class Label { NP = 0, P = 1 };

inline constexpr std::string_view to_string(Label label) {
    return label == Label::P ? "P" : "NP";
}

inline Label parse_label(std::string_view text) {
    if (text == "P") return Label::P;
    if (text == "NP") return Label::NP;
    throw FormatError("unknown label '" + std::string(text) + "'");
}

}  // namespace plagsim
