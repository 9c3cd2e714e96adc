#pragma once

namespace plagsim {

inline constexpr const char* kToolName = "plagsim";
inline constexpr const char* kVersion = "0.1.0";

}  // namespace plagsim
