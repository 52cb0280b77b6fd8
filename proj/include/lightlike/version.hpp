#pragma once

namespace lightlike {
inline constexpr const char* toolkit_name = "lightlike";
inline constexpr const char* toolkit_version = "0.1.0";
}  // namespace lightlike
