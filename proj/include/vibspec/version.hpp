#pragma once

namespace vibspec {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace vibspec
