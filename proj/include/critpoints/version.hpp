#pragma once

namespace critpoints {

inline constexpr const char* kVersion = "0.3.0";

}  // namespace critpoints
