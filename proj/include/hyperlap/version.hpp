#pragma once

namespace hyperlap {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace hyperlap
