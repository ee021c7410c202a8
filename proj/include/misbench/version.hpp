#pragma once

namespace misbench {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace misbench
