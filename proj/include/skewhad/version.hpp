#pragma once

namespace skewhad {

inline constexpr const char* kToolVersion = "1.0.0";

}  // namespace skewhad
