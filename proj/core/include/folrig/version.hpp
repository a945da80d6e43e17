#pragma once

namespace folrig {

inline constexpr const char* kToolVersion = "0.1.0";

}  // namespace folrig
