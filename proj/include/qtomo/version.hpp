#pragma once

namespace qtomo {

inline constexpr const char* version = "1.0.0";

}  // namespace qtomo
