#pragma once

namespace tq {

inline constexpr const char* version = "1.0.0";

} // namespace tq
