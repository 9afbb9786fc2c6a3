#pragma once

namespace sfckit {

inline constexpr const char* kVersion = "0.1.0";

} // namespace sfckit
