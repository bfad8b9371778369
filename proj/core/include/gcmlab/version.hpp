#pragma once

namespace gcmlab {
inline constexpr const char* kVersion = "0.1.0";
}
