#pragma once

namespace trias {
inline constexpr const char* kVersion = "0.1.0";
}
