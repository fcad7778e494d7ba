#pragma once

namespace graphembed {

inline constexpr const char* kVersion = "0.1.0";

} // namespace graphembed
