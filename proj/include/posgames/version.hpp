#pragma once

namespace posgames {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace posgames
