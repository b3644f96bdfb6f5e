#pragma once

namespace descent {

inline constexpr const char* kEngineVersion = "descent-0.1.0";

}  // namespace descent
