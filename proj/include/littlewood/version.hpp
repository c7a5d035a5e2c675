#pragma once

namespace littlewood {

inline constexpr char kVersion[] = "littlewood 0.1.0";

}  // namespace littlewood
