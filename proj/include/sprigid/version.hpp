#pragma once

namespace sprigid {

inline constexpr const char *kVersion = "0.1.0";

}  // namespace sprigid
