#pragma once

namespace nilclean {

inline constexpr char kToolVersion[] = "0.1.0";

}  // namespace nilclean
