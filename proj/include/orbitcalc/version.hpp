#pragma once

namespace orbitcalc {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace orbitcalc
