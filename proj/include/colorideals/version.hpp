#pragma once

namespace colorideals {

inline constexpr const char* kToolVersion = "0.1.0";
/// Bumped whenever an adapter legend or a literal format changes meaning.
inline constexpr int kLegendVersion = 1;

}  // namespace colorideals
