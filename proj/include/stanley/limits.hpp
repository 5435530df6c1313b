#pragma once

namespace stanley {

// Default size caps for the exact solvers. Every cap can be overridden per
// call; the defaults keep worst-case state counts at desk scale
// (3^n minors, 2^m Hochster subsets, exact-cover interval search).
inline constexpr int kChordalityCap = 12;
inline constexpr int kDepthCap = 14;
inline constexpr int kSdepthCap = 7;
inline constexpr int kSvGeneratorCap = 12;

}  // namespace stanley
