#pragma once

#include <cstddef>

// Counts fixed by the first verified run of the brute-force oracles in
// tests/. They are checked again by the unit tests and by `mobius verify`.
namespace mobius::golden {

inline constexpr std::size_t kSubgroupsOfS4 = 30;
inline constexpr std::size_t kSubgroupsOfAutK33 = 112;
inline constexpr std::size_t kSubgroupsOfAdmissible = 60;
inline constexpr std::size_t kZ2CubedInAutK33 = 0;
inline constexpr std::size_t kSubgroupsOfS6 = 1455;
inline constexpr std::size_t kS6FilterSurvivors = 516;

}  // namespace mobius::golden
