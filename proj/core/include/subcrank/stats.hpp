#pragma once

#include <atomic>
#include <cstdint>

namespace subcrank::stats {

// Process-wide event counters. Tests use these to assert structural
// properties: exactly one factorization per time-stepping run, and no
// pointwise source evaluation when the time profile is singular at t = 0.

inline std::atomic<std::uint64_t> factorizations{0};
inline std::atomic<std::uint64_t> p_evaluations{0};

}  // namespace subcrank::stats
