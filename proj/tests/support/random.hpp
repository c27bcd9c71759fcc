#pragma once

#include <cstdint>
#include <random>

// Uniform draws taken straight off the engine bits, so seeded streams are
// reproducible independent of the standard library's distribution internals.
namespace testsupport {

inline double canonical(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline double uniform(std::mt19937_64& rng, double lo, double hi) {
    return lo + (hi - lo) * canonical(rng);
}

}  // namespace testsupport
