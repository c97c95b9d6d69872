#pragma once

#include "wcifano/types.hpp"

#include <cstdlib>
#include <random>

namespace wcifano::testing {

// Seed for randomized suites; override with WCIFANO_SEED for reproduction.
inline std::uint64_t test_seed() {
    if (const char* env = std::getenv("WCIFANO_SEED"))
        return std::strtoull(env, nullptr, 10);
    return 20250809ull;
}

inline WciCandidate candidate(std::vector<Int> weights, std::vector<Int> degrees) {
    return WciCandidate{WeightSystem(std::move(weights)),
                        Multidegree(std::move(degrees))};
}

} // namespace wcifano::testing
