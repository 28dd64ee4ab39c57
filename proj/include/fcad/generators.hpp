#pragma once

#include <cstdint>

#include "fcad/kernel.hpp"
#include "fcad/poset.hpp"

namespace fcad {

// All generators are deterministic in the seed.

FormalContext random_context(std::uint64_t seed, int objects, int attrs, double density = 0.5);

// Random partial order from a sparse acyclic subrelation, closed and
// validated on build.
FinitePoset random_poset(std::uint64_t seed, int n, double edge_density = 0.35);

struct AcfGenResult {
    AcfContext acf;
    int rejections = 0;     // kernel or selection candidates thrown away
    bool fallback = false;  // gave up and used the induced context
};

// Rejection-samples kernels (identity and table-based interior operators
// over closed sets) and repairs random selections until the whole context
// validates; falls back to the induced context after max_attempts.
// attrs bounded by 6, objects by 8 (InvalidInput above).
AcfGenResult random_valid_acf(std::uint64_t seed, int max_attrs, int max_objects,
                              int max_attempts = 64);

}  // namespace fcad
