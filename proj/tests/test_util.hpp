#pragma once

#include <vector>

#include "fcad/context.hpp"

// Shared fixture: the running worked example. Three objects, three
// attributes, incidence o1:m1, o2:m1 m2, o3:m2 m3.
inline fcad::FormalContext make_c0() {
    return fcad::FormalContext::make({"o1", "o2", "o3"}, {"m1", "m2", "m3"},
                                     {{0, 0}, {1, 0}, {1, 1}, {2, 1}, {2, 2}});
}

inline fcad::IndexSet ids(const std::vector<int>& v) { return fcad::IndexSet::from_indices(v); }
