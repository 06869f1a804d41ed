#pragma once

// Small structures shared across the unit suites. Everything here is built
// through the public constructors so the fixtures themselves exercise
// validation.

#include <string>
#include <vector>

#include "topoquandle/enumeration.hpp"
#include "topoquandle/species.hpp"

namespace fixtures {

using namespace tq;

// Three points where translating by "a" swaps the other two; the smallest
// quandle that is neither trivial nor latin.
inline quandle swap3() {
    return quandle::make({"a", "b", "c"}, {{0, 0, 0}, {2, 1, 1}, {1, 2, 2}});
}

// Quasi-order with one two-element class strictly below a point: b ~ c < a.
inline topology valley3() {
    return topology::closure({"a", "b", "c"}, {0, bit(0) | bit(2), bit(1)});
}

// Four points where translating by "d" swaps b and c; all other columns are
// the identity.
inline quandle swap4() {
    return quandle::make({"a", "b", "c", "d"},
                         {{0, 0, 0, 0}, {1, 1, 1, 2}, {2, 2, 2, 1}, {3, 3, 3, 3}});
}

// Poset with a below both b and c, and d isolated.
inline topology fork4() {
    return topology::closure({"a", "b", "c", "d"}, {bit(1) | bit(2), 0, 0, 0});
}

inline mask_t mask_of(const labels_t& labels, const std::vector<std::string>& subset) {
    mask_t m = 0;
    for (const auto& s : subset)
        for (size_t i = 0; i < labels.size(); ++i)
            if (labels[i] == s) m |= bit(static_cast<int>(i));
    return m;
}

inline topo_quandle discrete_pair(const quandle& q) {
    return topo_quandle::make(q, topology::discrete(q.labels()));
}

} // namespace fixtures
