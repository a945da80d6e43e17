#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace folrig::suspension {

// Group action on a finite set by permutations, one image per generator.
// Relators are optional (empty for a free generating set) and use the same
// signed 1-based symbol encoding as groupcoh::Presentation.
struct FiniteAction {
    std::vector<std::string> generators;
    std::vector<std::vector<std::size_t>> images;  // permutations of {0..m-1}
    std::vector<std::vector<int>> relators;
};

// Images must be bijections on a common set and relators must act as the
// identity permutation.
void validate_action(const FiniteAction& action);

struct OrbitInfo {
    std::vector<std::size_t> members;  // ascending
    // Orbit-stabilizer: the index of the point stabilizer equals the orbit
    // size, which is the covering degree of the corresponding leaf over the
    // base.
    std::size_t stabilizer_index = 0;
    bool compact_leaf = false;  // always true on finite sets
};

struct OrbitReport {
    std::size_t set_size = 0;
    std::vector<OrbitInfo> orbits;  // ordered by smallest member
};

// Orbit partition of the generated group, by union-find closure over the
// generator images (inverses contribute nothing extra to connectivity).
OrbitReport orbits(const FiniteAction& action);

}  // namespace folrig::suspension
