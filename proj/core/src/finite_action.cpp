#include "folrig/suspension/finite_action.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <string>

#include "folrig/errors.hpp"

namespace folrig::suspension {
namespace {

std::size_t set_size_of(const FiniteAction& action) {
    return action.images.empty() ? 0 : action.images[0].size();
}

// Image of point t under the relator word (letters act leftmost-outermost).
std::size_t apply_word(const FiniteAction& action,
                       const std::vector<std::vector<std::size_t>>& inverses,
                       const std::vector<int>& word, std::size_t t) {
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        const auto g = static_cast<std::size_t>(std::abs(*it)) - 1;
        t = (*it > 0) ? action.images[g][t] : inverses[g][t];
    }
    return t;
}

}  // namespace

void validate_action(const FiniteAction& action) {
    if (action.images.size() != action.generators.size())
        throw ValidationError("finite action: one permutation per generator required");
    if (action.images.empty())
        throw ValidationError("finite action: at least one generator required");

    const std::size_t m = set_size_of(action);
    if (m == 0) throw ValidationError("finite action: the acted-on set is empty");
    for (std::size_t g = 0; g < action.images.size(); ++g) {
        const auto& perm = action.images[g];
        if (perm.size() != m)
            throw ValidationError("finite action: image of '" + action.generators[g] +
                                  "' acts on a set of the wrong size");
        std::vector<bool> hit(m, false);
        for (std::size_t v : perm) {
            if (v >= m || hit[v])
                throw ValidationError("finite action: image of '" + action.generators[g] +
                                      "' is not a bijection");
            hit[v] = true;
        }
    }

    const int count = static_cast<int>(action.generators.size());
    std::vector<std::vector<std::size_t>> inverses(action.images.size(),
                                                   std::vector<std::size_t>(m));
    for (std::size_t g = 0; g < action.images.size(); ++g)
        for (std::size_t t = 0; t < m; ++t) inverses[g][action.images[g][t]] = t;
    for (std::size_t ri = 0; ri < action.relators.size(); ++ri) {
        for (int s : action.relators[ri])
            if (s == 0 || std::abs(s) > count)
                throw ValidationError("finite action: relator " + std::to_string(ri) +
                                      " uses an undeclared generator");
        for (std::size_t t = 0; t < m; ++t)
            if (apply_word(action, inverses, action.relators[ri], t) != t)
                throw ValidationError("finite action: relator " + std::to_string(ri) +
                                      " does not act as the identity");
    }
}

OrbitReport orbits(const FiniteAction& action) {
    validate_action(action);
    const std::size_t m = set_size_of(action);

    std::vector<std::size_t> parent(m);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    };
    for (const auto& perm : action.images)
        for (std::size_t t = 0; t < m; ++t) {
            const std::size_t a = find(t), b = find(perm[t]);
            if (a != b) parent[std::max(a, b)] = std::min(a, b);
        }

    std::map<std::size_t, std::vector<std::size_t>> classes;
    for (std::size_t t = 0; t < m; ++t) classes[find(t)].push_back(t);

    OrbitReport report;
    report.set_size = m;
    for (auto& [root, members] : classes) {
        OrbitInfo info;
        info.members = std::move(members);  // ascending by construction
        info.stabilizer_index = info.members.size();
        info.compact_leaf = true;
        report.orbits.push_back(std::move(info));
    }
    return report;
}

}  // namespace folrig::suspension
