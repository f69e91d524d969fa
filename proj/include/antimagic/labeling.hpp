#pragma once

#include "antimagic/forest.hpp"

#include <vector>

namespace antimagic {

/// Edge labels indexed by edge index of `graph`. Nothing here enforces the
/// bijection onto [1, m]; the verifier checks it.
struct EdgeLabeling {
    Forest graph;
    std::vector<int> labels;

    [[nodiscard]] bool is_bijection() const {
        const std::size_t m = graph.edge_count();
        if (labels.size() != m) return false;
        std::vector<bool> used(m + 1, false);
        for (int x : labels) {
            if (x < 1 || static_cast<std::size_t>(x) > m || used[x]) return false;
            used[x] = true;
        }
        return true;
    }

    [[nodiscard]] int label(Vertex a, Vertex b) const {
        auto e = graph.find_edge(a, b);
        return e ? labels.at(*e) : 0;
    }
};

} // namespace antimagic
