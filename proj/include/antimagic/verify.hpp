#pragma once

#include "antimagic/error.hpp"
#include "antimagic/forest.hpp"
#include "antimagic/labeling.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <utility>
#include <vector>

namespace antimagic {

struct VertexSumReport {
    std::vector<std::int64_t> sums;                  // phi(v) by vertex index
    std::vector<std::pair<Vertex, Vertex>> collisions; // u < v, lexicographic
    bool is_antimagic = false;
};

/// phi(u) = sum of the labels on edges incident to u.
inline VertexSumReport vertex_sums(const EdgeLabeling& lab) {
    if (!lab.is_bijection())
        throw Error(ErrorCode::NotABijection, "labels are not a bijection onto [1, " +
                                                  std::to_string(lab.graph.edge_count()) + "]");
    const Forest& f = lab.graph;
    VertexSumReport r;
    r.sums.assign(f.vertex_count(), 0);
    for (EdgeIndex e = 0; e < f.edge_count(); ++e) {
        r.sums[f.edge(e).u] += lab.labels[e];
        r.sums[f.edge(e).v] += lab.labels[e];
    }

    std::vector<Vertex> order(f.vertex_count());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return r.sums[a] < r.sums[b]; });
    for (std::size_t i = 0; i < order.size();) {
        std::size_t j = i;
        while (j < order.size() && r.sums[order[j]] == r.sums[order[i]]) ++j;
        for (std::size_t a = i; a < j; ++a)
            for (std::size_t b = a + 1; b < j; ++b) r.collisions.emplace_back(order[a], order[b]);
        i = j;
    }
    std::sort(r.collisions.begin(), r.collisions.end());
    r.is_antimagic = r.collisions.empty();
    return r;
}

inline bool verify_antimagic(const EdgeLabeling& lab) { return vertex_sums(lab).is_antimagic; }

} // namespace antimagic
