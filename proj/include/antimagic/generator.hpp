#pragma once

#include "antimagic/error.hpp"
#include "antimagic/forest.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace antimagic {

struct GeneratorSpec {
    std::size_t components = 1;
    std::size_t edges = 3;
    int degree2 = 0; // 0 or 1
    std::uint64_t seed = 0;
};

/// A component with e edges and no degree-2 vertex needs e >= 3 (the star
/// K_{1,3} is the smallest). The single degree-2 vertex fits in a
/// component with e = 2 (P3) or e >= 4, but not e = 3.
inline bool generator_feasible(const GeneratorSpec& spec) {
    const std::size_t s = spec.components;
    const std::size_t m = spec.edges;
    if (s == 0 || (spec.degree2 != 0 && spec.degree2 != 1)) return false;
    if (spec.degree2 == 0) return m >= 3 * s;
    if (s == 1) return m == 2 || m >= 4;
    return m >= 3 * s - 1;
}

namespace detail {

using LocalEdges = std::vector<std::pair<std::size_t, std::size_t>>;

/// Random tree on local ids 0.. with `e` >= 3 edges, every internal vertex
/// of degree >= 3. Grows from K_{1,3} by either hanging a leaf on an
/// internal vertex (chosen proportionally to degree) or turning a leaf into
/// an internal vertex with two new leaves.
inline LocalEdges grow_tree_without_degree2(std::size_t e, std::mt19937_64& rng) {
    LocalEdges edges{{0, 1}, {0, 2}, {0, 3}};
    std::vector<std::size_t> degree{3, 1, 1, 1};
    std::vector<std::size_t> endpoints{0, 0, 0, 1, 2, 3}; // one entry per edge end
    auto add_edge = [&](std::size_t parent) {
        std::size_t child = degree.size();
        degree.push_back(1);
        ++degree[parent];
        edges.emplace_back(parent, child);
        endpoints.push_back(parent);
        endpoints.push_back(child);
    };
    while (edges.size() < e) {
        const bool expand = e - edges.size() >= 2 && std::bernoulli_distribution(0.4)(rng);
        if (expand) {
            std::vector<std::size_t> leaves;
            for (std::size_t v = 0; v < degree.size(); ++v)
                if (degree[v] == 1) leaves.push_back(v);
            std::size_t leaf = leaves[std::uniform_int_distribution<std::size_t>(0, leaves.size() - 1)(rng)];
            add_edge(leaf);
            add_edge(leaf);
        } else {
            std::size_t v;
            do {
                v = endpoints[std::uniform_int_distribution<std::size_t>(0, endpoints.size() - 1)(rng)];
            } while (degree[v] < 3);
            add_edge(v);
        }
    }
    return edges;
}

inline LocalEdges grow_component(std::size_t e, bool with_degree2, std::mt19937_64& rng) {
    if (!with_degree2) return grow_tree_without_degree2(e, rng);
    if (e == 2) return {{0, 1}, {1, 2}};
    LocalEdges edges = grow_tree_without_degree2(e - 1, rng);
    // Subdivide one edge; the new middle vertex is the degree-2 vertex.
    std::size_t n = edges.size() + 1;
    std::size_t pick = std::uniform_int_distribution<std::size_t>(0, edges.size() - 1)(rng);
    auto [a, b] = edges[pick];
    edges[pick] = {a, n};
    edges.emplace_back(n, b);
    return edges;
}

inline std::vector<std::size_t> split_edges(const GeneratorSpec& spec, std::size_t d2_component, std::mt19937_64& rng) {
    const std::size_t s = spec.components;
    std::vector<std::size_t> count(s, 3);
    if (spec.degree2) count[d2_component] = 2;
    std::size_t used = 3 * s - (spec.degree2 ? 1 : 0);
    std::uniform_int_distribution<std::size_t> any(0, s - 1);
    for (std::size_t extra = spec.edges - used; extra > 0; --extra) ++count[any(rng)];
    if (spec.degree2 && count[d2_component] == 3) {
        auto donor = std::find_if(count.begin(), count.end(), [&](std::size_t c) { return c > 3; });
        if (donor != count.end()) {
            --*donor;
            ++count[d2_component];
        } else {
            // s >= 2 here, so another component can absorb the edge.
            --count[d2_component];
            ++count[(d2_component + 1) % s];
        }
    }
    return count;
}

} // namespace detail

/// Random forest with exactly the requested shape: `components` trees,
/// `edges` edges, no K2 component, no isolated vertex, and exactly
/// `degree2` vertices of degree 2. Deterministic per seed.
inline Forest generate_forest(const GeneratorSpec& spec) {
    if (!generator_feasible(spec))
        throw Error(ErrorCode::InfeasibleSpec, "no eligible forest with " + std::to_string(spec.components) +
                                                   " components, " + std::to_string(spec.edges) + " edges and " +
                                                   std::to_string(spec.degree2) + " degree-2 vertices");
    std::mt19937_64 rng(spec.seed);
    for (int attempt = 0; attempt < 10000; ++attempt) {
        const std::size_t d2 = std::uniform_int_distribution<std::size_t>(0, spec.components - 1)(rng);
        const auto counts = detail::split_edges(spec, d2, rng);

        detail::LocalEdges all;
        std::size_t offset = 0;
        for (std::size_t c = 0; c < counts.size(); ++c) {
            auto local = detail::grow_component(counts[c], spec.degree2 && c == d2, rng);
            for (auto [a, b] : local) all.emplace_back(a + offset, b + offset);
            offset += counts[c] + 1;
        }
        std::vector<std::size_t> relabel(offset);
        std::iota(relabel.begin(), relabel.end(), 0);
        std::shuffle(relabel.begin(), relabel.end(), rng);
        std::shuffle(all.begin(), all.end(), rng);

        const std::size_t width = std::to_string(offset).size();
        auto name = [&](std::size_t v) {
            std::string digits = std::to_string(relabel[v] + 1);
            return "v" + std::string(width - digits.size(), '0') + digits;
        };
        std::vector<std::pair<std::string, std::string>> edges;
        for (auto [a, b] : all) edges.emplace_back(name(a), name(b));
        Forest f = Forest::from_ids({}, edges);

        const HypothesisReport r = analyze_hypotheses(f);
        if (r.component_count == spec.components && r.edge_count == spec.edges &&
            r.degree2_vertices.size() == static_cast<std::size_t>(spec.degree2) && r.k2_components.empty() &&
            r.isolated_vertices.empty())
            return f;
    }
    throw Error(ErrorCode::InfeasibleSpec, "resampling limit reached");
}

} // namespace antimagic
