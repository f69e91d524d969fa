#pragma once

#include "antimagic/error.hpp"
#include "antimagic/forest.hpp"
#include "antimagic/labeling.hpp"

#include <queue>
#include <span>
#include <string>
#include <vector>

namespace antimagic {

/// A forest with one root per component and every edge oriented
/// parent -> child.
struct RootedForest {
    Forest base;
    std::vector<Vertex> roots;           // roots[c] lies in component c
    std::vector<Vertex> parent;          // no_vertex at roots
    std::vector<EdgeIndex> parent_edge;  // incoming edge e^v; no_vertex at roots
    std::vector<std::size_t> level;
    std::vector<std::vector<Vertex>> children; // lexicographic

    [[nodiscard]] bool is_root(Vertex v) const { return parent.at(v) == no_vertex; }
    [[nodiscard]] std::size_t out_degree(Vertex v) const { return children.at(v).size(); }

    /// E+(v), ordered like `children[v]`.
    [[nodiscard]] std::vector<EdgeIndex> outgoing_edges(Vertex v) const {
        std::vector<EdgeIndex> out;
        out.reserve(children.at(v).size());
        for (Vertex c : children[v]) out.push_back(parent_edge[c]);
        return out;
    }
};

/// Breadth-first orientation from each root; children visited in
/// lexicographic order.
inline RootedForest root_components(const Forest& f, std::span<const Vertex> roots) {
    if (roots.size() != f.component_count())
        throw Error(ErrorCode::RootNotInComponent, "expected " + std::to_string(f.component_count()) +
                                                       " roots, got " + std::to_string(roots.size()));
    RootedForest rf;
    rf.base = f;
    rf.roots.assign(roots.begin(), roots.end());
    const std::size_t n = f.vertex_count();
    rf.parent.assign(n, no_vertex);
    rf.parent_edge.assign(n, no_vertex);
    rf.level.assign(n, 0);
    rf.children.assign(n, {});

    std::vector<bool> seen(n, false);
    for (std::size_t c = 0; c < roots.size(); ++c) {
        Vertex r = roots[c];
        if (r >= n || f.component(r) != c)
            throw Error(ErrorCode::RootNotInComponent,
                        (r < n ? "'" + f.id(r) + "'" : std::string("vertex ") + std::to_string(r)) +
                            " does not lie in component " + std::to_string(c));
        std::queue<Vertex> queue;
        queue.push(r);
        seen[r] = true;
        while (!queue.empty()) {
            Vertex v = queue.front();
            queue.pop();
            std::vector<std::pair<Vertex, EdgeIndex>> next;
            for (EdgeIndex e : f.incident(v)) {
                Vertex w = f.other_end(e, v);
                if (!seen[w]) next.emplace_back(w, e);
            }
            std::sort(next.begin(), next.end());
            for (auto [w, e] : next) {
                seen[w] = true;
                rf.parent[w] = v;
                rf.parent_edge[w] = e;
                rf.level[w] = rf.level[v] + 1;
                rf.children[v].push_back(w);
                queue.push(w);
            }
        }
    }
    return rf;
}

/// The single tree obtained by merging every component root into one
/// synthetic root.
struct IdentifiedTree {
    RootedForest tree;
    Vertex root = no_vertex;
    std::vector<EdgeIndex> to_forest; // tree edge -> forest edge
};

/// Id for the merged root, chosen not to collide with any existing id.
inline std::string synthetic_root_id(const Forest& f) {
    std::string id = "*w";
    while (f.find(id)) id += '*';
    return id;
}

inline IdentifiedTree identify_roots(const RootedForest& rf) {
    const Forest& f = rf.base;
    if (f.component_count() < 2)
        throw Error(ErrorCode::SingleComponent, "identification needs at least two components");

    std::vector<bool> is_root(f.vertex_count(), false);
    for (Vertex r : rf.roots) is_root[r] = true;
    const std::string w = synthetic_root_id(f);

    std::vector<std::string> extra;
    std::vector<std::pair<std::string, std::string>> edges;
    edges.reserve(f.edge_count());
    for (const Edge& e : f.edges()) {
        const std::string& a = is_root[e.u] ? w : f.id(e.u);
        const std::string& b = is_root[e.v] ? w : f.id(e.v);
        edges.emplace_back(a, b);
    }
    for (Vertex v = 0; v < f.vertex_count(); ++v)
        if (!is_root[v]) extra.push_back(f.id(v));

    IdentifiedTree out;
    Forest t = Forest::from_ids(extra, edges);
    out.root = *t.find(w);
    // from_ids keeps edge order, so the correspondence is positional.
    out.to_forest.resize(f.edge_count());
    for (EdgeIndex e = 0; e < f.edge_count(); ++e) out.to_forest[e] = e;
    const Vertex root = out.root;
    out.tree = root_components(t, std::span<const Vertex>(&root, 1));
    return out;
}

/// Transfers a labeling of the identified tree back onto the forest:
/// g(e) = f(t) where t is the tree edge corresponding to e.
inline EdgeLabeling split_labeling(const EdgeLabeling& on_tree, std::span<const EdgeIndex> to_forest,
                                   const Forest& forest) {
    const std::size_t m = forest.edge_count();
    if (to_forest.size() != on_tree.labels.size() || to_forest.size() != m)
        throw Error(ErrorCode::CorrespondenceMismatch, "correspondence covers " + std::to_string(to_forest.size()) +
                                                           " edges, forest has " + std::to_string(m));
    EdgeLabeling out{forest, std::vector<int>(m, 0)};
    std::vector<bool> hit(m, false);
    for (EdgeIndex t = 0; t < to_forest.size(); ++t) {
        EdgeIndex e = to_forest[t];
        if (e >= m || hit[e])
            throw Error(ErrorCode::CorrespondenceMismatch, "tree edge " + std::to_string(t) + " maps to an invalid or repeated forest edge");
        hit[e] = true;
        out.labels[e] = on_tree.labels[t];
    }
    return out;
}

} // namespace antimagic
