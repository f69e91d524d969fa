#pragma once

#include "antimagic/error.hpp"

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace antimagic {

using Vertex = std::size_t;
using EdgeIndex = std::size_t;

inline constexpr Vertex no_vertex = static_cast<Vertex>(-1);

/// Undirected edge stored with u < v. Vertex indices follow the
/// lexicographic order of the ids, so u is also the lexicographically
/// smaller endpoint.
struct Edge {
    Vertex u;
    Vertex v;

    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

namespace detail {

class DisjointSets {
public:
    explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

    std::size_t find(std::size_t x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    bool unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        if (b < a) std::swap(a, b);
        parent_[b] = a;
        return true;
    }

private:
    std::vector<std::size_t> parent_;
};

} // namespace detail

/// An acyclic simple graph over opaque string ids.
///
/// Immutable once built. Edges keep their construction order; components
/// are numbered by their lexicographically smallest vertex.
class Forest {
public:
    Forest() = default;

    /// Builds a forest from ids. `extra_vertices` may name vertices that
    /// also occur in `edges`; duplicates are merged.
    static Forest from_ids(std::span<const std::string> extra_vertices,
                           std::span<const std::pair<std::string, std::string>> edges) {
        std::vector<std::string> ids(extra_vertices.begin(), extra_vertices.end());
        for (const auto& [a, b] : edges) {
            ids.push_back(a);
            ids.push_back(b);
        }
        std::sort(ids.begin(), ids.end());
        ids.erase(std::unique(ids.begin(), ids.end()), ids.end());

        Forest f;
        f.ids_ = std::move(ids);
        f.incident_.assign(f.ids_.size(), {});
        detail::DisjointSets sets(f.ids_.size());
        std::set<Edge> seen;
        for (const auto& [a, b] : edges) {
            if (a == b) throw Error(ErrorCode::SelfLoop, "self-loop at '" + a + "'");
            Vertex x = *f.find(a);
            Vertex y = *f.find(b);
            Edge e{std::min(x, y), std::max(x, y)};
            if (!seen.insert(e).second)
                throw Error(ErrorCode::DuplicateEdge, "duplicate edge '" + a + "' '" + b + "'");
            if (!sets.unite(x, y))
                throw Error(ErrorCode::CycleDetected, "edge '" + a + "' '" + b + "' closes a cycle");
            f.incident_[x].push_back(f.edges_.size());
            f.incident_[y].push_back(f.edges_.size());
            f.edges_.push_back(e);
        }

        // Roots of the disjoint sets are the smallest member, so scanning in
        // index order numbers components by their smallest vertex.
        f.component_.assign(f.ids_.size(), 0);
        std::vector<std::size_t> number(f.ids_.size(), no_vertex);
        for (Vertex v = 0; v < f.ids_.size(); ++v) {
            std::size_t r = sets.find(v);
            if (number[r] == no_vertex) number[r] = f.components_++;
            f.component_[v] = number[r];
        }
        return f;
    }

    [[nodiscard]] std::size_t vertex_count() const noexcept { return ids_.size(); }
    [[nodiscard]] std::size_t edge_count() const noexcept { return edges_.size(); }
    [[nodiscard]] std::size_t component_count() const noexcept { return components_; }

    [[nodiscard]] const std::string& id(Vertex v) const { return ids_.at(v); }
    [[nodiscard]] std::span<const std::string> ids() const noexcept { return ids_; }

    [[nodiscard]] std::optional<Vertex> find(std::string_view id) const {
        auto it = std::lower_bound(ids_.begin(), ids_.end(), id);
        if (it == ids_.end() || *it != id) return std::nullopt;
        return static_cast<Vertex>(it - ids_.begin());
    }

    [[nodiscard]] std::span<const Edge> edges() const noexcept { return edges_; }
    [[nodiscard]] const Edge& edge(EdgeIndex e) const { return edges_.at(e); }

    [[nodiscard]] std::span<const EdgeIndex> incident(Vertex v) const { return incident_.at(v); }
    [[nodiscard]] std::size_t degree(Vertex v) const { return incident_.at(v).size(); }

    [[nodiscard]] Vertex other_end(EdgeIndex e, Vertex v) const {
        const Edge& ed = edges_.at(e);
        return ed.u == v ? ed.v : ed.u;
    }

    [[nodiscard]] std::size_t component(Vertex v) const { return component_.at(v); }

    [[nodiscard]] std::vector<Vertex> component_vertices(std::size_t c) const {
        std::vector<Vertex> out;
        for (Vertex v = 0; v < ids_.size(); ++v)
            if (component_[v] == c) out.push_back(v);
        return out;
    }

    [[nodiscard]] std::optional<EdgeIndex> find_edge(Vertex a, Vertex b) const {
        for (EdgeIndex e : incident_.at(a))
            if (other_end(e, a) == b) return e;
        return std::nullopt;
    }

    /// Edge indices sorted by (id(u), id(v)).
    [[nodiscard]] std::vector<EdgeIndex> canonical_edge_order() const {
        std::vector<EdgeIndex> order(edges_.size());
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(),
                  [&](EdgeIndex a, EdgeIndex b) { return edges_[a] < edges_[b]; });
        return order;
    }

private:
    std::vector<std::string> ids_;
    std::vector<Edge> edges_;
    std::vector<std::vector<EdgeIndex>> incident_;
    std::vector<std::size_t> component_;
    std::size_t components_ = 0;
};

/// Which of the forest hypotheses hold. Lists are in lexicographic order.
struct HypothesisReport {
    std::vector<Vertex> degree2_vertices;
    std::vector<std::size_t> k2_components;
    std::vector<Vertex> isolated_vertices;
    std::size_t component_count = 0;
    std::size_t edge_count = 0;

    [[nodiscard]] bool eligible() const noexcept {
        return degree2_vertices.size() <= 1 && k2_components.empty() && isolated_vertices.empty() &&
               edge_count >= 1;
    }

    /// First failing hypothesis, or empty when eligible.
    [[nodiscard]] std::string failure_reason(const Forest& f) const {
        if (!k2_components.empty()) {
            auto vs = f.component_vertices(k2_components.front());
            return "K2 component {" + f.id(vs[0]) + ", " + f.id(vs[1]) + "}";
        }
        if (degree2_vertices.size() > 1)
            return "more than one degree-2 vertex ('" + f.id(degree2_vertices[0]) + "', '" +
                   f.id(degree2_vertices[1]) + "')";
        if (!isolated_vertices.empty()) return "isolated vertex '" + f.id(isolated_vertices.front()) + "'";
        if (edge_count == 0) return "forest has no edges";
        return {};
    }
};

inline HypothesisReport analyze_hypotheses(const Forest& f) {
    HypothesisReport r;
    r.component_count = f.component_count();
    r.edge_count = f.edge_count();
    std::vector<std::size_t> comp_vertices(f.component_count(), 0);
    std::vector<std::size_t> comp_edges(f.component_count(), 0);
    for (Vertex v = 0; v < f.vertex_count(); ++v) {
        ++comp_vertices[f.component(v)];
        if (f.degree(v) == 2) r.degree2_vertices.push_back(v);
        if (f.degree(v) == 0) r.isolated_vertices.push_back(v);
    }
    for (const Edge& e : f.edges()) ++comp_edges[f.component(e.u)];
    for (std::size_t c = 0; c < f.component_count(); ++c)
        if (comp_vertices[c] == 2 && comp_edges[c] == 1) r.k2_components.push_back(c);
    return r;
}

} // namespace antimagic
