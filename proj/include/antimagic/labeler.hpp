#pragma once

// Antimagic labelings of forests with at most one degree-2 vertex and no
// K2 component.
//
// Every construction is a zero-sum labeling of a rooted tree (or of the two
// rooted trees in Case2_2_1): the internal vertices v_1..v_t receive classes
// D_i of a zero-sum partition on their outgoing edges, so that
// phi(v) = f(e^v) (mod m') for every non-root v, where m' is the partition
// modulus. Distinct incoming labels then give distinct residues, and the
// case analysis below takes care of the roots.
//
//   TreeEven   s = 1, m even. Root at the degree-2 vertex or at an internal
//              vertex; partition [1, m] modulo m+1.
//   TreeOdd    s = 1, m odd. Without a degree-2 vertex: root at a leaf w and
//              put m on the root edge ww'; partition [1, m-1] modulo m over
//              the other internal vertices. phi(w) = m while phi(w') >= 2m.
//              With a degree-2 vertex v': root at a vertex of degree >= 3,
//              put m on v'v'' and partition [1, m-1]; the only possible clash
//              is root vs v'', which a bounded search over roots and class
//              placements resolves under verification.
//   Case1_1    s >= 2, m odd. Leaf roots merged into one root w; partition
//              [1, m] modulo m; split back.
//   Case1_2    as Case1_1 but m is pinned on v'v'' and [1, m-1] is
//              partitioned over the internal vertices other than v'.
//   Case2_1    s >= 2, m even. Leaf roots merged; zero-sum labeling modulo m+1.
//   Case2_2_1  s = 2, m even, degree-2 vertex u. T1 rooted at u with an exact
//              B-set, T2 rooted at a vertex of degree >= 3 whose class sums to
//              at least 2(m+1).
//   Case2_2_2  s >= 3, m even, degree-2 vertex u. u and leaf roots merged; the
//              two edges at u receive one B-set, so phi(u) = m+1.

#include "antimagic/error.hpp"
#include "antimagic/forest.hpp"
#include "antimagic/labeling.hpp"
#include "antimagic/partition.hpp"
#include "antimagic/rooted.hpp"
#include "antimagic/verify.hpp"

#include <algorithm>
#include <array>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace antimagic {

enum class CaseTag { TreeEven, TreeOdd, Case1_1, Case1_2, Case2_1, Case2_2_1, Case2_2_2 };

constexpr std::string_view to_string(CaseTag tag) noexcept {
    switch (tag) {
    case CaseTag::TreeEven: return "TreeEven";
    case CaseTag::TreeOdd: return "TreeOdd";
    case CaseTag::Case1_1: return "Case1_1";
    case CaseTag::Case1_2: return "Case1_2";
    case CaseTag::Case2_1: return "Case2_1";
    case CaseTag::Case2_2_1: return "Case2_2_1";
    case CaseTag::Case2_2_2: return "Case2_2_2";
    }
    return "?";
}

enum class ReservationKind {
    ExactBSet,    // the host's outgoing edges take exactly one B-set
    ContainsCSet, // the host's class includes a C-set
    ContainsBSet, // the host's class includes a B-set
    CarriesMax,   // the host's class holds the label m
    PinMax,       // the host's single outgoing edge takes m; the host gets no class
    BPair,        // a B-set of the host's class goes onto two named edges
};

constexpr std::string_view to_string(ReservationKind kind) noexcept {
    switch (kind) {
    case ReservationKind::ExactBSet: return "exact-b-set";
    case ReservationKind::ContainsCSet: return "c-set";
    case ReservationKind::ContainsBSet: return "b-set";
    case ReservationKind::CarriesMax: return "carries-m";
    case ReservationKind::PinMax: return "pin-m";
    case ReservationKind::BPair: return "b-pair";
    }
    return "?";
}

struct Reservation {
    ReservationKind kind;
    std::string vertex; // host id; the merged root appears under its synthetic id
};

struct NamedEdge {
    std::string role;
    std::string u;
    std::string v;
};

struct LabelingPlan {
    CaseTag case_tag = CaseTag::TreeEven;
    std::vector<std::string> roots; // one per component, component order
    int modulus = 1;
    std::optional<std::string> degree2_vertex;
    std::vector<Reservation> reservations;
    std::vector<NamedEdge> special_edges; // filled in by label_forest
};

struct LabelingResult {
    EdgeLabeling labeling;
    LabelingPlan plan;
};

/// A value pinned onto a specific outgoing edge.
struct LabelPin {
    EdgeIndex edge;
    int label;
};

/// Puts the class onto the given outgoing edges: pinned values first, the
/// remaining values ascending onto the remaining edges in order.
inline std::vector<std::pair<EdgeIndex, int>> assign_class_to_edges(std::span<const EdgeIndex> edges,
                                                                    std::span<const int> cls,
                                                                    std::span<const LabelPin> pins = {}) {
    if (cls.size() != edges.size())
        throw Error(ErrorCode::SizeMismatch, "class of size " + std::to_string(cls.size()) + " for " +
                                                 std::to_string(edges.size()) + " outgoing edges");
    std::vector<int> values(cls.begin(), cls.end());
    std::sort(values.begin(), values.end());
    std::vector<std::optional<int>> slot(edges.size());
    for (const LabelPin& pin : pins) {
        auto at = std::find(edges.begin(), edges.end(), pin.edge);
        if (at == edges.end())
            throw Error(ErrorCode::ConflictingReservation, "pinned edge is not an outgoing edge of the host");
        auto& s = slot[static_cast<std::size_t>(at - edges.begin())];
        if (s) throw Error(ErrorCode::ConflictingReservation, "edge pinned twice");
        auto v = std::find(values.begin(), values.end(), pin.label);
        if (v == values.end())
            throw Error(ErrorCode::ConflictingReservation,
                        "pinned label " + std::to_string(pin.label) + " is not in the class");
        s = pin.label;
        values.erase(v);
    }
    std::vector<std::pair<EdgeIndex, int>> out;
    out.reserve(edges.size());
    auto next = values.begin();
    for (std::size_t i = 0; i < edges.size(); ++i) out.emplace_back(edges[i], slot[i] ? *slot[i] : *next++);
    return out;
}

inline std::vector<std::pair<EdgeIndex, int>> assign_class_to_edges(const RootedForest& rf, Vertex v,
                                                                    std::span<const int> cls,
                                                                    std::span<const LabelPin> pins = {}) {
    const auto edges = rf.outgoing_edges(v);
    return assign_class_to_edges(edges, cls, pins);
}

namespace detail {

inline std::optional<Vertex> degree2_vertex(const Forest& f) {
    for (Vertex v = 0; v < f.vertex_count(); ++v)
        if (f.degree(v) == 2) return v;
    return std::nullopt;
}

inline Vertex least_leaf(const Forest& f, std::size_t component) {
    for (Vertex v = 0; v < f.vertex_count(); ++v)
        if (f.component(v) == component && f.degree(v) == 1) return v;
    throw Error(ErrorCode::IneligibleForest, "component " + std::to_string(component) + " has no leaf");
}

inline Vertex least_with_degree_at_least(const Forest& f, std::size_t component, std::size_t d) {
    for (Vertex v = 0; v < f.vertex_count(); ++v)
        if (f.component(v) == component && f.degree(v) >= d) return v;
    throw Error(ErrorCode::IneligibleForest,
                "component " + std::to_string(component) + " has no vertex of degree >= " + std::to_string(d));
}

inline void require_eligible(const Forest& f) {
    const HypothesisReport r = analyze_hypotheses(f);
    if (!r.eligible()) throw Error(ErrorCode::IneligibleForest, r.failure_reason(f));
}

struct Request {
    std::vector<std::pair<Vertex, ConstraintKind>> constraints;
    Vertex pinned_parent = no_vertex; // sole outgoing edge gets the largest label
    Vertex b_pair_host = no_vertex;
    std::array<EdgeIndex, 2> b_pair_edges{no_vertex, no_vertex};
    std::size_t rotation = 0; // shifts the class-to-host matching
};

struct ZeroSumOutcome {
    EdgeLabeling labeling;
    int modulus = 1;
    std::vector<Vertex> hosts;
    std::optional<Vertex> carrier_host;
};

/// Hosts: every vertex with children except `pinned_parent`, in decreasing
/// out-degree (ties by id). Host i takes class D_i.
inline ZeroSumOutcome zero_sum_labeling(const RootedForest& rf, const Request& req) {
    const Forest& f = rf.base;
    const int m = static_cast<int>(f.edge_count());
    std::vector<Vertex> hosts;
    for (Vertex v = 0; v < f.vertex_count(); ++v)
        if (rf.out_degree(v) > 0 && v != req.pinned_parent) hosts.push_back(v);
    std::stable_sort(hosts.begin(), hosts.end(),
                     [&](Vertex a, Vertex b) { return rf.out_degree(a) > rf.out_degree(b); });
    if (!hosts.empty()) std::rotate(hosts.begin(), hosts.begin() + req.rotation % hosts.size(), hosts.end());

    std::vector<std::size_t> slot(f.vertex_count(), no_vertex);
    std::vector<int> sizes;
    for (std::size_t i = 0; i < hosts.size(); ++i) {
        slot[hosts[i]] = i;
        sizes.push_back(static_cast<int>(rf.out_degree(hosts[i])));
    }
    std::vector<ClassConstraint> constraints;
    for (auto [v, kind] : req.constraints) {
        if (slot[v] == no_vertex)
            throw Error(ErrorCode::UnsatisfiableConstraint, "'" + f.id(v) + "' does not host a class");
        constraints.push_back({kind, slot[v]});
    }
    if (req.b_pair_host != no_vertex && slot[req.b_pair_host] == no_vertex)
        throw Error(ErrorCode::UnsatisfiableConstraint, "'" + f.id(req.b_pair_host) + "' does not host a class");

    int k = m;
    if (req.pinned_parent != no_vertex) {
        if (rf.out_degree(req.pinned_parent) != 1)
            throw Error(ErrorCode::ConflictingReservation, "'" + f.id(req.pinned_parent) + "' must have exactly one child");
        --k;
    }
    const ZeroSumPartition partition = corollary_partition(k, sizes, constraints);

    ZeroSumOutcome out{EdgeLabeling{f, std::vector<int>(f.edge_count(), 0)}, partition.modulus, hosts, std::nullopt};
    if (partition.carrier_of_k) out.carrier_host = hosts[*partition.carrier_of_k];
    for (std::size_t i = 0; i < hosts.size(); ++i) {
        const PartitionClass& cls = partition.classes[i];
        std::vector<LabelPin> pins;
        if (hosts[i] == req.b_pair_host) {
            const ZeroSumSet* b = cls.first_part(SetKind::B);
            if (!b) throw Error(ErrorCode::ConflictingReservation, "host class has no B-set for the reserved pair");
            const int lo = std::min(b->elements[0], b->elements[1]);
            const int hi = std::max(b->elements[0], b->elements[1]);
            pins = {{req.b_pair_edges[0], lo}, {req.b_pair_edges[1], hi}};
        }
        for (auto [e, value] : assign_class_to_edges(rf, hosts[i], cls.elements, pins)) out.labeling.labels[e] = value;
    }
    if (req.pinned_parent != no_vertex) out.labeling.labels[rf.outgoing_edges(req.pinned_parent)[0]] = m;
    return out;
}

inline Reservation reserve(ReservationKind kind, const Forest& f, Vertex v) { return {kind, f.id(v)}; }

} // namespace detail

/// Lexicographically least leaf of every component.
inline std::vector<Vertex> leaf_roots(const Forest& f) {
    std::vector<Vertex> out;
    for (std::size_t c = 0; c < f.component_count(); ++c) out.push_back(detail::least_leaf(f, c));
    return out;
}

/// Case split and root selection. TreeOdd with a degree-2 vertex reports the
/// first root the search will try.
inline LabelingPlan plan(const Forest& f) {
    detail::require_eligible(f);
    const std::size_t s = f.component_count();
    const int m = static_cast<int>(f.edge_count());
    const auto d2 = detail::degree2_vertex(f);

    LabelingPlan p;
    if (d2) p.degree2_vertex = f.id(*d2);
    auto ids = [&](const std::vector<Vertex>& vs) {
        std::vector<std::string> out;
        for (Vertex v : vs) out.push_back(f.id(v));
        return out;
    };

    if (s == 1) {
        if (m % 2 == 0) {
            p.case_tag = CaseTag::TreeEven;
            p.modulus = m + 1;
            p.roots = {f.id(d2 ? *d2 : detail::least_with_degree_at_least(f, 0, 2))};
            return p;
        }
        p.case_tag = CaseTag::TreeOdd;
        p.modulus = m;
        if (!d2) {
            const Vertex w = detail::least_leaf(f, 0);
            p.roots = {f.id(w)};
            p.reservations.push_back(detail::reserve(ReservationKind::PinMax, f, w));
        } else {
            p.roots = {f.id(detail::least_with_degree_at_least(f, 0, 3))};
            p.reservations.push_back(detail::reserve(ReservationKind::PinMax, f, *d2));
        }
        return p;
    }

    const std::string merged = synthetic_root_id(f);
    if (m % 2 == 1) {
        p.modulus = m;
        p.roots = ids(leaf_roots(f));
        if (!d2) {
            p.case_tag = CaseTag::Case1_1;
        } else {
            p.case_tag = CaseTag::Case1_2;
            p.reservations.push_back(detail::reserve(ReservationKind::PinMax, f, *d2));
        }
        return p;
    }

    p.modulus = m + 1;
    if (!d2) {
        p.case_tag = CaseTag::Case2_1;
        p.roots = ids(leaf_roots(f));
        return p;
    }
    const std::size_t c1 = f.component(*d2);
    std::vector<Vertex> roots = leaf_roots(f);
    roots[c1] = *d2;
    if (s == 2) {
        p.case_tag = CaseTag::Case2_2_1;
        const std::size_t c2 = 1 - c1;
        roots[c2] = detail::least_with_degree_at_least(f, c2, 3);
        p.roots = ids(roots);
        p.reservations.push_back(detail::reserve(ReservationKind::ExactBSet, f, *d2));
        p.reservations.push_back(detail::reserve(
            f.degree(roots[c2]) == 3 ? ReservationKind::ContainsCSet : ReservationKind::ContainsBSet, f, roots[c2]));
        return p;
    }
    p.case_tag = CaseTag::Case2_2_2;
    p.roots = ids(roots);
    p.reservations.push_back({ReservationKind::ContainsBSet, merged});
    p.reservations.push_back({ReservationKind::BPair, merged});
    return p;
}

namespace detail {

inline std::vector<Vertex> root_vertices(const Forest& f, const LabelingPlan& p) {
    std::vector<Vertex> out;
    for (const auto& id : p.roots) out.push_back(*f.find(id));
    return out;
}

inline NamedEdge named(std::string role, const Forest& f, EdgeIndex e) {
    return {std::move(role), f.id(f.edge(e).u), f.id(f.edge(e).v)};
}

inline EdgeIndex edge_with_label(const EdgeLabeling& lab, int value) {
    return static_cast<EdgeIndex>(std::find(lab.labels.begin(), lab.labels.end(), value) - lab.labels.begin());
}

/// Root at `root`, hand the class of every internal vertex out in the
/// default order.
inline EdgeLabeling label_rooted_even(const Forest& f, Vertex root) {
    const RootedForest rf = root_components(f, std::span<const Vertex>(&root, 1));
    return zero_sum_labeling(rf, {}).labeling;
}

inline LabelingResult label_tree_odd(const Forest& f, LabelingPlan p) {
    const auto d2 = degree2_vertex(f);
    p.reservations.clear();

    if (!d2) {
        for (Vertex w = 0; w < f.vertex_count(); ++w) {
            if (f.degree(w) != 1) continue;
            const RootedForest rf = root_components(f, std::span<const Vertex>(&w, 1));
            Request req;
            req.pinned_parent = w;
            EdgeLabeling lab = zero_sum_labeling(rf, req).labeling;
            if (!verify_antimagic(lab)) continue;
            p.roots = {f.id(w)};
            p.reservations.push_back(reserve(ReservationKind::PinMax, f, w));
            p.special_edges.push_back(named("ww'", f, rf.parent_edge[rf.children[w][0]]));
            return {std::move(lab), std::move(p)};
        }
        throw Error(ErrorCode::RepairExhausted, "no leaf root produced an antimagic labeling");
    }

    // Prefer roots that leave v'' a leaf: then phi(v'') = m and only a root
    // class summing to exactly m can clash.
    struct Candidate {
        bool far_leaf;
        std::size_t degree;
        Vertex root;
    };
    std::vector<Candidate> candidates;
    for (Vertex r = 0; r < f.vertex_count(); ++r) {
        if (f.degree(r) < 3) continue;
        const RootedForest rf = root_components(f, std::span<const Vertex>(&r, 1));
        candidates.push_back({rf.out_degree(rf.children[*d2].at(0)) == 0, f.degree(r), r});
    }
    std::stable_sort(candidates.begin(), candidates.end(), [](const Candidate& a, const Candidate& b) {
        if (a.far_leaf != b.far_leaf) return a.far_leaf;
        return a.degree > b.degree;
    });

    for (const Candidate& c : candidates) {
        const RootedForest rf = root_components(f, std::span<const Vertex>(&c.root, 1));
        std::vector<Request> variants;
        for (auto kind : {std::optional<ConstraintKind>{}, std::optional{ConstraintKind::ContainsCSet},
                          std::optional{ConstraintKind::ContainsBSet}}) {
            Request req;
            req.pinned_parent = *d2;
            if (kind) req.constraints.emplace_back(c.root, *kind);
            variants.push_back(req);
        }
        std::size_t host_count = 0;
        for (Vertex v = 0; v < f.vertex_count(); ++v) host_count += rf.out_degree(v) > 0 && v != *d2;
        for (std::size_t shift = 1; shift < host_count; ++shift) {
            Request req;
            req.pinned_parent = *d2;
            req.rotation = shift;
            variants.push_back(req);
        }
        for (const Request& req : variants) {
            EdgeLabeling lab;
            try {
                lab = zero_sum_labeling(rf, req).labeling;
            } catch (const Error& e) {
                if (e.code() == ErrorCode::UnsatisfiableConstraint) continue;
                throw;
            }
            if (!verify_antimagic(lab)) continue;
            p.roots = {f.id(c.root)};
            p.reservations.push_back(reserve(ReservationKind::PinMax, f, *d2));
            for (auto [v, kind] : req.constraints)
                p.reservations.push_back(
                    reserve(kind == ConstraintKind::ContainsCSet ? ReservationKind::ContainsCSet : ReservationKind::ContainsBSet,
                            f, v));
            p.special_edges.push_back(named("v'v''", f, rf.outgoing_edges(*d2)[0]));
            return {std::move(lab), std::move(p)};
        }
    }
    throw Error(ErrorCode::RepairExhausted, "no root or class placement produced an antimagic labeling");
}

} // namespace detail

/// Zero-sum labeling of a single tree with an even number of edges, rooted
/// at its degree-2 vertex if it has one, otherwise at its least internal
/// vertex.
inline EdgeLabeling label_tree_even(const Forest& t) {
    detail::require_eligible(t);
    if (t.component_count() != 1) throw Error(ErrorCode::IneligibleForest, "expected a single tree");
    if (t.edge_count() % 2 != 0) throw Error(ErrorCode::IneligibleForest, "edge count is odd");
    const LabelingPlan p = plan(t);
    return detail::label_rooted_even(t, *t.find(p.roots.front()));
}

/// Antimagic labeling of an eligible forest, together with the plan that
/// produced it. The result is always checked by verify_antimagic.
inline LabelingResult label_forest_with_plan(const Forest& f) {
    LabelingPlan p = plan(f);
    const int m = static_cast<int>(f.edge_count());
    const std::vector<Vertex> roots = detail::root_vertices(f, p);
    const auto d2 = detail::degree2_vertex(f);
    EdgeLabeling lab;

    switch (p.case_tag) {
    case CaseTag::TreeEven:
        lab = detail::label_rooted_even(f, roots.front());
        break;

    case CaseTag::TreeOdd: {
        LabelingResult r = detail::label_tree_odd(f, std::move(p));
        if (!verify_antimagic(r.labeling))
            throw Error(ErrorCode::RepairExhausted, "TreeOdd result failed verification");
        return r;
    }

    case CaseTag::Case1_1: {
        const IdentifiedTree it = identify_roots(root_components(f, roots));
        const RootedForest& t = it.tree;
        // Prefer a non-root host of odd out-degree >= 3 for the label m.
        const auto hosts = detail::zero_sum_labeling(t, {}).hosts;
        Vertex carrier = it.root;
        for (Vertex v : hosts)
            if (v != it.root && t.out_degree(v) % 2 == 1 && t.out_degree(v) >= 3) {
                carrier = v;
                break;
            }
        detail::Request req;
        req.constraints.emplace_back(carrier, ConstraintKind::CarriesK);
        lab = split_labeling(detail::zero_sum_labeling(t, req).labeling, it.to_forest, f);
        p.reservations.push_back(detail::reserve(ReservationKind::CarriesMax, t.base, carrier));
        p.special_edges.push_back(detail::named("label-m", f, detail::edge_with_label(lab, m)));
        break;
    }

    case CaseTag::Case1_2: {
        const IdentifiedTree it = identify_roots(root_components(f, roots));
        const RootedForest& t = it.tree;
        detail::Request req;
        req.pinned_parent = *t.base.find(f.id(*d2));
        lab = split_labeling(detail::zero_sum_labeling(t, req).labeling, it.to_forest, f);
        p.special_edges.push_back(detail::named("v'v''", f, it.to_forest[t.outgoing_edges(req.pinned_parent)[0]]));
        break;
    }

    case CaseTag::Case2_1: {
        const IdentifiedTree it = identify_roots(root_components(f, roots));
        lab = split_labeling(detail::zero_sum_labeling(it.tree, {}).labeling, it.to_forest, f);
        break;
    }

    case CaseTag::Case2_2_1: {
        const RootedForest rf = root_components(f, roots);
        const std::size_t c2 = 1 - f.component(*d2);
        const Vertex w2 = roots[c2];
        detail::Request req;
        req.constraints.emplace_back(*d2, ConstraintKind::ExactBSet);
        req.constraints.emplace_back(w2, rf.out_degree(w2) == 3 ? ConstraintKind::ContainsCSet : ConstraintKind::ContainsBSet);
        lab = detail::zero_sum_labeling(rf, req).labeling;
        for (EdgeIndex e : rf.outgoing_edges(*d2)) p.special_edges.push_back(detail::named("E+(w1)", f, e));
        break;
    }

    case CaseTag::Case2_2_2: {
        const IdentifiedTree it = identify_roots(root_components(f, roots));
        const RootedForest& t = it.tree;
        // Edge order is preserved by identification, so u's forest edges
        // are also the tree edges e', e''.
        std::vector<EdgeIndex> at_u(f.incident(*d2).begin(), f.incident(*d2).end());
        std::sort(at_u.begin(), at_u.end(), [&](EdgeIndex a, EdgeIndex b) {
            return f.other_end(a, *d2) < f.other_end(b, *d2);
        });
        detail::Request req;
        req.constraints.emplace_back(it.root, ConstraintKind::ContainsBSet);
        req.b_pair_host = it.root;
        req.b_pair_edges = {at_u[0], at_u[1]};
        lab = split_labeling(detail::zero_sum_labeling(t, req).labeling, it.to_forest, f);
        p.special_edges.push_back(detail::named("e'", f, at_u[0]));
        p.special_edges.push_back(detail::named("e''", f, at_u[1]));
        break;
    }
    }

    if (!verify_antimagic(lab))
        throw Error(ErrorCode::RepairExhausted,
                    std::string(to_string(p.case_tag)) + " construction failed verification");
    return {std::move(lab), std::move(p)};
}

inline EdgeLabeling label_forest(const Forest& f) { return label_forest_with_plan(f).labeling; }

} // namespace antimagic
