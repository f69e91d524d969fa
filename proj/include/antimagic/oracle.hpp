#pragma once

// Exhaustive search over all m! bijections. Kept independent of
// vertex_sums so it can serve as ground truth for the verifier.

#include "antimagic/error.hpp"
#include "antimagic/forest.hpp"
#include "antimagic/labeling.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

namespace antimagic {

inline constexpr std::size_t default_oracle_bound = 9;

enum class OracleMode { First, Count, All };

struct OracleResult {
    std::uint64_t count = 0;    // antimagic labelings seen (stops at 1 in First mode)
    std::uint64_t examined = 0; // permutations visited
    std::vector<EdgeIndex> edge_order; // canonical order the witnesses refer to
    std::vector<std::vector<int>> witnesses; // witnesses[i][j] labels edge_order[j]

    [[nodiscard]] EdgeLabeling witness(const Forest& f, std::size_t i) const {
        EdgeLabeling out{f, std::vector<int>(f.edge_count(), 0)};
        for (std::size_t j = 0; j < edge_order.size(); ++j) out.labels[edge_order[j]] = witnesses.at(i)[j];
        return out;
    }

    /// Whether `lab` (a labeling of the same forest) is among the witnesses.
    [[nodiscard]] bool contains(const EdgeLabeling& lab) const {
        std::vector<int> key(edge_order.size());
        for (std::size_t j = 0; j < edge_order.size(); ++j) key[j] = lab.labels.at(edge_order[j]);
        return std::binary_search(witnesses.begin(), witnesses.end(), key);
    }
};

/// Permutations are visited in lexicographic order over the canonical edge
/// order, so witnesses come out sorted and First yields the least one.
inline OracleResult oracle_search(const Forest& f, OracleMode mode, std::size_t bound = default_oracle_bound) {
    const std::size_t m = f.edge_count();
    if (m > bound)
        throw Error(ErrorCode::TooLarge, std::to_string(m) + " edges exceed the oracle bound of " + std::to_string(bound));

    OracleResult r;
    r.edge_order = f.canonical_edge_order();
    std::vector<Vertex> eu(m), ev(m);
    for (std::size_t j = 0; j < m; ++j) {
        eu[j] = f.edge(r.edge_order[j]).u;
        ev[j] = f.edge(r.edge_order[j]).v;
    }
    std::vector<int> perm(m);
    std::iota(perm.begin(), perm.end(), 1);
    std::vector<std::int64_t> phi(f.vertex_count());
    std::vector<std::int64_t> sorted(f.vertex_count());
    do {
        ++r.examined;
        std::fill(phi.begin(), phi.end(), 0);
        for (std::size_t j = 0; j < m; ++j) {
            phi[eu[j]] += perm[j];
            phi[ev[j]] += perm[j];
        }
        sorted = phi;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) continue;
        ++r.count;
        if (mode != OracleMode::Count) r.witnesses.push_back(perm);
        if (mode == OracleMode::First) break;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return r;
}

} // namespace antimagic
