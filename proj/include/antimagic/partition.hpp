#pragma once

// Zero-sum partitions of [1, k].
//
// lemma_partition builds the A/B/C-sets for k = 2s + 6l: l A-sets and s
// B-sets summing to k+1, and l C-sets summing to 2(k+1). corollary_partition
// glues those sets into classes of arbitrary sizes >= 2 whose sums vanish
// modulo k' (k+1 for even k, k for odd k).

#include "antimagic/error.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace antimagic {

enum class SetKind : char { A = 'A', B = 'B', C = 'C' };

struct ZeroSumSet {
    SetKind kind;
    int index; // 1-based, as in A_1, B_1, C_1
    std::vector<int> elements;

    [[nodiscard]] std::int64_t sum() const {
        std::int64_t s = 0;
        for (int x : elements) s += x;
        return s;
    }
};

struct LemmaPartition {
    int k = 0;
    int s = 0;
    int l = 0;
    std::vector<ZeroSumSet> a_sets;
    std::vector<ZeroSumSet> b_sets;
    std::vector<ZeroSumSet> c_sets;

    /// A_1..A_l, B_1..B_s, C_1..C_l.
    [[nodiscard]] std::vector<ZeroSumSet> ordered() const {
        std::vector<ZeroSumSet> out(a_sets);
        out.insert(out.end(), b_sets.begin(), b_sets.end());
        out.insert(out.end(), c_sets.begin(), c_sets.end());
        return out;
    }
};

/// Closed forms on the 2 x k/2 matrix with columns (i, k-i+1):
///   B_i = {l+i, k-l-i+1}
///   A_i = {i, l+s+i, k-(l+s+2i)+1}
///   C_i = {k-i+1, s+3l+1-i, k-(s+3l+1-2i)+1}
/// Elements are kept in the order the formulas list them.
inline LemmaPartition lemma_partition(int s, int l) {
    if (s < 0 || l < 0) throw Error(ErrorCode::SizeTooSmall, "s and l must be non-negative");
    LemmaPartition p;
    p.s = s;
    p.l = l;
    p.k = 2 * s + 6 * l;
    const int k = p.k;
    for (int i = 1; i <= l; ++i)
        p.a_sets.push_back({SetKind::A, i, {i, l + s + i, k - (l + s + 2 * i) + 1}});
    for (int i = 1; i <= s; ++i)
        p.b_sets.push_back({SetKind::B, i, {l + i, k - l - i + 1}});
    for (int i = 1; i <= l; ++i)
        p.c_sets.push_back({SetKind::C, i, {k - i + 1, s + 3 * l + 1 - i, k - (s + 3 * l + 1 - 2 * i) + 1}});
    return p;
}

/// r = 2 * pairs + 3 * triples, canonical: at most one triple.
struct SizeDecomposition {
    int size = 0;
    int pairs = 0;
    int triples = 0;

    friend bool operator==(const SizeDecomposition&, const SizeDecomposition&) = default;
};

inline SizeDecomposition decompose_size(int r) {
    if (r < 2) throw Error(ErrorCode::SizeTooSmall, "class size " + std::to_string(r) + " is below 2");
    if (r % 2 == 0) return {r, r / 2, 0};
    return {r, (r - 3) / 2, 1};
}

enum class ConstraintKind {
    ExactBSet,    // the class is exactly one B-set (sum k')
    ContainsCSet, // the class includes a C-set (sum >= 2k')
    ContainsBSet, // the class includes at least one full B-set
    CarriesK,     // odd k: the class receives the element k
};

inline std::string to_string(ConstraintKind kind) {
    switch (kind) {
    case ConstraintKind::ExactBSet: return "exact-b";
    case ConstraintKind::ContainsCSet: return "c-set";
    case ConstraintKind::ContainsBSet: return "b-set";
    case ConstraintKind::CarriesK: return "carrier";
    }
    return "?";
}

struct ClassConstraint {
    ConstraintKind kind;
    std::size_t class_index;
};

struct PartitionClass {
    std::vector<int> elements;     // ascending
    std::vector<ZeroSumSet> parts; // B-sets first, then 3-sets
    bool holds_k = false;          // odd k: the adjoined element k

    [[nodiscard]] std::int64_t sum() const {
        std::int64_t s = 0;
        for (int x : elements) s += x;
        return s;
    }

    [[nodiscard]] const ZeroSumSet* first_part(SetKind kind) const {
        for (const auto& p : parts)
            if (p.kind == kind) return &p;
        return nullptr;
    }
};

struct ZeroSumPartition {
    int k = 0;
    int modulus = 1;
    std::vector<PartitionClass> classes;
    std::optional<std::size_t> carrier_of_k;
};

namespace detail {

[[noreturn]] inline void unsatisfiable(const ClassConstraint& c, const std::string& why) {
    throw Error(ErrorCode::UnsatisfiableConstraint,
                to_string(c.kind) + " on class " + std::to_string(c.class_index) + ": " + why);
}

inline ZeroSumPartition even_partition(int k, std::span<const int> sizes, std::span<const ClassConstraint> constraints) {
    const std::size_t t = sizes.size();
    std::vector<SizeDecomposition> dec;
    dec.reserve(t);
    int s = 0;
    int triples = 0;
    for (int r : sizes) {
        dec.push_back(decompose_size(r));
        s += dec.back().pairs;
        triples += dec.back().triples;
    }
    const int l = triples / 2;

    std::vector<bool> wants_c(t, false);
    int c_demand = 0;
    for (const auto& c : constraints) {
        switch (c.kind) {
        case ConstraintKind::ExactBSet:
            if (sizes[c.class_index] != 2) unsatisfiable(c, "class size is not 2");
            break;
        case ConstraintKind::ContainsBSet:
            if (dec[c.class_index].pairs < 1) unsatisfiable(c, "class size 3 has no B-set");
            break;
        case ConstraintKind::ContainsCSet:
            if (dec[c.class_index].triples < 1) unsatisfiable(c, "class has no 3-set");
            if (!wants_c[c.class_index]) {
                wants_c[c.class_index] = true;
                ++c_demand;
            }
            break;
        case ConstraintKind::CarriesK:
            unsatisfiable(c, "k is even");
        }
    }
    if (c_demand > l) throw Error(ErrorCode::UnsatisfiableConstraint, "more C-set reservations than C-sets");

    const LemmaPartition lemma = lemma_partition(s, l);
    ZeroSumPartition out;
    out.k = k;
    out.modulus = k + 1;
    out.classes.resize(t);

    std::size_t next_b = 0;
    for (std::size_t i = 0; i < t; ++i)
        for (int j = 0; j < dec[i].pairs; ++j) out.classes[i].parts.push_back(lemma.b_sets[next_b++]);

    // Reserved C-sets come off the front; the rest of the 3-sets are
    // consumed as A1, C1, A2, C2, ...
    std::vector<bool> c_taken(l, false);
    std::size_t next_c = 0;
    std::vector<int> remaining(dec.size());
    for (std::size_t i = 0; i < t; ++i) {
        remaining[i] = dec[i].triples;
        if (wants_c[i]) {
            c_taken[next_c] = true;
            out.classes[i].parts.push_back(lemma.c_sets[next_c++]);
            --remaining[i];
        }
    }
    std::vector<const ZeroSumSet*> pool;
    for (int i = 0; i < l; ++i) {
        pool.push_back(&lemma.a_sets[i]);
        if (!c_taken[i]) pool.push_back(&lemma.c_sets[i]);
    }
    std::size_t next_triple = 0;
    for (std::size_t i = 0; i < t; ++i)
        for (int j = 0; j < remaining[i]; ++j) out.classes[i].parts.push_back(*pool[next_triple++]);

    for (auto& cls : out.classes) {
        for (const auto& p : cls.parts) cls.elements.insert(cls.elements.end(), p.elements.begin(), p.elements.end());
        std::sort(cls.elements.begin(), cls.elements.end());
    }
    return out;
}

} // namespace detail

/// Partitions [1, k] into classes of the requested sizes with every class
/// sum divisible by the modulus (k+1 for even k, k for odd k).
inline ZeroSumPartition corollary_partition(int k, std::span<const int> sizes,
                                            std::span<const ClassConstraint> constraints = {}) {
    long long total = 0;
    for (int r : sizes) {
        if (r < 2) throw Error(ErrorCode::SizeTooSmall, "class size " + std::to_string(r) + " is below 2");
        total += r;
    }
    if (total != k)
        throw Error(ErrorCode::SizeSumMismatch, "sizes sum to " + std::to_string(total) + ", expected " + std::to_string(k));
    for (const auto& c : constraints)
        if (c.class_index >= sizes.size())
            throw Error(ErrorCode::UnsatisfiableConstraint, "constraint names class " + std::to_string(c.class_index) +
                                                                " but only " + std::to_string(sizes.size()) + " exist");
    if (k == 0) return ZeroSumPartition{0, 1, {}, std::nullopt};
    if (k % 2 == 0) return detail::even_partition(k, sizes, constraints);

    std::optional<std::size_t> carrier;
    std::vector<ClassConstraint> rest;
    std::vector<bool> wants_c(sizes.size(), false);
    for (const auto& c : constraints) {
        if (c.kind == ConstraintKind::CarriesK) {
            if (sizes[c.class_index] % 2 == 0) detail::unsatisfiable(c, "class size is even");
            if (carrier && *carrier != c.class_index) detail::unsatisfiable(c, "another class already carries k");
            carrier = c.class_index;
        } else {
            if (c.kind == ConstraintKind::ExactBSet && sizes[c.class_index] != 2)
                detail::unsatisfiable(c, "class size is not 2");
            if (c.kind == ConstraintKind::ContainsCSet) wants_c[c.class_index] = true;
            rest.push_back(c);
        }
    }
    if (!carrier) {
        // First odd size; skip classes that need their own 3-set if possible.
        for (std::size_t i = 0; i < sizes.size() && !carrier; ++i)
            if (sizes[i] % 2 == 1 && !wants_c[i]) carrier = i;
        for (std::size_t i = 0; i < sizes.size() && !carrier; ++i)
            if (sizes[i] % 2 == 1) carrier = i;
    }
    std::vector<int> reduced(sizes.begin(), sizes.end());
    --reduced[*carrier];
    ZeroSumPartition out = detail::even_partition(k - 1, reduced, rest);
    out.k = k;
    out.modulus = k;
    auto& cls = out.classes[*carrier];
    cls.elements.push_back(k);
    cls.holds_k = true;
    out.carrier_of_k = carrier;
    return out;
}

} // namespace antimagic
