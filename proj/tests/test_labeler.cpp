#include "test_support.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <numeric>

using namespace antimagic;
using testing_support::brute_bijection;
using testing_support::brute_distinct;
using testing_support::brute_sums;
using testing_support::forest_of;
using testing_support::read_fixture;

namespace {

ErrorCode code_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    ADD_FAILURE() << "no antimagic::Error thrown";
    return ErrorCode::SyntaxError;
}

Forest fixture(const char* name) { return parse_forest(read_fixture(name)); }

void expect_antimagic(const EdgeLabeling& lab) {
    EXPECT_TRUE(brute_bijection(lab));
    EXPECT_TRUE(brute_distinct(lab));
}

} // namespace

TEST(Plan, CaseTagsOfFixtures) {
    EXPECT_EQ(plan(fixture("fig6_tree.txt")).case_tag, CaseTag::TreeEven);
    EXPECT_EQ(plan(fixture("fig7_forest.txt")).case_tag, CaseTag::Case1_1);
    EXPECT_EQ(plan(fixture("fig8_forest.txt")).case_tag, CaseTag::Case1_2);
    EXPECT_EQ(plan(fixture("fig9_forest.txt")).case_tag, CaseTag::Case2_2_1);
    EXPECT_EQ(plan(fixture("fig10_forest.txt")).case_tag, CaseTag::Case2_2_2);
    EXPECT_EQ(plan(forest_of("a x\na y\na z\nb p\nb q\nb r")).case_tag, CaseTag::Case2_1);
    EXPECT_EQ(plan(forest_of("a x\na y\na z")).case_tag, CaseTag::TreeOdd);
}

TEST(Plan, RootsAndModulus) {
    LabelingPlan p7 = plan(fixture("fig7_forest.txt"));
    EXPECT_EQ(p7.roots, (std::vector<std::string>{"w1", "w2"}));
    EXPECT_EQ(p7.modulus, 11);

    LabelingPlan p9 = plan(fixture("fig9_forest.txt"));
    EXPECT_EQ(p9.roots, (std::vector<std::string>{"w1", "w2"}));
    EXPECT_EQ(p9.modulus, 13);
    EXPECT_EQ(p9.degree2_vertex, "w1");
    ASSERT_EQ(p9.reservations.size(), 2u);
    EXPECT_EQ(p9.reservations[0].kind, ReservationKind::ExactBSet);
    EXPECT_EQ(p9.reservations[1].kind, ReservationKind::ContainsCSet);
    EXPECT_EQ(p9.reservations[1].vertex, "w2");

    LabelingPlan p10 = plan(fixture("fig10_forest.txt"));
    EXPECT_EQ(p10.roots, (std::vector<std::string>{"w1", "w2", "w3"}));
    EXPECT_EQ(p10.modulus, 15);
}

TEST(Plan, IneligibleInputs) {
    EXPECT_EQ(code_of([] { plan(forest_of("a b")); }), ErrorCode::IneligibleForest);
    EXPECT_EQ(code_of([] { label_forest(forest_of("a b\nc d\nc e\nc f")); }), ErrorCode::IneligibleForest);
    EXPECT_EQ(code_of([] { label_forest(forest_of("a b\nb c\nc d")); }), ErrorCode::IneligibleForest);
    EXPECT_EQ(code_of([] { label_forest(Forest{}); }), ErrorCode::IneligibleForest);
}

TEST(LeafRoots, LeastLeafPerComponent) {
    Forest f = fixture("fig7_forest.txt");
    std::vector<Vertex> r = leaf_roots(f);
    ASSERT_EQ(r.size(), 2u);
    EXPECT_EQ(f.id(r[0]), "w1");
    EXPECT_EQ(f.id(r[1]), "w2");
}

TEST(AssignClass, SortedFillAroundPins) {
    std::vector<EdgeIndex> edges{4, 7, 9};
    std::vector<int> cls{8, 2, 5};
    auto plain = assign_class_to_edges(edges, cls, {});
    EXPECT_EQ(plain, (std::vector<std::pair<EdgeIndex, int>>{{4, 2}, {7, 5}, {9, 8}}));

    std::vector<LabelPin> pins{{7, 2}};
    auto pinned = assign_class_to_edges(edges, cls, pins);
    EXPECT_EQ(pinned, (std::vector<std::pair<EdgeIndex, int>>{{4, 5}, {7, 2}, {9, 8}}));

    std::vector<int> short_cls{1, 2};
    EXPECT_EQ(code_of([&] { assign_class_to_edges(edges, short_cls, {}); }), ErrorCode::SizeMismatch);
    std::vector<LabelPin> foreign{{7, 3}};
    EXPECT_EQ(code_of([&] { assign_class_to_edges(edges, cls, foreign); }), ErrorCode::ConflictingReservation);
    std::vector<LabelPin> twice{{7, 2}, {7, 5}};
    EXPECT_EQ(code_of([&] { assign_class_to_edges(edges, cls, twice); }), ErrorCode::ConflictingReservation);
}

TEST(LabelTreeEven, FixtureSixZeroSumProperty) {
    Forest f = fixture("fig6_tree.txt");
    EdgeLabeling lab = label_tree_even(f);
    expect_antimagic(lab);
    // Every non-root vertex has phi congruent to its incoming label mod m+1.
    const Vertex root = *f.find(plan(f).roots.front());
    RootedForest rf = root_components(f, std::span<const Vertex>(&root, 1));
    auto sums = vertex_sums(lab).sums;
    for (Vertex v = 0; v < f.vertex_count(); ++v)
        if (!rf.is_root(v)) {
            EXPECT_EQ((sums[v] - lab.labels[rf.parent_edge[v]]) % 23, 0) << f.id(v);
        }
    EXPECT_EQ(code_of([&] { label_tree_even(forest_of("a x\na y\na z")); }), ErrorCode::IneligibleForest);
}

TEST(LabelTreeEven, DegreeTwoRoot) {
    Forest f = forest_of("u a\nu b\na a1\na a2\nb b1\nb b2");
    EXPECT_EQ(plan(f).roots.front(), "u");
    expect_antimagic(label_tree_even(f));
    expect_antimagic(label_tree_even(forest_of("a b\nb c")));
}

TEST(LabelForest, FixtureNineReproducesRootSums) {
    Forest f = fixture("fig9_forest.txt");
    EdgeLabeling lab = label_forest(f);
    expect_antimagic(lab);
    auto sums = brute_sums(lab);
    EXPECT_EQ(sums["w1"], 13);
    EXPECT_EQ(sums["w2"], 26);
    // The roots receive the same classes as the drawn labeling.
    const EdgeLabeling drawn = parse_document(read_fixture("fig9_forest.txt")).labeling();
    auto at = [&](const EdgeLabeling& l, const char* v) {
        std::vector<int> out;
        for (EdgeIndex e : f.incident(*f.find(v))) out.push_back(l.labels[e]);
        std::sort(out.begin(), out.end());
        return out;
    };
    EXPECT_EQ(at(lab, "w1"), at(drawn, "w1"));
    EXPECT_EQ(at(lab, "w2"), at(drawn, "w2"));
}

TEST(LabelForest, FixtureTenDegreeTwoRootIsUniqueMultiple) {
    Forest f = fixture("fig10_forest.txt");
    LabelingResult r = label_forest_with_plan(f);
    expect_antimagic(r.labeling);
    auto sums = brute_sums(r.labeling);
    EXPECT_EQ(sums["w1"], 15);
    int multiples = 0;
    for (const auto& [id, s] : sums) multiples += s % 15 == 0;
    EXPECT_EQ(multiples, 1);
    EXPECT_EQ(r.labeling.labels, parse_document(read_fixture("fig10_forest.txt")).labeling().labels);
}

TEST(LabelForest, FixtureEightPinsLargestLabelOnDegreeTwoEdge) {
    Forest f = fixture("fig8_forest.txt");
    LabelingResult r = label_forest_with_plan(f);
    expect_antimagic(r.labeling);
    EXPECT_EQ(r.labeling.label(*f.find("y3"), *f.find("z09")), 9);
}

TEST(LabelForest, FixtureSevenIsAntimagicWithLargestLabelOnOddHost) {
    Forest f = fixture("fig7_forest.txt");
    LabelingResult r = label_forest_with_plan(f);
    expect_antimagic(r.labeling);
    ASSERT_FALSE(r.plan.special_edges.empty());
    EXPECT_EQ(r.plan.special_edges.back().role, "label-m");
    EXPECT_EQ(r.plan.special_edges.back().u, "y2");
}

TEST(LabelForest, TreeOddCases) {
    // no degree-2 vertex: largest label on the leaf root edge
    Forest star = forest_of("c a\nc b\nc d\nc e\nc f");
    LabelingResult r = label_forest_with_plan(star);
    expect_antimagic(r.labeling);
    EXPECT_EQ(r.plan.case_tag, CaseTag::TreeOdd);
    EXPECT_EQ(r.labeling.label(*star.find("a"), *star.find("c")), 5);

    // one degree-2 vertex
    Forest spider = forest_of("c a\nc b\nc d\nd e\ne f\ne g\ne h");
    LabelingResult s = label_forest_with_plan(spider);
    expect_antimagic(s.labeling);
    EXPECT_EQ(s.labeling.label(*spider.find("d"), *spider.find("e")), 7);
}

TEST(LabelForest, SmallTrees) {
    expect_antimagic(label_forest(forest_of("a b\nb c")));
    expect_antimagic(label_forest(forest_of("c a\nc b\nc d")));
    expect_antimagic(label_forest(forest_of("c a\nc b\nc d\nc e")));
}

TEST(LabelForest, ModularContractOnGeneratedForests) {
    std::map<CaseTag, int> seen;
    for (std::uint64_t seed = 0; seed < 400; ++seed) {
        const std::size_t s = 1 + seed % 5;
        GeneratorSpec spec{s, 3 * s + seed % 17, static_cast<int>((seed / 5) % 2), seed};
        if (!generator_feasible(spec)) continue;
        Forest f = generate_forest(spec);
        LabelingResult r = label_forest_with_plan(f);
        ++seen[r.plan.case_tag];
        ASSERT_TRUE(brute_bijection(r.labeling));
        ASSERT_TRUE(brute_distinct(r.labeling)) << serialize_forest(f);
        auto sums = vertex_sums(r.labeling).sums;
        const auto m = static_cast<std::int64_t>(f.edge_count());
        EXPECT_EQ(std::accumulate(sums.begin(), sums.end(), std::int64_t{0}), m * (m + 1));
    }
    EXPECT_EQ(seen.size(), 7u);
}
