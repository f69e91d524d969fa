#include "commands.hpp"
#include "test_support.hpp"

#include <gtest/gtest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <sstream>

using antimagic::cli::CommandOutcome;
using testing_support::fixture_path;

namespace {

CommandOutcome run(std::vector<std::string> args, const std::string& stdin_text = "") {
    std::istringstream in(stdin_text);
    return antimagic::cli::run(std::move(args), in);
}

bool contains(const std::string& text, const std::string& needle) { return text.find(needle) != std::string::npos; }

} // namespace

TEST(Cli, PartitionLemmaOutput) {
    CommandOutcome r = run({"partition", "--s", "5", "--l", "2"});
    ASSERT_EQ(r.exit_code, 0) << r.message;
    EXPECT_EQ(r.payload, "# format: v1\n"
                         "A1 sum=23 mod=23: 1 8 14\n"
                         "A2 sum=23 mod=23: 2 9 12\n"
                         "B1 sum=23 mod=23: 3 20\n"
                         "B2 sum=23 mod=23: 4 19\n"
                         "B3 sum=23 mod=23: 5 18\n"
                         "B4 sum=23 mod=23: 6 17\n"
                         "B5 sum=23 mod=23: 7 16\n"
                         "C1 sum=46 mod=23: 11 13 22\n"
                         "C2 sum=46 mod=23: 10 15 21\n");
}

TEST(Cli, PartitionSizesAndConstraints) {
    CommandOutcome r = run({"partition", "--k", "9", "--sizes", "2,3,4"});
    ASSERT_EQ(r.exit_code, 0) << r.message;
    EXPECT_EQ(r.payload, "# format: v1\nsum=9 mod=9: 1 8\nsum=18 mod=9: 2 7 9\nsum=18 mod=9: 3 4 5 6\n");

    CommandOutcome c = run({"partition", "--k", "8", "--sizes", "3,3,2", "--constraints", "c-set:2,exact-b:3"});
    ASSERT_EQ(c.exit_code, 0) << c.message;
    EXPECT_TRUE(contains(c.payload, "sum=18 mod=9: 4 6 8\n"));

    EXPECT_EQ(run({"partition", "--k", "6", "--sizes", "3,3", "--constraints", "exact-b:1"}).exit_code, 1);
    EXPECT_EQ(run({"partition", "--k", "6", "--sizes", "3,3", "--constraints", "bogus:1"}).exit_code, 2);
    EXPECT_EQ(run({"partition", "--k", "6", "--sizes", "2,3"}).exit_code, 2);
    EXPECT_EQ(run({"partition"}).exit_code, 2);
}

TEST(Cli, LabelThenVerifyThroughStdin) {
    CommandOutcome l = run({"label", fixture_path("fig9_forest.txt")});
    ASSERT_EQ(l.exit_code, 0) << l.message;
    EXPECT_TRUE(contains(l.payload, "w1 y1 2\n"));
    CommandOutcome v = run({"verify", "-"}, l.payload);
    EXPECT_EQ(v.exit_code, 0);
    EXPECT_TRUE(contains(v.payload, "w1 13\n"));
    EXPECT_TRUE(contains(v.payload, "w2 26\n"));
    EXPECT_TRUE(contains(v.payload, "verdict: antimagic\n"));
}

TEST(Cli, LabelExplain) {
    CommandOutcome r = run({"label", fixture_path("fig10_forest.txt"), "--explain"});
    ASSERT_EQ(r.exit_code, 0) << r.message;
    EXPECT_EQ(r.payload.rfind("# format: v1\n# case: Case2_2_2\n", 0), 0u);
    EXPECT_TRUE(contains(r.payload, "# roots: w1 w2 w3\n"));
    EXPECT_TRUE(contains(r.payload, "# modulus: 15\n"));
    EXPECT_TRUE(contains(r.payload, "# reserve: b-pair *w\n"));
    EXPECT_TRUE(contains(r.payload, "# edge: e' w1 y1\n"));
    // explain comments still parse as a labeled document
    EXPECT_EQ(run({"verify", "-"}, r.payload).exit_code, 0);
}

TEST(Cli, LabelWritesDot) {
    const auto dot = std::filesystem::temp_directory_path() / "antimagic_test_label.dot";
    CommandOutcome r = run({"label", fixture_path("p3.txt"), "--dot", dot.string()});
    ASSERT_EQ(r.exit_code, 0) << r.message;
    std::ifstream in(dot);
    std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
    EXPECT_TRUE(contains(text, "graph forest {"));
    EXPECT_TRUE(contains(text, "xlabel"));
    std::filesystem::remove(dot);
}

TEST(Cli, LabelErrors) {
    CommandOutcome k2 = run({"label", fixture_path("k2.txt")});
    EXPECT_EQ(k2.exit_code, 1);
    EXPECT_TRUE(contains(k2.message, "K2 component"));
    EXPECT_TRUE(k2.payload.empty());
    EXPECT_EQ(run({"label", "-"}, "a b\nb c\nc a\n").exit_code, 2);
    EXPECT_EQ(run({"label", "/nonexistent/forest.txt"}).exit_code, 2);
    EXPECT_EQ(run({"label"}).exit_code, 2);
    EXPECT_EQ(run({"frobnicate"}).exit_code, 2);
}

TEST(Cli, VerifyReportsCollisions) {
    CommandOutcome r = run({"verify", fixture_path("k2_labeled.txt")});
    EXPECT_EQ(r.exit_code, 1);
    EXPECT_TRUE(contains(r.payload, "collision a b 1\n"));
    EXPECT_TRUE(contains(r.payload, "verdict: not antimagic\n"));
    EXPECT_EQ(run({"verify", fixture_path("duplicate_label.txt")}).exit_code, 2);
    EXPECT_EQ(run({"verify", fixture_path("p3.txt")}).exit_code, 2);
}

TEST(Cli, GenerateIsDeterministicAndEligible) {
    std::vector<std::string> args{"generate", "--components", "3", "--edges", "14", "--degree2", "1", "--seed", "7"};
    CommandOutcome a = run(args);
    CommandOutcome b = run(args);
    ASSERT_EQ(a.exit_code, 0) << a.message;
    EXPECT_EQ(a.payload, b.payload);
    antimagic::Forest f = antimagic::parse_forest(a.payload);
    EXPECT_EQ(f.component_count(), 3u);
    EXPECT_EQ(f.edge_count(), 14u);
    EXPECT_EQ(run({"generate", "--components", "1", "--edges", "2"}).exit_code, 1);
    EXPECT_EQ(run({"generate", "--components", "1", "--edges", "4", "--degree2", "2"}).exit_code, 2);
}

TEST(Cli, Oracle) {
    CommandOutcome count = run({"oracle", fixture_path("p3.txt"), "--mode", "count"});
    EXPECT_EQ(count.exit_code, 0);
    EXPECT_EQ(count.payload, "2\n");

    CommandOutcome first = run({"oracle", fixture_path("p3.txt")});
    EXPECT_EQ(first.exit_code, 0);
    EXPECT_EQ(antimagic::parse_document(first.payload).labeling().labels.size(), 2u);

    CommandOutcome all = run({"oracle", "-", "--mode", "all"}, "a b\nb c\n");
    EXPECT_TRUE(contains(all.payload, "\n\n# format: v1\n"));

    CommandOutcome none = run({"oracle", fixture_path("k2.txt"), "--mode", "count"});
    EXPECT_EQ(none.exit_code, 1);
    EXPECT_EQ(none.payload, "0\n");

    EXPECT_EQ(run({"oracle", fixture_path("fig7_forest.txt")}).exit_code, 1);
    EXPECT_EQ(run({"oracle", fixture_path("p3.txt"), "--mode", "some"}).exit_code, 2);
}

TEST(Cli, OracleBoundFromEnvironment) {
    ::setenv("ANTIMAGIC_ORACLE_BOUND", "1", 1);
    CommandOutcome r = run({"oracle", fixture_path("p3.txt")});
    ::unsetenv("ANTIMAGIC_ORACLE_BOUND");
    EXPECT_EQ(r.exit_code, 1);
    EXPECT_TRUE(contains(r.message, "bound"));
    EXPECT_EQ(run({"oracle", fixture_path("p3.txt"), "--bound", "1"}).exit_code, 1);
}

TEST(Cli, ExportDot) {
    CommandOutcome plain = run({"export-dot", fixture_path("p3.txt")});
    ASSERT_EQ(plain.exit_code, 0);
    EXPECT_TRUE(contains(plain.payload, "graph forest {"));
    EXPECT_FALSE(contains(plain.payload, "xlabel"));
    CommandOutcome labeled = run({"export-dot", fixture_path("fig9_forest.txt")});
    EXPECT_TRUE(contains(labeled.payload, "[xlabel=\"13\"]"));
}

TEST(Cli, Help) {
    CommandOutcome r = run({"--help"});
    EXPECT_EQ(r.exit_code, 0);
    EXPECT_TRUE(contains(r.payload, "partition"));
}
