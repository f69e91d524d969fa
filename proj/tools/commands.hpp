#pragma once

// Subcommands of the `antimagic` tool. Kept in a header so the test suite
// can drive them in-process.

#include "antimagic/antimagic.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace antimagic::cli {

enum ExitCode : int { Success = 0, DomainError = 1, UsageError = 2 };

struct CommandOutcome {
    int exit_code = Success;
    std::string message; // for stderr
    std::string payload; // for stdout
};

namespace detail {

inline bool is_domain_error(ErrorCode code) {
    switch (code) {
    case ErrorCode::IneligibleForest:
    case ErrorCode::UnsatisfiableConstraint:
    case ErrorCode::RepairExhausted:
    case ErrorCode::InfeasibleSpec:
    case ErrorCode::TooLarge:
        return true;
    default:
        return false;
    }
}

inline std::string read_input(const std::string& path, std::istream& in) {
    if (path == "-") return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
    std::ifstream file(path, std::ios::binary);
    if (!file) throw Error(ErrorCode::SyntaxError, "cannot open '" + path + "'");
    return {std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>()};
}

inline void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorCode::SyntaxError, "cannot write '" + path + "'");
    out << text;
}

inline std::string join(const std::vector<int>& xs) {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? " " : "") + std::to_string(xs[i]);
    return out;
}

inline std::string class_line(const std::vector<int>& elements, int modulus) {
    std::vector<int> sorted = elements;
    std::sort(sorted.begin(), sorted.end());
    long long sum = 0;
    for (int x : sorted) sum += x;
    return "sum=" + std::to_string(sum) + " mod=" + std::to_string(modulus) + ": " + join(sorted) + "\n";
}

/// "kind:index,..." with 1-based class indices; kinds are exact-b, c-set,
/// b-set and carrier.
inline std::vector<ClassConstraint> parse_constraints(const std::string& spec) {
    std::vector<ClassConstraint> out;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        auto colon = item.find(':');
        if (colon == std::string::npos) throw CLI::ValidationError("--constraints", "expected kind:index, got '" + item + "'");
        const std::string kind = item.substr(0, colon);
        int index = 0;
        try {
            index = std::stoi(item.substr(colon + 1));
        } catch (const std::exception&) {
            throw CLI::ValidationError("--constraints", "bad class index in '" + item + "'");
        }
        if (index < 1) throw CLI::ValidationError("--constraints", "class indices start at 1");
        ConstraintKind k;
        if (kind == "exact-b") k = ConstraintKind::ExactBSet;
        else if (kind == "c-set") k = ConstraintKind::ContainsCSet;
        else if (kind == "b-set") k = ConstraintKind::ContainsBSet;
        else if (kind == "carrier") k = ConstraintKind::CarriesK;
        else throw CLI::ValidationError("--constraints", "unknown constraint kind '" + kind + "'");
        out.push_back({k, static_cast<std::size_t>(index - 1)});
    }
    return out;
}

inline std::string explain(const LabelingPlan& p) {
    std::string out = "# case: " + std::string(to_string(p.case_tag)) + "\n# roots:";
    for (const auto& r : p.roots) out += " " + r;
    out += "\n# modulus: " + std::to_string(p.modulus) + "\n";
    if (p.degree2_vertex) out += "# degree-2: " + *p.degree2_vertex + "\n";
    for (const auto& r : p.reservations) out += "# reserve: " + std::string(to_string(r.kind)) + " " + r.vertex + "\n";
    for (const auto& e : p.special_edges) out += "# edge: " + e.role + " " + e.u + " " + e.v + "\n";
    return out;
}

inline std::size_t oracle_bound_from_env() {
    if (const char* env = std::getenv("ANTIMAGIC_ORACLE_BOUND")) {
        try {
            return static_cast<std::size_t>(std::stoul(env));
        } catch (const std::exception&) {
        }
    }
    return default_oracle_bound;
}

} // namespace detail

/// Runs one subcommand. `args` excludes the program name.
inline CommandOutcome run(std::vector<std::string> args, std::istream& in) {
    CLI::App app{"Antimagic labelings of forests via zero-sum partitions", "antimagic"};
    app.require_subcommand(1);
    CommandOutcome outcome;
    std::ostringstream out;

    // partition
    auto* partition = app.add_subcommand("partition", "Zero-sum partitions of [1,k]");
    std::optional<int> opt_s, opt_l, opt_k;
    std::vector<int> sizes;
    std::string constraint_spec;
    auto* o_s = partition->add_option("--s", opt_s, "Number of B-sets")->check(CLI::NonNegativeNumber);
    auto* o_l = partition->add_option("--l", opt_l, "Number of A-sets and of C-sets")->check(CLI::NonNegativeNumber);
    auto* o_k = partition->add_option("--k", opt_k, "Upper end of the range [1,k]");
    auto* o_sizes = partition->add_option("--sizes", sizes, "Class sizes, comma separated")->delimiter(',');
    auto* o_cons = partition->add_option("--constraints", constraint_spec,
                                         "kind:index list (exact-b, c-set, b-set, carrier; 1-based)");
    o_s->needs(o_l);
    o_l->needs(o_s);
    o_k->needs(o_sizes);
    o_sizes->needs(o_k);
    o_cons->needs(o_k);
    o_s->excludes(o_k);
    o_l->excludes(o_k);

    // label
    auto* label = app.add_subcommand("label", "Construct an antimagic labeling");
    std::string label_input, dot_path;
    bool want_explain = false;
    label->add_option("input", label_input, "Edge-list file, or - for stdin")->required();
    label->add_option("--dot", dot_path, "Also write a DOT drawing to this file");
    label->add_flag("--explain", want_explain, "Report the case, roots and reservations");

    // verify
    auto* verify = app.add_subcommand("verify", "Check a labeled edge list");
    std::string verify_input;
    verify->add_option("input", verify_input, "Labeled edge-list file, or - for stdin")->required();

    // generate
    auto* generate = app.add_subcommand("generate", "Random eligible forest");
    GeneratorSpec gen;
    generate->add_option("--components", gen.components, "Number of component trees")->required();
    generate->add_option("--edges", gen.edges, "Number of edges")->required();
    generate->add_option("--degree2", gen.degree2, "Degree-2 vertices (0 or 1)")->check(CLI::Range(0, 1));
    generate->add_option("--seed", gen.seed, "Random seed");

    // oracle
    auto* oracle = app.add_subcommand("oracle", "Exhaustive search for antimagic labelings");
    std::string oracle_input, mode_name = "first";
    std::size_t bound = detail::oracle_bound_from_env();
    oracle->add_option("input", oracle_input, "Edge-list file, or - for stdin")->required();
    oracle->add_option("--mode", mode_name, "first, count or all")->check(CLI::IsMember({"first", "count", "all"}));
    oracle->add_option("--bound", bound, "Largest edge count to enumerate");

    // export-dot
    auto* export_dot = app.add_subcommand("export-dot", "Write a (labeled) edge list as DOT");
    std::string export_input, export_output;
    export_dot->add_option("input", export_input, "Edge-list file, or - for stdin")->required();
    export_dot->add_option("-o,--output", export_output, "Output file (default stdout)");

    try {
        std::reverse(args.begin(), args.end());
        app.parse(args);

        if (partition->parsed()) {
            if (opt_s) {
                const LemmaPartition p = lemma_partition(*opt_s, *opt_l);
                out << format_header << '\n';
                for (const auto& set : p.ordered())
                    out << static_cast<char>(set.kind) << set.index << ' ' << detail::class_line(set.elements, p.k + 1);
            } else if (opt_k) {
                const auto constraints = detail::parse_constraints(constraint_spec);
                const ZeroSumPartition p = corollary_partition(*opt_k, sizes, constraints);
                out << format_header << '\n';
                for (const auto& cls : p.classes) out << detail::class_line(cls.elements, p.modulus);
            } else {
                throw CLI::ValidationError("partition", "give either --s/--l or --k/--sizes");
            }
        } else if (label->parsed()) {
            const Forest f = parse_forest(detail::read_input(label_input, in));
            const LabelingResult r = label_forest_with_plan(f);
            std::string doc = serialize_labeling(r.labeling);
            if (want_explain) doc.insert(doc.find('\n') + 1, detail::explain(r.plan));
            if (!dot_path.empty()) detail::write_file(dot_path, to_dot(r.labeling));
            out << doc;
        } else if (verify->parsed()) {
            const EdgeLabeling lab = parse_document(detail::read_input(verify_input, in)).labeling();
            const VertexSumReport report = vertex_sums(lab);
            const Forest& f = lab.graph;
            out << format_header << '\n';
            for (Vertex v = 0; v < f.vertex_count(); ++v) out << f.id(v) << ' ' << report.sums[v] << '\n';
            for (auto [a, b] : report.collisions)
                out << "collision " << f.id(a) << ' ' << f.id(b) << ' ' << report.sums[a] << '\n';
            out << "verdict: " << (report.is_antimagic ? "antimagic" : "not antimagic") << '\n';
            if (!report.is_antimagic) {
                outcome.exit_code = DomainError;
                outcome.message = std::to_string(report.collisions.size()) + " collision(s)";
            }
        } else if (generate->parsed()) {
            out << serialize_forest(generate_forest(gen));
        } else if (oracle->parsed()) {
            const Forest f = parse_forest(detail::read_input(oracle_input, in));
            const OracleMode mode = mode_name == "count" ? OracleMode::Count
                                    : mode_name == "all" ? OracleMode::All
                                                         : OracleMode::First;
            const OracleResult r = oracle_search(f, mode, bound);
            if (mode == OracleMode::Count) {
                out << r.count << '\n';
            } else {
                for (std::size_t i = 0; i < r.witnesses.size(); ++i) {
                    if (i) out << '\n';
                    out << serialize_labeling(r.witness(f, i));
                }
            }
            if (r.count == 0) {
                outcome.exit_code = DomainError;
                outcome.message = "no antimagic labeling exists";
            }
        } else if (export_dot->parsed()) {
            const ForestDocument doc = parse_document(detail::read_input(export_input, in));
            const std::string dot = doc.fully_labeled() && !doc.labels.empty() ? to_dot(doc.labeling()) : to_dot(doc.forest);
            if (export_output.empty()) out << dot;
            else detail::write_file(export_output, dot);
        }
    } catch (const CLI::CallForHelp&) {
        return {Success, "", app.help()};
    } catch (const CLI::CallForAllHelp&) {
        return {Success, "", app.help("", CLI::AppFormatMode::All)};
    } catch (const CLI::ParseError& e) {
        return {UsageError, e.what(), ""};
    } catch (const Error& e) {
        return {detail::is_domain_error(e.code()) ? DomainError : UsageError, e.what(), ""};
    }
    outcome.payload = out.str();
    return outcome;
}

} // namespace antimagic::cli
