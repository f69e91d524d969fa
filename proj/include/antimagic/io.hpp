#pragma once

// Edge-list documents and DOT export.
//
//   # comment
//   u v          edge
//   u v 7        labeled edge
//   u            isolated vertex

#include "antimagic/error.hpp"
#include "antimagic/forest.hpp"
#include "antimagic/labeling.hpp"

#include <charconv>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace antimagic {

inline constexpr std::string_view format_header = "# format: v1";

struct ForestDocument {
    Forest forest;
    std::vector<std::optional<int>> labels; // by edge index (input order)

    [[nodiscard]] bool fully_labeled() const {
        for (const auto& l : labels)
            if (!l) return false;
        return true;
    }

    /// Throws NotABijection unless every edge carries a label.
    [[nodiscard]] EdgeLabeling labeling() const {
        EdgeLabeling out{forest, {}};
        out.labels.reserve(labels.size());
        for (EdgeIndex e = 0; e < labels.size(); ++e) {
            if (!labels[e]) {
                const Edge& ed = forest.edge(e);
                throw Error(ErrorCode::NotABijection,
                            "edge '" + forest.id(ed.u) + "' '" + forest.id(ed.v) + "' has no label");
            }
            out.labels.push_back(*labels[e]);
        }
        return out;
    }
};

namespace detail {

inline std::vector<std::string_view> split_tokens(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
        if (j > i) out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

} // namespace detail

inline ForestDocument parse_document(std::string_view text) {
    std::vector<std::string> isolated;
    std::vector<std::pair<std::string, std::string>> edges;
    std::vector<std::optional<int>> labels;

    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        auto tok = detail::split_tokens(line);
        if (tok.empty()) continue;
        if (tok.size() > 3)
            throw Error(ErrorCode::SyntaxError, "line " + std::to_string(line_no) + ": expected 'u v [label]'");
        if (tok.size() == 1) {
            isolated.emplace_back(tok[0]);
            continue;
        }
        edges.emplace_back(std::string(tok[0]), std::string(tok[1]));
        if (tok.size() == 3) {
            int value = 0;
            auto [p, ec] = std::from_chars(tok[2].data(), tok[2].data() + tok[2].size(), value);
            if (ec != std::errc{} || p != tok[2].data() + tok[2].size() || value < 1)
                throw Error(ErrorCode::SyntaxError, "line " + std::to_string(line_no) + ": label '" +
                                                        std::string(tok[2]) + "' is not a positive integer");
            labels.emplace_back(value);
        } else {
            labels.emplace_back(std::nullopt);
        }
    }
    return ForestDocument{Forest::from_ids(isolated, edges), std::move(labels)};
}

inline Forest parse_forest(std::string_view text) { return parse_document(text).forest; }

namespace detail {

inline std::string serialize(const Forest& f, const std::vector<int>* labels) {
    std::ostringstream out;
    out << format_header << '\n';
    for (Vertex v = 0; v < f.vertex_count(); ++v)
        if (f.degree(v) == 0) out << f.id(v) << '\n';
    for (EdgeIndex e : f.canonical_edge_order()) {
        const Edge& ed = f.edge(e);
        out << f.id(ed.u) << ' ' << f.id(ed.v);
        if (labels) out << ' ' << (*labels)[e];
        out << '\n';
    }
    return out.str();
}

} // namespace detail

/// Canonical document: header, isolated vertices, then edges in
/// lexicographic order.
inline std::string serialize_forest(const Forest& f) { return detail::serialize(f, nullptr); }

inline std::string serialize_labeling(const EdgeLabeling& lab) { return detail::serialize(lab.graph, &lab.labels); }

namespace detail {

inline std::string dot_quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out + '"';
}

inline std::string dot(const Forest& f, const std::vector<int>* labels) {
    std::vector<std::int64_t> sums(f.vertex_count(), 0);
    if (labels) {
        for (EdgeIndex e = 0; e < f.edge_count(); ++e) {
            sums[f.edge(e).u] += (*labels)[e];
            sums[f.edge(e).v] += (*labels)[e];
        }
    }
    std::ostringstream out;
    out << "graph forest {\n";
    for (Vertex v = 0; v < f.vertex_count(); ++v) {
        out << "  " << dot_quote(f.id(v));
        if (labels) out << " [xlabel=\"" << sums[v] << "\"]";
        out << ";\n";
    }
    for (EdgeIndex e : f.canonical_edge_order()) {
        const Edge& ed = f.edge(e);
        out << "  " << dot_quote(f.id(ed.u)) << " -- " << dot_quote(f.id(ed.v));
        if (labels) out << " [label=\"" << (*labels)[e] << "\"]";
        out << ";\n";
    }
    out << "}\n";
    return out.str();
}

} // namespace detail

inline std::string to_dot(const Forest& f) { return detail::dot(f, nullptr); }

/// Vertices carry their vertex-sum as `xlabel`.
inline std::string to_dot(const EdgeLabeling& lab) { return detail::dot(lab.graph, &lab.labels); }

} // namespace antimagic
