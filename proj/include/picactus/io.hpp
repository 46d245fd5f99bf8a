#pragma once

#include <cstdint>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "picactus/graph.hpp"
#include "picactus/indices.hpp"
#include "picactus/verify.hpp"

namespace picactus {

enum class GraphFormat { edge_list, graph6 };

namespace detail {

inline input_error line_error(int line, const std::string& what) {
    return input_error("line " + std::to_string(line) + ": " + what);
}

// Splits one text line into exactly `count` integers; rejects extra tokens.
inline bool parse_ints(const std::string& text, int count, std::int64_t* out) {
    std::istringstream iss(text);
    for (int i = 0; i < count; ++i)
        if (!(iss >> out[i]))
            return false;
    char extra;
    return !(iss >> extra);
}

inline bool blank_line(const std::string& text) {
    return text.find_first_not_of(" \t\r") == std::string::npos;
}

}  // namespace detail

/// Reads a strict edge-list document: an "n m" header line, then exactly m
/// lines "u v" with 0 <= u,v < n. Junk tokens, bad ranges, self-loops,
/// duplicates, and trailing content all fail with a 1-based line number.
inline Graph read_edge_list(std::istream& in) {
    std::string text;
    int line_no = 1;
    if (!std::getline(in, text))
        throw detail::line_error(1, "missing \"n m\" header");
    std::int64_t header[2];
    if (!detail::parse_ints(text, 2, header))
        throw detail::line_error(1, "expected header \"n m\"");
    auto [n, m] = std::pair{header[0], header[1]};
    if (n < 1 || n > std::numeric_limits<int>::max())
        throw detail::line_error(1, "vertex count out of range");
    if (m < 0 || m > n * (n - 1) / 2)
        throw detail::line_error(1, "edge count out of range");

    std::vector<Edge> edges;
    std::set<Edge> seen;
    for (std::int64_t i = 0; i < m; ++i) {
        ++line_no;
        if (!std::getline(in, text))
            throw detail::line_error(line_no, "expected " + std::to_string(m) + " edge lines, got " +
                                                  std::to_string(i));
        std::int64_t uv[2];
        if (!detail::parse_ints(text, 2, uv))
            throw detail::line_error(line_no, "expected edge \"u v\"");
        if (uv[0] < 0 || uv[0] >= n || uv[1] < 0 || uv[1] >= n)
            throw detail::line_error(line_no, "vertex out of range");
        if (uv[0] == uv[1])
            throw detail::line_error(line_no, "self-loop");
        Edge e = make_edge(static_cast<Vertex>(uv[0]), static_cast<Vertex>(uv[1]));
        if (!seen.insert(e).second)
            throw detail::line_error(line_no, "duplicate edge");
        edges.push_back(e);
    }
    while (std::getline(in, text)) {
        ++line_no;
        if (!detail::blank_line(text))
            throw detail::line_error(line_no, "trailing content after edge list");
    }
    return Graph::from_edges(static_cast<int>(n), edges);
}

inline void write_edge_list(std::ostream& out, const Graph& g) {
    out << g.order() << ' ' << g.size() << '\n';
    for (Edge e : g.edges())
        out << e.first << ' ' << e.second << '\n';
}

inline std::string to_edge_list(const Graph& g) {
    std::ostringstream out;
    write_edge_list(out, g);
    return out.str();
}

inline Graph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    return read_edge_list(in);
}

/// Decodes one graph6 line (optionally ">>graph6<<"-prefixed): N(n) in the
/// short, 4-byte, or 8-byte form, then ceil(n(n-1)/2 / 6) data bytes holding
/// the upper triangle column-major, 6 bits per byte offset by 63, MSB first,
/// zero-padded. Every byte is range-checked and padding must be zero.
inline Graph read_graph6(std::string_view line) {
    constexpr std::string_view prefix = ">>graph6<<";
    if (line.substr(0, prefix.size()) == prefix)
        line.remove_prefix(prefix.size());
    while (!line.empty() && (line.back() == '\n' || line.back() == '\r'))
        line.remove_suffix(1);
    if (line.empty())
        throw input_error("graph6: empty line");

    std::size_t pos = 0;
    auto take = [&]() -> std::int64_t {
        if (pos >= line.size())
            throw input_error("graph6: truncated");
        unsigned char b = static_cast<unsigned char>(line[pos++]);
        if (b < 63 || b > 126)
            throw input_error("graph6: byte out of range");
        return b - 63;
    };

    std::int64_t n = take();
    if (n == 63) {
        std::int64_t next = take();
        if (next == 63) {
            n = 0;
            for (int i = 0; i < 6; ++i)
                n = n << 6 | take();
        } else {
            n = next << 12 | take() << 6 | take();
        }
    }
    if (n < 1)
        throw input_error("graph6: graph must have at least one vertex");
    if (n > 10'000'000)
        throw input_error("graph6: order too large");
    std::int64_t bits = n * (n - 1) / 2;
    if (line.size() - pos != static_cast<std::size_t>((bits + 5) / 6))
        throw input_error("graph6: wrong data length");

    std::vector<Edge> edges;
    std::int64_t word = 0;
    int avail = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            if (avail == 0) {
                word = take();
                avail = 6;
            }
            --avail;
            if (word >> avail & 1)
                edges.push_back({i, j});
        }
    if (avail > 0 && (word & ((1 << avail) - 1)) != 0)
        throw input_error("graph6: nonzero padding");
    return Graph::from_edges(static_cast<int>(n), edges);
}

/// Reads one graph in the given format. For graph6 the stream must hold a
/// single non-blank line; for edge lists the whole stream is the document.
inline Graph read_graph(std::istream& in, GraphFormat format) {
    if (format == GraphFormat::edge_list)
        return read_edge_list(in);
    std::string text, found;
    int line_no = 0, found_at = 0;
    while (std::getline(in, text)) {
        ++line_no;
        if (detail::blank_line(text))
            continue;
        if (!found.empty())
            throw detail::line_error(line_no, "more than one graph6 line");
        found = text;
        found_at = line_no;
    }
    if (found.empty())
        throw input_error("graph6: empty input");
    try {
        return read_graph6(found);
    } catch (const input_error& e) {
        throw detail::line_error(found_at, e.what());
    }
}

inline Graph read_graph_file(const std::string& path, GraphFormat format) {
    std::ifstream in(path);
    if (!in)
        throw input_error("cannot open " + path);
    return read_graph(in, format);
}

// ---- report documents ----
// Top-level documents carry schema_version; nested records are plain objects.
// The CSV forms hold the same values field-for-field, with list cells joined
// by ';' and quoted per RFC 4180 when needed.

inline nlohmann::json to_json(const IndexReport& r) {
    return {{"schema_version", 1}, {"type", "index_report"},     {"order", r.order},
            {"size", r.size},      {"vertex_pi", r.vertex_pi},   {"edge_pi", r.edge_pi},
            {"wiener", r.wiener},  {"szeged", r.szeged}};
}

inline nlohmann::json to_json(const ExtremalRecord& r) {
    nlohmann::json j{{"n", r.n},
                     {"k", r.k},
                     {"bound_max", r.bound_max},
                     {"bound_min", r.bound_min},
                     {"observed_max", nullptr},
                     {"observed_min", nullptr},
                     {"max_attained", r.max_attained},
                     {"min_attained", r.min_attained},
                     {"characterization_ok", r.characterization_ok},
                     {"max_achievers", r.max_achievers},
                     {"min_achievers", r.min_achievers},
                     {"excluded_max", r.excluded_max},
                     {"excluded_min", r.excluded_min},
                     {"violations", r.violations}};
    if (r.observed_max)
        j["observed_max"] = *r.observed_max;
    if (r.observed_min)
        j["observed_min"] = *r.observed_min;
    return j;
}

inline nlohmann::json to_json(const LemmaReport& r) {
    auto violations = nlohmann::json::array();
    for (const auto& v : r.violations)
        violations.push_back({{"certificate", v.certificate}, {"detail", v.detail}});
    return {{"lemma", r.lemma}, {"instances", r.instances}, {"violations", violations}};
}

inline nlohmann::json verification_to_json(const std::vector<ExtremalRecord>& records,
                                           const std::vector<LemmaReport>& lemmas) {
    auto recs = nlohmann::json::array();
    for (const auto& r : records)
        recs.push_back(to_json(r));
    auto lems = nlohmann::json::array();
    for (const auto& l : lemmas)
        lems.push_back(to_json(l));
    return {{"schema_version", 1},
            {"type", "verification_report"},
            {"records", recs},
            {"lemmas", lems}};
}

namespace detail {

inline std::string csv_escape(const std::string& field) {
    if (field.find_first_of(",\"\n") == std::string::npos)
        return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"')
            out += '"';
        out += c;
    }
    return out += '"';
}

inline std::string join(const std::vector<std::string>& parts, char sep) {
    std::string out;
    for (const auto& p : parts) {
        if (!out.empty())
            out += sep;
        out += p;
    }
    return out;
}

}  // namespace detail

inline std::string to_csv(const IndexReport& r) {
    std::ostringstream out;
    out << "order,size,vertex_pi,edge_pi,wiener,szeged\n"
        << r.order << ',' << r.size << ',' << r.vertex_pi << ',' << r.edge_pi << ',' << r.wiener
        << ',' << r.szeged << '\n';
    return out.str();
}

inline std::string records_to_csv(const std::vector<ExtremalRecord>& records) {
    std::ostringstream out;
    out << "n,k,bound_max,bound_min,observed_max,observed_min,max_attained,min_attained,"
           "characterization_ok,max_achievers,min_achievers,excluded_max,excluded_min,violations\n";
    for (const auto& r : records) {
        out << r.n << ',' << r.k << ',' << r.bound_max << ',' << r.bound_min << ',';
        if (r.observed_max)
            out << *r.observed_max;
        out << ',';
        if (r.observed_min)
            out << *r.observed_min;
        out << ',' << (r.max_attained ? "true" : "false") << ','
            << (r.min_attained ? "true" : "false") << ','
            << (r.characterization_ok ? "true" : "false");
        for (const auto* list : {&r.max_achievers, &r.min_achievers, &r.excluded_max,
                                 &r.excluded_min, &r.violations})
            out << ',' << detail::csv_escape(detail::join(*list, ';'));
        out << '\n';
    }
    return out.str();
}

inline std::string lemmas_to_csv(const std::vector<LemmaReport>& lemmas) {
    std::ostringstream out;
    out << "lemma,instances,violations\n";
    for (const auto& l : lemmas) {
        std::vector<std::string> flat;
        for (const auto& v : l.violations)
            flat.push_back(v.certificate + "=" + v.detail);
        out << l.lemma << ',' << l.instances << ',' << detail::csv_escape(detail::join(flat, ';'))
            << '\n';
    }
    return out.str();
}

inline std::string verification_to_csv(const std::vector<ExtremalRecord>& records,
                                       const std::vector<LemmaReport>& lemmas) {
    return records_to_csv(records) + "\n" + lemmas_to_csv(lemmas);
}

}  // namespace picactus
