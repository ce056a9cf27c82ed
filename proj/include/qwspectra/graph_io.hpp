#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "graph.hpp"

namespace qwspectra {

// Edge-list format: a header line "n m", then m lines "u v" with 0-based
// endpoints. Blank lines and lines starting with '#' are skipped.
inline Graph parse_edge_list(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    auto next_line = [&](std::string& out) {
        while (std::getline(in, line)) {
            auto pos = line.find_first_not_of(" \t\r");
            if (pos == std::string::npos || line[pos] == '#')
                continue;
            out = line;
            return true;
        }
        return false;
    };
    std::string header;
    if (!next_line(header))
        throw TruncatedError("edge list: missing header line");
    long n = -1, m = -1;
    {
        std::istringstream hs(header);
        std::string extra;
        if (!(hs >> n >> m) || (hs >> extra))
            throw ParseError("edge list: bad header '" + header + "'");
    }
    if (n < 0 || m < 0)
        throw ParseError("edge list: negative counts in header");
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<std::size_t>(m));
    std::string row;
    for (long k = 0; k < m; ++k) {
        if (!next_line(row))
            throw TruncatedError("edge list: expected " + std::to_string(m) +
                                 " edges, got " + std::to_string(k));
        std::istringstream rs(row);
        long u = 0, v = 0;
        std::string extra;
        if (!(rs >> u >> v) || (rs >> extra))
            throw ParseError("edge list: bad edge line '" + row + "'");
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw VertexOutOfRangeError("edge list: endpoint out of range in '" + row + "'");
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    if (next_line(row))
        throw ParseError("edge list: trailing content '" + row + "'");
    return Graph(static_cast<int>(n), std::move(edges));
}

namespace detail {

inline int g6_byte(unsigned char c, std::string_view s) {
    if (c < 63 || c > 126)
        throw ParseError("graph6: byte out of range in '" + std::string(s) + "'");
    return c - 63;
}

} // namespace detail

// One graph in graph6 format (simple graphs; upper triangle packed 6 bits
// per byte, columns j = 1..n-1, rows i < j).
inline Graph parse_graph6(std::string_view s) {
    constexpr std::string_view kHeader = ">>graph6<<";
    if (s.substr(0, kHeader.size()) == kHeader)
        s.remove_prefix(kHeader.size());
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r'))
        s.remove_suffix(1);
    if (s.empty())
        throw TruncatedError("graph6: empty input");
    std::size_t pos = 0;
    long n = 0;
    int b0 = detail::g6_byte(static_cast<unsigned char>(s[pos]), s);
    if (b0 < 63) {
        n = b0;
        pos = 1;
    } else {
        if (s.size() < 4)
            throw TruncatedError("graph6: truncated vertex count");
        if (static_cast<unsigned char>(s[1]) == 126)
            throw ParseError("graph6: vertex counts beyond 258047 unsupported");
        n = 0;
        for (int k = 1; k <= 3; ++k)
            n = (n << 6) | detail::g6_byte(static_cast<unsigned char>(s[k]), s);
        pos = 4;
    }
    long bits = n * (n - 1) / 2;
    std::size_t need = static_cast<std::size_t>((bits + 5) / 6);
    if (s.size() - pos < need)
        throw TruncatedError("graph6: expected " + std::to_string(need) +
                             " data bytes, got " + std::to_string(s.size() - pos));
    if (s.size() - pos > need)
        throw ParseError("graph6: trailing bytes");
    std::vector<std::pair<int, int>> edges;
    long k = 0;
    for (long j = 1; j < n; ++j)
        for (long i = 0; i < j; ++i, ++k) {
            int byte = detail::g6_byte(static_cast<unsigned char>(s[pos + k / 6]), s);
            if ((byte >> (5 - k % 6)) & 1)
                edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
        }
    return Graph(static_cast<int>(n), std::move(edges));
}

// Inverse of parse_graph6 for n <= 62; used by tooling and round-trip tests.
inline std::string encode_graph6(const Graph& g) {
    if (!g.is_simple())
        throw PreconditionError("graph6 encodes simple graphs only");
    long n = g.vertex_count();
    if (n > 62)
        throw PreconditionError("graph6 encoder supports n <= 62");
    std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
    for (auto [u, v] : g.edges())
        adj[u][v] = adj[v][u] = 1;
    std::string out;
    out.push_back(static_cast<char>(63 + n));
    int acc = 0, nbits = 0;
    for (long j = 1; j < n; ++j)
        for (long i = 0; i < j; ++i) {
            acc = (acc << 1) | adj[i][j];
            if (++nbits == 6) {
                out.push_back(static_cast<char>(63 + acc));
                acc = 0;
                nbits = 0;
            }
        }
    if (nbits)
        out.push_back(static_cast<char>(63 + (acc << (6 - nbits))));
    return out;
}

inline std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// Every line of a .g6 file is one graph.
inline std::vector<Graph> parse_graph6_file(std::string_view text) {
    std::vector<Graph> out;
    std::size_t start = 0;
    while (start < text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos)
            end = text.size();
        std::string_view line = text.substr(start, end - start);
        while (!line.empty() && line.back() == '\r')
            line.remove_suffix(1);
        if (!line.empty())
            out.push_back(parse_graph6(line));
        start = end + 1;
    }
    return out;
}

// Picks the parser from the file name: .g6 is graph6 (first graph of the
// file), anything else is an edge list.
inline Graph load_graph(const std::string& path) {
    std::string text = read_text_file(path);
    if (path.size() >= 3 && path.compare(path.size() - 3, 3, ".g6") == 0) {
        auto graphs = parse_graph6_file(text);
        if (graphs.empty())
            throw TruncatedError("graph6: no graphs in '" + path + "'");
        return graphs.front();
    }
    return parse_edge_list(text);
}

} // namespace qwspectra
