#pragma once

#include <algorithm>
#include <optional>
#include <queue>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "matrix.hpp"

namespace qwspectra {

// Finite undirected multigraph (loops and parallel edges allowed) with a
// fixed arc numbering. Edge k yields arc k (first -> second) and arc k + m
// (second -> first); inverse() swaps the two. A loop still contributes two
// distinct, mutually inverse arcs, so the involution P stays fixed-point
// free and every vertex gains degree 2 per loop.
class Graph {
public:
    Graph(int n, std::vector<std::pair<int, int>> edges)
        : n_(n), edges_(std::move(edges)) {
        if (n < 0)
            throw Error("negative vertex count");
        out_.resize(n_);
        for (std::size_t k = 0; k < edges_.size(); ++k) {
            auto [u, v] = edges_[k];
            check_vertex(u);
            check_vertex(v);
            out_[u].push_back(static_cast<int>(k));
            out_[v].push_back(static_cast<int>(k + edges_.size()));
        }
        for (auto& arcs : out_)
            std::sort(arcs.begin(), arcs.end());
    }

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    int arc_count() const { return 2 * edge_count(); }

    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    int origin(int a) const {
        check_arc(a);
        int m = edge_count();
        return a < m ? edges_[a].first : edges_[a - m].second;
    }

    int terminus(int a) const {
        check_arc(a);
        int m = edge_count();
        return a < m ? edges_[a].second : edges_[a - m].first;
    }

    int inverse(int a) const {
        check_arc(a);
        int m = edge_count();
        return a < m ? a + m : a - m;
    }

    const std::vector<int>& out_arcs(int v) const {
        check_vertex(v);
        return out_[v];
    }

    // Loops count twice, as usual for multigraphs.
    int degree(int v) const { return static_cast<int>(out_arcs(v).size()); }

    int min_degree() const {
        int d = n_ == 0 ? 0 : degree(0);
        for (int v = 1; v < n_; ++v)
            d = std::min(d, degree(v));
        return d;
    }

    std::optional<int> regular_degree() const {
        if (n_ == 0)
            return std::nullopt;
        int k = degree(0);
        for (int v = 1; v < n_; ++v)
            if (degree(v) != k)
                return std::nullopt;
        return k;
    }

    bool is_loopless() const {
        for (auto [u, v] : edges_)
            if (u == v)
                return false;
        return true;
    }

    bool is_simple() const {
        if (!is_loopless())
            return false;
        std::vector<std::pair<int, int>> seen;
        seen.reserve(edges_.size());
        for (auto [u, v] : edges_)
            seen.emplace_back(std::min(u, v), std::max(u, v));
        std::sort(seen.begin(), seen.end());
        return std::adjacent_find(seen.begin(), seen.end()) == seen.end();
    }

    bool is_connected() const {
        if (n_ <= 1)
            return true;
        std::vector<char> vis(n_, 0);
        std::queue<int> q;
        q.push(0);
        vis[0] = 1;
        int reached = 1;
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int a : out_[u]) {
                int w = terminus(a);
                if (!vis[w]) {
                    vis[w] = 1;
                    ++reached;
                    q.push(w);
                }
            }
        }
        return reached == n_;
    }

    // (i, j) entry counts arcs from i to j; a loop contributes 2 on the
    // diagonal. Coincides with the 0/1 adjacency matrix on simple graphs.
    ExactMatrix adjacency() const {
        ExactMatrix a(n_, n_);
        for (int arc = 0; arc < arc_count(); ++arc)
            a(origin(arc), terminus(arc)) += GaussianRational(1);
        return a;
    }

private:
    void check_vertex(int v) const {
        if (v < 0 || v >= n_)
            throw VertexOutOfRangeError("vertex " + std::to_string(v) +
                                        " out of range [0," + std::to_string(n_) + ")");
    }
    void check_arc(int a) const {
        if (a < 0 || a >= arc_count())
            throw VertexOutOfRangeError("arc " + std::to_string(a) +
                                        " out of range [0," + std::to_string(arc_count()) + ")");
    }

    int n_;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> out_;
};

// Length of a shortest cycle: 1 with a loop present, 2 with a parallel
// pair, otherwise BFS from every root taking non-tree edges as cycle
// closures. Empty optional on forests.
inline std::optional<int> girth(const Graph& g) {
    for (auto [u, v] : g.edges())
        if (u == v)
            return 1;
    {
        std::vector<std::pair<int, int>> seen;
        for (auto [u, v] : g.edges())
            seen.emplace_back(std::min(u, v), std::max(u, v));
        std::sort(seen.begin(), seen.end());
        if (std::adjacent_find(seen.begin(), seen.end()) != seen.end())
            return 2;
    }
    int n = g.vertex_count();
    int m = g.edge_count();
    int best = -1;
    std::vector<int> dist(n), parent_edge(n);
    for (int r = 0; r < n; ++r) {
        std::fill(dist.begin(), dist.end(), -1);
        std::fill(parent_edge.begin(), parent_edge.end(), -1);
        std::queue<int> q;
        dist[r] = 0;
        q.push(r);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int a : g.out_arcs(u)) {
                int w = g.terminus(a);
                if (dist[w] < 0) {
                    dist[w] = dist[u] + 1;
                    parent_edge[w] = a % m;
                    q.push(w);
                }
            }
        }
        for (int e = 0; e < m; ++e) {
            auto [u, v] = g.edges()[e];
            if (dist[u] < 0 || dist[v] < 0)
                continue;
            if (parent_edge[u] == e || parent_edge[v] == e)
                continue;
            int cand = dist[u] + dist[v] + 1;
            if (best < 0 || cand < best)
                best = cand;
        }
    }
    if (best < 0)
        return std::nullopt;
    return best;
}

struct SrgParams {
    int n, k, lambda, mu;
    friend bool operator==(const SrgParams&, const SrgParams&) = default;
};

enum class SrgFailure {
    not_simple,
    not_regular,
    lambda_varies,
    mu_varies,
    degenerate, // complete or edgeless: one of the two parameters is vacuous
};

struct SrgResult {
    std::optional<SrgParams> params;
    std::optional<SrgFailure> failure;
    bool ok() const { return params.has_value(); }
};

inline const char* srg_failure_name(SrgFailure f) {
    switch (f) {
    case SrgFailure::not_simple: return "not-simple";
    case SrgFailure::not_regular: return "not-regular";
    case SrgFailure::lambda_varies: return "lambda-varies";
    case SrgFailure::mu_varies: return "mu-varies";
    case SrgFailure::degenerate: return "degenerate";
    }
    return "?";
}

// Tests whether g is strongly regular; degenerate cases (complete, edgeless)
// are rejected rather than given vacuous parameters.
inline SrgResult srg_params(const Graph& g) {
    if (!g.is_simple())
        return {std::nullopt, SrgFailure::not_simple};
    auto k = g.regular_degree();
    if (!k)
        return {std::nullopt, SrgFailure::not_regular};
    int n = g.vertex_count();
    if (*k == 0 || *k == n - 1)
        return {std::nullopt, SrgFailure::degenerate};
    std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
    for (auto [u, v] : g.edges())
        adj[u][v] = adj[v][u] = 1;
    int lambda = -1, mu = -1;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            int common = 0;
            for (int w = 0; w < n; ++w)
                common += adj[u][w] && adj[v][w];
            if (adj[u][v]) {
                if (lambda < 0)
                    lambda = common;
                else if (lambda != common)
                    return {std::nullopt, SrgFailure::lambda_varies};
            } else {
                if (mu < 0)
                    mu = common;
                else if (mu != common)
                    return {std::nullopt, SrgFailure::mu_varies};
            }
        }
    return {SrgParams{n, *k, lambda, mu}, std::nullopt};
}

} // namespace qwspectra
