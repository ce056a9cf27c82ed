#pragma once

// Reference computations kept deliberately separate from the library's own
// algorithms: cofactor expansion instead of Faddeev-LeVerrier, exhaustive
// path search instead of BFS girth, and so on. Tests compare the two.

#include <qwspectra/qwspectra.hpp>

#include <optional>
#include <vector>

namespace testsupport {

using namespace qwspectra;

using Poly = Polynomial<GaussianRational>;

namespace oracle_detail {

inline Poly det_cofactor(std::vector<std::vector<Poly>> m) {
    std::size_t n = m.size();
    if (n == 0)
        return Poly::constant(GaussianRational(1));
    if (n == 1)
        return m[0][0];
    Poly acc;
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<std::vector<Poly>> minor;
        for (std::size_t i = 1; i < n; ++i) {
            std::vector<Poly> row;
            for (std::size_t k = 0; k < n; ++k)
                if (k != j)
                    row.push_back(m[i][k]);
            minor.push_back(std::move(row));
        }
        Poly term = m[0][j] * det_cofactor(std::move(minor));
        if (j % 2 == 0)
            acc = acc + term;
        else
            acc = acc - term;
    }
    return acc;
}

} // namespace oracle_detail

// det(xI - A) by Laplace expansion over polynomial entries. Factorial cost;
// keep n small.
inline Poly charpoly_cofactor(const ExactMatrix& a) {
    std::size_t n = a.rows();
    std::vector<std::vector<Poly>> m(n, std::vector<Poly>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            m[i][j] = Poly::constant(GaussianRational(0) - a(i, j));
            if (i == j)
                m[i][j] = m[i][j] + Poly::monomial(GaussianRational(1), 1);
        }
    return oracle_detail::det_cofactor(std::move(m));
}

// Girth by exhaustive enumeration of essential cycles: loops count 1, a pair
// of parallel edges counts 2, and longer cycles visit distinct vertices.
inline std::optional<int> girth_brute(const Graph& g) {
    int n = g.vertex_count();
    int m = g.edge_count();
    std::optional<int> best;
    auto update = [&](int len) {
        if (!best || len < *best)
            best = len;
    };
    for (auto [u, v] : g.edges())
        if (u == v)
            update(1);
    auto norm = [](std::pair<int, int> e) {
        return e.first <= e.second ? e : std::pair<int, int>{e.second, e.first};
    };
    for (int a = 0; a < m; ++a)
        for (int b = a + 1; b < m; ++b) {
            auto ea = norm(g.edges()[static_cast<std::size_t>(a)]);
            auto eb = norm(g.edges()[static_cast<std::size_t>(b)]);
            if (ea.first != ea.second && ea == eb)
                update(2);
        }
    // Simple cycles of length >= 3: grow vertex-distinct paths edge by edge.
    std::vector<bool> used(static_cast<std::size_t>(n), false);
    std::vector<int> path;
    auto dfs = [&](auto&& self, int v) -> void {
        for (int arc : g.out_arcs(v)) {
            int w = g.terminus(arc);
            if (w == path.front() && path.size() >= 3)
                update(static_cast<int>(path.size()));
            if (!used[static_cast<std::size_t>(w)]) {
                used[static_cast<std::size_t>(w)] = true;
                path.push_back(w);
                self(self, w);
                path.pop_back();
                used[static_cast<std::size_t>(w)] = false;
            }
        }
    };
    for (int s = 0; s < n; ++s) {
        used.assign(static_cast<std::size_t>(n), false);
        used[static_cast<std::size_t>(s)] = true;
        path = {s};
        dfs(dfs, s);
    }
    return best;
}

// A^2 = kI + rA + s(J - I - A) over exact integers.
inline bool srg_identity_holds(const Graph& g, const SrgParams& p) {
    ExactMatrix a = g.adjacency();
    ExactMatrix a2 = a * a;
    int n = g.vertex_count();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            GaussianRational want;
            if (i == j)
                want = GaussianRational(p.k);
            else if (!a(static_cast<std::size_t>(i), static_cast<std::size_t>(j)).is_zero())
                want = GaussianRational(p.lambda);
            else
                want = GaussianRational(p.mu);
            if (a2(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) != want)
                return false;
        }
    return true;
}

// Paths e -> ... -> f where step i backtracks exactly when pattern[i] is
// true. pattern.size() steps, so pattern.size() + 1 arcs in the path.
inline long count_paths_pattern(const Graph& g, int e, int f,
                                const std::vector<bool>& pattern) {
    long count = 0;
    auto walk = [&](auto&& self, int arc, std::size_t step) -> void {
        if (step == pattern.size()) {
            if (arc == f)
                ++count;
            return;
        }
        for (int next : g.out_arcs(g.terminus(arc)))
            if ((next == g.inverse(arc)) == pattern[step])
                self(self, next, step + 1);
    };
    walk(walk, e, 0);
    return count;
}

// Spectrum of T_p through the measure symmetrization
// diag(sqrt(mu)) T_p diag(1/sqrt(mu)), which is symmetric exactly when p is
// reversible with measure mu.
inline std::vector<double> tp_spectrum_via_measure(const Graph& g,
                                                   const TransitionProbability& p,
                                                   const std::vector<BigRational>& mu) {
    int n = g.vertex_count();
    ExactMatrix t = transition_T(g, p);
    FloatMatrix w(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            double scale = std::sqrt(to_double(mu[static_cast<std::size_t>(i)]) /
                                     to_double(mu[static_cast<std::size_t>(j)]));
            w(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) =
                scale * to_double(t(static_cast<std::size_t>(i),
                                    static_cast<std::size_t>(j)).real());
        }
    return symmetric_eigenvalues(w, 1e-9);
}

} // namespace testsupport
