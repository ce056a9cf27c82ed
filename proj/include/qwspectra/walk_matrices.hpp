#pragma once

#include <cmath>
#include <optional>
#include <queue>
#include <vector>

#include "graph.hpp"
#include "matrix.hpp"

namespace qwspectra {

// Arc weight assignment w: arcs -> Q(i) \ {0}, indexed by arc number.
class WeightAssignment {
public:
    WeightAssignment(const Graph& g, std::vector<GaussianRational> w) : w_(std::move(w)) {
        if (static_cast<int>(w_.size()) != g.arc_count())
            throw PreconditionError("weight assignment needs one value per arc");
        for (std::size_t a = 0; a < w_.size(); ++a)
            if (w_[a].is_zero())
                throw PreconditionError("weight of arc " + std::to_string(a) + " is zero");
    }

    static WeightAssignment unit(const Graph& g) {
        return WeightAssignment(g, std::vector<GaussianRational>(g.arc_count(), GaussianRational(1)));
    }

    const GaussianRational& at(int arc) const { return w_.at(arc); }
    std::size_t size() const { return w_.size(); }

private:
    std::vector<GaussianRational> w_;
};

// Transition probabilities p: arcs -> (0, 1] with unit out-sum at every
// vertex. Needs minimum degree 1.
class TransitionProbability {
public:
    TransitionProbability(const Graph& g, std::vector<BigRational> p) : p_(std::move(p)) {
        if (static_cast<int>(p_.size()) != g.arc_count())
            throw PreconditionError("probability assignment needs one value per arc");
        for (std::size_t a = 0; a < p_.size(); ++a)
            if (p_[a] <= 0)
                throw PreconditionError("probability of arc " + std::to_string(a) +
                                        " is not positive");
        for (int v = 0; v < g.vertex_count(); ++v) {
            const auto& arcs = g.out_arcs(v);
            if (arcs.empty())
                throw PreconditionError("vertex " + std::to_string(v) +
                                        " has no outgoing arcs");
            BigRational sum(0);
            for (int a : arcs)
                sum += p_[a];
            if (sum != 1)
                throw PreconditionError("probabilities at vertex " + std::to_string(v) +
                                        " sum to " + format_rational(sum));
        }
    }

    // p(e) = 1 / deg(o(e)).
    static TransitionProbability simple_walk(const Graph& g) {
        std::vector<BigRational> p(g.arc_count());
        for (int a = 0; a < g.arc_count(); ++a)
            p[a] = BigRational(1, g.degree(g.origin(a)));
        return TransitionProbability(g, std::move(p));
    }

    const BigRational& at(int arc) const { return p_.at(arc); }
    std::size_t size() const { return p_.size(); }

private:
    std::vector<BigRational> p_;
};

// (S)_{u,v} = sum over arcs e: u -> v of conj(w(e)) w(e^-1).
inline ExactMatrix matrix_S(const Graph& g, const WeightAssignment& w) {
    ExactMatrix s(g.vertex_count(), g.vertex_count());
    for (int a = 0; a < g.arc_count(); ++a)
        s(g.origin(a), g.terminus(a)) += w.at(a).conj() * w.at(g.inverse(a));
    return s;
}

// Diagonal of weighted degrees, (D)_{v,v} = sum over o(e) = v of |w(e)|^2.
inline ExactMatrix matrix_D(const Graph& g, const WeightAssignment& w) {
    ExactMatrix d(g.vertex_count(), g.vertex_count());
    for (int a = 0; a < g.arc_count(); ++a)
        d(g.origin(a), g.origin(a)) += GaussianRational(w.at(a).norm2());
    return d;
}

// (U)_{e,f} = s w(e) conj(w(f^-1)) - [f = e^-1], supported on o(e) = t(f).
inline ExactMatrix matrix_U(const Graph& g, const WeightAssignment& w, const BigRational& s) {
    int arcs = g.arc_count();
    ExactMatrix u(arcs, arcs);
    GaussianRational sg{s};
    for (int e = 0; e < arcs; ++e)
        for (int f = 0; f < arcs; ++f) {
            if (g.origin(e) != g.terminus(f))
                continue;
            GaussianRational val = sg * w.at(e) * w.at(g.inverse(f)).conj();
            if (f == g.inverse(e))
                val -= GaussianRational(1);
            u(e, f) = std::move(val);
        }
    return u;
}

// Grover coin walk: 2/deg(o(e)) off the inverse pair, 2/deg - 1 on it.
inline ExactMatrix grover(const Graph& g) {
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) == 0)
            throw PreconditionError("vertex " + std::to_string(v) +
                                    " is isolated; the Grover matrix needs minimum degree 1");
    int arcs = g.arc_count();
    ExactMatrix u(arcs, arcs);
    for (int e = 0; e < arcs; ++e) {
        BigRational coin(2, g.degree(g.origin(e)));
        for (int f = 0; f < arcs; ++f) {
            if (g.origin(e) != g.terminus(f))
                continue;
            u(e, f) = (f == g.inverse(e)) ? GaussianRational(coin - 1) : GaussianRational(coin);
        }
    }
    return u;
}

// 0/1 indicator of strictly positive entries; input must be real.
inline ExactMatrix positive_support(const ExactMatrix& m) {
    ExactMatrix out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const auto& z = m(i, j);
            if (!z.is_real())
                throw PreconditionError("positive support of a matrix with nonreal entries");
            if (z.real() > 0)
                out(i, j) = GaussianRational(1);
        }
    return out;
}

// Float variant: entries within tol of zero count as zero.
inline ExactMatrix positive_support(const FloatMatrix& m, double tol) {
    ExactMatrix out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const auto& z = m(i, j);
            if (std::abs(z.imag()) > tol)
                throw PreconditionError("positive support of a matrix with nonreal entries");
            if (z.real() > tol)
                out(i, j) = GaussianRational(1);
        }
    return out;
}

// Szegedy walk, exact: 2 sqrt(p(e) p(f^-1)) - [f = e^-1] on t(f) = o(e).
// Throws IrrationalWeightError when some square root leaves Q.
inline ExactMatrix szegedy(const Graph& g, const TransitionProbability& p) {
    int arcs = g.arc_count();
    ExactMatrix u(arcs, arcs);
    for (int e = 0; e < arcs; ++e)
        for (int f = 0; f < arcs; ++f) {
            if (g.origin(e) != g.terminus(f))
                continue;
            auto r = rational_sqrt(p.at(e) * p.at(g.inverse(f)));
            if (!r)
                throw IrrationalWeightError(
                    "szegedy entry sqrt(" + format_rational(p.at(e) * p.at(g.inverse(f))) +
                    ") is irrational; use the float builder");
            GaussianRational val{BigRational(2) * *r};
            if (f == g.inverse(e))
                val -= GaussianRational(1);
            u(e, f) = std::move(val);
        }
    return u;
}

inline FloatMatrix szegedy_float(const Graph& g, const TransitionProbability& p) {
    int arcs = g.arc_count();
    FloatMatrix u(arcs, arcs);
    for (int e = 0; e < arcs; ++e)
        for (int f = 0; f < arcs; ++f) {
            if (g.origin(e) != g.terminus(f))
                continue;
            double val = 2.0 * std::sqrt(to_double(p.at(e)) * to_double(p.at(g.inverse(f))));
            if (f == g.inverse(e))
                val -= 1.0;
            u(e, f) = val;
        }
    return u;
}

// (T_p)_{u,v} = sum over arcs e: u -> v of p(e). Rows sum to 1.
inline ExactMatrix transition_T(const Graph& g, const TransitionProbability& p) {
    ExactMatrix t(g.vertex_count(), g.vertex_count());
    for (int a = 0; a < g.arc_count(); ++a)
        t(g.origin(a), g.terminus(a)) += GaussianRational(p.at(a));
    return t;
}

// (S_p)_{u,v} = sum over arcs e: u -> v of sqrt(p(e) p(e^-1)), exact.
inline ExactMatrix matrix_Sp(const Graph& g, const TransitionProbability& p) {
    ExactMatrix s(g.vertex_count(), g.vertex_count());
    for (int a = 0; a < g.arc_count(); ++a) {
        auto r = rational_sqrt(p.at(a) * p.at(g.inverse(a)));
        if (!r)
            throw IrrationalWeightError("S_p entry sqrt(" +
                                      format_rational(p.at(a) * p.at(g.inverse(a))) +
                                      ") is irrational; use the float builder");
        s(g.origin(a), g.terminus(a)) += GaussianRational(*r);
    }
    return s;
}

inline FloatMatrix matrix_Sp_float(const Graph& g, const TransitionProbability& p) {
    FloatMatrix s(g.vertex_count(), g.vertex_count());
    for (int a = 0; a < g.arc_count(); ++a)
        s(g.origin(a), g.terminus(a)) +=
            std::sqrt(to_double(p.at(a)) * to_double(p.at(g.inverse(a))));
    return s;
}

// Stationary measure for a reversible p: m(o(e)) p(e) = m(t(e)) p(e^-1) for
// every arc, normalized to m(0) = 1. Empty when p is not reversible.
// Needs a connected graph.
inline std::optional<std::vector<BigRational>> reversible_measure(const Graph& g,
                                                                  const TransitionProbability& p) {
    if (!g.is_connected())
        throw PreconditionError("reversible measure needs a connected graph");
    int n = g.vertex_count();
    if (n == 0)
        return std::vector<BigRational>{};
    std::vector<BigRational> m(n, BigRational(0));
    std::vector<char> vis(n, 0);
    std::queue<int> q;
    m[0] = 1;
    vis[0] = 1;
    q.push(0);
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int a : g.out_arcs(u)) {
            int w = g.terminus(a);
            if (!vis[w]) {
                vis[w] = 1;
                m[w] = m[u] * p.at(a) / p.at(g.inverse(a));
                q.push(w);
            }
        }
    }
    for (int a = 0; a < g.arc_count(); ++a)
        if (m[g.origin(a)] * p.at(a) != m[g.terminus(a)] * p.at(g.inverse(a)))
            return std::nullopt;
    return m;
}

// Coboundary: (A)_{e,v} = w(e^-1) [t(e) = v], shape 2m x n.
inline ExactMatrix coboundary_Aw(const Graph& g, const WeightAssignment& w) {
    ExactMatrix a(g.arc_count(), g.vertex_count());
    for (int e = 0; e < g.arc_count(); ++e)
        a(e, g.terminus(e)) = w.at(g.inverse(e));
    return a;
}

// Arc-reversal involution, (P)_{e,f} = [f = e^-1]. P^2 = I.
inline ExactMatrix shift_P(const Graph& g) {
    ExactMatrix p(g.arc_count(), g.arc_count());
    for (int e = 0; e < g.arc_count(); ++e)
        p(e, g.inverse(e)) = GaussianRational(1);
    return p;
}

// Local coin at v over its out-arcs in ascending arc order:
// C_v = 2 w_v w_v^* - I, shape deg(v) x deg(v).
inline ExactMatrix quantum_coin(const Graph& g, const WeightAssignment& w, int v) {
    const auto& arcs = g.out_arcs(v);
    ExactMatrix c(arcs.size(), arcs.size());
    for (std::size_t a = 0; a < arcs.size(); ++a)
        for (std::size_t b = 0; b < arcs.size(); ++b) {
            c(a, b) = GaussianRational(2) * w.at(arcs[a]) * w.at(arcs[b]).conj();
            if (a == b)
                c(a, b) -= GaussianRational(1);
        }
    return c;
}

// (coin direct sum) * P on the arc basis; equals matrix_U(g, w, 2).
inline ExactMatrix coined_form(const Graph& g, const WeightAssignment& w) {
    int arcs = g.arc_count();
    ExactMatrix cs(arcs, arcs);
    for (int e = 0; e < arcs; ++e)
        for (int f = 0; f < arcs; ++f) {
            if (g.origin(e) != g.origin(f))
                continue;
            cs(e, f) = GaussianRational(2) * w.at(e) * w.at(f).conj();
            if (e == f)
                cs(e, f) -= GaussianRational(1);
        }
    return cs * shift_P(g);
}

// Arc composition indicator, (B)_{e,f} = [t(e) = o(f)].
inline ExactMatrix edge_matrix_B(const Graph& g) {
    int arcs = g.arc_count();
    ExactMatrix b(arcs, arcs);
    for (int e = 0; e < arcs; ++e)
        for (int f = 0; f < arcs; ++f)
            if (g.terminus(e) == g.origin(f))
                b(e, f) = GaussianRational(1);
    return b;
}

} // namespace qwspectra
