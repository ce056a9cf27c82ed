#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "charpoly.hpp"
#include "theorems.hpp"
#include "walk_matrices.hpp"

namespace qwspectra {

enum class MatrixKind {
    adjacency,
    grover,
    u_plus,
    u2_plus,
    u3_plus,
    szegedy,
    edge_matrix,
};

inline const char* matrix_kind_name(MatrixKind k) {
    switch (k) {
    case MatrixKind::adjacency: return "adjacency";
    case MatrixKind::grover: return "grover";
    case MatrixKind::u_plus: return "u-plus";
    case MatrixKind::u2_plus: return "u2-plus";
    case MatrixKind::u3_plus: return "u3-plus";
    case MatrixKind::szegedy: return "szegedy";
    case MatrixKind::edge_matrix: return "edge-matrix";
    }
    return "?";
}

inline std::optional<MatrixKind> parse_matrix_kind(const std::string& s) {
    for (MatrixKind k : {MatrixKind::adjacency, MatrixKind::grover, MatrixKind::u_plus,
                         MatrixKind::u2_plus, MatrixKind::u3_plus, MatrixKind::szegedy,
                         MatrixKind::edge_matrix})
        if (s == matrix_kind_name(k))
            return k;
    return std::nullopt;
}

// The matrix a kind denotes; szegedy uses the simple random walk so that
// the fingerprint stays parameter-free.
inline ExactMatrix build_kind_matrix(const Graph& g, MatrixKind kind) {
    switch (kind) {
    case MatrixKind::adjacency:
        return g.adjacency();
    case MatrixKind::grover:
        return grover(g);
    case MatrixKind::u_plus:
    case MatrixKind::u2_plus:
    case MatrixKind::u3_plus: {
        if (g.min_degree() < 2)
            throw PreconditionError("u-plus family needs minimum degree 2");
        ExactMatrix u = grover(g);
        int e = kind == MatrixKind::u_plus ? 1 : kind == MatrixKind::u2_plus ? 2 : 3;
        return positive_support(u.pow(e));
    }
    case MatrixKind::szegedy:
        return szegedy(g, TransitionProbability::simple_walk(g));
    case MatrixKind::edge_matrix:
        return edge_matrix_B(g) - shift_P(g);
    }
    throw Error("unknown matrix kind");
}

struct Fingerprint {
    MatrixKind kind;
    std::vector<std::string> coeffs; // exact rational strings, low degree first
    GraphSummary graph;
    std::string hash; // FNV-1a over kind and coefficients, hex

    friend bool operator==(const Fingerprint& a, const Fingerprint& b) {
        return a.kind == b.kind && a.coeffs == b.coeffs;
    }
    friend bool operator!=(const Fingerprint& a, const Fingerprint& b) { return !(a == b); }
};

namespace detail {

inline std::string fnv1a_hex(const std::string& data) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

} // namespace detail

inline Fingerprint fingerprint(const Graph& g, MatrixKind kind) {
    Fingerprint fp;
    fp.kind = kind;
    fp.graph = summarize(g);
    auto p = charpoly_exact(build_kind_matrix(g, kind));
    fp.coeffs.reserve(static_cast<std::size_t>(p.degree() + 1));
    for (int k = 0; k <= p.degree(); ++k) {
        const auto& c = p.coeff(k);
        if (!c.is_real())
            throw Error("internal: nonreal charpoly coefficient for a real matrix kind");
        fp.coeffs.push_back(format_rational(c.real()));
    }
    std::string blob = matrix_kind_name(kind);
    for (const auto& c : fp.coeffs) {
        blob += '|';
        blob += c;
    }
    fp.hash = detail::fnv1a_hex(blob);
    return fp;
}

struct CompareOutcome {
    bool isospectral = false;
    std::optional<Witness> witness;
    Fingerprint a, b;
};

inline CompareOutcome compare(const Graph& ga, const Graph& gb, MatrixKind kind) {
    CompareOutcome out;
    out.a = fingerprint(ga, kind);
    out.b = fingerprint(gb, kind);
    std::size_t top = std::max(out.a.coeffs.size(), out.b.coeffs.size());
    for (std::size_t k = 0; k < top; ++k) {
        std::string ca = k < out.a.coeffs.size() ? out.a.coeffs[k] : "0";
        std::string cb = k < out.b.coeffs.size() ? out.b.coeffs[k] : "0";
        if (ca != cb) {
            out.witness = Witness{"coefficient of x^" + std::to_string(k),
                                  static_cast<long>(k), ca, cb};
            return out;
        }
    }
    out.isospectral = true;
    return out;
}

struct BatchReport {
    MatrixKind kind;
    std::vector<std::vector<std::size_t>> classes;   // indices into the input list
    std::vector<Fingerprint> fingerprints;           // one per non-skipped graph, input order
    std::vector<std::size_t> fingerprint_index;      // input index per fingerprint entry
    std::vector<std::pair<std::size_t, std::string>> skipped; // index, reason
};

// Groups a collection by exact fingerprint equality. Graphs that fail the
// kind's precondition are skipped with a note instead of failing the batch.
inline BatchReport batch_compare(const std::vector<Graph>& graphs, MatrixKind kind) {
    BatchReport rep;
    rep.kind = kind;
    for (std::size_t i = 0; i < graphs.size(); ++i) {
        try {
            rep.fingerprints.push_back(fingerprint(graphs[i], kind));
            rep.fingerprint_index.push_back(i);
        } catch (const Error& e) {
            rep.skipped.emplace_back(i, e.what());
        }
    }
    for (std::size_t f = 0; f < rep.fingerprints.size(); ++f) {
        bool placed = false;
        for (auto& cls : rep.classes) {
            std::size_t rep_f = 0;
            while (rep.fingerprint_index[rep_f] != cls.front())
                ++rep_f;
            if (rep.fingerprints[f] == rep.fingerprints[rep_f]) {
                cls.push_back(rep.fingerprint_index[f]);
                placed = true;
                break;
            }
        }
        if (!placed)
            rep.classes.push_back({rep.fingerprint_index[f]});
    }
    return rep;
}

} // namespace qwspectra
