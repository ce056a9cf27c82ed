// The Shrikhande graph and the 4x4 rook's graph are cospectral strongly
// regular graphs. Their quantum walks inherit that collision at U+ and
// (U^2)+, but the cubed walk tells them apart. This prints the three
// fingerprint comparisons.

#include <qwspectra/qwspectra.hpp>

#include <cstdio>

using namespace qwspectra;

namespace {

Graph shrikhande() {
    std::vector<std::pair<int, int>> edges;
    auto id = [](int r, int c) { return 4 * ((r % 4 + 4) % 4) + ((c % 4 + 4) % 4); };
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) {
            edges.emplace_back(id(r, c), id(r, c + 1));
            edges.emplace_back(id(r, c), id(r + 1, c));
            edges.emplace_back(id(r, c), id(r + 1, c + 1));
        }
    return Graph(16, edges);
}

Graph rook44() {
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v < 16; ++v)
        for (int w = v + 1; w < 16; ++w)
            if (v / 4 == w / 4 || v % 4 == w % 4)
                edges.emplace_back(v, w);
    return Graph(16, edges);
}

} // namespace

int main() {
    Graph a = shrikhande();
    Graph b = rook44();

    for (MatrixKind kind : {MatrixKind::adjacency, MatrixKind::u_plus,
                            MatrixKind::u3_plus}) {
        CompareOutcome out = compare(a, b, kind);
        std::printf("%-10s %s   (%s vs %s)\n", matrix_kind_name(kind),
                    out.isospectral ? "same spectrum" : "distinct",
                    out.a.hash.c_str(), out.b.hash.c_str());
        if (!out.isospectral && out.witness)
            std::printf("           first split at coefficient %ld: %s vs %s\n",
                        out.witness->index, out.witness->lhs.c_str(),
                        out.witness->rhs.c_str());
    }
    return 0;
}
