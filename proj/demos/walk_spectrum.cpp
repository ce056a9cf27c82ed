// Prints the positive-support walk spectrum of a named graph from the
// regular closed forms, grouped by multiplicity. Pass "petersen",
// "heawood" or a cycle length; default is the Petersen graph.

#include <qwspectra/qwspectra.hpp>

#include <cstdio>
#include <cstdlib>
#include <map>
#include <string>

using namespace qwspectra;

namespace {

Graph petersen() {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < 5; ++i) {
        edges.emplace_back(i, (i + 1) % 5);
        edges.emplace_back(i, i + 5);
        edges.emplace_back(5 + i, 5 + (i + 2) % 5);
    }
    return Graph(10, edges);
}

Graph heawood() {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < 14; ++i) {
        edges.emplace_back(i, (i + 1) % 14);
        if (i % 2 == 0)
            edges.emplace_back(i, (i + 5) % 14);
    }
    return Graph(14, edges);
}

Graph cycle(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        edges.emplace_back(i, (i + 1) % n);
    return Graph(n, edges);
}

void print_grouped(const SpectrumResult& r) {
    std::map<std::pair<long, long>, int> groups;
    for (auto z : r.eigenvalues)
        ++groups[{std::lround(z.real() * 1e6), std::lround(z.imag() * 1e6)}];
    for (const auto& [key, count] : groups)
        std::printf("  %+.6f %+.6fi   x%d\n", key.first / 1e6, key.second / 1e6, count);
    std::printf("  verdict %s, max residual %s\n",
                verdict_name(r.report.verdict),
                r.report.detail("max-residual").c_str());
}

} // namespace

int main(int argc, char** argv) {
    std::string name = argc > 1 ? argv[1] : "petersen";
    Graph g = name == "petersen"  ? petersen()
              : name == "heawood" ? heawood()
                                  : cycle(std::max(3, std::atoi(name.c_str())));

    std::printf("U+ spectrum:\n");
    print_grouped(spectrum_u_plus(g));
    std::printf("(U^2)+ spectrum:\n");
    print_grouped(spectrum_u2_plus(g));
    return 0;
}
