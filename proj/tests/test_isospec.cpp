#include <catch2/catch_amalgamated.hpp>

#include <qwspectra/isospec.hpp>
#include <qwspectra/json_io.hpp>

#include "support/graphs.hpp"

#include <string>
#include <vector>

using namespace qwspectra;
namespace ts = testsupport;

TEST_CASE("matrix kind names round trip") {
    for (MatrixKind k : {MatrixKind::adjacency, MatrixKind::grover, MatrixKind::u_plus,
                         MatrixKind::u2_plus, MatrixKind::u3_plus, MatrixKind::szegedy,
                         MatrixKind::edge_matrix}) {
        auto back = parse_matrix_kind(matrix_kind_name(k));
        REQUIRE(back.has_value());
        CHECK(*back == k);
    }
    CHECK_FALSE(parse_matrix_kind("u+").has_value());
    CHECK_FALSE(parse_matrix_kind("").has_value());
    CHECK_FALSE(parse_matrix_kind("Adjacency").has_value());
}

TEST_CASE("fingerprint coefficients are the exact charpoly") {
    // triangle adjacency: x^3 - 3x - 2
    auto fp = fingerprint(ts::cycle_graph(3), MatrixKind::adjacency);
    CHECK(fp.coeffs == std::vector<std::string>{"-2", "-3", "0", "1"});
    CHECK(fp.graph.n == 3);
    CHECK(fp.hash.size() == 16);
}

TEST_CASE("fingerprints are invariant under relabeling") {
    ts::Rng rng(0x15051u);
    for (int trial = 0; trial < 4; ++trial) {
        Graph g = ts::random_min_deg2(rng);
        Graph h = ts::relabel(g, ts::random_permutation(rng, g.vertex_count()));
        for (MatrixKind k : {MatrixKind::adjacency, MatrixKind::grover, MatrixKind::u_plus,
                             MatrixKind::u3_plus, MatrixKind::szegedy,
                             MatrixKind::edge_matrix}) {
            INFO("trial " << trial << " kind " << matrix_kind_name(k));
            auto fa = fingerprint(g, k);
            auto fb = fingerprint(h, k);
            CHECK(fa == fb);
            CHECK(fa.hash == fb.hash);
        }
    }
}

TEST_CASE("the u-plus family needs minimum degree 2") {
    CHECK_THROWS_AS(fingerprint(ts::path_graph(3), MatrixKind::u_plus), PreconditionError);
    CHECK_THROWS_AS(fingerprint(ts::path_graph(3), MatrixKind::u3_plus), PreconditionError);
    CHECK_NOTHROW(fingerprint(ts::path_graph(3), MatrixKind::adjacency));
    CHECK_NOTHROW(fingerprint(ts::path_graph(3), MatrixKind::grover));
}

TEST_CASE("compare finds the first differing coefficient") {
    Graph c3 = ts::cycle_graph(3);
    Graph p3 = ts::path_graph(3);
    auto out = compare(c3, p3, MatrixKind::adjacency);
    CHECK_FALSE(out.isospectral);
    REQUIRE(out.witness.has_value());
    // x^3 - 3x - 2 vs x^3 - 2x: constant coefficients -2 and 0
    CHECK(out.witness->index == 0);
    CHECK(out.witness->lhs == "-2");
    CHECK(out.witness->rhs == "0");

    auto same = compare(c3, ts::relabel(c3, {2, 0, 1}), MatrixKind::adjacency);
    CHECK(same.isospectral);
    CHECK_FALSE(same.witness.has_value());
}

TEST_CASE("comparison is symmetric") {
    Graph a = ts::petersen();
    Graph b = ts::heawood();
    auto ab = compare(a, b, MatrixKind::grover);
    auto ba = compare(b, a, MatrixKind::grover);
    CHECK(ab.isospectral == ba.isospectral);
    CHECK_FALSE(ab.isospectral); // different sizes cannot collide
}

TEST_CASE("u3-plus separates the 16-vertex strongly regular pair") {
    Graph a = ts::shrikhande();
    Graph b = ts::rook44();

    // Same strongly regular parameters force adjacency cospectrality, and
    // the U+ spectrum is a function of it, so both collide there.
    CHECK(compare(a, b, MatrixKind::adjacency).isospectral);
    CHECK(compare(a, b, MatrixKind::u_plus).isospectral);

    auto out = compare(a, b, MatrixKind::u3_plus);
    CHECK_FALSE(out.isospectral);
    CHECK(out.witness.has_value());
}

TEST_CASE("batch comparison groups by fingerprint and skips misfits") {
    ts::Rng rng(7);
    Graph pet = ts::petersen();
    std::vector<Graph> graphs{pet, ts::complete_graph(4),
                              ts::relabel(pet, ts::random_permutation(rng, 10)),
                              Graph(2, {{0, 1}}), ts::cycle_graph(5)};
    auto rep = batch_compare(graphs, MatrixKind::u_plus);

    REQUIRE(rep.skipped.size() == 1);
    CHECK(rep.skipped[0].first == 3); // the single edge has degree-1 endpoints
    REQUIRE(rep.classes.size() == 3);
    CHECK(rep.classes[0] == std::vector<std::size_t>{0, 2});
    CHECK(rep.classes[1] == std::vector<std::size_t>{1});
    CHECK(rep.classes[2] == std::vector<std::size_t>{4});
    CHECK(rep.fingerprints.size() == 4);
    CHECK(rep.fingerprint_index == std::vector<std::size_t>{0, 1, 2, 4});
}

TEST_CASE("batch comparison with no valid graphs") {
    std::vector<Graph> graphs{Graph(2, {{0, 1}}), ts::path_graph(3)};
    auto rep = batch_compare(graphs, MatrixKind::u2_plus);
    CHECK(rep.classes.empty());
    CHECK(rep.skipped.size() == 2);
}

TEST_CASE("fingerprint JSON carries kind, coefficients and hash") {
    auto fp = fingerprint(ts::cycle_graph(3), MatrixKind::adjacency);
    json j = fingerprint_to_json(fp);
    CHECK(j["kind"] == "adjacency");
    CHECK(j["coeffs"] == json::array({"-2", "-3", "0", "1"}));
    CHECK(j["graph"]["n"] == 3);
    CHECK(j["hash"] == fp.hash);
}

TEST_CASE("batch report JSON lists classes and skips") {
    std::vector<Graph> graphs{ts::cycle_graph(4), ts::path_graph(2),
                              ts::relabel(ts::cycle_graph(4), {3, 2, 1, 0})};
    auto rep = batch_compare(graphs, MatrixKind::u_plus);
    json j = batch_report_to_json(rep);
    CHECK(j["kind"] == "u-plus");
    CHECK(j["classes"] == json::array({json::array({0, 2})}));
    REQUIRE(j["skipped"].size() == 1);
    CHECK(j["skipped"][0]["index"] == 1);
    CHECK_FALSE(j.contains("fingerprints"));

    json full = batch_report_to_json(rep, true);
    REQUIRE(full["fingerprints"].size() == 2);
    CHECK(full["fingerprints"][0]["index"] == 0);
    CHECK(full["fingerprints"][1]["index"] == 2);
}
