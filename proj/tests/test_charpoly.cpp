#include <catch2/catch_amalgamated.hpp>

#include <qwspectra/charpoly.hpp>
#include <qwspectra/jacobi.hpp>

#include "support/graphs.hpp"
#include "support/oracles.hpp"

using namespace qwspectra;
using testsupport::Rng;
using Poly = Polynomial<GaussianRational>;

namespace {

ExactMatrix random_matrix(Rng& rng, std::size_t n, bool rational, bool complex_entries) {
    ExactMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            BigRational re(testsupport::rand_int(rng, -4, 4),
                           rational ? testsupport::rand_int(rng, 1, 3) : 1);
            BigRational im = complex_entries
                                 ? BigRational(testsupport::rand_int(rng, -3, 3),
                                               rational ? testsupport::rand_int(rng, 1, 3) : 1)
                                 : BigRational(0);
            m(i, j) = GaussianRational(re, im);
        }
    return m;
}

} // namespace

TEST_CASE("charpoly matches cofactor expansion") {
    Rng rng(101);
    for (bool rational : {false, true})
        for (bool cplx : {false, true})
            for (std::size_t n = 1; n <= 5; ++n)
                for (int trial = 0; trial < 4; ++trial) {
                    ExactMatrix m = random_matrix(rng, n, rational, cplx);
                    CHECK(charpoly_exact(m) == testsupport::charpoly_cofactor(m));
                }
}

TEST_CASE("charpoly at zero equals the Bareiss determinant") {
    Rng rng(202);
    for (std::size_t n = 1; n <= 6; ++n)
        for (int trial = 0; trial < 5; ++trial) {
            ExactMatrix m = random_matrix(rng, n, true, true);
            GaussianRational det = determinant_bareiss(m);
            GaussianRational c0 = charpoly_exact(m).eval(GaussianRational(0));
            GaussianRational sign = (n % 2 == 0) ? GaussianRational(1) : GaussianRational(-1);
            CHECK(c0 == sign * det);
        }
}

TEST_CASE("charpoly is invariant under permutation similarity") {
    Rng rng(303);
    for (int trial = 0; trial < 8; ++trial) {
        std::size_t n = static_cast<std::size_t>(testsupport::rand_int(rng, 2, 6));
        ExactMatrix m = random_matrix(rng, n, true, trial % 2 == 1);
        auto perm = testsupport::random_permutation(rng, static_cast<int>(n));
        ExactMatrix p(n, n);
        for (std::size_t i = 0; i < n; ++i)
            p(static_cast<std::size_t>(perm[i]), i) = GaussianRational(1);
        CHECK(charpoly_exact(p * m * p.transpose()) == charpoly_exact(m));
    }
}

TEST_CASE("interpolation route agrees with Faddeev-LeVerrier") {
    Rng rng(404);
    for (std::size_t n = 1; n <= 6; ++n)
        for (int trial = 0; trial < 3; ++trial) {
            ExactMatrix m = random_matrix(rng, n, true, trial == 2);
            CHECK(charpoly_by_interpolation(m) == charpoly_exact(m));
        }
}

TEST_CASE("quadratic pencil determinant matches cofactor expansion") {
    Rng rng(505);
    using testsupport::oracle_detail::det_cofactor;
    for (std::size_t n = 1; n <= 4; ++n)
        for (int trial = 0; trial < 4; ++trial) {
            ExactMatrix a2 = random_matrix(rng, n, true, false);
            ExactMatrix a1 = random_matrix(rng, n, true, true);
            ExactMatrix a0 = random_matrix(rng, n, true, true);
            if (trial == 3)
                a2 = ExactMatrix(n, n); // singular leading block drops the degree
            std::vector<std::vector<Poly>> entries(n, std::vector<Poly>(n));
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    entries[i][j] = Poly{a0(i, j), a1(i, j), a2(i, j)};
            CHECK(det_quadratic_pencil(a2, a1, a0) == det_cofactor(entries));
        }
}

TEST_CASE("degenerate shapes") {
    CHECK(charpoly_exact(ExactMatrix(0, 0)) == Poly::constant(GaussianRational(1)));
    ExactMatrix one(1, 1);
    one(0, 0) = GaussianRational(BigRational(-7, 3));
    Poly want{GaussianRational(BigRational(7, 3)), GaussianRational(1)};
    CHECK(charpoly_exact(one) == want);
    CHECK(determinant_bareiss(ExactMatrix(0, 0)) == GaussianRational(1));
    CHECK_THROWS_AS(charpoly_exact(ExactMatrix(2, 3)), DimensionError);
}

TEST_CASE("petersen adjacency characteristic polynomial") {
    Graph g = testsupport::petersen();
    Poly x = Poly::monomial(GaussianRational(1), 1);
    Poly expect = (x - Poly::constant(GaussianRational(3))) *
                  (x - Poly::constant(GaussianRational(1))).pow(5) *
                  (x + Poly::constant(GaussianRational(2))).pow(4);
    CHECK(charpoly_exact(g.adjacency()) == expect);
}

TEST_CASE("jacobi solves small symmetric matrices") {
    FloatMatrix m(2, 2);
    m(0, 0) = 0.0;
    m(0, 1) = 1.0;
    m(1, 0) = 1.0;
    m(1, 1) = 0.0;
    auto ev = symmetric_eigenvalues(m);
    REQUIRE(ev.size() == 2);
    CHECK(ev[0] == Catch::Approx(1.0));
    CHECK(ev[1] == Catch::Approx(-1.0));
}

TEST_CASE("jacobi on the petersen adjacency matrix") {
    auto ev = symmetric_eigenvalues(to_float(testsupport::petersen().adjacency()));
    REQUIRE(ev.size() == 10);
    CHECK(ev[0] == Catch::Approx(3.0).margin(1e-9));
    for (int k = 1; k <= 5; ++k)
        CHECK(ev[static_cast<std::size_t>(k)] == Catch::Approx(1.0).margin(1e-9));
    for (int k = 6; k <= 9; ++k)
        CHECK(ev[static_cast<std::size_t>(k)] == Catch::Approx(-2.0).margin(1e-9));
}

TEST_CASE("jacobi eigenvalues are permutation invariant") {
    Rng rng(606);
    Graph g = testsupport::random_connected_simple(rng, 7);
    auto perm = testsupport::random_permutation(rng, g.vertex_count());
    auto base = symmetric_eigenvalues(to_float(g.adjacency()));
    auto relab = symmetric_eigenvalues(to_float(testsupport::relabel(g, perm).adjacency()));
    REQUIRE(base.size() == relab.size());
    for (std::size_t k = 0; k < base.size(); ++k)
        CHECK(base[k] == Catch::Approx(relab[k]).margin(1e-9));
}

TEST_CASE("jacobi rejects unsymmetric or complex input") {
    FloatMatrix m(2, 2);
    m(0, 1) = 1.0;
    CHECK_THROWS_AS(symmetric_eigenvalues(m), NotSymmetricError);
    FloatMatrix c(1, 1);
    c(0, 0) = std::complex<double>(0.0, 1.0);
    CHECK_THROWS_AS(symmetric_eigenvalues(c), NotSymmetricError);
}
