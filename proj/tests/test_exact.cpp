#include <catch2/catch_amalgamated.hpp>

#include <qwspectra/gaussian.hpp>
#include <qwspectra/json_io.hpp>
#include <qwspectra/matrix.hpp>
#include <qwspectra/polynomial.hpp>
#include <qwspectra/rational.hpp>

#include "support/graphs.hpp"

using namespace qwspectra;
using testsupport::Rng;

TEST_CASE("rational formatting omits unit denominators") {
    CHECK(format_rational(BigRational(7)) == "7");
    CHECK(format_rational(BigRational(-7)) == "-7");
    CHECK(format_rational(BigRational(3, 4)) == "3/4");
    CHECK(format_rational(BigRational(-3, 4)) == "-3/4");
    CHECK(format_rational(BigRational(6, 8)) == "3/4");
    CHECK(format_rational(BigRational(0)) == "0");
}

TEST_CASE("rational parsing") {
    CHECK(parse_rational("3/4") == BigRational(3, 4));
    CHECK(parse_rational("-3/4") == BigRational(-3, 4));
    CHECK(parse_rational("+5") == BigRational(5));
    CHECK(parse_rational("0") == BigRational(0));
    CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
    CHECK_THROWS_AS(parse_rational(""), ParseError);
    CHECK_THROWS_AS(parse_rational("abc"), ParseError);
    CHECK_THROWS_AS(parse_rational("1/"), ParseError);
    CHECK_THROWS_AS(parse_rational("/2"), ParseError);
    CHECK_THROWS_AS(parse_rational("1.5"), ParseError);
}

TEST_CASE("rational parse/format round trip") {
    Rng rng(2024);
    for (int i = 0; i < 200; ++i) {
        BigRational q(testsupport::rand_int(rng, -500, 500),
                      testsupport::rand_int(rng, 1, 500));
        CHECK(parse_rational(format_rational(q)) == q);
    }
}

TEST_CASE("perfect and rational square roots") {
    CHECK(perfect_sqrt(BigInt(0)) == BigInt(0));
    CHECK(perfect_sqrt(BigInt(1)) == BigInt(1));
    CHECK(perfect_sqrt(BigInt(49)) == BigInt(7));
    CHECK_FALSE(perfect_sqrt(BigInt(2)).has_value());
    CHECK_FALSE(perfect_sqrt(BigInt(48)).has_value());
    BigInt big("12345678901234567890");
    CHECK(perfect_sqrt(big * big) == big);
    CHECK_FALSE(perfect_sqrt(big * big + 1).has_value());

    CHECK(rational_sqrt(BigRational(9, 16)) == BigRational(3, 4));
    CHECK(rational_sqrt(BigRational(0)) == BigRational(0));
    CHECK(rational_sqrt(BigRational(4)) == BigRational(2));
    CHECK_FALSE(rational_sqrt(BigRational(1, 2)).has_value());
    CHECK_FALSE(rational_sqrt(BigRational(3, 16)).has_value());
}

TEST_CASE("gaussian arithmetic identities") {
    Rng rng(7);
    for (int i = 0; i < 100; ++i) {
        GaussianRational a = testsupport::random_nonzero_gaussian(rng);
        GaussianRational b = testsupport::random_nonzero_gaussian(rng);
        GaussianRational c = testsupport::random_nonzero_gaussian(rng);
        CHECK((a + b) * c == a * c + b * c);
        CHECK(a * b == b * a);
        CHECK((a / b) * b == a);
        CHECK(a * a.conj() == GaussianRational(a.norm2()));
    }
    CHECK(GaussianRational::i() * GaussianRational::i() == GaussianRational(-1));
    CHECK_THROWS_AS(GaussianRational(1) / GaussianRational(0), Error);
}

TEST_CASE("gaussian formatting and parsing") {
    CHECK(format_gaussian(GaussianRational(BigRational(5, 8))) == "5/8");
    CHECK(format_gaussian(GaussianRational(BigRational(0), BigRational(2, 3))) == "2/3*i");
    CHECK(format_gaussian(GaussianRational(BigRational(-1, 2), BigRational(-1, 3))) ==
          "-1/2-1/3*i");
    CHECK(parse_gaussian("5/8") == GaussianRational(BigRational(5, 8)));
    CHECK(parse_gaussian("2/3*i") == GaussianRational(BigRational(0), BigRational(2, 3)));
    CHECK(parse_gaussian("-1*i") == GaussianRational(BigRational(0), BigRational(-1)));
    CHECK(parse_gaussian("1+1*i") == GaussianRational(BigRational(1), BigRational(1)));
    CHECK(parse_gaussian("-1/2-1/3*i") ==
          GaussianRational(BigRational(-1, 2), BigRational(-1, 3)));

    Rng rng(11);
    for (int i = 0; i < 100; ++i) {
        GaussianRational z = testsupport::random_nonzero_gaussian(rng);
        CHECK(parse_gaussian(format_gaussian(z)) == z);
    }
    CHECK_THROWS_AS(parse_gaussian("1+2"), ParseError);
    CHECK_THROWS_AS(parse_gaussian(""), ParseError);
}

TEST_CASE("polynomial arithmetic and division") {
    using P = Polynomial<GaussianRational>;
    P x = P::monomial(GaussianRational(1), 1);
    P a = x * x - P::constant(GaussianRational(1));
    P b = x - P::constant(GaussianRational(1));
    CHECK(poly_divide_exact(a, b) == x + P::constant(GaussianRational(1)));
    CHECK_THROWS_AS(poly_divide_exact(x * x, b), NonzeroRemainderError);

    P zero;
    CHECK(zero.degree() == -1);
    CHECK((zero * a).degree() == -1);
    CHECK(poly_divide_exact(zero, b) == zero);
    CHECK_THROWS_AS(poly_divide_exact(b, zero), NonzeroRemainderError);

    P c = (x - P::constant(GaussianRational(2))).pow(3) *
          (x + P::constant(GaussianRational(1)));
    CHECK(root_multiplicity(c, GaussianRational(2)) == 3);
    CHECK(root_multiplicity(c, GaussianRational(-1)) == 1);
    CHECK(root_multiplicity(c, GaussianRational(5)) == 0);
}

TEST_CASE("newton interpolation recovers a cubic") {
    using P = Polynomial<GaussianRational>;
    P x = P::monomial(GaussianRational(1), 1);
    P target = x.pow(3) - GaussianRational(2) * x + P::constant(GaussianRational(1));
    std::vector<GaussianRational> xs, ys;
    for (int k = 0; k < 4; ++k) {
        xs.push_back(GaussianRational(k));
        ys.push_back(target.eval(GaussianRational(k)));
    }
    P got = newton_interpolate(xs, ys);
    CHECK(got == target);
    CHECK(got.eval(GaussianRational(10)) == target.eval(GaussianRational(10)));
}

TEST_CASE("polynomial evaluation can widen the scalar type") {
    Polynomial<BigRational> p{BigRational(1), BigRational(0), BigRational(1)}; // 1 + x^2
    CHECK(p.eval(BigRational(2)) == BigRational(5));
    CHECK(p.eval(GaussianRational::i()) == GaussianRational(0));
}

TEST_CASE("matrix basics") {
    ExactMatrix a(2, 2);
    a(0, 0) = GaussianRational(1);
    a(0, 1) = GaussianRational(2);
    a(1, 0) = GaussianRational(3);
    a(1, 1) = GaussianRational(4);
    ExactMatrix b = a * ExactMatrix::identity(2);
    CHECK(b == a);
    CHECK(a.trace() == GaussianRational(5));
    ExactMatrix sq = a.pow(2);
    CHECK(sq(0, 0) == GaussianRational(7));
    CHECK(sq(0, 1) == GaussianRational(10));
    CHECK(sq(1, 0) == GaussianRational(15));
    CHECK(sq(1, 1) == GaussianRational(22));
    CHECK(a.pow(0) == ExactMatrix::identity(2));

    ExactMatrix wide(2, 3);
    CHECK_THROWS_AS(a * wide.transpose(), DimensionError);
    CHECK_THROWS_AS(wide.trace(), DimensionError);
    CHECK_THROWS_AS(a + wide, DimensionError);
}

TEST_CASE("conjugate transpose conjugates") {
    ExactMatrix a(1, 2);
    a(0, 0) = GaussianRational(BigRational(1), BigRational(2));
    a(0, 1) = GaussianRational(BigRational(0), BigRational(-3));
    ExactMatrix h = a.conj_transpose();
    CHECK(h.rows() == 2);
    CHECK(h(0, 0) == GaussianRational(BigRational(1), BigRational(-2)));
    CHECK(h(1, 0) == GaussianRational(BigRational(0), BigRational(3)));
    CHECK_FALSE(is_real(a));
    CHECK(is_real(ExactMatrix::identity(3)));
}

TEST_CASE("direct sum and first difference") {
    ExactMatrix a = ExactMatrix::identity(2);
    ExactMatrix b(1, 1);
    b(0, 0) = GaussianRational(5);
    ExactMatrix s = direct_sum(std::vector<ExactMatrix>{a, b});
    CHECK(s.rows() == 3);
    CHECK(s(2, 2) == GaussianRational(5));
    CHECK(s(0, 2) == GaussianRational(0));

    ExactMatrix t = s;
    CHECK_FALSE(first_difference(s, t).has_value());
    t(1, 0) = GaussianRational(9);
    auto d = first_difference(s, t);
    REQUIRE(d.has_value());
    CHECK(d->first == 1);
    CHECK(d->second == 0);
}

TEST_CASE("gaussian json uses p/q strings and re/im objects") {
    json real = gaussian_to_json(GaussianRational(BigRational(3, 4)));
    REQUIRE(real.is_string());
    CHECK(real.get<std::string>() == "3/4");

    json complex = gaussian_to_json(GaussianRational(BigRational(1, 2), BigRational(-2, 3)));
    REQUIRE(complex.is_object());
    CHECK(complex["re"].get<std::string>() == "1/2");
    CHECK(complex["im"].get<std::string>() == "-2/3");

    CHECK(gaussian_from_json(real) == GaussianRational(BigRational(3, 4)));
    CHECK(gaussian_from_json(complex) ==
          GaussianRational(BigRational(1, 2), BigRational(-2, 3)));
    CHECK(gaussian_from_json(json(5)) == GaussianRational(5));
}

TEST_CASE("exact matrix json round trip") {
    Rng rng(31);
    ExactMatrix m(3, 3);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            m(i, j) = testsupport::random_nonzero_gaussian(rng);
    json j = matrix_to_json(m);
    ExactMatrix back = exact_matrix_from_json(j);
    CHECK(back == m);
}

TEST_CASE("weights and probability json parsing") {
    testsupport::Rng rng(5);
    Graph g = testsupport::cycle_graph(4);
    json w = json::array();
    for (int a = 0; a < g.arc_count(); ++a)
        w.push_back("1/2");
    WeightAssignment wa = weights_from_json(g, w);
    CHECK(wa.at(0) == GaussianRational(BigRational(1, 2)));

    json p = json::array();
    for (int a = 0; a < g.arc_count(); ++a)
        p.push_back("1/2");
    TransitionProbability tp = probability_from_json(g, p);
    CHECK(tp.at(3) == BigRational(1, 2));

    json wrong = json::array();
    wrong.push_back("1");
    CHECK_THROWS_AS(weights_from_json(g, wrong), ParseError);
    CHECK_THROWS_AS(probability_from_json(g, wrong), ParseError);
}
