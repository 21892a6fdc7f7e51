#include "doctest.h"
#include "oracles.hpp"
#include "signed_inertia/laplacian.hpp"

#include <cmath>

using namespace signed_inertia;
using oracle::edges_graph;

namespace {

WeightedSignedGraph unit(const SignedGraph& g) { return WeightedSignedGraph::unit(g); }

WeightedSignedGraph k1_join_k3() {
    return WeightedSignedGraph::from_edges(
        4, {{1, 2, -3}, {1, 3, -3}, {1, 4, -3}, {2, 3, 1}, {2, 4, 1}, {3, 4, 1}});
}

}  // namespace

TEST_CASE("laplacian entries") {
    const auto edge = unit(edges_graph(2, {{1, 2, 1}}));
    const auto l = weighted_laplacian(edge);
    CHECK(l.at(0, 0) == -1);
    CHECK(l.at(0, 1) == 1);

    const auto t = weighted_laplacian(mixed_triangle());
    const std::vector<std::vector<Rational>> expected{{0, 1, -1}, {1, 0, -1}, {-1, -1, 2}};
    CHECK(t.rows() == expected);

    const auto r1 = weighted_laplacian(k1_join_k3());
    CHECK(r1.rows()[0] == std::vector<Rational>{9, -3, -3, -3});
    CHECK(r1.rows()[1] == std::vector<Rational>{-3, 1, 1, 1});
    CHECK(inertia(k1_join_k3()) == Inertia{1, 0, 3});
}

TEST_CASE("characteristic polynomial") {
    const auto edge = weighted_laplacian(unit(edges_graph(2, {{1, 2, 1}})));
    CHECK(char_poly(edge) == RationalPolynomial({Rational(0), Rational(2), Rational(1)}));
    CHECK(char_poly(weighted_laplacian(mixed_triangle())) ==
          RationalPolynomial({Rational(0), Rational(-3), Rational(-2), Rational(1)}));
    CHECK(char_poly(SymmetricRationalMatrix(3)) == RationalPolynomial::monomial(1, 3));

    oracle::Rng rng(17);
    for (int i = 0; i < 80; ++i) {
        const auto g = oracle::random_weighted(rng, 6);
        const auto l = weighted_laplacian(g);
        CHECK(l.rows() == oracle::laplacian(g));
        for (const auto& row : l.rows()) {
            Rational sum = 0;
            for (const auto& x : row) sum += x;
            CHECK(sum == 0);
        }
        const auto p = char_poly(l);
        CHECK(p == oracle::char_poly(l));
        const Rational det = oracle::leibniz_det(l.rows());
        CHECK(p(Rational(0)) == (g.order() % 2 ? Rational(-det) : det));
    }
}

TEST_CASE("inertia") {
    CHECK(inertia(unit(oracle::clique(3))) == Inertia{0, 2, 1});
    CHECK(inertia(unit(edges_graph(4, {{1, 2, -1}, {1, 3, 1}, {1, 4, 1}}))) == Inertia{1, 2, 1});
    CHECK(inertia(mixed_triangle()) == Inertia{1, 1, 1});

    oracle::Rng rng(23);
    for (int i = 0; i < 150; ++i) {
        const auto g = oracle::random_weighted(rng, 7);
        const auto in = inertia(g);
        const auto p = component_profile(g.graph());
        CHECK(in.order() == g.order());
        CHECK(in.n_zero >= p.c);
        // float census agrees
        const auto ev = eigenvalues_float(g);
        int pos = 0;
        int neg = 0;
        for (double x : ev) {
            pos += x > 1e-6;
            neg += x < -1e-6;
        }
        CHECK(pos == in.n_plus);
        CHECK(neg == in.n_minus);
    }
}

TEST_CASE("simple spectrum") {
    CHECK(is_simple_spectrum(unit(edges_graph(2, {{1, 2, 1}}))));
    CHECK_FALSE(is_simple_spectrum(unit(oracle::clique(3))));
    CHECK(is_simple_spectrum(mixed_triangle()));
}

TEST_CASE("float eigenvalues") {
    auto ev = eigenvalues_float(unit(edges_graph(2, {{1, 2, 1}})));
    CHECK(ev[0] == doctest::Approx(-2.0).epsilon(1e-9));
    CHECK(std::abs(ev[1]) < 1e-9);
    ev = eigenvalues_float(mixed_triangle());
    CHECK(ev[0] == doctest::Approx(-1.0));
    CHECK(std::abs(ev[1]) < 1e-9);
    CHECK(ev[2] == doctest::Approx(3.0));
    ev = eigenvalues_float(unit(oracle::clique(3)));
    CHECK(ev[0] == doctest::Approx(-3.0));
    CHECK(ev[1] == doctest::Approx(-3.0));
}

TEST_CASE("perturb to simple spectrum") {
    const Rational eps = ratio(1, 10);
    const auto tri = unit(oracle::clique(3));
    const auto p = perturb_simple(tri, eps);
    CHECK(p.graph() == tri.graph());
    CHECK(is_simple_spectrum(p));
    CHECK((weighted_laplacian(tri) - weighted_laplacian(p)).frobenius_squared() < eps * eps);

    CHECK(perturb_simple(mixed_triangle(), eps) == mixed_triangle());

    const auto j = unit(oracle::k3_join_k3());
    CHECK_FALSE(is_simple_spectrum(j));
    const auto pj = perturb_simple(j, ratio(1, 100));
    CHECK(is_simple_spectrum(pj));
    CHECK((weighted_laplacian(j) - weighted_laplacian(pj)).frobenius_squared() < ratio(1, 10000));

    CHECK_THROWS_AS(perturb_simple(unit(edges_graph(3, {{1, 2, 1}})), eps), PreconditionError);
    CHECK_THROWS_AS(perturb_simple(tri, 0), PreconditionError);
}
