#include "doctest.h"
#include "oracles.hpp"
#include "signed_inertia/signed_graph.hpp"

using namespace signed_inertia;
using oracle::edges_graph;

TEST_CASE("graph validation") {
    CHECK_THROWS(SignedGraph(3, {{1, 1, Sign::positive}}));
    CHECK_THROWS(SignedGraph(3, {{1, 4, Sign::positive}}));
    CHECK_THROWS(SignedGraph(3, {{1, 2, Sign::positive}, {2, 1, Sign::negative}}));
    const auto g = edges_graph(3, {{1, 2, 1}, {1, 3, -1}});
    CHECK_THROWS(WeightedSignedGraph(g, {Rational(1), Rational(1)}));
    CHECK_THROWS(WeightedSignedGraph(g, {Rational(0), Rational(-1)}));
    CHECK_THROWS(WeightedSignedGraph(g, {Rational(1)}));
    const auto w = WeightedSignedGraph::from_edges(3, {{2, 1, ratio(7, 2)}, {1, 3, Rational(-2)}});
    CHECK(w.graph() == g);
    CHECK(w.weight(0) == ratio(7, 2));
    CHECK(*g.find_edge(3, 1) == 1);
    CHECK_FALSE(g.find_edge(2, 3).has_value());
}

TEST_CASE("component profile") {
    CHECK(component_profile(mixed_triangle().graph()) == ComponentProfile{1, 2, 1, 1});
    CHECK(component_profile(oracle::double_triangle()).tau == 2);
    CHECK(component_profile(edges_graph(3, {{1, 2, 1}, {2, 3, 1}})) == ComponentProfile{1, 1, 3, 0});
    const auto isolated = SignedGraph(4);
    CHECK(component_profile(isolated) == ComponentProfile{4, 4, 4, 0});

    oracle::Rng rng(3);
    for (int i = 0; i < 200; ++i) {
        const auto g = oracle::random_weighted(rng, 8).graph();
        const auto p = component_profile(g);
        CHECK(p.tau >= 0);
        CHECK(1 <= p.c);
        CHECK(p.c <= p.c_plus);
        CHECK(p.c <= p.c_minus);
    }
}

TEST_CASE("blocks") {
    auto b = blocks(oracle::double_triangle());
    REQUIRE(b.size() == 2);
    CHECK(b[0].vertices == std::vector<Vertex>{1, 2, 3});
    CHECK(b[1].vertices == std::vector<Vertex>{3, 4, 5});
    CHECK(b[0].is_mixed(oracle::double_triangle()));

    const auto tree = edges_graph(5, {{1, 2, 1}, {2, 3, -1}, {2, 4, 1}, {4, 5, 1}});
    CHECK(blocks(tree).size() == 4);
    const auto cycle = edges_graph(4, {{1, 2, 1}, {2, 3, 1}, {3, 4, 1}, {1, 4, -1}});
    CHECK(blocks(cycle).size() == 1);

    // every edge in exactly one block
    oracle::Rng rng(5);
    for (int i = 0; i < 100; ++i) {
        const auto g = oracle::random_weighted(rng, 8).graph();
        std::vector<int> seen(g.size(), 0);
        for (const auto& blk : blocks(g)) {
            for (auto e : blk.edge_indices) ++seen[e];
        }
        for (int s : seen) CHECK(s == 1);
    }
}

TEST_CASE("unique inertia") {
    const auto forest = edges_graph(6, {{1, 2, 1}, {2, 3, -1}, {2, 4, -1}, {5, 6, 1}});
    CHECK(unique_inertia(forest) == Inertia{2, 2, 2});
    CHECK_FALSE(unique_inertia(mixed_triangle().graph()).has_value());
    const auto blocks2 = edges_graph(5, {{1, 2, 1}, {1, 3, 1}, {2, 3, 1}, {3, 4, -1}, {3, 5, -1}, {4, 5, -1}});
    CHECK(unique_inertia(blocks2) == Inertia{2, 2, 1});

    // agrees with a direct mixed-cycle search
    for (const auto& [n, edges] : oracle::small_catalog()) {
        for (unsigned mask = 0; mask < (1u << edges.size()); ++mask) {
            const auto g = oracle::unsigned_graph(n, edges, mask);
            CHECK(unique_inertia(g).has_value() == !oracle::has_mixed_cycle(g));
        }
    }
}

TEST_CASE("dot product") {
    const auto t = mixed_triangle();
    const auto gg = dot(t, 3, t, 1);
    CHECK(gg.graph() == oracle::double_triangle());
    const auto ggg = dot(gg, 5, t, 1);
    CHECK(ggg.graph() == oracle::triple_triangle());
    const auto single = WeightedSignedGraph(SignedGraph(1), {});
    CHECK(dot(t, 2, single, 1) == t);
    CHECK_THROWS_AS(dot(t, 4, t, 1), PreconditionError);
    CHECK_THROWS_AS(dot(t, 1, t, 0), PreconditionError);

    oracle::Rng rng(9);
    for (int i = 0; i < 50; ++i) {
        const auto a = oracle::random_weighted(rng, 5);
        const auto b = oracle::random_weighted(rng, 5);
        const auto d = dot(a, 1, b, b.order());
        CHECK(d.order() == a.order() + b.order() - 1);
        CHECK(d.size() == a.size() + b.size());
    }
}

TEST_CASE("negative join and clique classification") {
    const auto j = oracle::k3_join_k3();
    CHECK(j.order() == 6);
    CHECK(component_profile(j) == ComponentProfile{1, 2, 1, 4});
    CHECK(classify_clique_join(j) == CliqueJoin{3, 3, JoinOrientation::as_is});
    CHECK(classify_clique_join(j.negated()) == CliqueJoin{3, 3, JoinOrientation::negated});
    CHECK_FALSE(classify_clique_join(oracle::k4_path()).has_value());
    CHECK(classify_clique_join(negative_join(oracle::clique(1), oracle::clique(3))) == CliqueJoin{1, 3, JoinOrientation::as_is});
    const auto k1k1 = negative_join(SignedGraph(1), SignedGraph(1));
    CHECK(k1k1.size() == 1);
    CHECK(k1k1.edges()[0].sign == Sign::negative);

    for (int p = 1; p <= 5; ++p) {
        for (int q = 1; q <= 5; ++q) {
            const auto c = classify_clique_join(negative_join(oracle::clique(p), oracle::clique(q)));
            REQUIRE(c.has_value());
            CHECK(c->p == std::min(p, q));
            CHECK(c->q == std::max(p, q));
        }
    }
    CHECK_FALSE(classify_clique_join(oracle::double_triangle()).has_value());
}

TEST_CASE("scalings and the t family") {
    const auto t = mixed_triangle();
    const auto s = scale_negative(t, 2);
    CHECK(s.weight(1) == -2);
    CHECK(s.weight(0) == 1);
    CHECK(scale(t, 3).weight(1) == -3);
    CHECK(scale_negative(t, 1) == t);
    CHECK(gamma_t(t, 1) == t);
    CHECK(gamma_t(gamma_t(t, ratio(2, 3)), 3) == gamma_t(t, 2));
    CHECK_THROWS_AS(gamma_t(t, 0), PreconditionError);
    CHECK_THROWS_WITH_AS(gamma_t(t, -1), doctest::Contains("inconsistent weighting"), PreconditionError);
    CHECK_THROWS_AS(scale(t, 0), PreconditionError);
}

TEST_CASE("lattice witness shape") {
    CHECK_THROWS_AS(build_lattice_witness(2, 1, 1), PreconditionError);
    const auto w = build_lattice_witness(3, 1, 1);
    CHECK(w.order() == 7);
    CHECK(w.graph() == oracle::triple_triangle());
    CHECK(w.weight(*w.graph().find_edge(1, 3)) == -2);
    CHECK(w.weight(*w.graph().find_edge(3, 5)) == ratio(-4, 3));
    CHECK(w.weight(*w.graph().find_edge(5, 7)) == -1);
}
