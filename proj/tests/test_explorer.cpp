#include "doctest.h"
#include "oracles.hpp"
#include "signed_inertia/crossing.hpp"
#include "signed_inertia/explorer.hpp"

#include <set>

using namespace signed_inertia;

TEST_CASE("bounds and capacities") {
    auto b = inertia_bounds(oracle::k3_join_k3());
    CHECK(b.n_plus == IntRange{1, 5});
    CHECK(b.n_minus == IntRange{0, 4});
    CHECK(b.n_zero == IntRange{1, 5});
    b = inertia_bounds(oracle::k4_path());
    CHECK(b.n_plus == IntRange{0, 3});
    CHECK(b.n_minus == IntRange{0, 3});
    CHECK(b.n_zero == IntRange{1, 4});

    const auto forest = oracle::edges_graph(4, {{1, 2, 1}, {2, 3, -1}});
    b = inertia_bounds(forest);
    CHECK(b.n_plus.lo == b.n_plus.hi);
    CHECK(b.n_minus.lo == b.n_minus.hi);
    CHECK(b.n_zero.lo == b.n_zero.hi);

    CHECK(lattice_capacity(oracle::double_triangle()) == 6);
    CHECK(lattice_capacity(oracle::triple_triangle()) == 10);
    CHECK(lattice_capacity(oracle::k3_join_k3()) == 15);
    CHECK(lattice_points(oracle::k3_join_k3()).size() == 15);

    CHECK(vertex_count_capacity(4) == 7);
    CHECK(vertex_count_capacity(3) == 3);
    CHECK(vertex_count_capacity(7) == 25);
    CHECK_THROWS_AS(vertex_count_capacity(2), PreconditionError);

    CHECK(max_flexibility(4) == 3);
    CHECK(max_flexibility(3) == 1);
    CHECK(max_flexibility(6) == 5);
}

TEST_CASE("rank exclusions") {
    CHECK(impossibility_by_rank(oracle::k4_path()) == std::set<Inertia>{{0, 0, 4}, {1, 0, 3}, {0, 1, 3}});
    CHECK(impossibility_by_rank(negative_join(oracle::clique(1), oracle::clique(3))) == std::set<Inertia>{{0, 0, 4}});
    CHECK(impossibility_by_rank(SignedGraph(5)).empty());
}

namespace {

std::set<Inertia> explored(const SignedGraph& g, long budget = 5000) {
    const auto s = explore(g, {budget, 0});
    std::set<Inertia> out;
    for (const auto& [i, w] : s.achieved) {
        CHECK(replay(w, i));
        CHECK(s.bounds.contains(i));
        out.insert(i);
    }
    CHECK(static_cast<long>(out.size()) <= s.lattice_capacity);
    return out;
}

}  // namespace

TEST_CASE("explore reproduces the small examples") {
    CHECK(explored(oracle::double_triangle()) ==
          std::set<Inertia>{{2, 2, 1}, {3, 1, 1}, {4, 0, 1}, {2, 1, 2}, {3, 0, 2}, {2, 0, 3}});
    CHECK(explored(oracle::triple_triangle()).size() == 10);
    const auto k4 = explored(oracle::k4_path());
    CHECK(k4.size() == 7);
    for (const auto& i : impossibility_by_rank(oracle::k4_path())) CHECK_FALSE(k4.count(i));
}

TEST_CASE("explore on forests finds the unique inertia") {
    oracle::Rng rng(43);
    for (int i = 0; i < 10; ++i) {
        const auto f = oracle::random_forest(rng, 6);
        const auto s = explored(f, 50);
        REQUIRE(s.size() == 1);
        CHECK(*s.begin() == *unique_inertia(f));
    }
}

TEST_CASE("explore on triangle chains fills the lattice") {
    auto chain = mixed_triangle();
    for (int k = 1; k <= 4; ++k) {
        if (k > 1) chain = dot(chain, 2 * k - 1, mixed_triangle(), 1);
        CHECK(explored(chain.graph()).size() == static_cast<std::size_t>((k + 2) * (k + 1) / 2));
    }
}

TEST_CASE("explore respects the budget") {
    const auto s = explore(oracle::k3_join_k3(), {5, 0});
    CHECK(s.evaluations <= 5);
    CHECK_THROWS_AS(explore(oracle::k3_join_k3(), {0, 0}), PreconditionError);
}

TEST_CASE("minkowski check") {
    const auto t = mixed_triangle();
    const auto report = minkowski_check(t, t, {2000, 0});
    CHECK(report.holds);
    CHECK(report.identifications.size() == 9);
    for (const auto& id : report.identifications) CHECK(id.violations.empty());

    const auto single = WeightedSignedGraph(SignedGraph(1), {});
    const auto r2 = minkowski_check(t, single, {2000, 0});
    CHECK(r2.holds);
    for (const auto& id : r2.identifications) CHECK(id.dot_pairs == r2.left_pairs);
}
