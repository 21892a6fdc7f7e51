#include "doctest.h"
#include "oracles.hpp"
#include "signed_inertia/io.hpp"

#include <sstream>

using namespace signed_inertia;

TEST_CASE("parse graph files") {
    const auto g = parse_graph("# comment\n\nn 4\n1 2 1   # positive\n1 3 -7/2\n3 4 4/9\n");
    CHECK(g.order() == 4);
    CHECK(g.size() == 3);
    CHECK(g.weight(1) == ratio(-7, 2));
    CHECK(g.graph().edges()[1].sign == Sign::negative);

    auto line_of = [](const std::string& text) {
        try {
            parse_graph(text);
        } catch (const ParseError& e) {
            return e.line();
        }
        return -1;
    };
    CHECK(line_of("") == 0);
    CHECK(line_of("n x\n") == 1);
    CHECK(line_of("m 3\n") == 1);
    CHECK(line_of("n 3\n1 2 1\n2 1 1\n") == 3);
    CHECK(line_of("n 3\n1 2 1\n1 2 -1\n") == 3);
    CHECK(line_of("n 3\n1 2 0\n") == 2);
    CHECK(line_of("n 3\n1 4 1\n") == 2);
    CHECK(line_of("n 3\n\n\n1 2 1/0\n") == 4);
    CHECK(line_of("n 3\n1 2\n") == 2);
}

TEST_CASE("write and re-read round trip") {
    oracle::Rng rng(47);
    for (int i = 0; i < 100; ++i) {
        const auto g = oracle::random_weighted(rng, 8);
        CHECK(parse_graph(format_graph(g)) == g);
    }
    const auto w = build_lattice_witness(3, 1, 0);
    CHECK(parse_graph(format_graph(w)) == w);
}

TEST_CASE("json helpers") {
    const auto t = mixed_triangle();
    const auto s = graph_summary(t.graph());
    CHECK(s["n"] == 3);
    CHECK(s["tau"] == 1);
    CHECK(to_json(Inertia{1, 2, 3}) == Json::array({1, 2, 3}));
    CHECK(weighting_json(t)[1] == Json::array({1, 3, "-1/1"}));
    CHECK(to_json(RationalPolynomial({Rational(0), ratio(-1, 2)})) == Json::array({"0/1", "-1/2"}));
}

TEST_CASE("lattice svg marks achieved and excluded points") {
    const auto g = oracle::k4_path();
    const auto set = explore(g);
    const auto svg = lattice_svg(set, impossibility_by_rank(g));
    auto count = [&](const std::string& needle) {
        std::size_t n = 0;
        for (auto pos = svg.find(needle); pos != std::string::npos; pos = svg.find(needle, pos + 1)) ++n;
        return n;
    };
    CHECK(svg.rfind("<?xml", 0) == 0);
    CHECK(count("class=\"achieved\"") == 7);
    // all three exclusions lie inside the bounds
    CHECK(count("class=\"excluded\"") == 3);
    CHECK(count("class=\"bounds\"") == 1);
}

TEST_CASE("curves and csv") {
    const auto t = mixed_triangle();
    const auto prof = crossing_profile(t);
    const auto samples = sample_curves(t, prof);
    CHECK(samples.t.size() == 129 + 64);
    CHECK(samples.t.front() == doctest::Approx(to_double(prof.crossings[0].interval.lo) / 2));
    const auto svg = curves_svg(samples);
    CHECK(svg.find("polyline") != std::string::npos);

    const auto csv = sweep_csv(t, inertia_sweep(t, prof));
    std::istringstream in(csv);
    std::string header;
    std::getline(in, header);
    CHECK(header == "t,lambda1,lambda2,lambda3");
    int rows = 0;
    for (std::string line; std::getline(in, line);) ++rows;
    CHECK(rows == 3);
}
