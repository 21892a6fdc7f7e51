#pragma once

#include "signed_inertia/crossing.hpp"
#include "signed_inertia/explorer.hpp"
#include "signed_inertia/signed_graph.hpp"

#include <iosfwd>
#include <set>
#include <stdexcept>
#include <string>

#include "json.hpp"

namespace signed_inertia {

/// Malformed graph file. line() is 1-based, 0 when not tied to a line.
class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& message);
    int line() const { return line_; }

private:
    int line_;
};

// Graph file:
//   n 4
//   1 2 1
//   1 3 -7/2   # sign taken from the weight
WeightedSignedGraph read_graph(std::istream& in);
WeightedSignedGraph read_graph_file(const std::string& path);
WeightedSignedGraph parse_graph(const std::string& text);

void write_graph(std::ostream& out, const WeightedSignedGraph& g);
std::string format_graph(const WeightedSignedGraph& g);

using Json = nlohmann::ordered_json;

Json to_json(const Inertia& i);
Json to_json(const RationalPolynomial& p);  // coefficient strings, constant term first
Json graph_summary(const SignedGraph& g);
Json weighting_json(const WeightedSignedGraph& g);  // list of [u, v, "p/q"]

/// Standalone SVG of the (n+, n-) lattice: achieved points filled, rank
/// excluded points hollow, the bound rectangle outlined.
std::string lattice_svg(const InertiaSet& set, const std::set<Inertia>& excluded);

/// Float samples of the eigenvalue curves: a log grid on
/// [t_min/2, 2 t_max] around the crossings plus 64 uniform points.
struct CurveSamples {
    std::vector<double> t;
    std::vector<std::vector<double>> eigenvalues;  // per sample, ascending
};
CurveSamples sample_curves(const WeightedSignedGraph& g, const CrossingProfile& profile);
std::string curves_svg(const CurveSamples& samples);

/// CSV with header t,lambda1..lambdan, one row per exact sweep sample.
std::string sweep_csv(const WeightedSignedGraph& g, const std::vector<SweepPoint>& sweep);

}  // namespace signed_inertia
