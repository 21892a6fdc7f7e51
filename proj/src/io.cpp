#include "signed_inertia/io.hpp"

#include "signed_inertia/laplacian.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <map>
#include <sstream>

namespace signed_inertia {

ParseError::ParseError(int line, const std::string& message)
    : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + message : message), line_(line) {}

namespace {

std::vector<std::string> tokens(const std::string& line) {
    std::istringstream ss(line.substr(0, line.find('#')));
    std::vector<std::string> out;
    for (std::string tok; ss >> tok;) out.push_back(tok);
    return out;
}

int parse_int(const std::string& s, int line) {
    std::size_t used = 0;
    int v = 0;
    try {
        v = std::stoi(s, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != s.size() || s.empty()) throw ParseError(line, "expected an integer, got '" + s + "'");
    return v;
}

}  // namespace

WeightedSignedGraph read_graph(std::istream& in) {
    int n = -1;
    int lineno = 0;
    std::vector<WeightedSignedGraph::WeightedEdge> edges;
    std::map<std::pair<int, int>, int> seen;
    for (std::string line; std::getline(in, line);) {
        ++lineno;
        const auto tok = tokens(line);
        if (tok.empty()) continue;
        if (n < 0) {
            if (tok.size() != 2 || tok[0] != "n") throw ParseError(lineno, "expected header 'n <N>'");
            n = parse_int(tok[1], lineno);
            if (n < 1) throw ParseError(lineno, "vertex count must be positive");
            continue;
        }
        if (tok.size() != 3) throw ParseError(lineno, "expected 'u v w'");
        const int u = parse_int(tok[0], lineno);
        const int v = parse_int(tok[1], lineno);
        if (u < 1 || v > n || u >= v) throw ParseError(lineno, "need 1 <= u < v <= " + std::to_string(n));
        Rational w;
        try {
            w = parse_rational(tok[2]);
        } catch (const std::invalid_argument& e) {
            throw ParseError(lineno, e.what());
        }
        if (w == 0) throw ParseError(lineno, "zero weight");
        if (auto [it, fresh] = seen.emplace(std::pair{u, v}, lineno); !fresh) {
            throw ParseError(lineno, "duplicate edge " + std::to_string(u) + " " + std::to_string(v) + " (first on line " +
                                         std::to_string(it->second) + ")");
        }
        edges.push_back({u, v, w});
    }
    if (n < 0) throw ParseError(lineno, "missing header 'n <N>'");
    return WeightedSignedGraph::from_edges(n, edges);
}

WeightedSignedGraph read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(0, "cannot open " + path);
    return read_graph(in);
}

WeightedSignedGraph parse_graph(const std::string& text) {
    std::istringstream in(text);
    return read_graph(in);
}

void write_graph(std::ostream& out, const WeightedSignedGraph& g) {
    out << "n " << g.order() << '\n';
    for (std::size_t i = 0; i < g.size(); ++i) {
        const auto& e = g.graph().edges()[i];
        out << e.u << ' ' << e.v << ' ' << to_string(g.weight(i)) << '\n';
    }
}

std::string format_graph(const WeightedSignedGraph& g) {
    std::ostringstream out;
    write_graph(out, g);
    return out.str();
}

Json to_json(const Inertia& i) { return Json::array({i.n_plus, i.n_minus, i.n_zero}); }

Json to_json(const RationalPolynomial& p) {
    Json out = Json::array();
    for (const auto& c : p.coefficients()) out.push_back(to_fraction_string(c));
    return out;
}

Json graph_summary(const SignedGraph& g) {
    const auto p = component_profile(g);
    return {{"n", g.order()},       {"m_plus", g.positive_edge_count()}, {"m_minus", g.negative_edge_count()},
            {"c", p.c},             {"c_plus", p.c_plus},                {"c_minus", p.c_minus},
            {"tau", p.tau}};
}

Json weighting_json(const WeightedSignedGraph& g) {
    Json out = Json::array();
    for (std::size_t i = 0; i < g.size(); ++i) {
        const auto& e = g.graph().edges()[i];
        out.push_back(Json::array({e.u, e.v, to_fraction_string(g.weight(i))}));
    }
    return out;
}

namespace {

std::string fmt(double x) {
    std::ostringstream s;
    s << std::setprecision(6) << x;
    return s.str();
}

}  // namespace

std::string lattice_svg(const InertiaSet& set, const std::set<Inertia>& excluded) {
    const auto& b = set.bounds;
    const int n = set.graph.order();
    const int cell = 40;
    const int margin = 50;
    const int cols = n + 1;
    const int width = margin * 2 + cell * cols;
    const int height = margin * 2 + cell * cols;
    auto x = [&](int np) { return margin + cell * np + cell / 2; };
    auto y = [&](int nm) { return height - margin - cell * nm - cell / 2; };

    std::ostringstream s;
    s << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << width << "\" height=\"" << height << "\">\n"
      << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    // axes
    s << "<line x1=\"" << margin << "\" y1=\"" << height - margin << "\" x2=\"" << width - margin << "\" y2=\""
      << height - margin << "\" stroke=\"black\"/>\n"
      << "<line x1=\"" << margin << "\" y1=\"" << margin << "\" x2=\"" << margin << "\" y2=\"" << height - margin
      << "\" stroke=\"black\"/>\n";
    for (int k = 0; k <= n; ++k) {
        s << "<text x=\"" << x(k) << "\" y=\"" << height - margin + 18 << "\" font-size=\"12\" text-anchor=\"middle\">" << k
          << "</text>\n";
        s << "<text x=\"" << margin - 12 << "\" y=\"" << y(k) + 4 << "\" font-size=\"12\" text-anchor=\"end\">" << k
          << "</text>\n";
    }
    s << "<text x=\"" << width / 2 << "\" y=\"" << height - 10 << "\" font-size=\"14\" text-anchor=\"middle\">n+</text>\n"
      << "<text x=\"14\" y=\"" << height / 2 << "\" font-size=\"14\">n-</text>\n";
    // bound rectangle
    const int rx = x(b.n_plus.lo) - cell / 2;
    const int ry = y(b.n_minus.hi) - cell / 2;
    s << "<rect class=\"bounds\" x=\"" << rx << "\" y=\"" << ry << "\" width=\""
      << cell * (b.n_plus.hi - b.n_plus.lo + 1) << "\" height=\"" << cell * (b.n_minus.hi - b.n_minus.lo + 1)
      << "\" fill=\"none\" stroke=\"gray\" stroke-dasharray=\"4 3\"/>\n";
    for (int np = b.n_plus.lo; np <= b.n_plus.hi; ++np) {
        for (int nm = b.n_minus.lo; nm <= b.n_minus.hi; ++nm) {
            const Inertia i{np, nm, n - np - nm};
            if (!b.contains(i)) continue;
            std::string cls = "unknown";
            std::string fill = "lightgray";
            if (set.achieved.count(i)) {
                cls = "achieved";
                fill = "black";
            } else if (excluded.count(i)) {
                cls = "excluded";
                fill = "white";
            }
            s << "<circle class=\"" << cls << "\" cx=\"" << x(np) << "\" cy=\"" << y(nm) << "\" r=\"8\" fill=\"" << fill
              << "\" stroke=\"black\"/>\n";
        }
    }
    s << "</svg>\n";
    return s.str();
}

CurveSamples sample_curves(const WeightedSignedGraph& g, const CrossingProfile& profile) {
    double t_min = 0.5;
    double t_max = 2.0;
    if (!profile.crossings.empty()) {
        t_min = to_double(profile.crossings.front().interval.lo);
        t_max = to_double(profile.crossings.back().interval.hi);
    }
    const double lo = t_min / 2;
    const double hi = 2 * t_max;
    std::vector<double> ts;
    const int log_points = 128;
    for (int i = 0; i <= log_points; ++i) ts.push_back(lo * std::pow(hi / lo, static_cast<double>(i) / log_points));
    for (int i = 0; i < 64; ++i) ts.push_back(lo + (hi - lo) * (i + 0.5) / 64);
    std::sort(ts.begin(), ts.end());

    CurveSamples out;
    for (const double t : ts) {
        out.t.push_back(t);
        out.eigenvalues.push_back(eigenvalues_float(gamma_t(g, from_double(t))));
    }
    return out;
}

std::string curves_svg(const CurveSamples& samples) {
    const int width = 640;
    const int height = 420;
    const int margin = 50;
    double t_lo = samples.t.front();
    double t_hi = samples.t.back();
    double y_lo = 0;
    double y_hi = 0;
    for (const auto& row : samples.eigenvalues) {
        for (const double v : row) {
            y_lo = std::min(y_lo, v);
            y_hi = std::max(y_hi, v);
        }
    }
    if (y_hi - y_lo < 1e-9) {
        y_lo -= 1;
        y_hi += 1;
    }
    if (t_hi - t_lo < 1e-12) t_hi = t_lo + 1;
    auto px = [&](double t) { return margin + (width - 2 * margin) * (t - t_lo) / (t_hi - t_lo); };
    auto py = [&](double v) { return height - margin - (height - 2 * margin) * (v - y_lo) / (y_hi - y_lo); };

    std::ostringstream s;
    s << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << width << "\" height=\"" << height << "\">\n"
      << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
      << "<line x1=\"" << margin << "\" y1=\"" << fmt(py(0)) << "\" x2=\"" << width - margin << "\" y2=\"" << fmt(py(0))
      << "\" stroke=\"gray\" stroke-dasharray=\"4 3\"/>\n"
      << "<text x=\"" << width / 2 << "\" y=\"" << height - 12 << "\" font-size=\"14\" text-anchor=\"middle\">t</text>\n"
      << "<text x=\"" << margin << "\" y=\"" << height - margin + 18 << "\" font-size=\"12\">" << fmt(t_lo) << "</text>\n"
      << "<text x=\"" << width - margin << "\" y=\"" << height - margin + 18 << "\" font-size=\"12\" text-anchor=\"end\">"
      << fmt(t_hi) << "</text>\n";
    const std::size_t n = samples.eigenvalues.empty() ? 0 : samples.eigenvalues.front().size();
    for (std::size_t k = 0; k < n; ++k) {
        s << "<polyline class=\"eigenvalue\" fill=\"none\" stroke=\"hsl(" << (k * 360 / std::max<std::size_t>(n, 1))
          << ",70%,40%)\" points=\"";
        for (std::size_t i = 0; i < samples.t.size(); ++i) {
            s << fmt(px(samples.t[i])) << ',' << fmt(py(samples.eigenvalues[i][k])) << ' ';
        }
        s << "\"/>\n";
    }
    s << "</svg>\n";
    return s.str();
}

std::string sweep_csv(const WeightedSignedGraph& g, const std::vector<SweepPoint>& sweep) {
    std::ostringstream s;
    s << 't';
    for (int i = 1; i <= g.order(); ++i) s << ",lambda" << i;
    s << '\n' << std::setprecision(12);
    for (const auto& p : sweep) {
        s << to_double(p.t);
        for (const double v : eigenvalues_float(gamma_t(g, p.t))) s << ',' << (std::abs(v) < 1e-12 ? 0.0 : v);
        s << '\n';
    }
    return s.str();
}

}  // namespace signed_inertia
