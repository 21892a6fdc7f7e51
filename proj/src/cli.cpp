#include "signed_inertia/cli.hpp"

#include "signed_inertia/crossing.hpp"
#include "signed_inertia/explorer.hpp"
#include "signed_inertia/io.hpp"
#include "signed_inertia/laplacian.hpp"

#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"

namespace signed_inertia {

std::string factored_string(const RationalPolynomial& p, const std::string& variable) {
    if (p.is_zero()) return "0";
    std::string out;
    const Rational lc = p.leading();
    const int v = p.valuation();
    const auto reduced = p.shift_down(v);
    std::string body;
    if (v > 0) body += variable + (v > 1 ? "^" + std::to_string(v) : "");

    const auto factors = square_free_decomposition(reduced);
    for (std::size_t i = 0; i < factors.size(); ++i) {
        RationalPolynomial rest = factors[i];
        if (rest.degree() <= 0) continue;
        const std::string power = i > 0 ? "^" + std::to_string(i + 1) : "";
        for (const auto& root : isolate_positive_roots(rest)) {
            if (auto r = rational_root_in(rest, root.interval)) {
                body += "(" + RationalPolynomial({Rational(-*r), Rational(1)}).to_string(variable) + ")" + power;
                rest = divide(rest, RationalPolynomial({Rational(-*r), Rational(1)})).first;
            }
        }
        if (rest.degree() > 0) body += "(" + rest.to_string(variable) + ")" + power;
    }
    if (lc == -1) {
        out = "-";
    } else if (lc != 1 || body.empty()) {
        out = to_string(lc);
        if (lc.get_den() != 1 && !body.empty()) out = "(" + out + ")";
    }
    return out + body;
}

namespace {

struct Context {
    std::ostream& out;
    std::ostream& err;
    bool json = false;
    std::vector<std::string> echo;
};

void emit(Context& ctx, const SignedGraph* g, Json result, const std::string& text) {
    if (ctx.json) {
        Json report;
        report["command"] = ctx.echo;
        if (g) report["graph"] = graph_summary(*g);
        report["result"] = std::move(result);
        ctx.out << report.dump(2) << '\n';
    } else {
        ctx.out << text;
    }
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot write " + path);
    f << content;
}

std::string summary_text(const SignedGraph& g) {
    const auto p = component_profile(g);
    std::ostringstream s;
    s << "n = " << g.order() << ", m+ = " << g.positive_edge_count() << ", m- = " << g.negative_edge_count()
      << ", c = " << p.c << ", c+ = " << p.c_plus << ", c- = " << p.c_minus << ", tau = " << p.tau << '\n';
    return s.str();
}

Json interval_json(const RootInterval& iv) { return Json::array({to_fraction_string(iv.lo), to_fraction_string(iv.hi)}); }

void cmd_info(Context& ctx, const std::string& path) {
    const auto w = read_graph_file(path);
    const auto& g = w.graph();
    const auto u = unique_inertia(g);
    Json r;
    r["unique_inertia"] = u ? to_json(*u) : Json(nullptr);
    r["lattice_capacity"] = lattice_capacity(g);
    r["blocks"] = blocks(g).size();
    std::ostringstream s;
    s << summary_text(g) << "blocks: " << blocks(g).size() << '\n'
      << "unique inertia: " << (u ? to_string(*u) : std::string("no")) << '\n'
      << "lattice capacity: " << lattice_capacity(g) << '\n';
    emit(ctx, &g, r, s.str());
}

void cmd_inertia(Context& ctx, const std::string& path, const std::string& t_text) {
    const auto w = read_graph_file(path);
    Rational t = 1;
    if (!t_text.empty()) {
        try {
            t = parse_rational(t_text);
        } catch (const std::invalid_argument& e) {
            throw ParseError(0, std::string("--t: ") + e.what());
        }
    }
    const auto i = inertia(gamma_t(w, t));
    emit(ctx, &w.graph(), {{"t", to_fraction_string(t)}, {"inertia", to_json(i)}},
         "inertia at t = " + to_string(t) + ": n+ = " + std::to_string(i.n_plus) + ", n- = " + std::to_string(i.n_minus) +
             ", n0 = " + std::to_string(i.n_zero) + '\n');
}

void cmd_crossing(Context& ctx, const std::string& path, const std::string& method) {
    const auto w = read_graph_file(path);
    Json r;
    std::ostringstream s;
    std::optional<RationalPolynomial> forest;
    std::optional<RationalPolynomial> charpoly;
    if (method == "forest" || method == "both") {
        const auto cp = crossing_poly_forest(w);
        forest = cp.polynomial();
        Json a = Json::object();
        for (int k = cp.k_min; k <= cp.k_max; ++k) a[std::to_string(k)] = to_fraction_string(cp.coefficient(k));
        r["forest"] = {{"k_min", cp.k_min}, {"k_max", cp.k_max}, {"a", a}, {"polynomial", to_json(*forest)}};
        s << "M = " << forest->to_string() << " (" << factored_string(*forest) << ")";
    }
    if (method == "charpoly" || method == "both") {
        charpoly = crossing_poly_charpoly(w);
        r["charpoly"] = to_json(*charpoly);
        if (!forest) s << "M ~ " << charpoly->to_string() << " (" << factored_string(*charpoly) << ")";
    }
    if (forest && charpoly) {
        const auto kappa = proportionality_constant(*charpoly, *forest);
        r["agree"] = kappa.has_value();
        r["constant"] = kappa ? Json(to_fraction_string(*kappa)) : Json(nullptr);
        s << (kappa ? "; methods agree up to constant " + to_string(*kappa) : std::string("; methods DISAGREE"));
    }
    s << '\n';
    const auto poly = forest ? *forest : *charpoly;
    const auto profile = crossing_profile(w, poly);
    Json cs = Json::array();
    for (const auto& c : profile.crossings) {
        cs.push_back({{"interval", interval_json(c.interval)},
                      {"multiplicity", c.multiplicity},
                      {"exact", c.exact ? Json(to_fraction_string(*c.exact)) : Json(nullptr)}});
        s << "crossing " << (c.exact ? "t = " + to_string(*c.exact)
                                     : "in (" + to_string(c.interval.lo) + ", " + to_string(c.interval.hi) + ")")
          << ", multiplicity " << c.multiplicity << '\n';
    }
    r["crossings"] = cs;
    r["tau"] = profile.tau;
    s << "tau = " << profile.tau << '\n';
    emit(ctx, &w.graph(), r, s.str());
}

void cmd_sweep(Context& ctx, const std::string& path, const std::string& plot, const std::string& csv) {
    const auto w = read_graph_file(path);
    const auto profile = crossing_profile(w);
    const auto sweep = inertia_sweep(w, profile);
    Json pts = Json::array();
    std::ostringstream s;
    for (const auto& p : sweep) {
        pts.push_back({{"t", to_fraction_string(p.t)},
                       {"inertia", to_json(p.inertia)},
                       {"on_crossing", p.on_crossing},
                       {"segment", Json::array({to_fraction_string(p.segment_lo),
                                                p.segment_hi ? Json(to_fraction_string(*p.segment_hi)) : Json("inf")})}});
        s << "t = " << to_string(p.t) << (p.on_crossing ? " (crossing)" : "") << ": " << p.inertia << '\n';
    }
    if (!plot.empty()) write_file(plot, curves_svg(sample_curves(w, profile)));
    if (!csv.empty()) write_file(csv, sweep_csv(w, sweep));
    emit(ctx, &w.graph(), {{"samples", pts}}, s.str());
}

void cmd_unique(Context& ctx, const std::string& path) {
    const auto w = read_graph_file(path);
    const auto u = unique_inertia(w.graph());
    emit(ctx, &w.graph(), {{"unique", u.has_value()}, {"inertia", u ? to_json(*u) : Json(nullptr)}},
         u ? "unique: " + to_string(*u) + '\n' : std::string("not unique: some block mixes signs\n"));
}

void cmd_blocks(Context& ctx, const std::string& path) {
    const auto w = read_graph_file(path);
    const auto& g = w.graph();
    Json arr = Json::array();
    std::ostringstream s;
    for (const auto& b : blocks(g)) {
        Json edges = Json::array();
        for (const auto i : b.edge_indices) edges.push_back(Json::array({g.edges()[i].u, g.edges()[i].v}));
        arr.push_back({{"vertices", b.vertices}, {"edges", edges}, {"mixed", b.is_mixed(g)}});
        s << "block {";
        for (std::size_t i = 0; i < b.vertices.size(); ++i) s << (i ? "," : "") << b.vertices[i];
        s << "}" << (b.is_mixed(g) ? " mixed" : b.has_positive(g) ? " positive" : " negative") << '\n';
    }
    emit(ctx, &g, {{"blocks", arr}}, s.str());
}

void cmd_explore(Context& ctx, const std::string& path, long budget, std::uint64_t seed, const std::string& lattice) {
    const auto w = read_graph_file(path);
    const auto& g = w.graph();
    const auto set = explore(g, {budget, seed});
    const auto excluded = impossibility_by_rank(g);
    Json arr = Json::array();
    std::ostringstream s;
    s << "found " << set.achieved.size() << " of at most " << set.lattice_capacity << " inertias (" << set.evaluations
      << " evaluations)\n";
    for (const auto& [i, wit] : set.achieved) {
        arr.push_back({{"inertia", to_json(i)},
                       {"t", to_fraction_string(wit.t)},
                       {"strategy", wit.strategy},
                       {"weights", weighting_json(wit.weighting)}});
        s << i << "  t = " << to_string(wit.t) << "  [" << wit.strategy << "]\n";
    }
    Json ex = Json::array();
    for (const auto& i : excluded) ex.push_back(to_json(i));
    if (!lattice.empty()) write_file(lattice, lattice_svg(set, excluded));
    emit(ctx, &g,
         {{"achieved", arr}, {"excluded", ex}, {"evaluations", set.evaluations}, {"lattice_capacity", set.lattice_capacity}},
         s.str());
}

void cmd_perturb(Context& ctx, const std::string& path, const std::string& eps_text, std::uint64_t seed) {
    const auto w = read_graph_file(path);
    Rational eps;
    try {
        eps = parse_rational(eps_text);
    } catch (const std::invalid_argument& e) {
        throw ParseError(0, std::string("--eps: ") + e.what());
    }
    PerturbOptions opt;
    opt.seed = seed;
    const auto p = perturb_simple(w, eps, opt);
    const Rational dist2 = (weighted_laplacian(w) - weighted_laplacian(p)).frobenius_squared();
    emit(ctx, &w.graph(),
         {{"weights", weighting_json(p)}, {"frobenius_squared", to_fraction_string(dist2)}, {"simple", is_simple_spectrum(p)}},
         format_graph(p) + "# frobenius distance squared " + to_string(dist2) + '\n');
}

void cmd_bounds(Context& ctx, const std::string& path) {
    const auto w = read_graph_file(path);
    const auto& g = w.graph();
    const auto b = inertia_bounds(g);
    const auto excluded = impossibility_by_rank(g);
    auto range = [](const IntRange& r) { return Json::array({r.lo, r.hi}); };
    Json ex = Json::array();
    std::ostringstream s;
    s << "n+ in [" << b.n_plus.lo << ", " << b.n_plus.hi << "], n- in [" << b.n_minus.lo << ", " << b.n_minus.hi
      << "], n0 in [" << b.n_zero.lo << ", " << b.n_zero.hi << "]\n"
      << "lattice capacity " << lattice_capacity(g) << '\n';
    for (const auto& i : excluded) {
        ex.push_back(to_json(i));
        s << "excluded " << i << '\n';
    }
    emit(ctx, &g,
         {{"n_plus", range(b.n_plus)},
          {"n_minus", range(b.n_minus)},
          {"n_zero", range(b.n_zero)},
          {"lattice_capacity", lattice_capacity(g)},
          {"excluded", ex}},
         s.str());
}

void emit_graph(Context& ctx, const WeightedSignedGraph& g) {
    emit(ctx, &g.graph(), {{"n", g.order()}, {"weights", weighting_json(g)}}, format_graph(g));
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Context ctx{out, err, false, args};
    CLI::App app{"Exact Laplacian inertia tools for weighted signed graphs", "signed-inertia"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_flag("--json", ctx.json, "JSON report on standard output");

    std::string path;
    std::function<void()> action;

    auto with_file = [&](CLI::App* sub) { sub->add_option("graph", path, "graph file")->required(); };

    auto* info = app.add_subcommand("info", "graph summary");
    with_file(info);
    info->callback([&] { action = [&] { cmd_info(ctx, path); }; });

    std::string t_text;
    auto* inertia_cmd = app.add_subcommand("inertia", "exact inertia of Gamma(t)");
    with_file(inertia_cmd);
    inertia_cmd->add_option("--t", t_text, "t as p/q (default 1)");
    inertia_cmd->callback([&] { action = [&] { cmd_inertia(ctx, path, t_text); }; });

    std::string method = "forest";
    auto* crossing_cmd = app.add_subcommand("crossing", "crossing polynomial and its zeros");
    with_file(crossing_cmd);
    crossing_cmd->add_option("--method", method)->check(CLI::IsMember({"forest", "charpoly", "both"}));
    crossing_cmd->callback([&] { action = [&] { cmd_crossing(ctx, path, method); }; });

    std::string plot;
    std::string csv;
    auto* sweep_cmd = app.add_subcommand("sweep", "inertia trajectory in t");
    with_file(sweep_cmd);
    sweep_cmd->add_option("--plot", plot, "eigenvalue curves SVG");
    sweep_cmd->add_option("--csv", csv, "sample eigenvalues CSV");
    sweep_cmd->callback([&] { action = [&] { cmd_sweep(ctx, path, plot, csv); }; });

    auto* unique_cmd = app.add_subcommand("unique", "unique-inertia test");
    with_file(unique_cmd);
    unique_cmd->callback([&] { action = [&] { cmd_unique(ctx, path); }; });

    auto* blocks_cmd = app.add_subcommand("blocks", "block decomposition");
    with_file(blocks_cmd);
    blocks_cmd->callback([&] { action = [&] { cmd_blocks(ctx, path); }; });

    long budget = 5000;
    std::uint64_t seed = 0;
    std::string lattice;
    auto* explore_cmd = app.add_subcommand("explore", "search for achievable inertias");
    with_file(explore_cmd);
    explore_cmd->add_option("--budget", budget)->check(CLI::PositiveNumber);
    explore_cmd->add_option("--seed", seed);
    explore_cmd->add_option("--lattice", lattice, "lattice SVG");
    explore_cmd->callback([&] { action = [&] { cmd_explore(ctx, path, budget, seed, lattice); }; });

    std::string eps;
    auto* perturb_cmd = app.add_subcommand("perturb", "nearby weighting with simple spectrum");
    with_file(perturb_cmd);
    perturb_cmd->add_option("--eps", eps, "Frobenius radius p/q")->required();
    perturb_cmd->add_option("--seed", seed);
    perturb_cmd->callback([&] { action = [&] { cmd_perturb(ctx, path, eps, seed); }; });

    auto* bounds_cmd = app.add_subcommand("bounds", "inertia bounds and rank exclusions");
    with_file(bounds_cmd);
    bounds_cmd->callback([&] { action = [&] { cmd_bounds(ctx, path); }; });

    auto* construct = app.add_subcommand("construct", "build a graph file");
    construct->require_subcommand(1);
    construct->fallthrough();
    std::string a_path;
    std::string b_path;
    int va = 0;
    int vb = 0;
    auto* dot_cmd = construct->add_subcommand("dot", "identify vertex va of A with vb of B");
    dot_cmd->add_option("A", a_path)->required();
    dot_cmd->add_option("va", va)->required();
    dot_cmd->add_option("B", b_path)->required();
    dot_cmd->add_option("vb", vb)->required();
    dot_cmd->callback([&] {
        action = [&] { emit_graph(ctx, dot(read_graph_file(a_path), va, read_graph_file(b_path), vb)); };
    });
    auto* join_cmd = construct->add_subcommand("join", "negative join, all weights -1 on cross edges");
    join_cmd->add_option("G1", a_path)->required();
    join_cmd->add_option("G2", b_path)->required();
    join_cmd->callback([&] {
        action = [&] {
            const auto g1 = read_graph_file(a_path);
            const auto g2 = read_graph_file(b_path);
            const auto joined = negative_join(g1.graph(), g2.graph());
            // Keep the operand weights, unit weights on the new edges.
            auto weights = WeightedSignedGraph::unit(joined).weights();
            const int n1 = g1.order();
            for (std::size_t i = 0; i < g1.size(); ++i) {
                const auto& e = g1.graph().edges()[i];
                weights[*joined.find_edge(e.u, e.v)] = g1.weight(i);
            }
            for (std::size_t i = 0; i < g2.size(); ++i) {
                const auto& e = g2.graph().edges()[i];
                weights[*joined.find_edge(e.u + n1, e.v + n1)] = g2.weight(i);
            }
            emit_graph(ctx, WeightedSignedGraph(joined, std::move(weights)));
        };
    });
    int k = 1;
    int a = 0;
    int b = 0;
    auto* witness_cmd = construct->add_subcommand("witness", "chained-triangle lattice witness");
    witness_cmd->add_option("k", k)->required();
    witness_cmd->add_option("a", a)->required();
    witness_cmd->add_option("b", b)->required();
    witness_cmd->callback([&] { action = [&] { emit_graph(ctx, build_lattice_witness(k, a, b)); }; });

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kParseError;
    }

    try {
        action();
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << '\n';
        return kParseError;
    } catch (const PreconditionError& e) {
        err << "precondition: " << e.what() << '\n';
        return kPrecondition;
    } catch (const BudgetExceeded& e) {
        err << "budget: " << e.what() << '\n';
        return kBudget;
    } catch (const std::invalid_argument& e) {
        err << "precondition: " << e.what() << '\n';
        return kPrecondition;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    return kOk;
}

}  // namespace signed_inertia
