#include "signed_inertia/explorer.hpp"

#include "signed_inertia/crossing.hpp"
#include "signed_inertia/laplacian.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <stdexcept>

namespace signed_inertia {

InertiaBounds inertia_bounds(const SignedGraph& g) {
    const auto p = component_profile(g);
    const int n = g.order();
    return {{p.c_plus - p.c, n - p.c_minus}, {p.c_minus - p.c, n - p.c_plus}, {p.c, n + 2 * p.c - p.c_minus - p.c_plus}};
}

std::vector<Inertia> lattice_points(const SignedGraph& g) {
    const auto b = inertia_bounds(g);
    std::vector<Inertia> out;
    for (int np = b.n_plus.lo; np <= b.n_plus.hi; ++np) {
        for (int nm = b.n_minus.lo; nm <= b.n_minus.hi; ++nm) {
            const Inertia i{np, nm, g.order() - np - nm};
            if (b.contains(i)) out.push_back(i);
        }
    }
    return out;
}

long lattice_capacity(const SignedGraph& g) {
    const long tau = component_profile(g).tau;
    return (tau + 2) * (tau + 1) / 2;
}

long vertex_count_capacity(int n) {
    if (n < 3) throw PreconditionError("vertex_count_capacity needs n >= 3");
    return static_cast<long>(n + 1) * n / 2 - 3;
}

std::vector<Inertia> InertiaSet::inertias() const {
    std::vector<Inertia> out;
    for (const auto& [i, w] : achieved) out.push_back(i);
    return out;
}

bool replay(const Witness& w, const Inertia& expected) { return inertia(gamma_t(w.weighting, w.t)) == expected; }

std::set<Inertia> impossibility_by_rank(const SignedGraph& g) {
    std::set<Inertia> out;
    const int n = g.order();
    if (g.size() == 0) return out;
    out.insert({0, 0, n});
    if (!classify_clique_join(g)) {
        out.insert({1, 0, n - 1});
        out.insert({0, 1, n - 1});
    }
    return out;
}

int max_flexibility(int n) {
    if (n < 1) throw PreconditionError("max_flexibility needs n >= 1");
    if (n >= 4) return n - 1;
    std::vector<std::pair<int, int>> pairs;
    for (int u = 1; u <= n; ++u) {
        for (int v = u + 1; v <= n; ++v) pairs.push_back({u, v});
    }
    int best = 0;
    long total = 1;
    for (std::size_t i = 0; i < pairs.size(); ++i) total *= 3;
    for (long code = 0; code < total; ++code) {
        std::vector<SignedEdge> edges;
        long rest = code;
        for (const auto& [u, v] : pairs) {
            const long digit = rest % 3;
            rest /= 3;
            if (digit == 1) edges.push_back({u, v, Sign::positive});
            if (digit == 2) edges.push_back({u, v, Sign::negative});
        }
        best = std::max(best, component_profile(SignedGraph(n, std::move(edges))).tau);
    }
    return best;
}

namespace {

// Simplest rational (smallest denominator) in the open interval (lo, hi),
// 0 < lo < hi.
Rational simplest_between(Rational lo, Rational hi) {
    // Continued-fraction walk.
    BigInt fl;
    mpz_fdiv_q(fl.get_mpz_t(), lo.get_num_mpz_t(), lo.get_den_mpz_t());
    if (Rational(fl + 1) < hi) return Rational(fl + 1);
    // lo and hi share the integer part fl: recurse on the reciprocals.
    const Rational flr(fl);
    const Rational inner = simplest_between(1 / (hi - flr), 1 / (lo - flr));
    return flr + 1 / inner;
}

WeightedSignedGraph subgraph_on_block(const WeightedSignedGraph& g, const Block& b) {
    std::map<Vertex, Vertex> relabel;
    for (const Vertex v : b.vertices) relabel.emplace(v, static_cast<Vertex>(relabel.size()) + 1);
    std::vector<WeightedSignedGraph::WeightedEdge> edges;
    for (const auto i : b.edge_indices) {
        const auto& e = g.graph().edges()[i];
        edges.push_back({relabel.at(e.u), relabel.at(e.v), g.weight(i)});
    }
    return WeightedSignedGraph::from_edges(static_cast<int>(b.vertices.size()), edges);
}

class Explorer {
public:
    Explorer(const SignedGraph& g, const ExploreOptions& options)
        : g_(g), options_(options), profile_(component_profile(g)), blocks_(blocks(g)), rng_(options.seed) {
        result_.graph = g;
        result_.bounds = inertia_bounds(g);
        result_.lattice_capacity = lattice_capacity(g);
        const auto excluded = impossibility_by_rank(g);
        for (const auto& i : lattice_points(g)) {
            if (!excluded.count(i)) ++target_;
        }
        for (const auto& b : blocks_) {
            if (b.is_mixed(g)) mixed_.push_back(b);
        }
    }

    InertiaSet run() {
        const auto unit = WeightedSignedGraph::unit(g_);
        consider(unit, "unit-sweep", true);
        block_scalings();
        chained_triangles();
        structured_random();
        return std::move(result_);
    }

private:
    bool done() const {
        return result_.evaluations >= options_.budget || static_cast<long>(result_.achieved.size()) >= target_;
    }

    bool known(const Inertia& i) const { return result_.achieved.count(i) > 0; }

    void evaluate(const WeightedSignedGraph& w, const Rational& t, const std::string& strategy) {
        if (done()) return;
        ++result_.evaluations;
        const Inertia i = inertia(gamma_t(w, t));
        result_.achieved.try_emplace(i, Witness{w, t, strategy});
    }

    // Sweeps w, evaluating only samples whose inertia (predicted from the
    // crossing multiplicities) is not yet known. Irrational crossings that
    // would give a new on-crossing inertia are snapped to a rational t.
    void consider(const WeightedSignedGraph& w, const std::string& strategy, bool align = false) {
        if (done()) return;
        ++result_.evaluations;  // crossing profile
        CrossingProfile profile;
        try {
            profile = crossing_profile(w);
        } catch (const BudgetExceeded&) {
            return;
        }
        const int base_plus = profile_.c_plus - profile_.c;
        const int base_minus = g_.order() - profile_.c_plus;
        int passed = 0;
        const auto predicted_between = [&](int s) { return Inertia{base_plus + s, base_minus - s, profile_.c}; };
        const auto predicted_on = [&](int s, int k) { return Inertia{base_plus + s, base_minus - s - k, profile_.c + k}; };

        if (!known(predicted_between(0))) {
            evaluate(w, profile.crossings.empty() ? Rational(1) : Rational(profile.crossings.front().interval.lo / 2), strategy);
        }
        for (std::size_t i = 0; i < profile.crossings.size() && !done(); ++i) {
            const auto& c = profile.crossings[i];
            if (!known(predicted_on(passed, c.multiplicity))) {
                if (c.exact) {
                    evaluate(w, *c.exact, strategy);
                } else {
                    snap(w, profile, i, strategy + "+snap");
                }
            }
            passed += c.multiplicity;
            if (!known(predicted_between(passed))) {
                const Rational t = i + 1 < profile.crossings.size()
                                       ? Rational((c.interval.hi + profile.crossings[i + 1].interval.lo) / 2)
                                       : Rational(c.interval.hi + 1);
                evaluate(w, t, strategy);
            }
        }
        if (align && mixed_.size() >= 2) align_blocks(w, strategy + "+align");
    }

    // M(t) up to a constant, of the whole graph or of a single block.
    Rational coefficient_at(const WeightedSignedGraph& w, const Rational& t, const Block* scope) const {
        if (scope) return char_poly(weighted_laplacian(gamma_t(subgraph_on_block(w, *scope), t))).coefficient(1);
        return char_poly(weighted_laplacian(gamma_t(w, t))).coefficient(profile_.c);
    }

    // Moves one edge weight so that t0 becomes an exact zero of M. M(t0) is
    // affine in each single weight. Only edges in `edges` are touched.
    std::optional<WeightedSignedGraph> solve_root(const WeightedSignedGraph& w, const Rational& t0,
                                                  const std::vector<std::size_t>& edges,
                                                  const Block* scope = nullptr) const {
        const Rational f1 = coefficient_at(w, t0, scope);
        if (f1 == 0) return w;
        // Among the admissible edges, take the smallest relative change.
        std::optional<WeightedSignedGraph> best;
        Rational best_change;
        for (const auto e : edges) {
            const Rational x1 = w.weight(e);
            const Rational x2 = 2 * x1;
            const Rational f2 = coefficient_at(w.with_weight(e, x2), t0, scope);
            if (f1 == f2) continue;
            const Rational x = x1 - f1 * (x2 - x1) / (f2 - f1);
            if (sgn(x) != sgn(x1)) continue;
            const Rational change = abs(Rational(x / x1 - 1));
            if (!best || change < best_change) {
                best = w.with_weight(e, x);
                best_change = change;
            }
        }
        return best;
    }

    std::vector<std::size_t> mixed_edges() const {
        std::vector<std::size_t> out;
        for (const auto& b : mixed_) out.insert(out.end(), b.edge_indices.begin(), b.edge_indices.end());
        std::sort(out.begin(), out.end());
        return out;
    }

    static Rational rational_near(const RationalPolynomial& m, RootInterval iv) {
        const auto reduced = m.shift_down(m.valuation());
        const auto sqf = square_free_part(reduced);
        iv = refine(sqf, iv, iv.lo / 256);
        return simplest_between(iv.lo, iv.hi);
    }

    void snap(const WeightedSignedGraph& w, const CrossingProfile& profile, std::size_t index, const std::string& strategy) {
        const Rational t0 = rational_near(profile.polynomial, profile.crossings[index].interval);
        if (auto snapped = solve_root(w, t0, mixed_edges())) evaluate(*snapped, t0, strategy);
    }

    static std::vector<RootInterval> block_roots(const WeightedSignedGraph& sub, RationalPolynomial& m) {
        m = crossing_polynomial(sub);
        std::vector<RootInterval> out;
        for (const auto& r : isolate_positive_roots(m.shift_down(m.valuation()))) out.push_back(r.interval);
        return out;
    }

    // Places a root of one mixed block and a root of another on the same
    // rational t0, producing a double crossing.
    void align_blocks(const WeightedSignedGraph& w, const std::string& strategy) {
        for (std::size_t a = 0; a < mixed_.size(); ++a) {
            for (std::size_t b = a + 1; b < mixed_.size(); ++b) {
                RationalPolynomial ma;
                RationalPolynomial mb;
                const auto roots_a = block_roots(subgraph_on_block(w, mixed_[a]), ma);
                const auto roots_b = block_roots(subgraph_on_block(w, mixed_[b]), mb);
                for (const auto& ra : roots_a) {
                    for (const auto& rb : roots_b) {
                        if (done()) return;
                        ++result_.evaluations;
                        const Rational t0 = rational_near(ma, ra);
                        auto placed = solve_root(w, t0, mixed_[a].edge_indices, &mixed_[a]);
                        if (!placed) continue;
                        // Rescale block b so its root lands near t0, then pin it.
                        const Rational r = rational_near(mb, rb) / t0;
                        auto weights = placed->weights();
                        for (const auto i : mixed_[b].edge_indices) {
                            if (g_.edges()[i].sign == Sign::negative) weights[i] *= r;
                        }
                        auto pinned = solve_root(WeightedSignedGraph(g_, std::move(weights)), t0, mixed_[b].edge_indices, &mixed_[b]);
                        if (!pinned) continue;
                        evaluate(*pinned, t0, strategy);
                    }
                }
            }
        }
    }

    void block_scalings() {
        if (mixed_.empty()) return;
        static const std::vector<Rational> factors{ratio(1, 4), ratio(1, 2), ratio(1, 1), ratio(2, 1), ratio(4, 1)};
        const auto unit = WeightedSignedGraph::unit(g_);
        long combos = 1;
        for (std::size_t i = 0; i < mixed_.size() && combos <= 625; ++i) combos *= static_cast<long>(factors.size());
        const bool exhaustive = combos <= 625;
        const long count = exhaustive ? combos : 625;
        std::uniform_int_distribution<std::size_t> pick(0, factors.size() - 1);
        for (long code = 0; code < count && !done(); ++code) {
            auto weights = unit.weights();
            long rest = code;
            bool identity = true;
            for (const auto& b : mixed_) {
                const std::size_t f = exhaustive ? static_cast<std::size_t>(rest % 5) : pick(rng_);
                rest /= 5;
                if (factors[f] != 1) identity = false;
                for (const auto i : b.edge_indices) {
                    if (g_.edges()[i].sign == Sign::negative) weights[i] *= factors[f];
                }
            }
            if (identity) continue;
            consider(WeightedSignedGraph(g_, std::move(weights)), "block-scaling", true);
        }
    }

    // k mixed triangles (one positive edge each) whose block-cut tree is a path.
    std::optional<std::vector<Block>> triangle_chain() const {
        if (profile_.c != 1 || blocks_.empty() || blocks_.size() != mixed_.size()) return std::nullopt;
        std::map<Vertex, int> membership;
        for (const auto& b : blocks_) {
            if (b.vertices.size() != 3 || b.edge_indices.size() != 3) return std::nullopt;
            int positives = 0;
            for (const auto i : b.edge_indices) positives += g_.edges()[i].sign == Sign::positive;
            if (positives != 1) return std::nullopt;
            for (const Vertex v : b.vertices) ++membership[v];
        }
        // Walk the chain from an end block.
        auto cut_vertices = [&](const Block& b) {
            std::vector<Vertex> cuts;
            for (const Vertex v : b.vertices) {
                if (membership[v] > 2) return std::vector<Vertex>{-1, -1, -1};
                if (membership[v] == 2) cuts.push_back(v);
            }
            return cuts;
        };
        std::vector<std::size_t> order;
        std::vector<bool> used(blocks_.size(), false);
        std::size_t current = blocks_.size();
        for (std::size_t i = 0; i < blocks_.size(); ++i) {
            const auto cuts = cut_vertices(blocks_[i]);
            if (cuts.size() > 2) return std::nullopt;
            if (cuts.size() <= 1 && current == blocks_.size()) current = i;
        }
        if (current == blocks_.size()) return std::nullopt;
        while (current != blocks_.size()) {
            order.push_back(current);
            used[current] = true;
            std::size_t next = blocks_.size();
            for (const Vertex v : cut_vertices(blocks_[current])) {
                for (std::size_t j = 0; j < blocks_.size(); ++j) {
                    if (!used[j] && std::binary_search(blocks_[j].vertices.begin(), blocks_[j].vertices.end(), v)) next = j;
                }
            }
            current = next;
        }
        if (order.size() != blocks_.size()) return std::nullopt;
        std::vector<Block> out;
        for (const auto i : order) out.push_back(blocks_[i]);
        return out;
    }

    void chained_triangles() {
        const auto chain = triangle_chain();
        if (!chain) return;
        const int k = static_cast<int>(chain->size());
        const auto unit = WeightedSignedGraph::unit(g_);
        for (int a = 0; a < k && !done(); ++a) {
            for (int b = 0; a + b < k && !done(); ++b) {
                std::vector<Rational> factors;
                for (int i = 1; i <= a; ++i) factors.push_back(ratio(2, i));
                for (int i = 0; i < k - a - b; ++i) factors.push_back(ratio(4, 2 * a + 1));
                for (int i = a + 1; i <= a + b; ++i) factors.push_back(ratio(2, i));
                auto weights = unit.weights();
                for (int p = 0; p < k; ++p) {
                    for (const auto i : (*chain)[static_cast<std::size_t>(p)].edge_indices) {
                        if (g_.edges()[i].sign == Sign::negative) weights[i] *= factors[static_cast<std::size_t>(p)];
                    }
                }
                consider(WeightedSignedGraph(g_, std::move(weights)), "lattice-witness");
            }
        }
    }

    // Sparse perturbations of the unit weighting first (a few edges set to
    // small ratios), then dense random weightings with numerators and
    // denominators up to 8.
    void structured_random() {
        if (mixed_.empty()) return;
        static const std::vector<Rational> ladder{ratio(2, 1), ratio(1, 2), ratio(3, 1), ratio(1, 3), ratio(3, 2), ratio(2, 3)};
        const auto unit = WeightedSignedGraph::unit(g_);
        const auto edges = mixed_edges();
        // Every single-edge change by 2 or 1/2.
        for (const auto e : edges) {
            for (std::size_t f = 0; f < 2 && !done(); ++f) {
                consider(unit.with_weight(e, unit.weight(e) * ladder[f]), "sparse-perturbation");
            }
        }
        std::uniform_int_distribution<std::size_t> pick_edge(0, edges.size() - 1);
        std::uniform_int_distribution<std::size_t> pick_factor(0, ladder.size() - 1);
        std::uniform_int_distribution<int> small(1, 8);
        std::uniform_int_distribution<int> coin(0, 2);
        for (long round = 0; !done(); ++round) {
            auto weights = unit.weights();
            if (coin(rng_) != 0) {
                const std::size_t changes = 2 + static_cast<std::size_t>(round % 3);
                for (std::size_t c = 0; c < changes; ++c) {
                    const auto e = edges[pick_edge(rng_)];
                    weights[e] *= ladder[pick_factor(rng_) % (round % 2 == 0 ? 2 : ladder.size())];
                }
                consider(WeightedSignedGraph(g_, std::move(weights)), "sparse-perturbation");
            } else {
                for (auto& x : weights) x *= ratio(small(rng_), small(rng_));
                consider(WeightedSignedGraph(g_, std::move(weights)), "random-weighting");
            }
        }
    }

    const SignedGraph& g_;
    ExploreOptions options_;
    ComponentProfile profile_;
    std::vector<Block> blocks_;
    std::vector<Block> mixed_;
    std::mt19937_64 rng_;
    InertiaSet result_;
    long target_ = 0;
};

}  // namespace

InertiaSet explore(const SignedGraph& g, const ExploreOptions& options) {
    if (options.budget < 1) throw PreconditionError("explore needs a budget of at least 1");
    return Explorer(g, options).run();
}

MinkowskiReport minkowski_check(const WeightedSignedGraph& left, const WeightedSignedGraph& right,
                                const ExploreOptions& options) {
    auto pairs_of = [](const InertiaSet& s) {
        std::set<InertiaPair> out;
        for (const auto& [i, w] : s.achieved) out.insert({i.n_plus, i.n_minus});
        return out;
    };
    auto lattice_pairs = [](const SignedGraph& g) {
        std::set<InertiaPair> out;
        for (const auto& i : lattice_points(g)) out.insert({i.n_plus, i.n_minus});
        return out;
    };
    auto sum = [](const std::set<InertiaPair>& a, const std::set<InertiaPair>& b) {
        std::set<InertiaPair> out;
        for (const auto& x : a) {
            for (const auto& y : b) out.insert({x.first + y.first, x.second + y.second});
        }
        return out;
    };

    MinkowskiReport report;
    report.left_pairs = pairs_of(explore(left.graph(), options));
    report.right_pairs = pairs_of(explore(right.graph(), options));
    report.sumset = sum(report.left_pairs, report.right_pairs);
    const auto bound_sumset = sum(lattice_pairs(left.graph()), lattice_pairs(right.graph()));

    for (Vertex va = 1; va <= left.order(); ++va) {
        for (Vertex vb = 1; vb <= right.order(); ++vb) {
            MinkowskiIdentification id;
            id.left = va;
            id.right = vb;
            id.dot_pairs = pairs_of(explore(dot(left, va, right, vb).graph(), options));
            for (const auto& p : id.dot_pairs) {
                if (report.sumset.count(p)) continue;
                if (bound_sumset.count(p)) {
                    id.unresolved.push_back(p);
                } else {
                    id.violations.push_back(p);
                    report.holds = false;
                }
            }
            report.identifications.push_back(std::move(id));
        }
    }
    return report;
}

}  // namespace signed_inertia
