#include "signed_inertia/signed_graph.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <string>

namespace signed_inertia {

namespace {

class DisjointSets {
public:
    explicit DisjointSets(int n) : parent_(static_cast<std::size_t>(n)) { std::iota(parent_.begin(), parent_.end(), 0); }

    int find(int x) {
        while (parent_[static_cast<std::size_t>(x)] != x) {
            auto& p = parent_[static_cast<std::size_t>(x)];
            p = parent_[static_cast<std::size_t>(p)];
            x = p;
        }
        return x;
    }

    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent_[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
        return true;
    }

private:
    std::vector<int> parent_;
};

Sign sign_of(const Rational& w) { return w > 0 ? Sign::positive : Sign::negative; }

}  // namespace

SignedGraph::SignedGraph(int n, std::vector<SignedEdge> edges) : n_(n), edges_(std::move(edges)) {
    if (n < 0) throw PreconditionError("negative vertex count");
    for (auto& e : edges_) {
        if (e.u > e.v) std::swap(e.u, e.v);
        if (e.u == e.v) throw PreconditionError("self-loop at vertex " + std::to_string(e.u));
        if (!has_vertex(e.u) || !has_vertex(e.v)) {
            throw PreconditionError("edge {" + std::to_string(e.u) + "," + std::to_string(e.v) + "} outside 1.." +
                                    std::to_string(n));
        }
    }
    std::sort(edges_.begin(), edges_.end(),
              [](const SignedEdge& a, const SignedEdge& b) { return std::tie(a.u, a.v) < std::tie(b.u, b.v); });
    for (std::size_t i = 1; i < edges_.size(); ++i) {
        if (edges_[i].u == edges_[i - 1].u && edges_[i].v == edges_[i - 1].v) {
            throw PreconditionError("duplicate edge {" + std::to_string(edges_[i].u) + "," +
                                    std::to_string(edges_[i].v) + "}");
        }
    }
}

int SignedGraph::positive_edge_count() const {
    return static_cast<int>(std::count_if(edges_.begin(), edges_.end(), [](const auto& e) { return e.sign == Sign::positive; }));
}

int SignedGraph::negative_edge_count() const { return static_cast<int>(edges_.size()) - positive_edge_count(); }

std::optional<std::size_t> SignedGraph::find_edge(Vertex u, Vertex v) const {
    if (u > v) std::swap(u, v);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), std::pair{u, v},
                               [](const SignedEdge& e, const std::pair<int, int>& key) {
                                   return std::tie(e.u, e.v) < std::tie(key.first, key.second);
                               });
    if (it != edges_.end() && it->u == u && it->v == v) return static_cast<std::size_t>(it - edges_.begin());
    return std::nullopt;
}

SignedGraph SignedGraph::negated() const {
    auto flipped = edges_;
    for (auto& e : flipped) e.sign = opposite(e.sign);
    return SignedGraph(n_, std::move(flipped));
}

WeightedSignedGraph::WeightedSignedGraph(SignedGraph graph, std::vector<Rational> weights)
    : graph_(std::move(graph)), weights_(std::move(weights)) {
    if (weights_.size() != graph_.size()) throw PreconditionError("weight count does not match edge count");
    for (std::size_t i = 0; i < weights_.size(); ++i) {
        const auto& e = graph_.edges()[i];
        if (weights_[i] == 0) {
            throw PreconditionError("zero weight on edge {" + std::to_string(e.u) + "," + std::to_string(e.v) + "}");
        }
        if (sign_of(weights_[i]) != e.sign) {
            throw PreconditionError("inconsistent weighting on edge {" + std::to_string(e.u) + "," +
                                    std::to_string(e.v) + "}");
        }
    }
}

WeightedSignedGraph WeightedSignedGraph::from_edges(int n, const std::vector<WeightedEdge>& edges) {
    std::vector<SignedEdge> signed_edges;
    signed_edges.reserve(edges.size());
    for (const auto& e : edges) {
        if (e.weight == 0) {
            throw PreconditionError("zero weight on edge {" + std::to_string(e.u) + "," + std::to_string(e.v) + "}");
        }
        signed_edges.push_back({e.u, e.v, sign_of(e.weight)});
    }
    SignedGraph g(n, std::move(signed_edges));
    std::vector<Rational> weights(g.size());
    for (const auto& e : edges) weights[*g.find_edge(e.u, e.v)] = e.weight;
    return WeightedSignedGraph(std::move(g), std::move(weights));
}

WeightedSignedGraph WeightedSignedGraph::unit(const SignedGraph& graph) {
    std::vector<Rational> weights;
    weights.reserve(graph.size());
    for (const auto& e : graph.edges()) weights.emplace_back(e.sign == Sign::positive ? 1 : -1);
    return WeightedSignedGraph(graph, std::move(weights));
}

WeightedSignedGraph WeightedSignedGraph::with_weight(std::size_t edge_index, const Rational& w) const {
    auto weights = weights_;
    weights.at(edge_index) = w;
    return WeightedSignedGraph(graph_, std::move(weights));
}

std::vector<int> component_labels(const SignedGraph& g, std::optional<Sign> only) {
    DisjointSets sets(g.order());
    for (const auto& e : g.edges()) {
        if (!only || e.sign == *only) sets.unite(e.u - 1, e.v - 1);
    }
    std::vector<int> label(static_cast<std::size_t>(g.order()), -1);
    std::map<int, int> root_label;
    for (int v = 0; v < g.order(); ++v) {
        const int root = sets.find(v);
        auto [it, inserted] = root_label.try_emplace(root, static_cast<int>(root_label.size()));
        label[static_cast<std::size_t>(v)] = it->second;
    }
    return label;
}

namespace {

int count_components(const SignedGraph& g, std::optional<Sign> only) {
    const auto labels = component_labels(g, only);
    return labels.empty() ? 0 : *std::max_element(labels.begin(), labels.end()) + 1;
}

}  // namespace

ComponentProfile component_profile(const SignedGraph& g) {
    ComponentProfile p;
    p.c = count_components(g, std::nullopt);
    p.c_plus = count_components(g, Sign::positive);
    p.c_minus = count_components(g, Sign::negative);
    p.tau = g.order() + p.c - p.c_plus - p.c_minus;
    return p;
}

bool Block::has_positive(const SignedGraph& g) const {
    return std::any_of(edge_indices.begin(), edge_indices.end(),
                       [&](std::size_t i) { return g.edges()[i].sign == Sign::positive; });
}

bool Block::has_negative(const SignedGraph& g) const {
    return std::any_of(edge_indices.begin(), edge_indices.end(),
                       [&](std::size_t i) { return g.edges()[i].sign == Sign::negative; });
}

std::vector<Block> blocks(const SignedGraph& g) {
    // Hopcroft-Tarjan with an explicit edge stack.
    const int n = g.order();
    std::vector<std::vector<std::pair<int, std::size_t>>> adjacency(static_cast<std::size_t>(n));
    for (std::size_t i = 0; i < g.size(); ++i) {
        const auto& e = g.edges()[i];
        adjacency[static_cast<std::size_t>(e.u - 1)].push_back({e.v - 1, i});
        adjacency[static_cast<std::size_t>(e.v - 1)].push_back({e.u - 1, i});
    }
    std::vector<int> discovery(static_cast<std::size_t>(n), -1);
    std::vector<int> low(static_cast<std::size_t>(n), 0);
    std::vector<std::size_t> edge_stack;
    std::vector<Block> out;
    int timer = 0;

    std::function<void(int, std::optional<std::size_t>)> visit = [&](int v, std::optional<std::size_t> via) {
        discovery[static_cast<std::size_t>(v)] = low[static_cast<std::size_t>(v)] = timer++;
        for (const auto& [w, edge] : adjacency[static_cast<std::size_t>(v)]) {
            if (via && edge == *via) continue;
            if (discovery[static_cast<std::size_t>(w)] == -1) {
                edge_stack.push_back(edge);
                visit(w, edge);
                low[static_cast<std::size_t>(v)] = std::min(low[static_cast<std::size_t>(v)], low[static_cast<std::size_t>(w)]);
                if (low[static_cast<std::size_t>(w)] >= discovery[static_cast<std::size_t>(v)]) {
                    Block block;
                    std::set<Vertex> vertices;
                    while (true) {
                        const std::size_t top = edge_stack.back();
                        edge_stack.pop_back();
                        block.edge_indices.push_back(top);
                        vertices.insert(g.edges()[top].u);
                        vertices.insert(g.edges()[top].v);
                        if (top == edge) break;
                    }
                    block.vertices.assign(vertices.begin(), vertices.end());
                    std::sort(block.edge_indices.begin(), block.edge_indices.end());
                    out.push_back(std::move(block));
                }
            } else if (discovery[static_cast<std::size_t>(w)] < discovery[static_cast<std::size_t>(v)]) {
                edge_stack.push_back(edge);
                low[static_cast<std::size_t>(v)] = std::min(low[static_cast<std::size_t>(v)], discovery[static_cast<std::size_t>(w)]);
            }
        }
    };
    for (int v = 0; v < n; ++v) {
        if (discovery[static_cast<std::size_t>(v)] == -1) visit(v, std::nullopt);
    }
    std::sort(out.begin(), out.end(), [](const Block& a, const Block& b) {
        return std::tie(a.vertices.front(), a.edge_indices) < std::tie(b.vertices.front(), b.edge_indices);
    });
    return out;
}

std::optional<Inertia> unique_inertia(const SignedGraph& g) {
    for (const auto& b : blocks(g)) {
        if (b.is_mixed(g)) return std::nullopt;
    }
    const auto p = component_profile(g);
    return Inertia{p.c_plus - p.c, p.c_minus - p.c, p.c};
}

WeightedSignedGraph dot(const WeightedSignedGraph& a, Vertex va, const WeightedSignedGraph& b, Vertex vb) {
    if (!a.graph().has_vertex(va)) throw PreconditionError("invalid vertex " + std::to_string(va) + " for left operand");
    if (!b.graph().has_vertex(vb)) throw PreconditionError("invalid vertex " + std::to_string(vb) + " for right operand");
    const int na = a.order();
    auto relabel = [&](Vertex v) {
        if (v == vb) return va;
        return na + (v < vb ? v : v - 1);
    };
    std::vector<WeightedSignedGraph::WeightedEdge> edges;
    edges.reserve(a.size() + b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        const auto& e = a.graph().edges()[i];
        edges.push_back({e.u, e.v, a.weight(i)});
    }
    for (std::size_t i = 0; i < b.size(); ++i) {
        const auto& e = b.graph().edges()[i];
        edges.push_back({relabel(e.u), relabel(e.v), b.weight(i)});
    }
    return WeightedSignedGraph::from_edges(na + b.order() - 1, edges);
}

SignedGraph dot(const SignedGraph& a, Vertex va, const SignedGraph& b, Vertex vb) {
    return dot(WeightedSignedGraph::unit(a), va, WeightedSignedGraph::unit(b), vb).graph();
}

SignedGraph negative_join(const SignedGraph& g1, const SignedGraph& g2) {
    const int n1 = g1.order();
    std::vector<SignedEdge> edges = g1.edges();
    for (const auto& e : g2.edges()) edges.push_back({e.u + n1, e.v + n1, e.sign});
    for (Vertex u = 1; u <= n1; ++u) {
        for (Vertex v = 1; v <= g2.order(); ++v) edges.push_back({u, v + n1, Sign::negative});
    }
    return SignedGraph(n1 + g2.order(), std::move(edges));
}

namespace {

WeightedSignedGraph rescale(const WeightedSignedGraph& g, const Rational& r, bool negative_only) {
    if (r <= 0) throw PreconditionError("scale factor must be positive, got " + to_string(r));
    auto weights = g.weights();
    for (std::size_t i = 0; i < weights.size(); ++i) {
        if (!negative_only || g.graph().edges()[i].sign == Sign::negative) weights[i] *= r;
    }
    return WeightedSignedGraph(g.graph(), std::move(weights));
}

}  // namespace

WeightedSignedGraph scale(const WeightedSignedGraph& g, const Rational& r) { return rescale(g, r, false); }

WeightedSignedGraph scale_negative(const WeightedSignedGraph& g, const Rational& r) { return rescale(g, r, true); }

WeightedSignedGraph gamma_t(const WeightedSignedGraph& g, const Rational& t) {
    if (t <= 0) throw PreconditionError("inconsistent weighting: t must be positive, got " + to_string(t));
    return rescale(g, t, true);
}

namespace {

// Checks that the edges of `inner` sign form exactly two cliques covering
// all vertices, with every other pair joined by the opposite sign.
std::optional<std::pair<int, int>> two_clique_split(const SignedGraph& g, Sign inner) {
    const auto labels = component_labels(g, inner);
    const int parts = labels.empty() ? 0 : *std::max_element(labels.begin(), labels.end()) + 1;
    if (parts != 2) return std::nullopt;
    for (const auto& e : g.edges()) {
        const bool same = labels[static_cast<std::size_t>(e.u - 1)] == labels[static_cast<std::size_t>(e.v - 1)];
        if (same != (e.sign == inner)) return std::nullopt;
    }
    const int p = static_cast<int>(std::count(labels.begin(), labels.end(), 0));
    return std::pair{p, g.order() - p};
}

}  // namespace

std::optional<CliqueJoin> classify_clique_join(const SignedGraph& g) {
    const long n = g.order();
    if (n < 2 || static_cast<long>(g.size()) != n * (n - 1) / 2) return std::nullopt;
    for (auto [inner, orientation] : {std::pair{Sign::positive, JoinOrientation::as_is},
                                      std::pair{Sign::negative, JoinOrientation::negated}}) {
        if (auto split = two_clique_split(g, inner)) {
            auto [p, q] = *split;
            if (p > q) std::swap(p, q);
            return CliqueJoin{p, q, orientation};
        }
    }
    return std::nullopt;
}

WeightedSignedGraph mixed_triangle() {
    return WeightedSignedGraph::from_edges(3, {{1, 2, 1}, {1, 3, -1}, {2, 3, -1}});
}

WeightedSignedGraph chain_triangles(const std::vector<WeightedSignedGraph>& triangles) {
    if (triangles.empty()) throw PreconditionError("empty triangle chain");
    WeightedSignedGraph out = triangles.front();
    Vertex apex = 3;
    for (std::size_t i = 1; i < triangles.size(); ++i) {
        const int before = out.order();
        out = dot(out, apex, triangles[i], 1);
        // The glued triangle's vertex 3 lands on label before + 2.
        apex = before + 2;
    }
    return out;
}

WeightedSignedGraph build_lattice_witness(int k, int a, int b) {
    if (k < 1 || a < 0 || b < 0) throw PreconditionError("witness needs k >= 1 and a, b >= 0");
    if (a + b >= k) throw PreconditionError("witness needs a + b < k");
    const auto base = mixed_triangle();
    std::vector<WeightedSignedGraph> chain;
    chain.reserve(static_cast<std::size_t>(k));
    for (int i = 1; i <= a; ++i) chain.push_back(scale_negative(base, ratio(2, i)));
    const Rational r_star = ratio(4, 2 * a + 1);
    for (int i = 0; i < k - a - b; ++i) chain.push_back(scale_negative(base, r_star));
    for (int i = a + 1; i <= a + b; ++i) chain.push_back(scale_negative(base, ratio(2, i)));
    return chain_triangles(chain);
}

}  // namespace signed_inertia
