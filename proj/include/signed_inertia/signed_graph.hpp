#pragma once

#include "signed_inertia/inertia.hpp"
#include "signed_inertia/rational.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace signed_inertia {

/// Vertices are labeled 1..n throughout the public API.
using Vertex = int;

enum class Sign { positive, negative };

inline Sign opposite(Sign s) { return s == Sign::positive ? Sign::negative : Sign::positive; }

struct SignedEdge {
    Vertex u = 0;  // u < v
    Vertex v = 0;
    Sign sign = Sign::positive;

    friend bool operator==(const SignedEdge&, const SignedEdge&) = default;
};

/// Simple graph with a sign on every edge. Edges are stored sorted by
/// (u, v) with u < v; the index of an edge in edges() is stable and is
/// used to address weights.
class SignedGraph {
public:
    SignedGraph() = default;
    explicit SignedGraph(int n, std::vector<SignedEdge> edges = {});

    int order() const { return n_; }
    const std::vector<SignedEdge>& edges() const { return edges_; }
    std::size_t size() const { return edges_.size(); }
    int positive_edge_count() const;
    int negative_edge_count() const;

    /// Index of edge {u, v}, if present.
    std::optional<std::size_t> find_edge(Vertex u, Vertex v) const;
    bool has_vertex(Vertex v) const { return v >= 1 && v <= n_; }

    /// Same graph with every edge sign flipped.
    SignedGraph negated() const;

    friend bool operator==(const SignedGraph&, const SignedGraph&) = default;

private:
    int n_ = 0;
    std::vector<SignedEdge> edges_;
};

/// A signed graph with a nonzero rational weight per edge whose sign
/// matches the edge sign.
class WeightedSignedGraph {
public:
    WeightedSignedGraph() = default;
    /// weights[i] belongs to graph.edges()[i]. Throws std::invalid_argument
    /// on a zero or sign-inconsistent weight.
    WeightedSignedGraph(SignedGraph graph, std::vector<Rational> weights);

    struct WeightedEdge {
        Vertex u;
        Vertex v;
        Rational weight;
    };
    /// Builds from (u, v, w) triples, inferring each sign from w.
    static WeightedSignedGraph from_edges(int n, const std::vector<WeightedEdge>& edges);
    /// Positive edges weighted +1, negative edges -1.
    static WeightedSignedGraph unit(const SignedGraph& graph);

    const SignedGraph& graph() const { return graph_; }
    const std::vector<Rational>& weights() const { return weights_; }
    int order() const { return graph_.order(); }
    std::size_t size() const { return graph_.size(); }
    const Rational& weight(std::size_t edge_index) const { return weights_.at(edge_index); }

    /// Copy with the weight of one edge replaced (sign must stay consistent).
    WeightedSignedGraph with_weight(std::size_t edge_index, const Rational& w) const;

    friend bool operator==(const WeightedSignedGraph&, const WeightedSignedGraph&) = default;

private:
    SignedGraph graph_;
    std::vector<Rational> weights_;
};

/// Component counts of G, G+ and G-, and the flexibility.
struct ComponentProfile {
    int c = 0;
    int c_plus = 0;
    int c_minus = 0;
    int tau = 0;

    friend bool operator==(const ComponentProfile&, const ComponentProfile&) = default;
};

ComponentProfile component_profile(const SignedGraph& g);

/// Component index (0-based, numbered by smallest vertex) of each vertex
/// 1..n, stored at position v - 1. With a sign given, only edges of that
/// sign are used.
std::vector<int> component_labels(const SignedGraph& g, std::optional<Sign> only = std::nullopt);

struct Block {
    std::vector<Vertex> vertices;          // ascending
    std::vector<std::size_t> edge_indices;  // ascending

    bool has_positive(const SignedGraph& g) const;
    bool has_negative(const SignedGraph& g) const;
    bool is_mixed(const SignedGraph& g) const { return has_positive(g) && has_negative(g); }
};

/// Biconnected components (bridges are two-vertex blocks). Isolated vertices
/// carry no block. Sorted by first vertex, then by edge indices.
std::vector<Block> blocks(const SignedGraph& g);

/// The inertia shared by every consistent weighting, or nullopt when some
/// block mixes signs.
std::optional<Inertia> unique_inertia(const SignedGraph& g);

/// Identifies va in a with vb in b. a keeps its labels; b's vertices other
/// than vb are renumbered n_a + 1, ... in increasing order.
WeightedSignedGraph dot(const WeightedSignedGraph& a, Vertex va, const WeightedSignedGraph& b, Vertex vb);
SignedGraph dot(const SignedGraph& a, Vertex va, const SignedGraph& b, Vertex vb);

/// Disjoint union with every cross pair joined by a negative edge; g2's
/// vertices follow g1's.
SignedGraph negative_join(const SignedGraph& g1, const SignedGraph& g2);

/// All weights times r > 0.
WeightedSignedGraph scale(const WeightedSignedGraph& g, const Rational& r);
/// Negative-edge weights times r > 0.
WeightedSignedGraph scale_negative(const WeightedSignedGraph& g, const Rational& r);
/// The family member with negative weights multiplied by t > 0. Throws
/// PreconditionError("inconsistent weighting") for t <= 0.
WeightedSignedGraph gamma_t(const WeightedSignedGraph& g, const Rational& t);

enum class JoinOrientation { as_is, negated };

struct CliqueJoin {
    int p = 0;  // p <= q
    int q = 0;
    JoinOrientation orientation = JoinOrientation::as_is;

    friend bool operator==(const CliqueJoin&, const CliqueJoin&) = default;
};

/// Recognizes K_p v- K_q (both cliques positive) or its sign flip.
std::optional<CliqueJoin> classify_clique_join(const SignedGraph& g);

/// The +-1 triangle with positive edge {1,2} and negative edges {1,3},{2,3}.
WeightedSignedGraph mixed_triangle();

/// Chain of k mixed triangles r_i^- Gamma with r_i = 2/i for the a + b
/// simple crossings and r_* = 4/(2a+1) for the (k-a-b)-fold crossing.
/// Each triangle is glued at the previous triangle's apex (vertex shared
/// by its two negative edges) to the next triangle's vertex 1.
WeightedSignedGraph build_lattice_witness(int k, int a, int b);

/// Chains triangles at apex-to-vertex-1 as in build_lattice_witness.
WeightedSignedGraph chain_triangles(const std::vector<WeightedSignedGraph>& triangles);

/// Errors that signal a violated precondition (bad vertex, r <= 0, ...).
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Errors that signal an exhausted search budget or enumeration cap.
class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace signed_inertia
