#pragma once
// Test-only reference implementations and random generators. Slow on
// purpose: each oracle follows a definition directly.

#include "signed_inertia/crossing.hpp"
#include "signed_inertia/laplacian.hpp"
#include "signed_inertia/signed_graph.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <vector>

namespace oracle {

using namespace signed_inertia;

// Leibniz expansion over all permutations.
inline Rational leibniz_det(const std::vector<std::vector<Rational>>& a) {
    const std::size_t n = a.size();
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    Rational total = 0;
    do {
        int inversions = 0;
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
        }
        Rational term = inversions % 2 ? -1 : 1;
        for (std::size_t i = 0; i < n && term != 0; ++i) term *= a[i][perm[i]];
        total += term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

// det(x I - m) interpolated from Leibniz determinants at x = 0..n.
inline RationalPolynomial char_poly(const SymmetricRationalMatrix& m) {
    const int n = m.order();
    RationalPolynomial result;
    std::vector<Rational> xs;
    std::vector<Rational> ys;
    for (int x = 0; x <= n; ++x) {
        auto rows = m.rows();
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) rows[i][j] = (i == j ? Rational(x) : Rational(0)) - rows[i][j];
        }
        xs.push_back(x);
        ys.push_back(n == 0 ? Rational(1) : leibniz_det(rows));
    }
    for (int i = 0; i <= n; ++i) {
        RationalPolynomial basis = RationalPolynomial::constant(1);
        Rational denom = 1;
        for (int j = 0; j <= n; ++j) {
            if (j == i) continue;
            basis *= RationalPolynomial({-xs[j], Rational(1)});
            denom *= xs[i] - xs[j];
        }
        result += basis * Rational(ys[i] / denom);
    }
    return result;
}

// Laplacian straight from the definition.
inline std::vector<std::vector<Rational>> laplacian(const WeightedSignedGraph& g) {
    const int n = g.order();
    std::vector<std::vector<Rational>> l(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < g.size(); ++i) {
        const auto& e = g.graph().edges()[i];
        l[e.u - 1][e.v - 1] = g.weight(i);
        l[e.v - 1][e.u - 1] = g.weight(i);
        l[e.u - 1][e.u - 1] -= g.weight(i);
        l[e.v - 1][e.v - 1] -= g.weight(i);
    }
    return l;
}

inline int components(int n, const std::vector<std::pair<int, int>>& edges) {
    std::vector<std::vector<int>> adj(n + 1);
    for (auto [u, v] : edges) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    std::vector<bool> seen(n + 1, false);
    int count = 0;
    for (int s = 1; s <= n; ++s) {
        if (seen[s]) continue;
        ++count;
        std::vector<int> stack{s};
        seen[s] = true;
        while (!stack.empty()) {
            const int x = stack.back();
            stack.pop_back();
            for (int y : adj[x]) {
                if (!seen[y]) {
                    seen[y] = true;
                    stack.push_back(y);
                }
            }
        }
    }
    return count;
}

// Every edge subset by bitmask; a subset is a maximal spanning forest when
// it has n - c edges and leaves c components (so no cycle).
inline RationalPolynomial forest_polynomial(const WeightedSignedGraph& g) {
    const int n = g.order();
    const std::size_t m = g.size();
    std::vector<std::pair<int, int>> all;
    for (const auto& e : g.graph().edges()) all.push_back({e.u, e.v});
    const int c = components(n, all);
    std::vector<Rational> sums(n + 1);
    for (unsigned long mask = 0; mask < (1ul << m); ++mask) {
        if (__builtin_popcountl(mask) != n - c) continue;
        std::vector<std::pair<int, int>> chosen;
        Rational prod = 1;
        int neg = 0;
        for (std::size_t i = 0; i < m; ++i) {
            if (!(mask >> i & 1)) continue;
            chosen.push_back(all[i]);
            prod *= abs(g.weight(i));
            neg += g.weight(i) < 0;
        }
        if (components(n, chosen) != c) continue;
        sums[neg] += prod;
    }
    std::vector<Rational> coeffs(n + 1);
    for (int k = 0; k <= n; ++k) coeffs[k] = k % 2 ? Rational(-sums[k]) : sums[k];
    return RationalPolynomial(coeffs);
}

// Depth-first search for a simple cycle carrying both signs.
inline bool has_mixed_cycle(const SignedGraph& g) {
    const int n = g.order();
    std::vector<std::vector<std::pair<int, Sign>>> adj(n + 1);
    for (const auto& e : g.edges()) {
        adj[e.u].push_back({e.v, e.sign});
        adj[e.v].push_back({e.u, e.sign});
    }
    std::vector<bool> on_path(n + 1, false);
    std::function<bool(int, int, int, bool, bool)> go = [&](int start, int x, int len, bool pos, bool neg) {
        for (auto [y, s] : adj[x]) {
            const bool p2 = pos || s == Sign::positive;
            const bool n2 = neg || s == Sign::negative;
            if (y == start && len >= 2 && p2 && n2) return true;
            if (y > start && !on_path[y]) {
                on_path[y] = true;
                const bool found = go(start, y, len + 1, p2, n2);
                on_path[y] = false;
                if (found) return true;
            }
        }
        return false;
    };
    for (int s = 1; s <= n; ++s) {
        on_path[s] = true;
        const bool found = go(s, s, 0, false, false);
        on_path[s] = false;
        if (found) return true;
    }
    return false;
}

using Rng = std::mt19937_64;

inline Rational random_magnitude(Rng& rng, int max_num = 9, int max_den = 5) {
    std::uniform_int_distribution<int> num(1, max_num);
    std::uniform_int_distribution<int> den(1, max_den);
    return ratio(num(rng), den(rng));
}

inline SignedGraph random_signed_graph(Rng& rng, int n, double p_edge, double p_negative) {
    std::bernoulli_distribution edge(p_edge);
    std::bernoulli_distribution negative(p_negative);
    std::vector<SignedEdge> edges;
    for (int u = 1; u <= n; ++u) {
        for (int v = u + 1; v <= n; ++v) {
            if (edge(rng)) edges.push_back({u, v, negative(rng) ? Sign::negative : Sign::positive});
        }
    }
    return SignedGraph(n, edges);
}

inline WeightedSignedGraph random_weighting(Rng& rng, const SignedGraph& g) {
    std::vector<Rational> w;
    for (const auto& e : g.edges()) {
        const Rational x = random_magnitude(rng);
        w.push_back(e.sign == Sign::positive ? x : Rational(-x));
    }
    return WeightedSignedGraph(g, w);
}

// Random graph on 1..max_n vertices with random weights.
inline WeightedSignedGraph random_weighted(Rng& rng, int max_n, double p_edge = 0.5) {
    std::uniform_int_distribution<int> order(1, max_n);
    std::uniform_real_distribution<double> neg(0.2, 0.8);
    const int n = order(rng);
    return random_weighting(rng, random_signed_graph(rng, n, p_edge, neg(rng)));
}

inline SignedGraph random_forest(Rng& rng, int n) {
    std::vector<SignedEdge> edges;
    std::bernoulli_distribution attach(0.8);
    std::bernoulli_distribution negative(0.5);
    for (int v = 2; v <= n; ++v) {
        if (!attach(rng)) continue;
        std::uniform_int_distribution<int> parent(1, v - 1);
        edges.push_back({parent(rng), v, negative(rng) ? Sign::negative : Sign::positive});
    }
    return SignedGraph(n, edges);
}

inline SignedGraph unsigned_graph(int n, const std::vector<std::pair<int, int>>& edges, unsigned negative_mask) {
    std::vector<SignedEdge> out;
    for (std::size_t i = 0; i < edges.size(); ++i) {
        out.push_back({edges[i].first, edges[i].second, (negative_mask >> i & 1) ? Sign::negative : Sign::positive});
    }
    return SignedGraph(n, out);
}

// Small underlying graphs on up to 5 vertices.
inline std::vector<std::pair<int, std::vector<std::pair<int, int>>>> small_catalog() {
    return {
        {2, {{1, 2}}},
        {3, {{1, 2}, {2, 3}}},
        {3, {{1, 2}, {1, 3}, {2, 3}}},
        {4, {{1, 2}, {2, 3}, {3, 4}}},
        {4, {{1, 2}, {1, 3}, {1, 4}}},
        {4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}}},
        {4, {{1, 2}, {1, 3}, {2, 3}, {3, 4}}},
        {4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {3, 4}}},
        {4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}}},
        {4, {{1, 2}, {3, 4}}},
        {5, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 5}}},
        {5, {{1, 2}, {1, 3}, {2, 3}, {3, 4}, {3, 5}, {4, 5}}},
        {5, {{1, 2}, {2, 3}, {3, 1}, {3, 4}, {4, 5}}},
        {5, {{1, 2}, {2, 3}, {3, 4}, {4, 1}, {1, 5}}},
        {5, {{1, 2}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {4, 5}, {2, 5}}},
        {5, {{1, 2}, {2, 3}, {4, 5}}},
        {5, {{1, 2}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}, {3, 4}, {3, 5}, {4, 5}}},
    };
}

inline SignedGraph edges_graph(int n, std::vector<std::tuple<int, int, int>> es) {
    std::vector<SignedEdge> out;
    for (auto [u, v, s] : es) out.push_back({u, v, s > 0 ? Sign::positive : Sign::negative});
    return SignedGraph(n, out);
}

// Unit-weighted reference graphs.
inline SignedGraph double_triangle() {
    return edges_graph(5, {{1, 2, 1}, {1, 3, -1}, {2, 3, -1}, {3, 4, 1}, {3, 5, -1}, {4, 5, -1}});
}
inline SignedGraph triple_triangle() {
    return edges_graph(7, {{1, 2, 1}, {1, 3, -1}, {2, 3, -1}, {3, 4, 1}, {3, 5, -1}, {4, 5, -1}, {5, 6, 1}, {5, 7, -1}, {6, 7, -1}});
}
inline SignedGraph k4_path() {
    return edges_graph(4, {{1, 2, 1}, {2, 3, 1}, {3, 4, 1}, {2, 4, -1}, {1, 4, -1}, {1, 3, -1}});
}
inline SignedGraph clique(int k) {
    std::vector<SignedEdge> e;
    for (int u = 1; u <= k; ++u) {
        for (int v = u + 1; v <= k; ++v) e.push_back({u, v, Sign::positive});
    }
    return SignedGraph(k, e);
}
inline SignedGraph k3_join_k3() { return negative_join(clique(3), clique(3)); }

}  // namespace oracle
