#include "signed_inertia/laplacian.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace signed_inertia {

SymmetricRationalMatrix::SymmetricRationalMatrix(int order)
    : n_(order), entries_(static_cast<std::size_t>(order) * static_cast<std::size_t>(order)) {}

void SymmetricRationalMatrix::set(int i, int j, const Rational& value) {
    entries_[index(i, j)] = value;
    entries_[index(j, i)] = value;
}

void SymmetricRationalMatrix::add(int i, int j, const Rational& value) {
    entries_[index(i, j)] += value;
    if (i != j) entries_[index(j, i)] += value;
}

std::vector<std::vector<Rational>> SymmetricRationalMatrix::rows() const {
    std::vector<std::vector<Rational>> out(static_cast<std::size_t>(n_));
    for (int i = 0; i < n_; ++i) out[static_cast<std::size_t>(i)].assign(entries_.begin() + static_cast<long>(index(i, 0)), entries_.begin() + static_cast<long>(index(i, 0)) + n_);
    return out;
}

Rational SymmetricRationalMatrix::trace() const {
    Rational t = 0;
    for (int i = 0; i < n_; ++i) t += at(i, i);
    return t;
}

Rational SymmetricRationalMatrix::frobenius_squared() const {
    Rational s = 0;
    for (const auto& x : entries_) s += x * x;
    return s;
}

SymmetricRationalMatrix operator-(const SymmetricRationalMatrix& a, const SymmetricRationalMatrix& b) {
    if (a.n_ != b.n_) throw std::invalid_argument("matrix order mismatch");
    SymmetricRationalMatrix out(a.n_);
    for (std::size_t i = 0; i < a.entries_.size(); ++i) out.entries_[i] = a.entries_[i] - b.entries_[i];
    return out;
}

SymmetricRationalMatrix weighted_laplacian(const WeightedSignedGraph& g) {
    SymmetricRationalMatrix l(g.order());
    for (std::size_t i = 0; i < g.size(); ++i) {
        const auto& e = g.graph().edges()[i];
        const Rational& w = g.weight(i);
        l.add(e.u - 1, e.v - 1, w);
        l.add(e.u - 1, e.u - 1, -w);
        l.add(e.v - 1, e.v - 1, -w);
    }
    return l;
}

RationalPolynomial char_poly(const SymmetricRationalMatrix& m) {
    const int n = m.order();
    std::vector<Rational> c(static_cast<std::size_t>(n) + 1);
    c[static_cast<std::size_t>(n)] = 1;
    if (n == 0) return RationalPolynomial(std::move(c));

    const auto a = m.rows();
    // acc holds M_k; starts at the identity.
    std::vector<std::vector<Rational>> acc(static_cast<std::size_t>(n), std::vector<Rational>(static_cast<std::size_t>(n)));
    for (int i = 0; i < n; ++i) acc[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
    std::vector<std::vector<Rational>> product = acc;

    for (int k = 1; k <= n; ++k) {
        Rational tr = 0;
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                Rational s = 0;
                for (int l = 0; l < n; ++l) {
                    const auto& x = a[static_cast<std::size_t>(i)][static_cast<std::size_t>(l)];
                    if (x != 0) s += x * acc[static_cast<std::size_t>(l)][static_cast<std::size_t>(j)];
                }
                product[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = std::move(s);
            }
            tr += product[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)];
        }
        const Rational ck = -tr / k;
        c[static_cast<std::size_t>(n - k)] = ck;
        for (int i = 0; i < n; ++i) product[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] += ck;
        std::swap(acc, product);
    }
    return RationalPolynomial(std::move(c));
}

Inertia inertia(const WeightedSignedGraph& g) { return real_rooted_inertia(char_poly(weighted_laplacian(g))); }

bool is_simple_spectrum(const WeightedSignedGraph& g) {
    const auto p = char_poly(weighted_laplacian(g));
    return square_free_part(p).degree() == p.degree();
}

namespace {

using Adjacency = std::vector<std::vector<std::pair<int, std::size_t>>>;

Adjacency adjacency_of(const SignedGraph& g) {
    Adjacency adj(static_cast<std::size_t>(g.order()));
    for (std::size_t i = 0; i < g.size(); ++i) {
        const auto& e = g.edges()[i];
        adj[static_cast<std::size_t>(e.u - 1)].push_back({e.v - 1, i});
        adj[static_cast<std::size_t>(e.v - 1)].push_back({e.u - 1, i});
    }
    return adj;
}

// DFS tree from root; returns (parent edge per vertex, depth per vertex).
std::pair<std::vector<std::ptrdiff_t>, std::vector<int>> dfs_tree(const Adjacency& adj, int root) {
    const std::size_t n = adj.size();
    std::vector<std::ptrdiff_t> parent_edge(n, -1);
    std::vector<int> depth(n, -1);
    std::vector<std::pair<int, std::size_t>> stack{{root, 0}};
    depth[static_cast<std::size_t>(root)] = 0;
    while (!stack.empty()) {
        auto& [v, next] = stack.back();
        const auto& nbrs = adj[static_cast<std::size_t>(v)];
        if (next == nbrs.size()) {
            stack.pop_back();
            continue;
        }
        const auto [w, edge] = nbrs[next++];
        if (depth[static_cast<std::size_t>(w)] != -1) continue;
        depth[static_cast<std::size_t>(w)] = depth[static_cast<std::size_t>(v)] + 1;
        parent_edge[static_cast<std::size_t>(w)] = static_cast<std::ptrdiff_t>(edge);
        stack.push_back({w, 0});
    }
    return {parent_edge, depth};
}

int other_end(const SignedEdge& e, int v0) { return e.u - 1 == v0 ? e.v - 1 : e.u - 1; }

// Edge order for the small seed weighting: a long path (double-sweep DFS),
// then pendant attachments growing a spanning tree, then the rest.
std::vector<std::size_t> seeding_order(const SignedGraph& g) {
    const auto adj = adjacency_of(g);
    const auto [ignored, first_depth] = dfs_tree(adj, 0);
    const int start = static_cast<int>(std::max_element(first_depth.begin(), first_depth.end()) - first_depth.begin());
    const auto [parent_edge, depth] = dfs_tree(adj, start);
    int end = static_cast<int>(std::max_element(depth.begin(), depth.end()) - depth.begin());

    std::vector<std::size_t> order;
    std::vector<bool> used(g.size(), false);
    std::vector<bool> in_tree(static_cast<std::size_t>(g.order()), false);
    in_tree[static_cast<std::size_t>(end)] = true;
    while (end != start) {
        const auto edge = static_cast<std::size_t>(parent_edge[static_cast<std::size_t>(end)]);
        order.push_back(edge);
        used[edge] = true;
        end = other_end(g.edges()[edge], end);
        in_tree[static_cast<std::size_t>(end)] = true;
    }
    std::reverse(order.begin(), order.end());

    bool grew = true;
    while (grew) {
        grew = false;
        for (std::size_t i = 0; i < g.size(); ++i) {
            const auto& e = g.edges()[i];
            const bool a = in_tree[static_cast<std::size_t>(e.u - 1)];
            const bool b = in_tree[static_cast<std::size_t>(e.v - 1)];
            if (a != b) {
                order.push_back(i);
                used[i] = true;
                in_tree[static_cast<std::size_t>(e.u - 1)] = in_tree[static_cast<std::size_t>(e.v - 1)] = true;
                grew = true;
            }
        }
    }
    for (std::size_t i = 0; i < g.size(); ++i) {
        if (!used[i]) order.push_back(i);
    }
    return order;
}

// Nonzero eigenvalues simple and nullity equal to the component count.
bool simple_apart_from_components(const SignedGraph& g, const std::vector<std::size_t>& chosen,
                                  const std::vector<Rational>& weights) {
    std::vector<SignedEdge> edges;
    std::vector<WeightedSignedGraph::WeightedEdge> weighted;
    for (std::size_t k = 0; k < chosen.size(); ++k) {
        const auto& e = g.edges()[chosen[k]];
        weighted.push_back({e.u, e.v, weights[k]});
    }
    const auto sub = WeightedSignedGraph::from_edges(g.order(), weighted);
    const int comps = component_profile(sub.graph()).c;
    const auto p = char_poly(weighted_laplacian(sub));
    if (p.valuation() != comps) return false;
    const auto rest = p.shift_down(comps);
    return square_free_part(rest).degree() == rest.degree();
}

}  // namespace

WeightedSignedGraph perturb_simple(const WeightedSignedGraph& g, const Rational& eps, const PerturbOptions& options) {
    if (eps <= 0) throw PreconditionError("eps must be positive");
    if (g.order() == 0 || component_profile(g.graph()).c != 1) throw PreconditionError("perturb_simple needs a connected graph");
    if (is_simple_spectrum(g)) return g;

    std::mt19937_64 rng(options.seed);
    std::uniform_int_distribution<int> jitter(4, 8);
    const auto order = seeding_order(g.graph());

    // Step 1: seed weighting with simple spectrum and tiny norm. Edge j gets
    // magnitude at most eps / 4^(j+1), so ||L(seed)||_F <= 2 * eps / 3.
    std::vector<Rational> seed_weights;
    std::vector<std::size_t> chosen;
    Rational rung = eps / 4;
    for (const std::size_t edge : order) {
        chosen.push_back(edge);
        seed_weights.emplace_back();
        const Rational direction = g.graph().edges()[edge].sign == Sign::positive ? 1 : -1;
        bool ok = false;
        Rational magnitude = rung;
        for (int attempt = 0; attempt < options.attempts_per_step && !ok; ++attempt) {
            seed_weights.back() = direction * magnitude * ratio(jitter(rng), 8);
            ok = simple_apart_from_components(g.graph(), chosen, seed_weights);
            magnitude /= 2;
        }
        if (!ok) throw BudgetExceeded("perturb_simple: no simple seed weighting after " + std::to_string(options.attempts_per_step) + " draws");
        rung /= 4;
    }
    std::vector<Rational> seed(g.size());
    for (std::size_t k = 0; k < chosen.size(); ++k) seed[chosen[k]] = seed_weights[k];

    // Step 2: gamma + s * seed for s = 1/2, 1/4, ...
    const auto base = weighted_laplacian(g);
    const Rational eps_squared = eps * eps;
    Rational s(1, 2);
    for (int h = 0; h < options.max_halvings; ++h, s /= 2) {
        auto weights = g.weights();
        for (std::size_t i = 0; i < weights.size(); ++i) weights[i] += s * seed[i];
        WeightedSignedGraph candidate(g.graph(), std::move(weights));
        if (!is_simple_spectrum(candidate)) continue;
        if ((weighted_laplacian(candidate) - base).frobenius_squared() < eps_squared) return candidate;
    }
    throw BudgetExceeded("perturb_simple: search exhausted at s = " + to_string(s * 2));
}

std::vector<double> eigenvalues_float(const SymmetricRationalMatrix& m) {
    const int n = m.order();
    std::vector<std::vector<double>> a(static_cast<std::size_t>(n), std::vector<double>(static_cast<std::size_t>(n)));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = m.at(i, j).get_d();
    }
    auto off_norm = [&] {
        double s = 0;
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                if (i != j) s += a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] * a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            }
        }
        return std::sqrt(s);
    };
    for (int sweep = 0; sweep < 100 && off_norm() >= 1e-12; ++sweep) {
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                auto& row_p = a[static_cast<std::size_t>(p)];
                auto& row_q = a[static_cast<std::size_t>(q)];
                const double apq = row_p[static_cast<std::size_t>(q)];
                if (apq == 0.0) continue;
                const double theta = (row_q[static_cast<std::size_t>(q)] - row_p[static_cast<std::size_t>(p)]) / (2.0 * apq);
                const double t = std::copysign(1.0, theta) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (int k = 0; k < n; ++k) {
                    const double akp = a[static_cast<std::size_t>(k)][static_cast<std::size_t>(p)];
                    const double akq = a[static_cast<std::size_t>(k)][static_cast<std::size_t>(q)];
                    a[static_cast<std::size_t>(k)][static_cast<std::size_t>(p)] = c * akp - s * akq;
                    a[static_cast<std::size_t>(k)][static_cast<std::size_t>(q)] = s * akp + c * akq;
                }
                for (int k = 0; k < n; ++k) {
                    const double apk = row_p[static_cast<std::size_t>(k)];
                    const double aqk = row_q[static_cast<std::size_t>(k)];
                    row_p[static_cast<std::size_t>(k)] = c * apk - s * aqk;
                    row_q[static_cast<std::size_t>(k)] = s * apk + c * aqk;
                }
            }
        }
    }
    std::vector<double> out(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = a[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)];
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<double> eigenvalues_float(const WeightedSignedGraph& g) { return eigenvalues_float(weighted_laplacian(g)); }

}  // namespace signed_inertia
