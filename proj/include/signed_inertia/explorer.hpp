#pragma once

#include "signed_inertia/inertia.hpp"
#include "signed_inertia/signed_graph.hpp"

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace signed_inertia {

struct IntRange {
    int lo = 0;
    int hi = 0;

    bool contains(int x) const { return lo <= x && x <= hi; }
    friend bool operator==(const IntRange&, const IntRange&) = default;
};

struct InertiaBounds {
    IntRange n_plus;
    IntRange n_minus;
    IntRange n_zero;

    bool contains(const Inertia& i) const {
        return n_plus.contains(i.n_plus) && n_minus.contains(i.n_minus) && n_zero.contains(i.n_zero);
    }
};

/// c+ - c <= n+ <= n - c-,  c- - c <= n- <= n - c+,  c <= n0 <= n + 2c - c- - c+.
InertiaBounds inertia_bounds(const SignedGraph& g);

/// Inertias inside the bounds, ascending. There are C(tau + 2, 2) of them.
std::vector<Inertia> lattice_points(const SignedGraph& g);

/// C(tau + 2, 2).
long lattice_capacity(const SignedGraph& g);

/// C(n + 1, 2) - 3 for n >= 3; PreconditionError otherwise.
long vertex_count_capacity(int n);

/// Replayable evidence: inertia(gamma_t(weighting, t)) is the recorded inertia.
struct Witness {
    WeightedSignedGraph weighting;
    Rational t;
    std::string strategy;
};

struct InertiaSet {
    SignedGraph graph;
    std::map<Inertia, Witness> achieved;
    InertiaBounds bounds;
    long lattice_capacity = 0;
    long evaluations = 0;

    std::vector<Inertia> inertias() const;
};

struct ExploreOptions {
    long budget = 5000;
    std::uint64_t seed = 0;
};

/// Best-effort search for achievable inertias; every entry is exact and
/// replayable, so the result is a lower bound on the true set.
InertiaSet explore(const SignedGraph& g, const ExploreOptions& options = {});

/// Replays a witness and returns whether it still realizes `expected`.
bool replay(const Witness& w, const Inertia& expected);

/// Inertias ruled out by the zero-matrix and rank-1 arguments.
std::set<Inertia> impossibility_by_rank(const SignedGraph& g);

/// tau_max over signed graphs on n vertices: n - 1 for n >= 4, exhaustive
/// search below that.
int max_flexibility(int n);

using InertiaPair = std::pair<int, int>;  // (n+, n-)

struct MinkowskiIdentification {
    Vertex left = 0;
    Vertex right = 0;
    std::set<InertiaPair> dot_pairs;
    std::vector<InertiaPair> unresolved;  // outside the explored sumset, inside the bound sumset
    std::vector<InertiaPair> violations;  // outside the bound sumset
};

struct MinkowskiReport {
    bool holds = true;
    std::set<InertiaPair> left_pairs;
    std::set<InertiaPair> right_pairs;
    std::set<InertiaPair> sumset;
    std::vector<MinkowskiIdentification> identifications;
};

/// Explores both operands and every dot product of them, and checks each
/// pair of the product against the sumset of the operands' pairs.
MinkowskiReport minkowski_check(const WeightedSignedGraph& left, const WeightedSignedGraph& right,
                                const ExploreOptions& options = {});

}  // namespace signed_inertia
