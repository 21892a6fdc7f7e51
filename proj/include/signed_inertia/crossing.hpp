#pragma once

#include "signed_inertia/inertia.hpp"
#include "signed_inertia/polynomial.hpp"
#include "signed_inertia/signed_graph.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace signed_inertia {

/// M(Gamma(t)) = sum_k a_k (-t)^k for k in [k_min, k_max], where a_k sums
/// |product of weights| over maximal spanning forests with k negative edges.
struct CrossingPolynomial {
    int k_min = 0;  // c+ - c
    int k_max = 0;  // n - c-
    std::vector<Rational> a;  // a[k - k_min]

    Rational coefficient(int k) const;
    /// The polynomial in t.
    RationalPolynomial polynomial() const;
};

/// Largest number of (n - c)-edge subsets the forest enumeration will visit.
inline constexpr std::uint64_t kForestEnumerationCap = 2'000'000;

/// Forest-sum crossing polynomial. Throws BudgetExceeded when
/// C(m, n - c) exceeds the cap.
CrossingPolynomial crossing_poly_forest(const WeightedSignedGraph& g, std::uint64_t cap = kForestEnumerationCap);

/// Coefficient of lambda^c in det(lambda I - L(Gamma(t))) as a polynomial
/// in t, interpolated exactly at t = 1..k_max+1. Proportional to the
/// forest-sum polynomial by a nonzero constant.
RationalPolynomial crossing_poly_charpoly(const WeightedSignedGraph& g);

/// Forest method when it fits under the cap, char-poly method otherwise.
RationalPolynomial crossing_polynomial(const WeightedSignedGraph& g);

struct Crossing {
    RootInterval interval;
    int multiplicity = 1;
    std::optional<Rational> exact;  // set when the crossing is rational
};

struct CrossingProfile {
    RationalPolynomial polynomial;  // as used for the isolation
    std::vector<Crossing> crossings;  // ascending
    int tau = 0;
};

/// Positive zeros of M with multiplicities. Throws std::logic_error if the
/// multiplicities do not add up to the flexibility.
CrossingProfile crossing_profile(const WeightedSignedGraph& g);
CrossingProfile crossing_profile(const WeightedSignedGraph& g, const RationalPolynomial& m);

struct SweepPoint {
    Rational t;
    Inertia inertia;
    bool on_crossing = false;
    /// Open segment (lo, hi) of constant inertia containing t; nullopt hi
    /// means +infinity. Both equal t for an on-crossing point.
    Rational segment_lo;
    std::optional<Rational> segment_hi;
};

/// Exact inertia of Gamma(t) at one rational sample per constant-inertia
/// segment, plus at every rational crossing. Ascending in t.
std::vector<SweepPoint> inertia_sweep(const WeightedSignedGraph& g);
std::vector<SweepPoint> inertia_sweep(const WeightedSignedGraph& g, const CrossingProfile& profile);

/// Sample values used by inertia_sweep, without computing inertias.
std::vector<std::pair<Rational, bool>> sweep_samples(const CrossingProfile& profile);

}  // namespace signed_inertia
