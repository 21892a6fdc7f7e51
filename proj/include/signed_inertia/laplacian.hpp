#pragma once

#include "signed_inertia/inertia.hpp"
#include "signed_inertia/polynomial.hpp"
#include "signed_inertia/signed_graph.hpp"

#include <cstdint>
#include <vector>

namespace signed_inertia {

/// Dense symmetric matrix over Q, stored row-major in full.
class SymmetricRationalMatrix {
public:
    SymmetricRationalMatrix() = default;
    explicit SymmetricRationalMatrix(int order);

    int order() const { return n_; }
    const Rational& at(int i, int j) const { return entries_[index(i, j)]; }
    /// Writes (i, j) and (j, i).
    void set(int i, int j, const Rational& value);
    void add(int i, int j, const Rational& value);

    std::vector<std::vector<Rational>> rows() const;
    Rational trace() const;
    /// Squared Frobenius norm.
    Rational frobenius_squared() const;

    friend SymmetricRationalMatrix operator-(const SymmetricRationalMatrix& a, const SymmetricRationalMatrix& b);
    friend bool operator==(const SymmetricRationalMatrix&, const SymmetricRationalMatrix&) = default;

private:
    std::size_t index(int i, int j) const { return static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(j); }
    int n_ = 0;
    std::vector<Rational> entries_;
};

/// L = A - D with 0-based indices (vertex v sits at row v - 1).
SymmetricRationalMatrix weighted_laplacian(const WeightedSignedGraph& g);

/// det(lambda I - M), monic of degree n, by the Faddeev-LeVerrier
/// recurrence (divisions only by integers 1..n).
RationalPolynomial char_poly(const SymmetricRationalMatrix& m);

Inertia inertia(const WeightedSignedGraph& g);

/// True iff the characteristic polynomial of L is square-free.
bool is_simple_spectrum(const WeightedSignedGraph& g);

struct PerturbOptions {
    std::uint64_t seed = 0;
    int attempts_per_step = 64;
    int max_halvings = 64;
};

/// A sign-consistent reweighting of a connected graph with simple Laplacian
/// spectrum and ||L(g) - L(result)||_F < eps. Throws PreconditionError on a
/// disconnected graph or eps <= 0, BudgetExceeded if the search runs out.
WeightedSignedGraph perturb_simple(const WeightedSignedGraph& g, const Rational& eps, const PerturbOptions& options = {});

/// Floating-point spectrum by cyclic Jacobi rotations, ascending. For
/// plotting and cross-checks only.
std::vector<double> eigenvalues_float(const SymmetricRationalMatrix& m);
std::vector<double> eigenvalues_float(const WeightedSignedGraph& g);

}  // namespace signed_inertia
