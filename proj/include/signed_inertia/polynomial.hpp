#pragma once

#include "signed_inertia/inertia.hpp"
#include "signed_inertia/rational.hpp"

#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace signed_inertia {

/// Dense univariate polynomial over Q. coefficient(i) multiplies x^i.
/// The coefficient vector never carries trailing zeros, so the zero
/// polynomial is the empty vector and has degree -1.
class RationalPolynomial {
public:
    RationalPolynomial() = default;
    explicit RationalPolynomial(std::vector<Rational> coefficients);
    RationalPolynomial(std::initializer_list<Rational> coefficients);

    static RationalPolynomial constant(const Rational& c);
    static RationalPolynomial monomial(const Rational& c, int exponent);
    /// Product of (x - r) over the given roots.
    static RationalPolynomial from_roots(const std::vector<Rational>& roots);

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<Rational>& coefficients() const { return coeffs_; }
    Rational coefficient(int exponent) const;
    const Rational& leading() const;

    Rational operator()(const Rational& x) const;
    /// Sign of p(x) without materializing p(x) in the caller.
    int sign_at(const Rational& x) const;

    RationalPolynomial derivative() const;
    RationalPolynomial monic() const;
    /// p(s * x)
    RationalPolynomial scaled_argument(const Rational& s) const;
    /// Lowest exponent with a nonzero coefficient (0 for the zero polynomial).
    int valuation() const;
    /// p / x^k; requires k <= valuation().
    RationalPolynomial shift_down(int k) const;

    RationalPolynomial& operator+=(const RationalPolynomial& other);
    RationalPolynomial& operator-=(const RationalPolynomial& other);
    RationalPolynomial& operator*=(const RationalPolynomial& other);
    RationalPolynomial& operator*=(const Rational& c);

    friend RationalPolynomial operator+(RationalPolynomial a, const RationalPolynomial& b) { return a += b; }
    friend RationalPolynomial operator-(RationalPolynomial a, const RationalPolynomial& b) { return a -= b; }
    friend RationalPolynomial operator*(RationalPolynomial a, const RationalPolynomial& b) { return a *= b; }
    friend RationalPolynomial operator*(RationalPolynomial a, const Rational& c) { return a *= c; }
    friend RationalPolynomial operator*(const Rational& c, RationalPolynomial a) { return a *= c; }
    RationalPolynomial operator-() const;

    friend bool operator==(const RationalPolynomial&, const RationalPolynomial&) = default;

    /// Human-readable form in the given variable, highest degree first,
    /// e.g. "t^2 - 2t".
    std::string to_string(const std::string& variable = "t") const;

private:
    void trim();
    std::vector<Rational> coeffs_;
};

/// Quotient and remainder of exact division over Q.
std::pair<RationalPolynomial, RationalPolynomial> divide(const RationalPolynomial& a, const RationalPolynomial& b);

/// Monic gcd; the gcd of two zero polynomials is zero.
RationalPolynomial gcd(RationalPolynomial a, RationalPolynomial b);

/// Clears denominators and divides out the integer content, keeping a
/// positive leading coefficient. Roots are unchanged.
RationalPolynomial primitive_part(const RationalPolynomial& p);

/// If p / q is a scalar multiple c, returns c.
std::optional<Rational> proportionality_constant(const RationalPolynomial& p, const RationalPolynomial& q);

/// p / gcd(p, p'), monic. Throws std::invalid_argument for p == 0.
RationalPolynomial square_free_part(const RationalPolynomial& p);

/// Yun decomposition: factors[i] is the monic product of the distinct
/// roots of multiplicity i + 1. p = lc * prod factors[i]^(i+1).
std::vector<RationalPolynomial> square_free_decomposition(const RationalPolynomial& p);

/// Inertia of a real-rooted polynomial by Descartes' rule of signs.
/// Exact only when every root is real (e.g. characteristic polynomials of
/// symmetric matrices). Throws std::invalid_argument for p == 0.
Inertia real_rooted_inertia(const RationalPolynomial& p);

/// Number of sign changes in a coefficient sequence, zeros skipped.
int sign_changes(const std::vector<Rational>& coefficients);

/// Sturm chain of a polynomial.
class SturmSequence {
public:
    explicit SturmSequence(const RationalPolynomial& p);
    int variations_at(const Rational& x) const;
    /// Distinct real roots in the half-open interval (a, b].
    int count_roots(const Rational& a, const Rational& b) const;
    /// Distinct real roots in (-inf, 0) and (0, +inf) respectively.
    int count_negative_roots() const;
    int count_positive_roots() const;
    int count_real_roots() const;

private:
    int variations_at_infinity(bool positive) const;
    std::vector<RationalPolynomial> chain_;
};

/// Open interval (lo, hi) with rational endpoints.
struct RootInterval {
    Rational lo;
    Rational hi;
};

struct IsolatedRoot {
    RootInterval interval;
    int multiplicity = 1;
};

/// Disjoint open intervals, ascending, each holding exactly one distinct
/// positive root of p, together with that root's multiplicity in p.
/// Endpoints are never roots and every lo is strictly positive.
std::vector<IsolatedRoot> isolate_positive_roots(const RationalPolynomial& p);

/// Halves the interval around the unique root of square-free f in it,
/// keeping endpoints off the root set. f must have exactly one root in
/// (lo, hi) and nonzero values at both endpoints.
RootInterval bisect_once(const RationalPolynomial& square_free, const RootInterval& interval);

/// Refines until hi - lo <= width.
RootInterval refine(const RationalPolynomial& square_free, RootInterval interval, const Rational& width);

/// The rational root of p inside the interval, if the root is rational.
/// The interval must isolate a single distinct root of p.
std::optional<Rational> rational_root_in(const RationalPolynomial& p, const RootInterval& interval);

}  // namespace signed_inertia
