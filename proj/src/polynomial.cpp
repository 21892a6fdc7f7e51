#include "signed_inertia/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace signed_inertia {

std::string to_string(const Inertia& inertia) {
    return "(" + std::to_string(inertia.n_plus) + "," + std::to_string(inertia.n_minus) + "," +
           std::to_string(inertia.n_zero) + ")";
}

std::ostream& operator<<(std::ostream& os, const Inertia& inertia) { return os << to_string(inertia); }

RationalPolynomial::RationalPolynomial(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) {
    trim();
}

RationalPolynomial::RationalPolynomial(std::initializer_list<Rational> coefficients) : coeffs_(coefficients) {
    trim();
}

RationalPolynomial RationalPolynomial::constant(const Rational& c) { return RationalPolynomial({c}); }

RationalPolynomial RationalPolynomial::monomial(const Rational& c, int exponent) {
    std::vector<Rational> v(static_cast<std::size_t>(exponent) + 1);
    v.back() = c;
    return RationalPolynomial(std::move(v));
}

RationalPolynomial RationalPolynomial::from_roots(const std::vector<Rational>& roots) {
    RationalPolynomial p = constant(1);
    for (const auto& r : roots) p *= RationalPolynomial({-r, Rational(1)});
    return p;
}

void RationalPolynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational RationalPolynomial::coefficient(int exponent) const {
    if (exponent < 0 || exponent > degree()) return 0;
    return coeffs_[static_cast<std::size_t>(exponent)];
}

const Rational& RationalPolynomial::leading() const {
    if (coeffs_.empty()) throw std::logic_error("zero polynomial has no leading coefficient");
    return coeffs_.back();
}

Rational RationalPolynomial::operator()(const Rational& x) const {
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

int RationalPolynomial::sign_at(const Rational& x) const { return sgn((*this)(x)); }

RationalPolynomial RationalPolynomial::derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<Rational> d(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<long>(i);
    return RationalPolynomial(std::move(d));
}

RationalPolynomial RationalPolynomial::monic() const {
    if (is_zero()) return {};
    RationalPolynomial out = *this;
    const Rational lc = leading();
    for (auto& c : out.coeffs_) c /= lc;
    return out;
}

RationalPolynomial RationalPolynomial::scaled_argument(const Rational& s) const {
    RationalPolynomial out = *this;
    Rational power = 1;
    for (auto& c : out.coeffs_) {
        c *= power;
        power *= s;
    }
    out.trim();
    return out;
}

int RationalPolynomial::valuation() const {
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] != 0) return static_cast<int>(i);
    }
    return 0;
}

RationalPolynomial RationalPolynomial::shift_down(int k) const {
    if (k > valuation() && !is_zero()) throw std::invalid_argument("shift_down past the valuation");
    if (is_zero()) return {};
    return RationalPolynomial(std::vector<Rational>(coeffs_.begin() + k, coeffs_.end()));
}

RationalPolynomial& RationalPolynomial::operator+=(const RationalPolynomial& other) {
    if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
    trim();
    return *this;
}

RationalPolynomial& RationalPolynomial::operator-=(const RationalPolynomial& other) {
    if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
    trim();
    return *this;
}

RationalPolynomial& RationalPolynomial::operator*=(const RationalPolynomial& other) {
    if (is_zero() || other.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    std::vector<Rational> out(coeffs_.size() + other.coeffs_.size() - 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < other.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * other.coeffs_[j];
    }
    coeffs_ = std::move(out);
    trim();
    return *this;
}

RationalPolynomial& RationalPolynomial::operator*=(const Rational& c) {
    for (auto& x : coeffs_) x *= c;
    trim();
    return *this;
}

RationalPolynomial RationalPolynomial::operator-() const {
    RationalPolynomial out = *this;
    for (auto& c : out.coeffs_) c = -c;
    return out;
}

std::string RationalPolynomial::to_string(const std::string& variable) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        const Rational& c = coeffs_[static_cast<std::size_t>(k)];
        if (c == 0) continue;
        Rational magnitude = abs(c);
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        const bool unit = magnitude == 1;
        if (k == 0) {
            os << signed_inertia::to_string(magnitude);
            continue;
        }
        if (!unit) {
            if (magnitude.get_den() == 1) {
                os << signed_inertia::to_string(magnitude);
            } else {
                os << "(" << signed_inertia::to_string(magnitude) << ")";
            }
        }
        os << variable;
        if (k > 1) os << "^" << k;
    }
    return os.str();
}

std::pair<RationalPolynomial, RationalPolynomial> divide(const RationalPolynomial& a, const RationalPolynomial& b) {
    if (b.is_zero()) throw std::invalid_argument("polynomial division by zero");
    if (a.degree() < b.degree()) return {RationalPolynomial{}, a};
    std::vector<Rational> rem = a.coefficients();
    const auto& bc = b.coefficients();
    const int db = b.degree();
    std::vector<Rational> quot(static_cast<std::size_t>(a.degree() - db) + 1);
    const Rational& lb = b.leading();
    for (int k = a.degree(); k >= db; --k) {
        const Rational factor = rem[static_cast<std::size_t>(k)] / lb;
        quot[static_cast<std::size_t>(k - db)] = factor;
        if (factor == 0) continue;
        for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(k - db + j)] -= factor * bc[static_cast<std::size_t>(j)];
    }
    rem.resize(static_cast<std::size_t>(db));
    return {RationalPolynomial(std::move(quot)), RationalPolynomial(std::move(rem))};
}

namespace {

// Positive scalar multiple of p with coprime integer coefficients.
RationalPolynomial integer_normalized(const RationalPolynomial& p) {
    if (p.is_zero()) return {};
    BigInt den_lcm = 1;
    for (const auto& c : p.coefficients()) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
    BigInt content = 0;
    for (const auto& c : p.coefficients()) {
        BigInt v = c.get_num() * (den_lcm / c.get_den());
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
    }
    Rational scale(den_lcm, content);
    scale.canonicalize();
    return p * scale;
}

RationalPolynomial exact_quotient(const RationalPolynomial& a, const RationalPolynomial& b) {
    auto [q, r] = divide(a, b);
    if (!r.is_zero()) throw std::logic_error("inexact polynomial quotient");
    return q;
}

}  // namespace

RationalPolynomial primitive_part(const RationalPolynomial& p) {
    RationalPolynomial out = integer_normalized(p);
    if (!out.is_zero() && out.leading() < 0) out = -out;
    return out;
}

RationalPolynomial gcd(RationalPolynomial a, RationalPolynomial b) {
    // Primitive remainder sequence: each pseudo-remainder is reduced to its
    // primitive part before the next step.
    a = primitive_part(a);
    b = primitive_part(b);
    if (a.degree() < b.degree()) std::swap(a, b);
    while (!b.is_zero()) {
        const int delta = a.degree() - b.degree() + 1;
        Rational scale = 1;
        for (int i = 0; i < delta; ++i) scale *= b.leading();
        RationalPolynomial r = divide(a * scale, b).second;
        a = std::move(b);
        b = primitive_part(r);
    }
    return a.monic();
}

std::optional<Rational> proportionality_constant(const RationalPolynomial& p, const RationalPolynomial& q) {
    if (q.is_zero()) return p.is_zero() ? std::optional<Rational>{} : std::nullopt;
    if (p.degree() != q.degree()) return std::nullopt;
    const Rational c = p.leading() / q.leading();
    if (p == q * c) return c;
    return std::nullopt;
}

RationalPolynomial square_free_part(const RationalPolynomial& p) {
    if (p.is_zero()) throw std::invalid_argument("zero polynomial has no square-free part");
    if (p.degree() == 0) return RationalPolynomial::constant(1);
    return exact_quotient(p, gcd(p, p.derivative())).monic();
}

std::vector<RationalPolynomial> square_free_decomposition(const RationalPolynomial& p) {
    if (p.is_zero()) throw std::invalid_argument("zero polynomial has no square-free decomposition");
    std::vector<RationalPolynomial> factors;
    if (p.degree() == 0) return factors;
    const RationalPolynomial f = p.monic();
    const RationalPolynomial df = f.derivative();
    const RationalPolynomial b = gcd(f, df);
    RationalPolynomial c = exact_quotient(f, b);
    RationalPolynomial d = exact_quotient(df, b) - c.derivative();
    while (c.degree() > 0) {
        RationalPolynomial a = gcd(c, d);
        c = exact_quotient(c, a);
        d = exact_quotient(d, a) - c.derivative();
        factors.push_back(std::move(a));
    }
    while (!factors.empty() && factors.back().degree() == 0) factors.pop_back();
    return factors;
}

int sign_changes(const std::vector<Rational>& coefficients) {
    int changes = 0;
    int last = 0;
    for (const auto& c : coefficients) {
        const int s = sgn(c);
        if (s == 0) continue;
        if (last != 0 && s != last) ++changes;
        last = s;
    }
    return changes;
}

Inertia real_rooted_inertia(const RationalPolynomial& p) {
    if (p.is_zero()) throw std::invalid_argument("zero polynomial has no inertia");
    const int n0 = p.valuation();
    const auto& c = p.coefficients();
    const int positive = sign_changes(std::vector<Rational>(c.begin() + n0, c.end()));
    return Inertia{positive, p.degree() - n0 - positive, n0};
}

SturmSequence::SturmSequence(const RationalPolynomial& p) {
    RationalPolynomial a = integer_normalized(square_free_part(p));
    chain_.push_back(a);
    if (a.degree() == 0) return;
    RationalPolynomial b = integer_normalized(a.derivative());
    while (!b.is_zero()) {
        chain_.push_back(b);
        RationalPolynomial r = divide(a, b).second;
        a = std::move(b);
        b = integer_normalized(-r);
    }
}

int SturmSequence::variations_at(const Rational& x) const {
    int changes = 0;
    int last = 0;
    for (const auto& q : chain_) {
        const int s = q.sign_at(x);
        if (s == 0) continue;
        if (last != 0 && s != last) ++changes;
        last = s;
    }
    return changes;
}

int SturmSequence::variations_at_infinity(bool positive) const {
    int changes = 0;
    int last = 0;
    for (const auto& q : chain_) {
        int s = sgn(q.leading());
        if (!positive && q.degree() % 2 == 1) s = -s;
        if (last != 0 && s != last) ++changes;
        last = s;
    }
    return changes;
}

int SturmSequence::count_roots(const Rational& a, const Rational& b) const {
    if (!(a < b)) return 0;
    return variations_at(a) - variations_at(b);
}

int SturmSequence::count_negative_roots() const {
    const int at_zero_root = chain_.front().sign_at(0) == 0 ? 1 : 0;
    return variations_at_infinity(false) - variations_at(0) - at_zero_root;
}

int SturmSequence::count_positive_roots() const { return variations_at(0) - variations_at_infinity(true); }

int SturmSequence::count_real_roots() const {
    return variations_at_infinity(false) - variations_at_infinity(true);
}

namespace {

Rational split_point(const RationalPolynomial& f, const Rational& lo, const Rational& hi) {
    Rational mid = (lo + hi) / 2;
    for (long k = 3; f.sign_at(mid) == 0; ++k) mid = lo + (hi - lo) * Rational(k - 1, 2 * k - 1);
    return mid;
}

void isolate_into(const RationalPolynomial& f, const SturmSequence& sturm, const Rational& lo, const Rational& hi,
                  int count, std::vector<RootInterval>& out) {
    if (count == 0) return;
    if (count == 1) {
        out.push_back({lo, hi});
        return;
    }
    const Rational mid = split_point(f, lo, hi);
    const int left = sturm.count_roots(lo, mid);
    isolate_into(f, sturm, lo, mid, left, out);
    isolate_into(f, sturm, mid, hi, count - left, out);
}

}  // namespace

std::vector<IsolatedRoot> isolate_positive_roots(const RationalPolynomial& p) {
    if (p.is_zero()) throw std::invalid_argument("zero polynomial has no isolated roots");
    RationalPolynomial q = square_free_part(p);
    q = q.shift_down(q.valuation());
    if (q.degree() <= 0) return {};

    // Cauchy bounds on |root| for q and for its reversal.
    const auto& c = q.coefficients();
    Rational upper = 0;
    Rational lower_inv = 0;
    for (std::size_t i = 0; i + 1 < c.size(); ++i) upper = std::max(upper, Rational(abs(c[i] / c.back())));
    for (std::size_t i = 1; i < c.size(); ++i) lower_inv = std::max(lower_inv, Rational(abs(c[i] / c.front())));
    const Rational hi = upper + 1;
    const Rational lo = 1 / (lower_inv + 1);

    const SturmSequence sturm(q);
    std::vector<RootInterval> intervals;
    isolate_into(q, sturm, lo, hi, sturm.count_roots(lo, hi), intervals);

    const auto factors = square_free_decomposition(p);
    std::vector<SturmSequence> factor_sturm;
    factor_sturm.reserve(factors.size());
    for (const auto& f : factors) factor_sturm.emplace_back(f.degree() > 0 ? f : RationalPolynomial::constant(1));

    std::vector<IsolatedRoot> out;
    out.reserve(intervals.size());
    for (const auto& iv : intervals) {
        int multiplicity = 0;
        for (std::size_t i = 0; i < factors.size(); ++i) {
            if (factors[i].degree() > 0 && factor_sturm[i].count_roots(iv.lo, iv.hi) == 1) {
                multiplicity = static_cast<int>(i) + 1;
                break;
            }
        }
        if (multiplicity == 0) throw std::logic_error("root not found in any square-free factor");
        out.push_back({iv, multiplicity});
    }
    return out;
}

RootInterval bisect_once(const RationalPolynomial& square_free, const RootInterval& interval) {
    const Rational mid = split_point(square_free, interval.lo, interval.hi);
    if (square_free.sign_at(interval.lo) * square_free.sign_at(mid) < 0) return {interval.lo, mid};
    return {mid, interval.hi};
}

RootInterval refine(const RationalPolynomial& square_free, RootInterval interval, const Rational& width) {
    while (interval.hi - interval.lo > width) interval = bisect_once(square_free, interval);
    return interval;
}

std::optional<Rational> rational_root_in(const RationalPolynomial& p, const RootInterval& interval) {
    const RationalPolynomial f = primitive_part(square_free_part(p));
    const BigInt lead = f.leading().get_num();
    RootInterval iv = refine(f, interval, Rational(1, lead));
    // A rational root of an integer polynomial has its denominator dividing
    // the leading coefficient, so lead * root is an integer.
    const Rational scaled_lo = iv.lo * lead;
    BigInt k;
    mpz_fdiv_q(k.get_mpz_t(), scaled_lo.get_num_mpz_t(), scaled_lo.get_den_mpz_t());
    for (k += 1;; k += 1) {
        Rational candidate(k, lead);
        candidate.canonicalize();
        if (!(candidate < iv.hi)) break;
        if (f.sign_at(candidate) == 0) return candidate;
    }
    return std::nullopt;
}

}  // namespace signed_inertia
