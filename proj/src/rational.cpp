#include "signed_inertia/rational.hpp"

#include <cctype>
#include <cmath>
#include <stdexcept>

namespace signed_inertia {

namespace {

bool is_integer_literal(std::string_view s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    }
    return true;
}

}  // namespace

Rational ratio(long num, long den) {
    if (den == 0) throw std::invalid_argument("zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

Rational parse_rational(std::string_view text) {
    const auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
    if (!is_integer_literal(num) || !is_integer_literal(den) || den[0] == '-' || den[0] == '+') {
        throw std::invalid_argument("malformed rational literal '" + std::string(text) + "'");
    }
    if (num[0] == '+') num.remove_prefix(1);
    BigInt p(std::string(num), 10);
    BigInt q(std::string(den), 10);
    if (q == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    Rational r(p, q);
    r.canonicalize();
    return r;
}

std::string to_string(const Rational& value) {
    if (value.get_den() == 1) return value.get_num().get_str();
    return value.get_num().get_str() + "/" + value.get_den().get_str();
}

std::string to_fraction_string(const Rational& value) {
    return value.get_num().get_str() + "/" + value.get_den().get_str();
}

int sign(const Rational& value) { return sgn(value); }

double to_double(const Rational& value) { return value.get_d(); }

Rational from_double(double value) {
    if (!std::isfinite(value)) throw std::invalid_argument("non-finite double");
    return Rational(value);
}

}  // namespace signed_inertia
