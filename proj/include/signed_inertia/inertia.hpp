#pragma once

#include <compare>
#include <ostream>
#include <string>

namespace signed_inertia {

/// Counts of positive, negative and zero eigenvalues, (n+, n-, n0).
struct Inertia {
    int n_plus = 0;
    int n_minus = 0;
    int n_zero = 0;

    int order() const { return n_plus + n_minus + n_zero; }

    auto operator<=>(const Inertia&) const = default;
};

std::string to_string(const Inertia& inertia);
std::ostream& operator<<(std::ostream& os, const Inertia& inertia);

}  // namespace signed_inertia
