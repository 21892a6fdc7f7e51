#include "signed_inertia/crossing.hpp"

#include "signed_inertia/laplacian.hpp"

#include <algorithm>
#include <cstdlib>
#include <future>
#include <numeric>
#include <stdexcept>
#include <string>
#include <thread>

namespace signed_inertia {

Rational CrossingPolynomial::coefficient(int k) const {
    if (k < k_min || k > k_max) return 0;
    return a[static_cast<std::size_t>(k - k_min)];
}

RationalPolynomial CrossingPolynomial::polynomial() const {
    std::vector<Rational> coeffs(static_cast<std::size_t>(k_max) + 1);
    for (int k = k_min; k <= k_max; ++k) {
        coeffs[static_cast<std::size_t>(k)] = k % 2 == 0 ? coefficient(k) : Rational(-coefficient(k));
    }
    return RationalPolynomial(std::move(coeffs));
}

namespace {

// C(m, r), saturating just above `limit`.
std::uint64_t binomial_capped(std::uint64_t m, std::uint64_t r, std::uint64_t limit) {
    if (r > m) return 0;
    r = std::min(r, m - r);
    unsigned __int128 acc = 1;
    for (std::uint64_t i = 1; i <= r; ++i) {
        acc = acc * (m - r + i) / i;
        if (acc > limit) return limit + 1;
    }
    return static_cast<std::uint64_t>(acc);
}

struct ForestEnumerator {
    const WeightedSignedGraph& g;
    int need;                    // n - c edges per forest
    std::vector<Rational> sums;  // indexed by negative-edge count

    void run(std::size_t from, int chosen, int negatives, const Rational& product, std::vector<int>& parent) {
        if (chosen == need) {
            sums[static_cast<std::size_t>(negatives)] += product;
            return;
        }
        const std::size_t m = g.size();
        for (std::size_t i = from; i + static_cast<std::size_t>(need - chosen) <= m; ++i) {
            take(i, chosen, negatives, product, parent);
        }
    }

    void take(std::size_t i, int chosen, int negatives, const Rational& product, std::vector<int>& parent) {
        const auto& e = g.graph().edges()[i];
        const int ru = root(parent, e.u - 1);
        const int rv = root(parent, e.v - 1);
        if (ru == rv) return;
        std::vector<int> saved = parent;
        parent[static_cast<std::size_t>(ru)] = rv;
        run(i + 1, chosen + 1, negatives + (e.sign == Sign::negative ? 1 : 0), product * abs(g.weight(i)), parent);
        parent = std::move(saved);
    }

    static int root(const std::vector<int>& parent, int x) {
        while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)];
        return x;
    }
};

unsigned worker_count() {
    if (const char* env = std::getenv("SIGNED_INERTIA_THREADS")) {
        const int v = std::atoi(env);
        if (v >= 1) return static_cast<unsigned>(v);
    }
    return std::max(1u, std::min(8u, std::thread::hardware_concurrency()));
}

}  // namespace

CrossingPolynomial crossing_poly_forest(const WeightedSignedGraph& g, std::uint64_t cap) {
    const auto profile = component_profile(g.graph());
    const int need = g.order() - profile.c;
    const std::uint64_t subsets = binomial_capped(g.size(), static_cast<std::uint64_t>(need), cap);
    if (subsets > cap) {
        throw BudgetExceeded("forest enumeration needs more than " + std::to_string(cap) +
                             " edge subsets; use the char-poly method");
    }

    CrossingPolynomial out;
    out.k_min = profile.c_plus - profile.c;
    out.k_max = g.order() - profile.c_minus;
    std::vector<Rational> sums(static_cast<std::size_t>(need) + 1);

    std::vector<int> identity(static_cast<std::size_t>(g.order()));
    std::iota(identity.begin(), identity.end(), 0);
    if (need == 0) {
        sums[0] = 1;
    } else if (subsets < 50'000 || worker_count() == 1) {
        ForestEnumerator fe{g, need, std::vector<Rational>(sums.size())};
        fe.run(0, 0, 0, Rational(1), identity);
        sums = std::move(fe.sums);
    } else {
        // Partition by the first chosen edge; partial sums merge exactly.
        const std::size_t firsts = g.size() - static_cast<std::size_t>(need) + 1;
        const unsigned workers = std::min<unsigned>(worker_count(), static_cast<unsigned>(firsts));
        std::vector<std::future<std::vector<Rational>>> parts;
        for (unsigned w = 0; w < workers; ++w) {
            parts.push_back(std::async(std::launch::async, [&, w] {
                ForestEnumerator fe{g, need, std::vector<Rational>(sums.size())};
                for (std::size_t i = w; i < firsts; i += workers) {
                    std::vector<int> parent = identity;
                    fe.take(i, 0, 0, Rational(1), parent);
                }
                return std::move(fe.sums);
            }));
        }
        for (auto& part : parts) {
            const auto partial = part.get();
            for (std::size_t k = 0; k < sums.size(); ++k) sums[k] += partial[k];
        }
    }

    out.a.resize(static_cast<std::size_t>(out.k_max - out.k_min) + 1);
    for (std::size_t k = 0; k < sums.size(); ++k) {
        if (sums[k] == 0) continue;
        const int kk = static_cast<int>(k);
        if (kk < out.k_min || kk > out.k_max) throw std::logic_error("forest with out-of-range negative edge count");
        out.a[static_cast<std::size_t>(kk - out.k_min)] = sums[k];
    }
    return out;
}

RationalPolynomial crossing_poly_charpoly(const WeightedSignedGraph& g) {
    const auto profile = component_profile(g.graph());
    const int k_max = g.order() - profile.c_minus;
    const int nodes = k_max + 1;
    std::vector<Rational> xs;
    std::vector<Rational> ys;
    for (int i = 1; i <= nodes; ++i) {
        const Rational t = i;
        xs.push_back(t);
        ys.push_back(char_poly(weighted_laplacian(gamma_t(g, t))).coefficient(profile.c));
    }
    // Lagrange interpolation.
    RationalPolynomial result;
    for (int i = 0; i < nodes; ++i) {
        RationalPolynomial basis = RationalPolynomial::constant(1);
        Rational denom = 1;
        for (int j = 0; j < nodes; ++j) {
            if (j == i) continue;
            basis *= RationalPolynomial({-xs[static_cast<std::size_t>(j)], Rational(1)});
            denom *= xs[static_cast<std::size_t>(i)] - xs[static_cast<std::size_t>(j)];
        }
        result += basis * Rational(ys[static_cast<std::size_t>(i)] / denom);
    }
    return result;
}

RationalPolynomial crossing_polynomial(const WeightedSignedGraph& g) {
    const auto profile = component_profile(g.graph());
    const auto subsets = binomial_capped(g.size(), static_cast<std::uint64_t>(g.order() - profile.c), kForestEnumerationCap);
    if (subsets <= kForestEnumerationCap) return crossing_poly_forest(g).polynomial();
    return crossing_poly_charpoly(g);
}

CrossingProfile crossing_profile(const WeightedSignedGraph& g) { return crossing_profile(g, crossing_polynomial(g)); }

CrossingProfile crossing_profile(const WeightedSignedGraph& g, const RationalPolynomial& m) {
    if (m.is_zero()) throw std::logic_error("crossing polynomial vanishes identically");
    CrossingProfile out;
    out.tau = component_profile(g.graph()).tau;
    out.polynomial = m;
    const auto reduced = m.shift_down(m.valuation());
    int total = 0;
    for (const auto& root : isolate_positive_roots(reduced)) {
        Crossing c{root.interval, root.multiplicity, rational_root_in(reduced, root.interval)};
        total += c.multiplicity;
        out.crossings.push_back(std::move(c));
    }
    if (total != out.tau) {
        throw std::logic_error("crossing multiplicities sum to " + std::to_string(total) + " but tau = " +
                               std::to_string(out.tau));
    }
    return out;
}

std::vector<std::pair<Rational, bool>> sweep_samples(const CrossingProfile& profile) {
    std::vector<std::pair<Rational, bool>> out;
    const auto& cs = profile.crossings;
    if (cs.empty()) {
        out.push_back({Rational(1), false});
        return out;
    }
    out.push_back({cs.front().interval.lo / 2, false});
    for (std::size_t i = 0; i < cs.size(); ++i) {
        if (cs[i].exact) out.push_back({*cs[i].exact, true});
        if (i + 1 < cs.size()) {
            out.push_back({(cs[i].interval.hi + cs[i + 1].interval.lo) / 2, false});
        }
    }
    out.push_back({cs.back().interval.hi + 1, false});
    return out;
}

std::vector<SweepPoint> inertia_sweep(const WeightedSignedGraph& g) { return inertia_sweep(g, crossing_profile(g)); }

std::vector<SweepPoint> inertia_sweep(const WeightedSignedGraph& g, const CrossingProfile& profile) {
    std::vector<SweepPoint> out;
    const auto& cs = profile.crossings;
    for (const auto& [t, on_crossing] : sweep_samples(profile)) {
        SweepPoint p;
        p.t = t;
        p.on_crossing = on_crossing;
        p.inertia = inertia(gamma_t(g, t));
        if (on_crossing) {
            p.segment_lo = t;
            p.segment_hi = t;
        } else {
            // Crossings strictly left of t.
            const auto left = static_cast<std::size_t>(std::count_if(
                cs.begin(), cs.end(), [&](const Crossing& c) { return c.interval.hi <= t; }));
            p.segment_lo = left == 0 ? Rational(0) : (cs[left - 1].exact ? *cs[left - 1].exact : cs[left - 1].interval.hi);
            if (left < cs.size()) p.segment_hi = cs[left].exact ? *cs[left].exact : cs[left].interval.lo;
        }
        out.push_back(std::move(p));
    }
    return out;
}

}  // namespace signed_inertia
