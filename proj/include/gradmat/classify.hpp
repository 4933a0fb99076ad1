#pragma once

/// Counting and enumeration of isomorphism types of good C_n-gradings on
/// M_m(k): compositions of m into n parts, the divisor lattice, the sets A_d
/// and B_d, the exact orbit-count formula, a brute-force orbit oracle and the
/// prime-power closed form.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <vector>

#include "gradmat/common.hpp"
#include "gradmat/group.hpp"
#include "gradmat/scalar.hpp"

namespace gradmat {

inline constexpr std::int64_t kDefaultEnumerationBudget = 5'000'000;

inline BigInt binomial(std::int64_t n, std::int64_t k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    BigInt r = 1;
    for (std::int64_t i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

struct CompositionProfile {
    std::int64_t n = 0;
    std::vector<std::int64_t> parts;

    std::int64_t m() const {
        return std::accumulate(parts.begin(), parts.end(), std::int64_t{0});
    }
    bool operator==(const CompositionProfile&) const = default;
};

/// All (k_0,...,k_{n-1}) with nonnegative parts summing to m, lexicographic.
inline std::vector<CompositionProfile>
enumerate_compositions(std::int64_t n, std::int64_t m,
                       std::int64_t budget = kDefaultEnumerationBudget) {
    if (n < 1) throw invalid_argument("need n >= 1");
    if (m < 0) throw invalid_argument("need m >= 0");
    if (binomial(m + n - 1, n - 1) > budget)
        throw resource_limit("composition count exceeds enumeration budget of " +
                             std::to_string(budget));
    std::vector<CompositionProfile> out;
    std::vector<std::int64_t> cur(static_cast<std::size_t>(n), 0);
    // recursive lexicographic fill of positions 0..n-2; last part is forced
    auto rec = [&](auto&& self, std::int64_t pos, std::int64_t left) -> void {
        if (pos == n - 1) {
            cur[static_cast<std::size_t>(pos)] = left;
            out.push_back({n, cur});
            return;
        }
        for (std::int64_t v = 0; v <= left; ++v) {
            cur[static_cast<std::size_t>(pos)] = v;
            self(self, pos + 1, left - v);
        }
    };
    rec(rec, 0, m);
    return out;
}

inline CompositionProfile profile_of_tuple(const std::vector<GroupElement>& g,
                                           std::int64_t n) {
    CompositionProfile p;
    p.n = n;
    p.parts.assign(static_cast<std::size_t>(n), 0);
    for (const auto& x : g) {
        if (x.coords.size() != 1 || x.coords[0] < 0 || x.coords[0] >= n)
            throw invalid_argument("tuple element not in C_n");
        ++p.parts[static_cast<std::size_t>(x.coords[0])];
    }
    return p;
}

struct DivisorLattice {
    std::int64_t n = 0, m = 0;
    std::vector<std::int64_t> d;                           // sorted
    std::map<std::int64_t, std::vector<std::int64_t>> d0;  // maximal strict divisors in d
};

/// D(n,m) = { d | n : (n/d) | m }, closed under gcd, always containing n.
inline DivisorLattice divisor_lattice(std::int64_t n, std::int64_t m) {
    if (n < 1 || m < 1) throw invalid_argument("need n, m >= 1");
    DivisorLattice lat;
    lat.n = n;
    lat.m = m;
    for (std::int64_t d = 1; d <= n; ++d)
        if (n % d == 0 && m % (n / d) == 0) lat.d.push_back(d);
    for (std::int64_t d : lat.d) {
        std::vector<std::int64_t> strict;
        for (std::int64_t e : lat.d)
            if (e != d && d % e == 0) strict.push_back(e);
        std::vector<std::int64_t> maximal;
        for (std::int64_t e : strict) {
            bool dominated = false;
            for (std::int64_t f : strict)
                if (f != e && f % e == 0) { dominated = true; break; }
            if (!dominated) maximal.push_back(e);
        }
        lat.d0[d] = std::move(maximal);
    }
    // gcd closure is a theorem; keep it as a cheap structural self-check
    for (std::int64_t a : lat.d)
        for (std::int64_t b : lat.d)
            if (!std::binary_search(lat.d.begin(), lat.d.end(), std::gcd(a, b)))
                throw internal_error("divisor lattice not gcd-closed");
    return lat;
}

inline bool in_lattice(const DivisorLattice& lat, std::int64_t d) {
    return std::binary_search(lat.d.begin(), lat.d.end(), d);
}

/// |A_d|: compositions fixed by the d-step shift, i.e. of period dividing d.
inline BigInt a_size(std::int64_t n, std::int64_t m, std::int64_t d) {
    auto lat = divisor_lattice(n, m);
    if (!in_lattice(lat, d)) throw invalid_argument("d not in the divisor lattice");
    return binomial(m * d / n + d - 1, d - 1);
}

/// |B_d|: compositions with orbit length exactly d, by inclusion-exclusion
/// over the primes p of d with d/p in the lattice.
inline BigInt b_size(std::int64_t n, std::int64_t m, std::int64_t d) {
    auto lat = divisor_lattice(n, m);
    if (!in_lattice(lat, d)) throw invalid_argument("d not in the divisor lattice");
    std::vector<std::int64_t> primes;
    for (std::int64_t p = 2, t = d; t > 1; ++p)
        if (t % p == 0) {
            while (t % p == 0) t /= p;
            if (d % p == 0 && in_lattice(lat, d / p)) primes.push_back(p);
        }
    BigInt total = 0;
    for (std::uint64_t mask = 0; mask < (1ULL << primes.size()); ++mask) {
        std::int64_t idx = d;
        int bits = 0;
        for (std::size_t i = 0; i < primes.size(); ++i)
            if (mask >> i & 1) {
                idx /= primes[i];
                ++bits;
            }
        if (!in_lattice(lat, idx))
            throw internal_error("inclusion-exclusion index left the lattice");
        BigInt term = binomial(m * idx / n + idx - 1, idx - 1);
        total += bits % 2 ? -term : term;
    }
    if (total < 0) throw internal_error("negative |B_d|");
    if (total % d != 0) throw internal_error("|B_d| not divisible by d");
    return total;
}

/// Number of isomorphism types of good C_n-gradings on M_m(k):
/// sum over the lattice of |B_d|/d.
inline BigInt count_good_formula(std::int64_t n, std::int64_t m) {
    auto lat = divisor_lattice(n, m);
    BigInt total = 0;
    for (std::int64_t d : lat.d) {
        BigInt b = b_size(n, m, d);
        if (b % d != 0) throw internal_error("non-exact division in the counting formula");
        total += b / d;
    }
    return total;
}

/// Lexicographically minimal rotation of a profile's parts.
inline std::vector<std::int64_t> minimal_rotation(const std::vector<std::int64_t>& v) {
    std::vector<std::int64_t> best = v;
    std::vector<std::int64_t> cur = v;
    for (std::size_t s = 1; s < v.size(); ++s) {
        std::rotate(cur.begin(), cur.begin() + 1, cur.end());
        if (cur < best) best = cur;
    }
    return best;
}

struct OrbitCount {
    BigInt count = 0;
    std::vector<CompositionProfile> representatives; // minimal rotations, sorted
    std::map<std::int64_t, BigInt> by_orbit_length;  // d -> number of orbits of length d
};

/// Brute-force oracle: enumerate all compositions and group them by the
/// cyclic-shift orbit, keyed on the minimal rotation.
inline OrbitCount count_good_orbits(std::int64_t n, std::int64_t m,
                                    std::int64_t budget = kDefaultEnumerationBudget) {
    auto all = enumerate_compositions(n, m, budget);
    std::map<std::vector<std::int64_t>, std::int64_t> orbits; // canonical -> orbit size
    for (const auto& p : all) ++orbits[minimal_rotation(p.parts)];
    OrbitCount out;
    out.count = static_cast<std::int64_t>(orbits.size());
    for (const auto& [rep, size] : orbits) {
        out.representatives.push_back({n, rep});
        out.by_orbit_length[size] += 1;
    }
    return out;
}

/// Closed form for n = p^r: sum over i of (|A_{p^i}| - |A_{p^{i-1}}|)/p^i,
/// with the convention that A_d is empty when p^{r-i} does not divide m.
inline BigInt count_prime_power(std::int64_t p, std::int64_t r, std::int64_t m) {
    if (!is_prime(p)) throw invalid_argument("p must be prime");
    if (r < 1 || m < 1) throw invalid_argument("need r, m >= 1");
    std::int64_t n = 1;
    for (std::int64_t i = 0; i < r; ++i) n *= p;
    auto a_of = [&](std::int64_t i) -> BigInt { // |A_{p^i}|, 0 outside the lattice
        if (i < 0) return 0;
        std::int64_t d = 1;
        for (std::int64_t t = 0; t < i; ++t) d *= p;
        if ((m * d) % n != 0) return 0;
        return binomial(m * d / n + d - 1, d - 1);
    };
    BigInt total = 0;
    std::int64_t pi = 1;
    for (std::int64_t i = 0; i <= r; ++i) {
        BigInt b = a_of(i) - a_of(i - 1);
        if (b < 0) throw internal_error("negative term in prime-power closed form");
        if (b % pi != 0) throw internal_error("non-exact division in prime-power closed form");
        total += b / pi;
        pi *= p;
    }
    return total;
}

} // namespace gradmat
