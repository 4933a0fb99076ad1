#pragma once

/// Dense polynomial arithmetic over GF(p), used to pick deterministic
/// irreducible moduli for finite-field extensions. Coefficients are stored
/// low degree first.

#include <algorithm>
#include <cstdint>
#include <vector>

#include "gradmat/common.hpp"

namespace gradmat::polygf {

using Poly = std::vector<std::int64_t>; // low-degree-first, reduced mod p

inline void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

inline std::int64_t inv_mod(std::int64_t a, std::int64_t p) {
    std::int64_t acc = 1, x = ((a % p) + p) % p, e = p - 2;
    while (e) {
        if (e & 1) acc = acc * x % p;
        x = x * x % p;
        e >>= 1;
    }
    return acc;
}

inline Poly mul(const Poly& a, const Poly& b, std::int64_t p) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    }
    trim(r);
    return r;
}

inline Poly sub(const Poly& a, const Poly& b, std::int64_t p) {
    Poly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) {
        std::int64_t x = (i < a.size() ? a[i] : 0) - (i < b.size() ? b[i] : 0);
        r[i] = (x % p + p) % p;
    }
    trim(r);
    return r;
}

/// Remainder of a modulo the monic polynomial f.
inline Poly mod(Poly a, const Poly& f, std::int64_t p) {
    trim(a);
    const std::size_t d = f.size() - 1;
    while (a.size() > d) {
        std::int64_t c = a.back();
        std::size_t shift = a.size() - 1 - d;
        if (c) {
            for (std::size_t i = 0; i < d; ++i)
                a[shift + i] = ((a[shift + i] - c * f[i]) % p + p) % p;
        }
        a.pop_back();
        trim(a);
    }
    return a;
}

inline Poly mulmod(const Poly& a, const Poly& b, const Poly& f, std::int64_t p) {
    return mod(mul(a, b, p), f, p);
}

inline Poly powmod(Poly base, std::uint64_t e, const Poly& f, std::int64_t p) {
    Poly r = {1};
    base = mod(std::move(base), f, p);
    while (e) {
        if (e & 1) r = mulmod(r, base, f, p);
        base = mulmod(base, base, f, p);
        e >>= 1;
    }
    return r;
}

inline Poly gcd(Poly a, Poly b, std::int64_t p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        std::int64_t s = inv_mod(b.back(), p);
        if (s != 1)
            for (auto& c : b) c = c * s % p;
        Poly r = mod(std::move(a), b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

/// Irreducibility of monic f of degree d over GF(p):
/// x^(p^d) == x mod f, and gcd(x^(p^(d/q)) - x, f) = 1 for primes q | d.
inline bool is_irreducible(const Poly& f, std::int64_t p) {
    const std::size_t d = f.size() - 1;
    if (d == 0) return false;
    if (d == 1) return true;
    if (f[0] == 0) return false; // divisible by x
    auto frob_iter = [&](std::size_t k) { // x^(p^k) mod f
        Poly r = {0, 1};
        for (std::size_t i = 0; i < k; ++i)
            r = powmod(r, static_cast<std::uint64_t>(p), f, p);
        return r;
    };
    const Poly x = {0, 1};
    if (!sub(frob_iter(d), x, p).empty()) return false;
    for (std::size_t q = 2; q <= d; ++q) {
        if (d % q) continue;
        bool prime = true;
        for (std::size_t t = 2; t * t <= q; ++t)
            if (q % t == 0) { prime = false; break; }
        if (!prime) continue;
        if (gcd(sub(frob_iter(d / q), x, p), f, p).size() != 1) return false;
    }
    return true;
}

/// First monic irreducible of degree d over GF(p), lexicographic in
/// (c_0, ..., c_{d-1}).
inline Poly first_irreducible(std::int64_t p, std::size_t d) {
    Poly f(d + 1, 0);
    f[d] = 1;
    std::vector<std::int64_t> lower(d, 0);
    while (true) {
        std::copy(lower.begin(), lower.end(), f.begin());
        if (is_irreducible(f, p)) return f;
        std::size_t i = d;
        while (i > 0) {
            --i;
            if (++lower[i] < p) break;
            lower[i] = 0;
            if (i == 0) throw internal_error("no irreducible polynomial found");
        }
    }
}

} // namespace gradmat::polygf
