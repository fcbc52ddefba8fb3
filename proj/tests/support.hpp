#pragma once

// Independent reference implementations used as test oracles. Nothing here
// calls into the library's combinatorics.

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace ref {

using Vec = std::vector<int>;
using Big = boost::multiprecision::cpp_int;

/// Q^s_q by odometer, a_1 fastest.
inline std::vector<Vec> cube(int q, int s) {
    std::vector<Vec> out;
    Vec a(static_cast<std::size_t>(s), 0);
    while (true) {
        out.push_back(a);
        int i = 0;
        while (i < s && ++a[static_cast<std::size_t>(i)] == q) a[static_cast<std::size_t>(i++)] = 0;
        if (i == s) break;
    }
    return out;
}

inline int deg(const Vec& a) {
    int d = 0;
    for (int x : a) d += x;
    return d;
}

inline bool antilex_less(const Vec& a, const Vec& b) {
    for (std::size_t i = a.size(); i-- > 0;)
        if (a[i] != b[i]) return a[i] > b[i];
    return false;
}

inline bool lex_less(const Vec& a, const Vec& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return a[i] < b[i];
    return false;
}

inline bool below(const Vec& a, const Vec& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

inline Vec mu(const Vec& a, int q) {
    Vec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = q - 1 - a[a.size() - 1 - i];
    return out;
}

/// F_q((lo,hi),s) sorted anti-lex, optionally with v <= a_s <= w.
inline std::vector<Vec> window(int q, int s, int lo, int hi, int v = 0, int w = -1) {
    if (w < 0) w = q - 1;
    std::vector<Vec> out;
    for (auto& a : cube(q, s))
        if (deg(a) >= lo && deg(a) <= hi && a.back() >= v && a.back() <= w) out.push_back(a);
    std::sort(out.begin(), out.end(), antilex_less);
    return out;
}

inline std::uint64_t up_size(const std::vector<Vec>& A, int q, int s) {
    std::uint64_t n = 0;
    for (auto& b : cube(q, s))
        for (auto& a : A)
            if (below(a, b)) {
                ++n;
                break;
            }
    return n;
}

inline std::uint64_t down_size(const std::vector<Vec>& A, int q, int s) {
    std::uint64_t n = 0;
    for (auto& b : cube(q, s))
        for (auto& a : A)
            if (below(b, a)) {
                ++n;
                break;
            }
    return n;
}

/// Number of vectors in Q^s_q of each degree, by convolution.
inline std::vector<Big> degree_counts(int q, int s) {
    std::vector<Big> c{1};
    for (int i = 0; i < s; ++i) {
        std::vector<Big> next(c.size() + static_cast<std::size_t>(q - 1), 0);
        for (std::size_t d = 0; d < c.size(); ++d)
            for (int x = 0; x < q; ++x) next[d + static_cast<std::size_t>(x)] += c[d];
        c = std::move(next);
    }
    return c;
}

inline Big count(int lo, int hi, int s, int q) {
    const auto c = degree_counts(q, s);
    Big n = 0;
    for (int d = std::max(lo, 0); d <= hi && d < static_cast<int>(c.size()); ++d) n += c[static_cast<std::size_t>(d)];
    return n;
}

inline std::uint64_t binom(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    std::uint64_t r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

inline bool prime_power(int q) {
    if (q < 2) return false;
    int p = 2;
    while (q % p) ++p;
    while (q % p == 0) q /= p;
    return q == 1;
}

/// Prime power drawn uniformly from [lo, hi].
template <class Rng>
int random_prime_power(Rng& rng, int lo, int hi) {
    for (;;) {
        const int q = lo + static_cast<int>(rng() % static_cast<unsigned>(hi - lo + 1));
        if (prime_power(q)) return q;
    }
}

inline std::uint64_t ipow(std::uint64_t b, int e) {
    std::uint64_t r = 1;
    while (e-- > 0) r *= b;
    return r;
}

/// Schoolbook GF(p^e) product of base-p encoded polynomials modulo a monic modulus.
inline std::uint32_t poly_mul(std::uint32_t a, std::uint32_t b, std::uint32_t p, const std::vector<std::uint32_t>& mod) {
    const std::size_t e = mod.size() - 1;
    std::vector<std::uint32_t> x(e), y(e), z(2 * e, 0);
    for (std::size_t i = 0; i < e; ++i) {
        x[i] = a % p;
        a /= p;
        y[i] = b % p;
        b /= p;
    }
    for (std::size_t i = 0; i < e; ++i)
        for (std::size_t j = 0; j < e; ++j) z[i + j] = (z[i + j] + x[i] * y[j]) % p;
    for (std::size_t d = 2 * e; d-- > e;) {
        const std::uint32_t c = z[d];
        if (!c) continue;
        for (std::size_t k = 0; k <= e; ++k) z[d - e + k] = (z[d - e + k] + p * p - c * mod[k] % p) % p;
    }
    std::uint32_t out = 0;
    for (std::size_t i = e; i-- > 0;) out = out * p + z[i];
    return out;
}

inline std::uint32_t poly_add(std::uint32_t a, std::uint32_t b, std::uint32_t p, std::size_t e) {
    std::uint32_t out = 0, scale = 1;
    for (std::size_t i = 0; i < e; ++i) {
        out += ((a % p + b % p) % p) * scale;
        a /= p;
        b /= p;
        scale *= p;
    }
    return out;
}

}  // namespace ref
