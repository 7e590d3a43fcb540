#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

namespace costas {

using std::uint64_t;

/// Floor of sqrt(x), exact for all 64-bit inputs.
inline uint64_t isqrt(uint64_t x) {
    if (x == 0) return 0;
    auto sq = [](uint64_t r) { return static_cast<unsigned __int128>(r) * r; };
    auto r = static_cast<uint64_t>(std::sqrt(static_cast<double>(x)));
    while (r > 0 && sq(r) > x) --r;
    while (sq(r + 1) <= x) ++r;
    return r;
}

inline uint64_t mul_mod(uint64_t a, uint64_t b, uint64_t m) {
    return static_cast<uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

/// base^exponent mod modulus by repeated squaring; overflow-safe for any
/// modulus below 2^64.
inline uint64_t pow_mod(uint64_t base, uint64_t exponent, uint64_t modulus) {
    if (modulus < 2) throw std::domain_error("pow_mod: modulus must be >= 2");
    uint64_t result = 1 % modulus;
    base %= modulus;
    while (exponent > 0) {
        if (exponent & 1) result = mul_mod(result, base, modulus);
        base = mul_mod(base, base, modulus);
        exponent >>= 1;
    }
    return result;
}

namespace detail {

// Strong-probable-prime test to base a; m odd, m-1 = d * 2^r.
inline bool miller_rabin_witness(uint64_t m, uint64_t a, uint64_t d, int r) {
    a %= m;
    if (a == 0) return true;
    uint64_t x = pow_mod(a, d, m);
    if (x == 1 || x == m - 1) return true;
    for (int i = 1; i < r; ++i) {
        x = mul_mod(x, x, m);
        if (x == m - 1) return true;
    }
    return false;
}

} // namespace detail

/// Deterministic primality for any 64-bit m: trial division below 2^32,
/// strong-pseudoprime testing against a base set proven complete for the
/// full 64-bit range above it. No probabilistic answers either way.
inline bool is_prime(uint64_t m) {
    if (m < 2) throw std::domain_error("is_prime: argument must be >= 2");
    for (uint64_t q : {2ull, 3ull, 5ull, 7ull}) {
        if (m == q) return true;
        if (m % q == 0) return false;
    }
    if (m < (1ull << 32)) {
        for (uint64_t f = 11; f * f <= m; f += 6) {
            if (m % f == 0 || m % (f + 2) == 0) return false;
        }
        return true;
    }
    int r = 0;
    uint64_t d = m - 1;
    while ((d & 1) == 0) { d >>= 1; ++r; }
    for (uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                       23ull, 29ull, 31ull, 37ull}) {
        if (!detail::miller_rabin_witness(m, a, d, r)) return false;
    }
    return true;
}

/// Prime factorization in ascending prime order, as (prime, multiplicity).
inline std::vector<std::pair<uint64_t, int>> factorize(uint64_t m) {
    if (m < 2) throw std::domain_error("factorize: argument must be >= 2");
    std::vector<std::pair<uint64_t, int>> factors;
    auto take = [&](uint64_t q) {
        int mult = 0;
        while (m % q == 0) { m /= q; ++mult; }
        if (mult > 0) factors.emplace_back(q, mult);
    };
    take(2);
    take(3);
    for (uint64_t f = 5; f * f <= m; f += 6) {
        take(f);
        take(f + 2);
    }
    if (m > 1) factors.emplace_back(m, 1);
    return factors;
}

inline uint64_t totient_from_factorization(
    const std::vector<std::pair<uint64_t, int>>& factors) {
    uint64_t phi = 1;
    for (auto [q, mult] : factors) {
        phi *= q - 1;
        for (int i = 1; i < mult; ++i) phi *= q;
    }
    return phi;
}

inline uint64_t smallest_prime_factor(uint64_t m) {
    if (m < 2) throw std::domain_error("smallest_prime_factor: argument must be >= 2");
    if (m % 2 == 0) return 2;
    for (uint64_t f = 3; f * f <= m; f += 2) {
        if (m % f == 0) return f;
    }
    return m;
}

/// Number-theoretic facts about one prime p >= 5, shared by every
/// construction and bound. Immutable once built.
struct PrimeContext {
    uint64_t p = 0;                                         // the prime
    uint64_t n = 0;                                         // array order, p - 1
    std::vector<std::pair<uint64_t, int>> factorization;    // of n
    uint64_t totient_n = 0;                                 // phi(n)
    std::vector<uint64_t> primitive_roots;                  // all of them, ascending
    bool is_safe_prime = false;                             // (p-1)/2 prime
    uint64_t t = 0;                                         // smallest prime divisor of (p-1)/2
};

/// Builds the full context. Primitive roots are found by testing each
/// candidate g against every prime divisor q of n via g^(n/q) != 1 (mod p).
inline PrimeContext build_prime_context(uint64_t p) {
    if (p < 5 || !is_prime(p))
        throw std::domain_error("build_prime_context: p must be a prime >= 5");
    PrimeContext ctx;
    ctx.p = p;
    ctx.n = p - 1;
    ctx.factorization = factorize(ctx.n);
    ctx.totient_n = totient_from_factorization(ctx.factorization);
    for (uint64_t g = 2; g < p; ++g) {
        bool primitive = true;
        for (auto [q, mult] : ctx.factorization) {
            if (pow_mod(g, ctx.n / q, p) == 1) {
                primitive = false;
                break;
            }
        }
        if (primitive) ctx.primitive_roots.push_back(g);
    }
    uint64_t half = ctx.n / 2;
    ctx.is_safe_prime = half >= 2 && is_prime(half);
    ctx.t = smallest_prime_factor(half);
    return ctx;
}

inline bool is_primitive_root(const PrimeContext& ctx, uint64_t alpha) {
    return std::binary_search(ctx.primitive_roots.begin(),
                              ctx.primitive_roots.end(), alpha);
}

/// Discrete-log table to base alpha: table[x] is the unique e in
/// {0,...,p-2} with alpha^e = x (mod p). Built in one O(p) sweep of
/// successive powers; the sweep itself certifies primitivity (a short
/// cycle means alpha is not a generator). Index 0 is unused.
inline std::vector<std::uint32_t> dlog_table(uint64_t p, uint64_t alpha) {
    if (p < 3 || !is_prime(p)) throw std::domain_error("dlog_table: p must be an odd prime");
    if (alpha < 2 || alpha >= p)
        throw std::domain_error("dlog_table: alpha must lie in {2,...,p-1}");
    std::vector<std::uint32_t> table(p, 0);
    uint64_t x = 1;
    for (uint64_t e = 0; e + 1 < p; ++e) {
        if (e > 0 && x == 1)
            throw std::domain_error("dlog_table: alpha is not a primitive root");
        table[x] = static_cast<std::uint32_t>(e);
        x = mul_mod(x, alpha, p);
    }
    if (x != 1) throw std::domain_error("dlog_table: alpha is not a primitive root");
    return table;
}

inline std::vector<uint64_t> primes_in_range(uint64_t lo, uint64_t hi) {
    std::vector<uint64_t> ps;
    for (uint64_t m = std::max<uint64_t>(lo, 2); m <= hi; ++m) {
        if (is_prime(m)) ps.push_back(m);
    }
    return ps;
}

} // namespace costas
