#include <catch2/catch_amalgamated.hpp>

#include "costas/numthy.hpp"

#include "reference_tables.hpp"

using namespace costas;

TEST_CASE("is_prime handles the full word range deterministically") {
    CHECK(is_prime(277));
    CHECK_FALSE(is_prime(4));
    CHECK(is_prime(2147483647ull));  // trial-division path
    CHECK(is_prime(2));
    CHECK(is_prime(3));
    CHECK_FALSE(is_prime(1ull << 40));
    CHECK(is_prime(1000000000000000003ull));   // strong-pseudoprime path
    CHECK_FALSE(is_prime(3215031751ull));      // 151 * 751 * 28351
    CHECK_THROWS_AS(is_prime(1), std::domain_error);
    CHECK_THROWS_AS(is_prime(0), std::domain_error);
}

TEST_CASE("factorize returns ascending prime powers") {
    using F = std::vector<std::pair<uint64_t, int>>;
    CHECK(factorize(102) == F{{2, 1}, {3, 1}, {17, 1}});
    CHECK(factorize(8) == F{{2, 3}});
    CHECK(factorize(276) == F{{2, 2}, {3, 1}, {23, 1}});
    CHECK(factorize(97) == F{{97, 1}});
    CHECK_THROWS_AS(factorize(1), std::domain_error);
}

TEST_CASE("pow_mod matches small hand values") {
    CHECK(pow_mod(3, 5, 7) == 5);
    CHECK(pow_mod(10, 0, 21) == 1);
    CHECK(pow_mod(2, 18, 19) == 1);  // Fermat
    CHECK(pow_mod(0, 5, 13) == 0);
    CHECK_THROWS_AS(pow_mod(2, 3, 1), std::domain_error);
}

TEST_CASE("isqrt is exact at boundaries") {
    CHECK(isqrt(0) == 0);
    CHECK(isqrt(1) == 1);
    CHECK(isqrt(3) == 1);
    CHECK(isqrt(4) == 2);
    CHECK(isqrt(15) == 3);
    CHECK(isqrt(16) == 4);
    const uint64_t big = 0xFFFFFFFFull;
    CHECK(isqrt(big * big) == big);
    CHECK(isqrt(big * big - 1) == big - 1);
}

TEST_CASE("build_prime_context populates every field") {
    const auto ctx7 = build_prime_context(7);
    CHECK(ctx7.n == 6);
    CHECK(ctx7.primitive_roots == std::vector<uint64_t>{3, 5});
    CHECK(ctx7.totient_n == 2);
    CHECK(ctx7.is_safe_prime);
    CHECK(ctx7.t == 3);

    const auto ctx103 = build_prime_context(103);
    CHECK(ctx103.t == 3);
    CHECK((ctx103.p - 1) / ctx103.t == 34);
    CHECK_FALSE(ctx103.is_safe_prime);

    const auto ctx13 = build_prime_context(13);
    CHECK(ctx13.t == 2);
    CHECK((ctx13.p - 1) / ctx13.t == 6);

    CHECK_THROWS_AS(build_prime_context(4), std::domain_error);
    CHECK_THROWS_AS(build_prime_context(3), std::domain_error);
    CHECK_THROWS_AS(build_prime_context(15), std::domain_error);
}

TEST_CASE("prime context invariants over the working range") {
    std::vector<uint64_t> safe_found;
    for (uint64_t p : primes_in_range(5, 277)) {
        const auto ctx = build_prime_context(p);
        CHECK(ctx.primitive_roots.size() == ctx.totient_n);
        CHECK(ctx.t >= 2);
        CHECK(is_prime(ctx.t));
        CHECK((ctx.n / 2) % ctx.t == 0);
        if (ctx.is_safe_prime) {
            CHECK(ctx.t == ctx.n / 2);
            CHECK(ctx.n / ctx.t == 2);
            safe_found.push_back(p);
        }
        uint64_t product = 1;
        for (auto [q, mult] : ctx.factorization)
            for (int i = 0; i < mult; ++i) product *= q;
        CHECK(product == ctx.n);
        // every listed root really generates the full group
        for (uint64_t alpha : ctx.primitive_roots) {
            std::vector<bool> hit(p, false);
            uint64_t x = 1;
            bool bijective = true;
            for (uint64_t e = 0; e < ctx.n; ++e) {
                if (hit[x]) bijective = false;
                hit[x] = true;
                x = mul_mod(x, alpha, p);
            }
            CHECK(bijective);
            CHECK(x == 1);
        }
    }
    const std::vector<uint64_t> expected(std::begin(testref::kSafePrimes),
                                         std::end(testref::kSafePrimes));
    CHECK(safe_found == expected);
}

TEST_CASE("dlog_table inverts pow_mod") {
    const auto t73 = dlog_table(7, 3);
    CHECK(t73[2] == 2);
    CHECK(t73[3] == 1);
    CHECK(t73[1] == 0);
    CHECK(dlog_table(7, 5)[6] == 3);  // 5^3 = 125 = 6 (mod 7)

    for (uint64_t p : {7ull, 13ull, 61ull}) {
        const auto ctx = build_prime_context(p);
        for (uint64_t alpha : ctx.primitive_roots) {
            const auto table = dlog_table(p, alpha);
            CHECK(table[alpha] == 1);
            for (uint64_t e = 0; e + 1 < p; ++e)
                CHECK(table[pow_mod(alpha, e, p)] == e);
        }
    }

    CHECK_THROWS_AS(dlog_table(7, 2), std::domain_error);  // 2 has order 3 mod 7
    CHECK_THROWS_AS(dlog_table(7, 1), std::domain_error);
    CHECK_THROWS_AS(dlog_table(8, 3), std::domain_error);
}

TEST_CASE("primes_in_range is inclusive and exact") {
    CHECK(primes_in_range(5, 13) == std::vector<uint64_t>{5, 7, 11, 13});
    CHECK(primes_in_range(24, 28).empty());
    CHECK(primes_in_range(277, 277) == std::vector<uint64_t>{277});
}
