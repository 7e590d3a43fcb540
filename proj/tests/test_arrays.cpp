#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>
#include <set>

#include "costas/arrays.hpp"
#include "costas/bounds.hpp"

using namespace costas;

namespace {

Permutation random_permutation(int n, std::mt19937& rng) {
    std::vector<int> v(static_cast<std::size_t>(n));
    std::iota(v.begin(), v.end(), 1);
    std::shuffle(v.begin(), v.end(), rng);
    return Permutation(std::move(v));
}

} // namespace

TEST_CASE("Permutation validates its values") {
    CHECK_NOTHROW(Permutation({3, 2, 6, 4, 5, 1}));
    CHECK_THROWS_AS(Permutation({1, 1, 2}), std::domain_error);
    CHECK_THROWS_AS(Permutation({0, 1}), std::domain_error);
    CHECK_THROWS_AS(Permutation({2, 3}), std::domain_error);
    CHECK_THROWS_AS(Permutation({}), std::domain_error);
}

TEST_CASE("permutation text form round-trips") {
    const auto f = parse_permutation("3,2,6,4,5,1");
    CHECK(f.values() == std::vector<int>{3, 2, 6, 4, 5, 1});
    CHECK(to_string(f) == "3,2,6,4,5,1");
    CHECK_THROWS_AS(parse_permutation("1,,2"), std::domain_error);
    CHECK_THROWS_AS(parse_permutation("1,2,x"), std::domain_error);
    CHECK_THROWS_AS(parse_permutation(""), std::domain_error);
}

TEST_CASE("welch_exp matches successive powers") {
    const auto ctx = build_prime_context(7);
    CHECK(welch_exp(ctx, 3).values() == std::vector<int>{1, 3, 2, 6, 4, 5});
    CHECK(welch_exp(ctx, 5).values() == std::vector<int>{1, 5, 4, 6, 2, 3});
    // f(1) = alpha^c
    for (uint64_t c = 0; c <= 5; ++c)
        CHECK(welch_exp(ctx, 3, c)(1) == static_cast<int>(pow_mod(3, c, 7)));
    CHECK_THROWS_AS(welch_exp(ctx, 2), std::domain_error);
    CHECK_THROWS_AS(welch_exp(ctx, 3, 6), std::domain_error);
}

TEST_CASE("welch_log is the inverse of welch_exp at c = 0") {
    const auto ctx = build_prime_context(7);
    CHECK(welch_log(ctx, 3).values() == std::vector<int>{1, 3, 2, 5, 6, 4});
    CHECK(welch_log(ctx, 3) == inverse(welch_exp(ctx, 3)));
    for (uint64_t p : primes_in_range(5, 277)) {
        const auto c = build_prime_context(p);
        for (uint64_t alpha : c.primitive_roots) {
            CHECK(welch_log(c, alpha) == inverse(welch_exp(c, alpha)));
            CHECK(welch_log(c, alpha)(static_cast<int>(alpha)) == 2);
        }
    }
}

TEST_CASE("power_perm computes i^d and rejects bad exponents") {
    const auto ctx = build_prime_context(7);
    CHECK(power_perm(ctx, 5).values() == std::vector<int>{1, 4, 5, 2, 3, 6});
    CHECK(power_perm(ctx, 5)(1) == 1);
    CHECK_THROWS_AS(power_perm(ctx, 1), std::domain_error);   // identity excluded
    CHECK_THROWS_AS(power_perm(ctx, 2), std::domain_error);   // gcd(2,6) != 1
    CHECK_THROWS_AS(power_perm(ctx, 6), std::domain_error);   // out of range
}

TEST_CASE("both costas checkers match the known examples") {
    CHECK(is_costas_grid(parse_permutation("3,2,6,4,5,1")));
    CHECK(is_costas_difference_triangle(parse_permutation("3,2,6,4,5,1")));
    CHECK_FALSE(is_costas_grid(Permutation({1, 2, 3, 4})));
    CHECK_FALSE(is_costas_difference_triangle(Permutation({2, 1, 3})));
    CHECK(is_costas_grid(Permutation({1})));
    CHECK(is_costas_difference_triangle(Permutation({1})));
    const auto ctx = build_prime_context(7);
    CHECK(is_costas_grid(welch_exp(ctx, 3)));
}

TEST_CASE("checkers agree on random permutations and constructed arrays") {
    std::mt19937 rng(20240917);
    std::uniform_int_distribution<int> order(2, 12);
    for (int trial = 0; trial < 1000; ++trial) {
        const auto f = random_permutation(order(rng), rng);
        CHECK(is_costas_grid(f) == is_costas_difference_triangle(f));
    }
    for (uint64_t p : primes_in_range(5, 61)) {
        const auto ctx = build_prime_context(p);
        for (FamilyId id : kAllFamilies) {
            if (!family_enumerable(ctx, id)) continue;
            for (const auto& member : enumerate_family(ctx, id))
                CHECK(is_costas_grid(member.perm) ==
                      is_costas_difference_triangle(member.perm));
        }
    }
}

TEST_CASE("welch arrays are costas for every root and shift constant") {
    std::mt19937 rng(7);
    for (uint64_t p : primes_in_range(5, 127)) {
        const auto ctx = build_prime_context(p);
        std::uniform_int_distribution<uint64_t> any_c(0, ctx.p - 2);
        for (uint64_t alpha : ctx.primitive_roots) {
            for (uint64_t c : {uint64_t{0}, uint64_t{1}, any_c(rng)}) {
                if (c > ctx.p - 2) continue;
                const auto e = welch_exp(ctx, alpha, c);
                const auto l = welch_log(ctx, alpha, c);
                CHECK(is_costas_difference_triangle(e));
                CHECK(is_costas_difference_triangle(l));
                if (p <= 61) {
                    CHECK(is_costas_grid(e));
                    CHECK(is_costas_grid(l));
                }
            }
        }
    }
}

TEST_CASE("fixed points and golomb rulers") {
    CHECK(fixed_points(Permutation({1, 3, 2, 6, 4, 5})) == std::vector<int>{1});
    CHECK(fixed_points(Permutation({3, 2, 6, 4, 5, 1})) == std::vector<int>{2, 4, 5});
    CHECK(fixed_points(Permutation({1, 2, 3})) == std::vector<int>{1, 2, 3});

    CHECK(is_golomb_ruler({1, 2, 4}));
    CHECK_FALSE(is_golomb_ruler({1, 2, 3}));
    CHECK(is_golomb_ruler({}));
    CHECK(is_golomb_ruler({42}));
    CHECK_THROWS_AS(is_golomb_ruler({1, 1, 2}), std::domain_error);
}

TEST_CASE("welch fixed points form golomb rulers under the sidon ceiling") {
    for (uint64_t p : primes_in_range(5, 127)) {
        const auto ctx = build_prime_context(p);
        const double ceiling = sidon_bound(ctx.n);
        for (uint64_t alpha : ctx.primitive_roots) {
            for (uint64_t c : {uint64_t{0}, uint64_t{1}}) {
                const auto pts = fixed_points(welch_exp(ctx, alpha, c));
                CHECK(is_golomb_ruler(pts));
                CHECK(static_cast<double>(pts.size()) < ceiling);
            }
        }
    }
}

TEST_CASE("inverse is an involution") {
    CHECK(inverse(Permutation({1, 3, 2, 6, 4, 5})).values() ==
          std::vector<int>{1, 3, 2, 5, 6, 4});
    CHECK(inverse(Permutation({1, 2, 3})) == Permutation({1, 2, 3}));
    std::mt19937 rng(99);
    for (int trial = 0; trial < 50; ++trial) {
        const auto f = random_permutation(2 + trial % 30, rng);
        CHECK(inverse(inverse(f)) == f);
    }
}

TEST_CASE("family enumeration: sizes, order, and labels") {
    const auto ctx7 = build_prime_context(7);
    const auto wp = enumerate_family(ctx7, FamilyId::Wp);
    REQUIRE(wp.size() == 2);
    CHECK(wp[0].label.str() == "welch-exp:3");
    CHECK(wp[1].label.str() == "welch-exp:5");

    CHECK(enumerate_family(ctx7, FamilyId::PWp).size() == 3);  // 2 phi(6) - 1
    CHECK(enumerate_family(ctx7, FamilyId::Pp).size() == 1);   // phi(6) - 1
    CHECK(enumerate_family(build_prime_context(13), FamilyId::Wpel).size() == 8);

    CHECK_THROWS_AS(enumerate_family(build_prime_context(5), FamilyId::Wpel),
                    std::domain_error);

    for (uint64_t p : primes_in_range(5, 127)) {
        const auto ctx = build_prime_context(p);
        for (FamilyId id : kAllFamilies) {
            if (!family_enumerable(ctx, id)) continue;
            const auto members = enumerate_family(ctx, id);
            CHECK(members.size() == family_size(ctx, id));
            // no two members coincide as permutations
            std::set<std::vector<int>> distinct;
            for (const auto& m : members) distinct.insert(m.perm.values());
            CHECK(distinct.size() == members.size());
        }
    }
}

TEST_CASE("exponential welch family never meets the power family") {
    for (uint64_t p : primes_in_range(5, 277)) {
        const auto ctx = build_prime_context(p);
        std::set<std::vector<int>> welch;
        for (const auto& m : enumerate_family(ctx, FamilyId::Wp))
            welch.insert(m.perm.values());
        for (const auto& m : enumerate_family(ctx, FamilyId::Pp))
            CHECK_FALSE(welch.contains(m.perm.values()));
    }
}

TEST_CASE("some power permutation fails the costas property") {
    bool found_non_costas = false;
    for (uint64_t p : primes_in_range(5, 61)) {
        const auto ctx = build_prime_context(p);
        for (const auto& m : enumerate_family(ctx, FamilyId::Pp))
            if (!is_costas_grid(m.perm)) found_non_costas = true;
    }
    CHECK(found_non_costas);
}

TEST_CASE("family and filter names round-trip") {
    for (FamilyId id : kAllFamilies) CHECK(family_from_string(to_string(id)) == id);
    CHECK_FALSE(family_from_string("W_p").has_value());
}
