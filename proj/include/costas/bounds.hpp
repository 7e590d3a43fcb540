#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string_view>
#include <vector>

#include "costas/family_scan.hpp"
#include "costas/numthy.hpp"

namespace costas {

// ---------------------------------------------------------------------------
// Closed-form bound evaluators. Floor/ceiling expressions over square roots
// are computed with integer square roots, never by flooring a double, so
// boundary cases are exact.

/// (p-1)/t with t the smallest prime divisor of (p-1)/2. Holds with
/// equality for the exponential Welch family at arbitrary u, v = 0.
inline double bound_dg_wp_v0(const PrimeContext& ctx) {
    return static_cast<double>(ctx.n / ctx.t);
}

/// 1 + floor((1 - 2/(p-1)) * sqrt(p)), exactly: the floored term equals
/// isqrt((p-3)^2 p) / (p-1) because sqrt(p) is irrational.
inline std::int64_t bound_gw_wp_vnz_int(const PrimeContext& ctx) {
    const uint64_t a = ctx.p - 3;
    return 1 + static_cast<std::int64_t>(isqrt(a * a * ctx.p) / (ctx.p - 1));
}

inline double bound_gw_wp_vnz(const PrimeContext& ctx) {
    return static_cast<double>(bound_gw_wp_vnz_int(ctx));
}

/// 4 p log_p(alpha) + 1, the solution-count bound for an exponential
/// member against a logarithmic one; log_p is the real logarithm ratio.
inline double bound_thm1_wpel(const PrimeContext& ctx, uint64_t alpha) {
    if (!is_primitive_root(ctx, alpha))
        throw std::domain_error("bound_thm1_wpel: alpha is not a primitive root");
    return 4.0 * static_cast<double>(ctx.p) * std::log(static_cast<double>(alpha)) /
               std::log(static_cast<double>(ctx.p)) +
           1.0;
}

/// The whole-family form: max of the mixed-pair term at alpha and the
/// settled Welch-only bound, which is the v != 0 bound for safe primes
/// and (p-1)/t otherwise.
inline double bound_thm1_wpel_family(const PrimeContext& ctx, uint64_t alpha) {
    const double mixed = bound_thm1_wpel(ctx, alpha);
    const double welch = ctx.is_safe_prime ? bound_gw_wp_vnz(ctx)
                                           : static_cast<double>(ctx.n / ctx.t);
    return std::max(mixed, welch);
}

enum class ArdCase { both_zero, u_nonzero_v_zero };

/// ceil((p-2)/(p-1) * (1 + sqrt(p))) without floating point:
/// floor((p-2)(1+sqrt p)/(p-1)) + 1, the quotient being irrational.
inline std::int64_t bound_ard_pp_unz_v0_int(const PrimeContext& ctx) {
    const uint64_t a = ctx.p - 2;
    const uint64_t floor_term = (a + isqrt(a * a * ctx.p)) / (ctx.p - 1);
    return static_cast<std::int64_t>(floor_term) + 1;
}

/// The power-permutation bounds: (p-1)/t at the origin (an equality),
/// the ceiling form for u != 0, v = 0.
inline double bound_ard_pp(const PrimeContext& ctx, ArdCase which) {
    switch (which) {
        case ArdCase::both_zero: return static_cast<double>(ctx.n / ctx.t);
        case ArdCase::u_nonzero_v_zero:
            return static_cast<double>(bound_ard_pp_unz_v0_int(ctx));
    }
    return 0.0;
}

/// 1/2 + sqrt(p-1) for power pairs at u = 0, v != 0.
inline double bound_thm2_pp_u0_vnz(const PrimeContext& ctx) {
    return 0.5 + std::sqrt(static_cast<double>(ctx.n));
}

/// Strict ceiling on Sidon-set size in [n]: n^(1/2) + n^(1/4) + 1/2.
inline double sidon_bound(uint64_t n) {
    if (n < 1) throw std::domain_error("sidon_bound: n must be positive");
    const double x = static_cast<double>(n);
    return std::sqrt(x) + std::pow(x, 0.25) + 0.5;
}

/// Union-family bound at v = 0: the Sidon ceiling over [p-1] for safe
/// primes, (p-1)/t (an equality) otherwise.
inline double bound_thm4_pwp_v0(const PrimeContext& ctx) {
    return ctx.is_safe_prime ? sidon_bound(ctx.n)
                             : static_cast<double>(ctx.n / ctx.t);
}

// ---------------------------------------------------------------------------
// Trinomial root counting (oracle + closed-form ceiling)

/// Brute-force count of x in F_p with x^n + a x^s + b = 0; the
/// independent check for the closed-form root bound.
inline std::int64_t trinomial_root_count(uint64_t p, uint64_t n, uint64_t s,
                                         uint64_t a, uint64_t b) {
    if (!is_prime(p)) throw std::domain_error("trinomial_root_count: p must be prime");
    a %= p;
    b %= p;
    if (a == 0 || b == 0)
        throw std::domain_error("trinomial_root_count: a and b must be nonzero mod p");
    if (s < 1 || n <= s)
        throw std::domain_error("trinomial_root_count: need n > s >= 1");
    std::int64_t count = 0;
    for (uint64_t x = 0; x < p; ++x) {
        const uint64_t value = (pow_mod(x, n, p) + mul_mod(a, pow_mod(x, s, p), p) + b) % p;
        if (value == 0) ++count;
    }
    return count;
}

/// delta * floor(1/2 + sqrt((p-1)/delta)) with delta = gcd(n, s, p-1).
/// floor(1/2 + sqrt(m)) is isqrt(m) rounded up when the fractional part
/// of sqrt(m) reaches one half, i.e. when m > r^2 + r.
inline std::int64_t trinomial_root_bound(uint64_t p, uint64_t n, uint64_t s) {
    if (!is_prime(p)) throw std::domain_error("trinomial_root_bound: p must be prime");
    if (s < 1 || n <= s)
        throw std::domain_error("trinomial_root_bound: need n > s >= 1");
    const uint64_t delta = std::gcd(std::gcd(n, s), p - 1);
    const uint64_t m = (p - 1) / delta;
    const uint64_t r = isqrt(m);
    const uint64_t half_up = m <= r * r + r ? r : r + 1;
    return static_cast<std::int64_t>(delta * half_up);
}

// ---------------------------------------------------------------------------
// Theorem verdicts

enum class TheoremId {
    dg_wp_v0,
    gw_wp_vnz,
    thm1_wpel,
    ard_pp_00,
    ard_pp_unz_v0,
    thm2_pp_u0_vnz,
    thm4_pwp_v0,
    thm5_pwpl_u0,
};

inline constexpr TheoremId kAllTheorems[] = {
    TheoremId::dg_wp_v0,      TheoremId::gw_wp_vnz,     TheoremId::thm1_wpel,
    TheoremId::ard_pp_00,     TheoremId::ard_pp_unz_v0, TheoremId::thm2_pp_u0_vnz,
    TheoremId::thm4_pwp_v0,   TheoremId::thm5_pwpl_u0,
};

constexpr std::string_view to_string(TheoremId id) {
    switch (id) {
        case TheoremId::dg_wp_v0: return "DG_Wp_V0";
        case TheoremId::gw_wp_vnz: return "GW_Wp_VNZ";
        case TheoremId::thm1_wpel: return "THM1_Wpel";
        case TheoremId::ard_pp_00: return "ARD_Pp_00";
        case TheoremId::ard_pp_unz_v0: return "ARD_Pp_UNZ_V0";
        case TheoremId::thm2_pp_u0_vnz: return "THM2_Pp_U0_VNZ";
        case TheoremId::thm4_pwp_v0: return "THM4_PWp_V0";
        case TheoremId::thm5_pwpl_u0: return "THM5_PWpl_U0";
    }
    return "?";
}

inline std::optional<TheoremId> theorem_from_string(std::string_view name) {
    for (TheoremId id : kAllTheorems) {
        if (to_string(id) == name) return id;
    }
    return std::nullopt;
}

enum class Relation { equal, at_most };

constexpr std::string_view to_string(Relation r) {
    return r == Relation::equal ? "=" : "<=";
}

/// One theorem instance checked against the exhaustive engine.
struct BoundVerdict {
    TheoremId theorem = TheoremId::dg_wp_v0;
    uint64_t p = 0;
    FamilyId family = FamilyId::Wp;
    ShiftFilter filter = ShiftFilter::all;
    bool include_auto = false;
    double bound_value = 0.0;
    std::int64_t empirical_value = 0;
    Relation relation = Relation::at_most;
    bool holds = false;
    std::optional<PairWitness> witness;
};

/// The distinct-pair results over the power family need at least two
/// members, which rules out p = 5 and p = 7; the mixed-family bound is
/// stated for p >= 7.
inline bool theorem_applicable(const PrimeContext& ctx, TheoremId id) {
    switch (id) {
        case TheoremId::thm1_wpel: return ctx.p >= 7;
        case TheoremId::ard_pp_00:
        case TheoremId::ard_pp_unz_v0: return ctx.totient_n >= 3;
        default: return true;
    }
}

inline std::vector<TheoremId> applicable_theorems(const PrimeContext& ctx) {
    std::vector<TheoremId> ids;
    for (TheoremId id : kAllTheorems) {
        if (theorem_applicable(ctx, id)) ids.push_back(id);
    }
    return ids;
}

namespace detail {

// Exact comparison empirical <= 1/2 + sqrt(p-1): the right side is never
// an integer or half-integer square, so squaring (2e-1)^2 <= 4(p-1) is
// equivalent and overflow-free at word size.
inline bool holds_half_plus_sqrt(std::int64_t empirical, uint64_t n) {
    if (empirical < 1) return true;
    const auto e = static_cast<unsigned __int128>(2 * empirical - 1);
    return e * e <= static_cast<unsigned __int128>(4) * n;
}

} // namespace detail

/// Computes the restricted empirical maximum for one theorem and compares
/// it against the theorem's bound under its claimed relation (equality
/// claims compare exactly; real-valued upper bounds use exact integer
/// forms where available and a 1e-9 absolute tolerance otherwise).
inline BoundVerdict verify_theorem(const PrimeContext& ctx, TheoremId id,
                                   unsigned workers = 0) {
    if (!theorem_applicable(ctx, id))
        throw std::domain_error("verify_theorem: theorem not applicable at this prime");

    BoundVerdict verdict;
    verdict.theorem = id;
    verdict.p = ctx.p;

    const auto nt = static_cast<std::int64_t>(ctx.n / ctx.t);
    FamilyId family = FamilyId::Wp;
    ShiftFilter filter = ShiftFilter::all;
    bool include_auto = false;

    switch (id) {
        case TheoremId::dg_wp_v0:
            family = FamilyId::Wp;
            filter = ShiftFilter::v_zero;
            include_auto = false;
            verdict.relation = Relation::equal;
            verdict.bound_value = bound_dg_wp_v0(ctx);
            break;
        case TheoremId::gw_wp_vnz:
            family = FamilyId::Wp;
            filter = ShiftFilter::v_nonzero;
            include_auto = false;
            verdict.relation = Relation::at_most;
            verdict.bound_value = bound_gw_wp_vnz(ctx);
            break;
        case TheoremId::thm1_wpel:
            family = FamilyId::Wpel;
            filter = ShiftFilter::all;
            include_auto = false;
            verdict.relation = Relation::at_most;
            verdict.bound_value =
                bound_thm1_wpel_family(ctx, ctx.primitive_roots.front());
            break;
        case TheoremId::ard_pp_00:
            family = FamilyId::Pp;
            filter = ShiftFilter::origin_only;
            include_auto = true;
            verdict.relation = Relation::equal;
            verdict.bound_value = bound_ard_pp(ctx, ArdCase::both_zero);
            break;
        case TheoremId::ard_pp_unz_v0:
            family = FamilyId::Pp;
            filter = ShiftFilter::u_nonzero_v_zero;
            include_auto = true;
            verdict.relation = Relation::at_most;
            verdict.bound_value = bound_ard_pp(ctx, ArdCase::u_nonzero_v_zero);
            break;
        case TheoremId::thm2_pp_u0_vnz:
            family = FamilyId::Pp;
            filter = ShiftFilter::u_zero_v_nonzero;
            include_auto = true;
            verdict.relation = Relation::at_most;
            verdict.bound_value = bound_thm2_pp_u0_vnz(ctx);
            break;
        case TheoremId::thm4_pwp_v0:
            family = FamilyId::PWp;
            filter = ShiftFilter::v_zero;
            include_auto = true;
            verdict.relation = ctx.is_safe_prime ? Relation::at_most : Relation::equal;
            verdict.bound_value = bound_thm4_pwp_v0(ctx);
            break;
        case TheoremId::thm5_pwpl_u0:
            family = FamilyId::PWpl;
            filter = ShiftFilter::u_zero;
            include_auto = true;
            verdict.relation = ctx.is_safe_prime ? Relation::at_most : Relation::equal;
            verdict.bound_value = bound_thm4_pwp_v0(ctx);
            break;
    }

    const FamilyMaxReport report =
        restricted_family_max(ctx, family, filter, include_auto, workers);
    verdict.family = family;
    verdict.filter = filter;
    verdict.include_auto = include_auto;
    verdict.empirical_value = report.value;
    if (!report.witnesses.empty()) verdict.witness = report.witnesses.front();

    const std::int64_t emp = verdict.empirical_value;
    switch (id) {
        case TheoremId::dg_wp_v0:
        case TheoremId::ard_pp_00:
            verdict.holds = emp == nt;
            break;
        case TheoremId::gw_wp_vnz:
            verdict.holds = emp <= bound_gw_wp_vnz_int(ctx);
            break;
        case TheoremId::ard_pp_unz_v0:
            verdict.holds = emp <= bound_ard_pp_unz_v0_int(ctx);
            break;
        case TheoremId::thm2_pp_u0_vnz:
            verdict.holds = detail::holds_half_plus_sqrt(emp, ctx.n);
            break;
        case TheoremId::thm1_wpel:
            verdict.holds = static_cast<double>(emp) <= verdict.bound_value + 1e-9;
            break;
        case TheoremId::thm4_pwp_v0:
        case TheoremId::thm5_pwpl_u0:
            verdict.holds = ctx.is_safe_prime
                                ? static_cast<double>(emp) <= verdict.bound_value + 1e-9
                                : emp == nt;
            break;
    }
    return verdict;
}

// ---------------------------------------------------------------------------
// Printed-table conventions for the mixed-family bound

/// floor(4 p log_p alpha), the convention the published nontrivial-bound
/// listing follows (the theorem's own form adds one).
inline std::int64_t table4_value(const PrimeContext& ctx, uint64_t alpha) {
    if (!is_primitive_root(ctx, alpha))
        throw std::domain_error("table4_value: alpha is not a primitive root");
    const long double x = 4.0L * static_cast<long double>(ctx.p) *
                          std::log(static_cast<long double>(alpha)) /
                          std::log(static_cast<long double>(ctx.p));
    return static_cast<std::int64_t>(std::floor(x));
}

/// A bound below the trivial ceiling p-1, i.e. floor value <= p-2; this
/// predicate selects the printed rows.
inline bool table4_nontrivial(const PrimeContext& ctx, uint64_t alpha) {
    return table4_value(ctx, alpha) <= static_cast<std::int64_t>(ctx.p) - 2;
}

} // namespace costas
