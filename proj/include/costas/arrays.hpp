#pragma once

#include <numeric>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "costas/numthy.hpp"
#include "costas/permutation.hpp"
#include "costas/xcorr.hpp"

namespace costas {

/// Exponential Welch construction: f(j) = alpha^(j-1+c) mod p on [p-1].
inline Permutation welch_exp(const PrimeContext& ctx, uint64_t alpha, uint64_t c = 0) {
    if (!is_primitive_root(ctx, alpha))
        throw std::domain_error("welch_exp: alpha is not a primitive root of p");
    if (c > ctx.p - 2) throw std::domain_error("welch_exp: c out of range [0, p-2]");
    std::vector<int> values(ctx.n);
    uint64_t x = pow_mod(alpha, c, ctx.p);
    for (uint64_t j = 0; j < ctx.n; ++j) {
        values[j] = static_cast<int>(x);
        x = mul_mod(x, alpha, ctx.p);
    }
    return Permutation(std::move(values));
}

/// Logarithmic Welch construction: g(j) = 1 + c + log_alpha(j) mod (p-1),
/// with residue 0 mapped to p-1 so values stay in [p-1]. For c = 0 this is
/// the inverse permutation of welch_exp(ctx, alpha, 0).
inline Permutation welch_log(const PrimeContext& ctx, uint64_t alpha, uint64_t c = 0) {
    if (!is_primitive_root(ctx, alpha))
        throw std::domain_error("welch_log: alpha is not a primitive root of p");
    if (c > ctx.p - 2) throw std::domain_error("welch_log: c out of range [0, p-2]");
    const auto logs = dlog_table(ctx.p, alpha);
    std::vector<int> values(ctx.n);
    for (uint64_t j = 1; j <= ctx.n; ++j) {
        const uint64_t r = (1 + c + logs[j]) % ctx.n;
        values[j - 1] = static_cast<int>(r == 0 ? ctx.n : r);
    }
    return Permutation(std::move(values));
}

/// Power permutation: f(i) = i^d mod p on [p-1]. Requires gcd(d, p-1) = 1
/// and 1 < d <= p-2; the identity d = 1 is rejected.
inline Permutation power_perm(const PrimeContext& ctx, uint64_t d) {
    if (d <= 1 || d > ctx.p - 2)
        throw std::domain_error("power_perm: d out of range (1, p-2]");
    if (std::gcd(d, ctx.n) != 1)
        throw std::domain_error("power_perm: gcd(d, p-1) must be 1");
    std::vector<int> values(ctx.n);
    for (uint64_t i = 1; i <= ctx.n; ++i) {
        values[i - 1] = static_cast<int>(pow_mod(i, d, ctx.p));
    }
    return Permutation(std::move(values));
}

/// Costas test through the correlation grid: every off-origin
/// auto-correlation count is at most 1.
inline bool is_costas_grid(const Permutation& f) {
    if (f.order() == 1) return true;  // no nontrivial shift exists
    const CorrelationGrid grid = correlation_grid(f, f);
    return max_over(grid, ShiftFilter::all, /*exclude_origin=*/true).value <= 1;
}

/// Independent Costas test via difference triangles: for every row
/// distance k the signed differences f(i+k) - f(i) are pairwise distinct.
/// Agrees with is_costas_grid on every permutation.
inline bool is_costas_difference_triangle(const Permutation& f) {
    const int n = f.order();
    std::vector<char> seen(static_cast<std::size_t>(2 * n), 0);
    for (int k = 1; k < n; ++k) {
        std::fill(seen.begin(), seen.end(), 0);
        for (int i = 1; i + k <= n; ++i) {
            const int d = f(i + k) - f(i) + n;  // shift into [1, 2n-1]
            if (seen[static_cast<std::size_t>(d)]) return false;
            seen[static_cast<std::size_t>(d)] = 1;
        }
    }
    return true;
}

// ---------------------------------------------------------------------------
// Families

enum class FamilyId { Wp, Wpl, Wpel, Pp, PWp, PWpl };

inline constexpr FamilyId kAllFamilies[] = {FamilyId::Wp,  FamilyId::Wpl,
                                            FamilyId::Wpel, FamilyId::Pp,
                                            FamilyId::PWp, FamilyId::PWpl};

constexpr std::string_view to_string(FamilyId id) {
    switch (id) {
        case FamilyId::Wp: return "Wp";
        case FamilyId::Wpl: return "Wpl";
        case FamilyId::Wpel: return "Wpel";
        case FamilyId::Pp: return "Pp";
        case FamilyId::PWp: return "PWp";
        case FamilyId::PWpl: return "PWpl";
    }
    return "?";
}

inline std::optional<FamilyId> family_from_string(std::string_view name) {
    for (FamilyId id : kAllFamilies) {
        if (to_string(id) == name) return id;
    }
    return std::nullopt;
}

/// Whether the family's maximal cross-correlation convention includes
/// auto-correlations (f = g with (u,v) != (0,0)). The Welch-only families
/// are defined over distinct pairs; the power-bearing ones include autos.
constexpr bool family_includes_auto(FamilyId id) {
    switch (id) {
        case FamilyId::Wp:
        case FamilyId::Wpl:
        case FamilyId::Wpel: return false;
        case FamilyId::Pp:
        case FamilyId::PWp:
        case FamilyId::PWpl: return true;
    }
    return false;
}

/// Closed-form member count: phi(n), phi(n), 2 phi(n), phi(n)-1,
/// 2 phi(n)-1, 2 phi(n)-1.
inline uint64_t family_size(const PrimeContext& ctx, FamilyId id) {
    switch (id) {
        case FamilyId::Wp:
        case FamilyId::Wpl: return ctx.totient_n;
        case FamilyId::Wpel: return 2 * ctx.totient_n;
        case FamilyId::Pp: return ctx.totient_n - 1;
        case FamilyId::PWp:
        case FamilyId::PWpl: return 2 * ctx.totient_n - 1;
    }
    return 0;
}

inline bool family_enumerable(const PrimeContext& ctx, FamilyId id) {
    return id != FamilyId::Wpel || ctx.p > 5;
}

/// Construction tag of one family member: which recipe and which integer
/// parameter (primitive root for the Welch recipes, exponent for powers).
struct ConstructionLabel {
    enum class Kind { welch_exp, welch_log, power };
    Kind kind = Kind::welch_exp;
    uint64_t param = 0;

    std::string str() const {
        switch (kind) {
            case Kind::welch_exp: return "welch-exp:" + std::to_string(param);
            case Kind::welch_log: return "welch-log:" + std::to_string(param);
            case Kind::power: return "power:" + std::to_string(param);
        }
        return "?";
    }

    bool operator==(const ConstructionLabel&) const = default;
};

struct FamilyMember {
    ConstructionLabel label;
    Permutation perm;
};

/// Enumerates a family in canonical order: Welch members by ascending
/// alpha (all exponential before all logarithmic where both are present),
/// then power members by ascending d. The shift constant c is fixed to 0
/// for every Welch member. Wpel is only defined for p > 5, where the
/// logarithmic arrays are distinct from the exponential ones.
inline std::vector<FamilyMember> enumerate_family(const PrimeContext& ctx, FamilyId id) {
    if (!family_enumerable(ctx, id))
        throw std::domain_error("enumerate_family: Wpel requires p > 5");
    std::vector<FamilyMember> members;
    members.reserve(family_size(ctx, id));
    const bool with_exp = id == FamilyId::Wp || id == FamilyId::Wpel || id == FamilyId::PWp;
    const bool with_log = id == FamilyId::Wpl || id == FamilyId::Wpel || id == FamilyId::PWpl;
    const bool with_pow = id == FamilyId::Pp || id == FamilyId::PWp || id == FamilyId::PWpl;
    if (with_exp) {
        for (uint64_t alpha : ctx.primitive_roots) {
            members.push_back({{ConstructionLabel::Kind::welch_exp, alpha},
                               welch_exp(ctx, alpha, 0)});
        }
    }
    if (with_log) {
        for (uint64_t alpha : ctx.primitive_roots) {
            members.push_back({{ConstructionLabel::Kind::welch_log, alpha},
                               welch_log(ctx, alpha, 0)});
        }
    }
    if (with_pow) {
        for (uint64_t d = 2; d <= ctx.p - 2; ++d) {
            if (std::gcd(d, ctx.n) == 1) {
                members.push_back({{ConstructionLabel::Kind::power, d},
                                   power_perm(ctx, d)});
            }
        }
    }
    return members;
}

} // namespace costas
