#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "costas/permutation.hpp"

namespace costas {

/// Horizontal shift u (along indices) and vertical shift v (along values).
struct ShiftPair {
    int u = 0;
    int v = 0;
    bool operator==(const ShiftPair&) const = default;
};

/// Shift-region predicates used to restrict maxima to the cases the
/// individual correlation results speak about.
enum class ShiftFilter {
    all,
    v_zero,            // arbitrary u, v = 0
    u_zero,            // u = 0, arbitrary v
    v_nonzero,         // arbitrary u, v != 0
    u_nonzero_v_zero,  // u != 0, v = 0
    u_zero_v_nonzero,  // u = 0, v != 0
    origin_only,       // (u, v) = (0, 0)
    exclude_origin,    // any (u, v) != (0, 0)
};

constexpr bool shift_passes(ShiftFilter f, int u, int v) {
    switch (f) {
        case ShiftFilter::all: return true;
        case ShiftFilter::v_zero: return v == 0;
        case ShiftFilter::u_zero: return u == 0;
        case ShiftFilter::v_nonzero: return v != 0;
        case ShiftFilter::u_nonzero_v_zero: return u != 0 && v == 0;
        case ShiftFilter::u_zero_v_nonzero: return u == 0 && v != 0;
        case ShiftFilter::origin_only: return u == 0 && v == 0;
        case ShiftFilter::exclude_origin: return u != 0 || v != 0;
    }
    return false;
}

constexpr std::string_view to_string(ShiftFilter f) {
    switch (f) {
        case ShiftFilter::all: return "all";
        case ShiftFilter::v_zero: return "v_zero";
        case ShiftFilter::u_zero: return "u_zero";
        case ShiftFilter::v_nonzero: return "v_nonzero";
        case ShiftFilter::u_nonzero_v_zero: return "u_nonzero_v_zero";
        case ShiftFilter::u_zero_v_nonzero: return "u_zero_v_nonzero";
        case ShiftFilter::origin_only: return "origin_only";
        case ShiftFilter::exclude_origin: return "exclude_origin";
    }
    return "?";
}

inline std::optional<ShiftFilter> shift_filter_from_string(std::string_view name) {
    for (ShiftFilter f :
         {ShiftFilter::all, ShiftFilter::v_zero, ShiftFilter::u_zero,
          ShiftFilter::v_nonzero, ShiftFilter::u_nonzero_v_zero,
          ShiftFilter::u_zero_v_nonzero, ShiftFilter::origin_only,
          ShiftFilter::exclude_origin}) {
        if (to_string(f) == name) return f;
    }
    return std::nullopt;
}

/// Dense table of coincidence counts, indexed by shifts u, v in
/// [-(n-1), n-1]. Entries are at most n, so 16 bits suffice. Outside the
/// stored square every count is identically zero and at() says so.
class CorrelationGrid {
public:
    explicit CorrelationGrid(int order)
        : n_(checked_order(order)), side_(2 * order - 1),
          counts_(static_cast<std::size_t>(side_) * side_, 0) {}

    int order() const { return n_; }
    int side() const { return side_; }

    std::uint16_t at(int u, int v) const {
        if (u <= -n_ || u >= n_ || v <= -n_ || v >= n_) return 0;
        return counts_[index(u, v)];
    }

    std::uint16_t& cell(int u, int v) { return counts_[index(u, v)]; }

    std::uint64_t total_mass() const {
        std::uint64_t sum = 0;
        for (auto c : counts_) sum += c;
        return sum;
    }

private:
    static int checked_order(int order) {
        if (order < 1) throw std::domain_error("CorrelationGrid: order must be positive");
        if (order > 65535) throw std::domain_error("CorrelationGrid: order exceeds 16-bit counters");
        return order;
    }

    std::size_t index(int u, int v) const {
        return static_cast<std::size_t>(u + n_ - 1) * side_ +
               static_cast<std::size_t>(v + n_ - 1);
    }

    int n_;
    int side_;
    std::vector<std::uint16_t> counts_;
};

/// The definitional count at a single shift: the number of i in [n] with
/// i+u in [n] and g(i+u) = f(i)+v. This O(n) form is the reference
/// oracle the grid kernel is tested against.
inline int cross_correlation_at(const Permutation& f, const Permutation& g,
                                ShiftPair s) {
    if (f.order() != g.order())
        throw std::domain_error("cross_correlation_at: order mismatch");
    const int n = f.order();
    int count = 0;
    for (int i = 1; i <= n; ++i) {
        const int j = i + s.u;
        if (j >= 1 && j <= n && g(j) == f(i) + s.v) ++count;
    }
    return count;
}

/// Full grid in one O(n^2) pass: every index pair (i, j) lands in exactly
/// one cell (j-i, g(j)-f(i)), so the grid mass is n^2.
inline CorrelationGrid correlation_grid(const Permutation& f, const Permutation& g) {
    if (f.order() != g.order())
        throw std::domain_error("correlation_grid: order mismatch");
    const int n = f.order();
    CorrelationGrid grid(n);
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            ++grid.cell(j - i, g(j) - f(i));
        }
    }
    return grid;
}

struct MaxResult {
    int value = 0;
    ShiftPair shift;
};

/// Maximum entry over shifts passing the filter (and, when requested,
/// excluding the origin). Ties break toward the smallest u, then the
/// smallest v. A filter admitting no shift at all is a domain error.
inline MaxResult max_over(const CorrelationGrid& grid, ShiftFilter filter,
                          bool exclude_origin) {
    const int n = grid.order();
    MaxResult best;
    bool found = false;
    for (int u = -(n - 1); u <= n - 1; ++u) {
        for (int v = -(n - 1); v <= n - 1; ++v) {
            if (!shift_passes(filter, u, v)) continue;
            if (exclude_origin && u == 0 && v == 0) continue;
            const int value = grid.at(u, v);
            if (!found || value > best.value) {
                best = {value, {u, v}};
                found = true;
            }
        }
    }
    if (!found) throw std::domain_error("max_over: filter admits no shift");
    return best;
}

} // namespace costas
