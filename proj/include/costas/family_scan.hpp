#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "costas/arrays.hpp"
#include "costas/xcorr.hpp"

namespace costas {

/// One (pair, shift) witness attaining a family maximum.
struct PairWitness {
    std::string a;
    std::string b;
    int u = 0;
    int v = 0;
};

/// Result of an exhaustive family scan: the exact maximum over all
/// admissible member pairs and shifts, plus the lexicographically first
/// witness (first pair in canonical scan order, then smallest u, then v).
struct FamilyMaxReport {
    FamilyId family = FamilyId::Wp;
    uint64_t p = 0;
    ShiftFilter filter = ShiftFilter::all;
    bool include_auto = false;
    int value = 0;
    std::vector<PairWitness> witnesses;
};

namespace detail {

// Per-pair maximum via a dense histogram over shifts. The buffer cell for
// (u, v) is base_g[j] + off(i), with base_g[j] = j*(2n-1) + g[j]; counts
// grow monotonically, so the running maximum of post-increment values
// equals the maximum final count. Touched cells are re-zeroed by
// replaying the same index walk, which keeps the buffer clean without a
// full memset per pair.
template <ShiftFilter F, bool SkipDiagonal>
int pair_max_dense(const std::vector<int>& f, const std::vector<int>& g,
                   std::vector<std::uint16_t>& buf,
                   std::vector<std::int32_t>& base_g) {
    const int n = static_cast<int>(f.size());
    const int side = 2 * n - 1;
    for (int j = 0; j < n; ++j) base_g[j] = j * side + g[j];
    auto walk = [&](auto&& touch) {
        for (int i = 0; i < n; ++i) {
            const std::int32_t off = (n - 1 - i) * side + (n - 1 - f[i]);
            const int fi = f[i];
            for (int j = 0; j < n; ++j) {
                if constexpr (SkipDiagonal) {
                    if (j == i) continue;  // the (0,0) cell of an auto pair
                }
                if constexpr (F == ShiftFilter::v_nonzero) {
                    if (g[j] == fi) continue;
                } else if constexpr (F == ShiftFilter::exclude_origin) {
                    if (j == i && g[j] == fi) continue;
                }
                touch(static_cast<std::size_t>(base_g[j] + off));
            }
        }
    };
    int best = 0;
    walk([&](std::size_t idx) {
        const int c = ++buf[idx];
        if (c > best) best = c;
    });
    walk([&](std::size_t idx) { buf[idx] = 0; });  // re-zero touched cells only
    return best;
}

// Shifts with v = 0 pair up equal values: for each w in [n] the single
// contributing index pair is (pos_f(w), pos_g(w)), so one O(n) histogram
// over u suffices. Covers v_zero, u_nonzero_v_zero and origin_only.
template <ShiftFilter F>
int pair_max_value_aligned(const std::vector<int>& posf,
                           const std::vector<int>& posg,
                           std::vector<std::uint16_t>& cnt) {
    const int n = static_cast<int>(posf.size()) - 1;
    std::fill(cnt.begin(), cnt.end(), 0);
    int best = 0;
    for (int w = 1; w <= n; ++w) {
        const int u = posg[w] - posf[w];
        if constexpr (F == ShiftFilter::u_nonzero_v_zero) {
            if (u == 0) continue;
        } else if constexpr (F == ShiftFilter::origin_only) {
            if (u != 0) continue;
        }
        const int c = ++cnt[static_cast<std::size_t>(u + n - 1)];
        if (c > best) best = c;
    }
    return best;
}

// Shifts with u = 0 pair up equal indices; histogram over v = g(i)-f(i).
template <ShiftFilter F>
int pair_max_index_aligned(const std::vector<int>& f, const std::vector<int>& g,
                           std::vector<std::uint16_t>& cnt) {
    const int n = static_cast<int>(f.size());
    std::fill(cnt.begin(), cnt.end(), 0);
    int best = 0;
    for (int i = 0; i < n; ++i) {
        const int v = g[i] - f[i];
        if constexpr (F == ShiftFilter::u_zero_v_nonzero) {
            if (v == 0) continue;
        }
        const int c = ++cnt[static_cast<std::size_t>(v + n - 1)];
        if (c > best) best = c;
    }
    return best;
}

struct ScanPair {
    std::int32_t a = 0;
    std::int32_t b = 0;
};

struct ScanBest {
    int value = -1;
    std::size_t pair_index = std::numeric_limits<std::size_t>::max();

    void offer(int value_in, std::size_t idx) {
        if (value_in > value || (value_in == value && idx < pair_index)) {
            value = value_in;
            pair_index = idx;
        }
    }
};

class FamilyScanner {
public:
    FamilyScanner(const std::vector<FamilyMember>& members, ShiftFilter filter)
        : members_(members), filter_(filter) {
        for (const auto& m : members_) {
            const auto& vals = m.perm.values();
            values_.push_back(vals);
            std::vector<int> pos(vals.size() + 1, 0);
            for (int i = 0; i < static_cast<int>(vals.size()); ++i)
                pos[static_cast<std::size_t>(vals[i])] = i;
            positions_.push_back(std::move(pos));
        }
    }

    int order() const {
        return members_.empty() ? 0 : members_.front().perm.order();
    }

    // A pair contributes at all only if some admissible shift exists for
    // it: autos never admit the origin, and an order-n grid only has
    // nonzero off-diagonal shifts for n >= 2.
    bool pair_admissible(bool is_auto) const {
        const int n = order();
        switch (filter_) {
            case ShiftFilter::origin_only: return !is_auto;
            case ShiftFilter::all: return !is_auto || n >= 2;
            default: return n >= 2 || (!is_auto && shift_passes(filter_, 0, 0));
        }
    }

    int pair_max(std::size_t a, std::size_t b, std::vector<std::uint16_t>& buf,
                 std::vector<std::int32_t>& base_g,
                 std::vector<std::uint16_t>& cnt) const {
        const bool is_auto = a == b;
        const auto& f = values_[a];
        const auto& g = values_[b];
        switch (filter_) {
            case ShiftFilter::all:
                return is_auto
                           ? pair_max_dense<ShiftFilter::all, true>(f, g, buf, base_g)
                           : pair_max_dense<ShiftFilter::all, false>(f, g, buf, base_g);
            case ShiftFilter::v_nonzero:
                return pair_max_dense<ShiftFilter::v_nonzero, false>(f, g, buf, base_g);
            case ShiftFilter::exclude_origin:
                return pair_max_dense<ShiftFilter::exclude_origin, false>(f, g, buf, base_g);
            case ShiftFilter::v_zero:
                if (is_auto) return 0;  // a permutation never repeats a value
                return pair_max_value_aligned<ShiftFilter::v_zero>(positions_[a],
                                                                   positions_[b], cnt);
            case ShiftFilter::u_nonzero_v_zero:
                if (is_auto) return 0;
                return pair_max_value_aligned<ShiftFilter::u_nonzero_v_zero>(
                    positions_[a], positions_[b], cnt);
            case ShiftFilter::origin_only:
                return pair_max_value_aligned<ShiftFilter::origin_only>(positions_[a],
                                                                        positions_[b], cnt);
            case ShiftFilter::u_zero:
                if (is_auto) return 0;  // only (0,0) aligns, and autos exclude it
                return pair_max_index_aligned<ShiftFilter::u_zero>(f, g, cnt);
            case ShiftFilter::u_zero_v_nonzero:
                if (is_auto) return 0;
                return pair_max_index_aligned<ShiftFilter::u_zero_v_nonzero>(f, g, cnt);
        }
        return 0;
    }

private:
    const std::vector<FamilyMember>& members_;
    ShiftFilter filter_;
    std::vector<std::vector<int>> values_;
    std::vector<std::vector<int>> positions_;
};

} // namespace detail

/// Exhaustive maximal cross-correlation of one family. Scans every
/// unordered pair f != g in canonical order over all shifts passing the
/// filter, plus (when include_auto is set) every f = g excluding the
/// origin. The pair list is partitioned across worker threads; partial
/// maxima merge by value, then by scan position, so the report does not
/// depend on the worker count. include_auto defaults to the family's own
/// convention.
inline FamilyMaxReport family_max(const PrimeContext& ctx, FamilyId id,
                                  ShiftFilter filter = ShiftFilter::all,
                                  std::optional<bool> include_auto = std::nullopt,
                                  unsigned workers = 0) {
    const bool with_auto = include_auto.value_or(family_includes_auto(id));
    if (ctx.n >= 65535)
        throw std::domain_error("family_max: order exceeds 16-bit counter range");
    const auto members = enumerate_family(ctx, id);
    const std::size_t m = members.size();

    detail::FamilyScanner scanner(members, filter);
    std::vector<detail::ScanPair> pairs;
    for (std::size_t a = 0; a < m; ++a) {
        if (with_auto && scanner.pair_admissible(true))
            pairs.push_back({static_cast<std::int32_t>(a), static_cast<std::int32_t>(a)});
        for (std::size_t b = a + 1; b < m; ++b) {
            if (scanner.pair_admissible(false))
                pairs.push_back({static_cast<std::int32_t>(a), static_cast<std::int32_t>(b)});
        }
    }
    if (pairs.empty())
        throw std::domain_error("family_max: no admissible pair/shift combination");

    if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
    workers = static_cast<unsigned>(
        std::min<std::size_t>(workers, pairs.size()));

    const int n = scanner.order();
    const std::size_t side = static_cast<std::size_t>(2 * n - 1);
    std::vector<detail::ScanBest> bests(workers);
    auto run = [&](unsigned w) {
        std::vector<std::uint16_t> buf(side * side, 0);
        std::vector<std::int32_t> base_g(static_cast<std::size_t>(n), 0);
        std::vector<std::uint16_t> cnt(side, 0);
        const std::size_t begin = pairs.size() * w / workers;
        const std::size_t end = pairs.size() * (w + 1) / workers;
        for (std::size_t k = begin; k < end; ++k) {
            const int value = scanner.pair_max(static_cast<std::size_t>(pairs[k].a),
                                               static_cast<std::size_t>(pairs[k].b),
                                               buf, base_g, cnt);
            bests[w].offer(value, k);
        }
    };
    if (workers == 1) {
        run(0);
    } else {
        std::vector<std::thread> threads;
        threads.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) threads.emplace_back(run, w);
        for (auto& t : threads) t.join();
    }

    detail::ScanBest best;
    for (const auto& b : bests) best.offer(b.value, b.pair_index);

    const auto& winner = pairs[best.pair_index];
    const auto& fa = members[static_cast<std::size_t>(winner.a)];
    const auto& fb = members[static_cast<std::size_t>(winner.b)];
    const CorrelationGrid grid = correlation_grid(fa.perm, fb.perm);
    const MaxResult at = max_over(grid, filter, /*exclude_origin=*/winner.a == winner.b);
    if (at.value != best.value)
        throw std::logic_error("family_max: kernel disagrees with grid maximum");

    FamilyMaxReport report;
    report.family = id;
    report.p = ctx.p;
    report.filter = filter;
    report.include_auto = with_auto;
    report.value = best.value;
    report.witnesses.push_back({fa.label.str(), fb.label.str(), at.shift.u, at.shift.v});
    return report;
}

/// Named entry point for theorem verification: the same engine as
/// family_max, applied with the restricting filter a theorem speaks about.
inline FamilyMaxReport restricted_family_max(const PrimeContext& ctx, FamilyId id,
                                             ShiftFilter filter,
                                             std::optional<bool> include_auto = std::nullopt,
                                             unsigned workers = 0) {
    return family_max(ctx, id, filter, include_auto, workers);
}

} // namespace costas
