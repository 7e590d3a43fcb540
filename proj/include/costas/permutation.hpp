#pragma once

#include <charconv>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

namespace costas {

/// A one-indexed bijection on [n] = {1,...,n}. The value sequence is
/// validated on construction and immutable afterwards, so instances are
/// safe to share across threads.
class Permutation {
public:
    explicit Permutation(std::vector<int> values) : values_(std::move(values)) {
        const int n = static_cast<int>(values_.size());
        if (n == 0) throw std::domain_error("Permutation: order must be positive");
        std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
        for (int v : values_) {
            if (v < 1 || v > n) throw std::domain_error("Permutation: value out of [n]");
            if (seen[static_cast<std::size_t>(v)])
                throw std::domain_error("Permutation: not a bijection (duplicate value)");
            seen[static_cast<std::size_t>(v)] = true;
        }
    }

    int order() const { return static_cast<int>(values_.size()); }

    /// f(i) for i in [n], one-indexed.
    int operator()(int i) const { return values_[static_cast<std::size_t>(i) - 1]; }

    const std::vector<int>& values() const { return values_; }

    bool operator==(const Permutation&) const = default;

private:
    std::vector<int> values_;
};

/// g with g(f(i)) = i for all i.
inline Permutation inverse(const Permutation& f) {
    std::vector<int> g(static_cast<std::size_t>(f.order()));
    for (int i = 1; i <= f.order(); ++i) g[static_cast<std::size_t>(f(i)) - 1] = i;
    return Permutation(std::move(g));
}

/// All i with f(i) = i, ascending.
inline std::vector<int> fixed_points(const Permutation& f) {
    std::vector<int> pts;
    for (int i = 1; i <= f.order(); ++i) {
        if (f(i) == i) pts.push_back(i);
    }
    return pts;
}

/// True iff all pairwise differences a - b (a != b) over the set are
/// distinct. Empty sets and singletons qualify; a repeated element is a
/// domain error since the input is required to be a set.
inline bool is_golomb_ruler(const std::vector<int>& s) {
    std::unordered_set<int> elems(s.begin(), s.end());
    if (elems.size() != s.size())
        throw std::domain_error("is_golomb_ruler: input must be a set of distinct integers");
    std::unordered_set<long long> diffs;
    for (std::size_t i = 0; i < s.size(); ++i) {
        for (std::size_t j = i + 1; j < s.size(); ++j) {
            // d and -d are both distinct or both repeated, one sign suffices
            long long d = static_cast<long long>(s[i]) - s[j];
            if (d < 0) d = -d;
            if (!diffs.insert(d).second) return false;
        }
    }
    return true;
}

/// Parses the comma-separated one-indexed text form, e.g. "3,2,6,4,5,1".
inline Permutation parse_permutation(std::string_view text) {
    std::vector<int> values;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        std::string_view tok = text.substr(pos, comma == std::string_view::npos
                                                    ? std::string_view::npos
                                                    : comma - pos);
        int v = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (ec != std::errc() || ptr != tok.data() + tok.size())
            throw std::domain_error("parse_permutation: malformed integer '" +
                                    std::string(tok) + "'");
        values.push_back(v);
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return Permutation(std::move(values));
}

inline std::string to_string(const Permutation& f) {
    std::string out;
    for (int i = 1; i <= f.order(); ++i) {
        if (i > 1) out += ',';
        out += std::to_string(f(i));
    }
    return out;
}

} // namespace costas
