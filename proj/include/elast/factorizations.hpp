#pragma once

/**
 * @file factorizations.hpp
 * @brief Factorizations, length sets and the max/min length functions.
 *
 * LengthEngine tabulates M(n) and m(n) once, up to the larger of the two
 * quasilinearity thresholds, and answers every larger element in constant
 * time through M(n) = M(n - g_1) + 1 and m(n) = m(n - g_k) + 1.
 */

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "elast/error.hpp"
#include "elast/monoid.hpp"
#include "elast/rational.hpp"

namespace elast {

/// Exponent vector over the generators of the ambient monoid.
struct Factorization {
    std::vector<std::uint64_t> exponents;

    std::uint64_t length() const {
        std::uint64_t total = 0;
        for (auto e : exponents) total += e;
        return total;
    }

    Element value(std::span<const Element> gens) const {
        Element total = 0;
        for (std::size_t i = 0; i < exponents.size(); ++i)
            total = detail::checked_add(total, detail::checked_mul(exponents[i], gens[i]));
        return total;
    }

    friend auto operator<=>(const Factorization&, const Factorization&) = default;
};

using LengthSet = std::vector<std::uint64_t>;  // ascending, no duplicates

struct LengthStats {
    Element n = 0;
    std::uint64_t max_len = 0;
    std::uint64_t min_len = 0;
    Rational elasticity;
};

class LengthEngine {
public:
    explicit LengthEngine(NumericalMonoid s, const Limits& limits = {}) : monoid_(std::move(s)) {
        const Element g1 = monoid_.smallest();
        const Element gk = monoid_.largest();
        max_threshold_ = detail::checked_mul(g1 - 1, gk);
        min_threshold_ = monoid_.is_trivial() ? 0 : detail::checked_mul(gk - 1, monoid_.second_largest());
        table_bound_ = std::max(max_threshold_, min_threshold_);
        if (table_bound_ + 1 > limits.max_table_entries || table_bound_ >= kAbsent)
            throw Error(ErrorCode::TableTooLarge, "length table of " + std::to_string(table_bound_ + 1) +
                                                      " entries exceeds the configured cap");
        build();
    }

    const NumericalMonoid& monoid() const { return monoid_; }

    /// (g_1 - 1) g_k: beyond it M(n) = M(n - g_1) + 1.
    Element max_threshold() const { return max_threshold_; }
    /// (g_k - 1) g_{k-1}: beyond it m(n) = m(n - g_k) + 1.
    Element min_threshold() const { return min_threshold_; }
    Element table_bound() const { return table_bound_; }

    bool contains(Element n) const { return n > table_bound_ || max_[n] != kAbsent; }

    std::uint64_t max_length(Element n) const {
        require_member(n);
        if (n <= table_bound_) return max_[n];
        const Element g1 = monoid_.smallest();
        const Element steps = (n - max_threshold_ + g1 - 1) / g1;
        return detail::checked_add(max_[n - steps * g1], steps);
    }

    std::uint64_t min_length(Element n) const {
        require_member(n);
        if (n <= table_bound_) return min_[n];
        const Element gk = monoid_.largest();
        const Element steps = (n - min_threshold_ + gk - 1) / gk;
        return detail::checked_add(min_[n - steps * gk], steps);
    }

    /// M(n) / m(n); the empty factorization of 0 is assigned elasticity 1.
    Rational elasticity(Element n) const {
        const auto hi = max_length(n);
        const auto lo = min_length(n);
        if (n == 0) return Rational(1);
        return Rational(BigInt(hi), BigInt(lo));
    }

    LengthStats stats(Element n) const {
        LengthStats out;
        out.n = n;
        out.max_len = max_length(n);
        out.min_len = min_length(n);
        out.elasticity = n == 0 ? Rational(1) : Rational(BigInt(out.max_len), BigInt(out.min_len));
        return out;
    }

    /// Test hook: overwrite one tabulated max length. Only the verification
    /// suite's negative control uses this.
    void corrupt_max_entry(Element n, std::uint32_t value) {
        if (n > table_bound_) throw Error(ErrorCode::IndexOutOfRange, "entry outside table");
        max_[n] = value;
    }

private:
    static constexpr std::uint32_t kAbsent = std::numeric_limits<std::uint32_t>::max();

    void require_member(Element n) const {
        if (!contains(n))
            throw Error(ErrorCode::NotInMonoid, std::to_string(n) + " is not in " + monoid_.to_string());
    }

    void build() {
        max_.assign(table_bound_ + 1, kAbsent);
        min_.assign(table_bound_ + 1, kAbsent);
        max_[0] = 0;
        min_[0] = 0;
        const auto gens = monoid_.generators();
        for (Element v = 1; v <= table_bound_; ++v) {
            std::uint32_t best_max = kAbsent;
            std::uint32_t best_min = kAbsent;
            for (Element g : gens) {
                if (g > v) break;
                const std::uint32_t prev_max = max_[v - g];
                if (prev_max == kAbsent) continue;
                const std::uint32_t prev_min = min_[v - g];
                if (best_max == kAbsent || prev_max + 1 > best_max) best_max = prev_max + 1;
                if (best_min == kAbsent || prev_min + 1 < best_min) best_min = prev_min + 1;
            }
            max_[v] = best_max;
            min_[v] = best_min;
        }
    }

    NumericalMonoid monoid_;
    Element max_threshold_ = 0;
    Element min_threshold_ = 0;
    Element table_bound_ = 0;
    std::vector<std::uint32_t> max_;
    std::vector<std::uint32_t> min_;
};

/// Visits every factorization of n, ordered lexicographically descending
/// by the exponent of g_k, then g_{k-1}, and so on.
inline void for_each_factorization(const NumericalMonoid& s, Element n,
                                   const std::function<void(const Factorization&)>& visit,
                                   const Limits& limits = {}) {
    const auto gens = s.generators();
    const std::size_t k = gens.size();
    if (detail::checked_mul(k, n + 1) > limits.max_table_entries)
        throw Error(ErrorCode::EnumerationLimit, "element " + std::to_string(n) + " too large to enumerate");

    // prefix_reach[i][v]: v is a combination of gens[0..i].
    std::vector<std::vector<char>> prefix_reach;
    prefix_reach.reserve(k);
    for (std::size_t i = 0; i < k; ++i) prefix_reach.push_back(detail::reachability(gens.first(i + 1), n));
    if (!prefix_reach.back()[n]) return;

    Factorization current{std::vector<std::uint64_t>(k, 0)};
    std::uint64_t produced = 0;
    std::function<void(std::size_t, Element)> descend = [&](std::size_t i, Element rest) {
        if (i == 0) {
            current.exponents[0] = rest / gens[0];
            if (++produced > limits.max_factorizations)
                throw Error(ErrorCode::EnumerationLimit, "factorization count exceeds configured cap");
            visit(current);
            return;
        }
        for (Element e = rest / gens[i] + 1; e-- > 0;) {
            const Element left = rest - e * gens[i];
            if (!prefix_reach[i - 1][left]) continue;
            current.exponents[i] = e;
            descend(i - 1, left);
        }
        current.exponents[i] = 0;
    };
    descend(k - 1, n);
}

/// Z(n); empty exactly when n is not in S.
inline std::vector<Factorization> factorizations(const NumericalMonoid& s, Element n, const Limits& limits = {}) {
    std::vector<Factorization> out;
    for_each_factorization(s, n, [&](const Factorization& f) { out.push_back(f); }, limits);
    return out;
}

inline LengthSet length_set(const NumericalMonoid& s, Element n, const Limits& limits = {}) {
    std::set<std::uint64_t> lengths;
    for_each_factorization(s, n, [&](const Factorization& f) { lengths.insert(f.length()); }, limits);
    if (lengths.empty()) throw Error(ErrorCode::NotInMonoid, std::to_string(n) + " is not in " + s.to_string());
    return {lengths.begin(), lengths.end()};
}

/// Length sets of every element of [0, bound] by the union recurrence
/// L(n) = U (L(n - g_i) + 1); entries for non-members are empty.
inline std::vector<LengthSet> length_sets_upto(const NumericalMonoid& s, Element bound, const Limits& limits = {}) {
    if (bound + 1 > limits.max_table_entries)
        throw Error(ErrorCode::TableTooLarge, "length-set table too large");
    std::vector<LengthSet> table(bound + 1);
    table[0] = {0};
    for (Element v = 1; v <= bound; ++v) {
        LengthSet merged;
        for (Element g : s.generators()) {
            if (g > v) break;
            for (auto len : table[v - g]) merged.push_back(len + 1);
        }
        std::sort(merged.begin(), merged.end());
        merged.erase(std::unique(merged.begin(), merged.end()), merged.end());
        table[v] = std::move(merged);
    }
    return table;
}

/// Smallest n in S with L(n) equal to `target`, if any. Any such n has
/// max L(n) generators summing to it, so n <= max(target) * g_k and the scan
/// below is exhaustive; absence is a proof that target is not in the set of
/// length sets.
inline std::optional<Element> find_element_with_length_set(const NumericalMonoid& s, const LengthSet& target,
                                                           const Limits& limits = {}) {
    if (target.empty()) return std::nullopt;
    const Element bound = detail::checked_mul(target.back(), s.largest());
    const auto table = length_sets_upto(s, bound, limits);
    for (Element v = 0; v <= bound; ++v)
        if (table[v] == target) return v;
    return std::nullopt;
}

inline std::uint64_t max_length(const NumericalMonoid& s, Element n) { return LengthEngine(s).max_length(n); }
inline std::uint64_t min_length(const NumericalMonoid& s, Element n) { return LengthEngine(s).min_length(n); }
inline Rational elasticity(const NumericalMonoid& s, Element n) { return LengthEngine(s).elasticity(n); }

/// LengthStats for every n in S within [lo, hi], ascending.
inline std::vector<LengthStats> length_stats_range(const LengthEngine& engine, Element lo, Element hi) {
    std::vector<LengthStats> out;
    if (lo > hi) return out;
    for (Element n = lo;; ++n) {
        if (engine.contains(n)) out.push_back(engine.stats(n));
        if (n == hi) break;
    }
    return out;
}

inline std::vector<LengthStats> length_stats_range(const NumericalMonoid& s, Element lo, Element hi) {
    return length_stats_range(LengthEngine(s), lo, hi);
}

/// Proper subset T of the (0-based) indices of `c` with
/// sum_{i in T} c_i == sum_i c_i (mod k), from two prefix sums that agree mod k.
/// With k = 0 the prefix sums must agree exactly.
inline std::vector<std::size_t> find_proper_subcollection(std::uint64_t k, std::span<const std::int64_t> c) {
    if (c.size() < k)
        throw Error(ErrorCode::InvalidInput, "need at least k values (k=" + std::to_string(k) + ")");
    auto reduce = [k](const BigInt& v) -> BigInt {
        if (k == 0) return v;
        BigInt r = v % k;
        if (r < 0) r += k;
        return r;
    };
    std::map<BigInt, std::size_t> first_seen;  // residue -> prefix index
    BigInt prefix = 0;
    first_seen.emplace(reduce(prefix), 0);
    for (std::size_t j = 1; j <= c.size(); ++j) {
        prefix += c[j - 1];
        const auto [it, fresh] = first_seen.emplace(reduce(prefix), j);
        if (fresh) continue;
        // Drop positions i+1..j (1-based), i.e. 0-based [i, j).
        const std::size_t i = it->second;
        std::vector<std::size_t> keep;
        for (std::size_t idx = 0; idx < c.size(); ++idx)
            if (idx < i || idx >= j) keep.push_back(idx);
        return keep;
    }
    throw Error(ErrorCode::NoSubcollection, "all prefix sums are distinct");
}

}  // namespace elast
