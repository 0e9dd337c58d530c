#pragma once

/**
 * @file monoid.hpp
 * @brief Numerical monoids: construction, membership, Frobenius number.
 *
 * A NumericalMonoid always holds its minimal generating set in increasing
 * order with gcd 1. Instances are immutable after construction.
 */

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "elast/error.hpp"
#include "elast/rational.hpp"

namespace elast {

using Element = std::uint64_t;

/// Resource caps. The defaults keep every DP table comfortably in memory.
struct Limits {
    Element max_generator = 1'000'000;
    std::uint64_t max_table_entries = 50'000'000;
    std::uint64_t max_factorizations = 10'000'000;
};

namespace detail {

inline std::uint64_t checked_mul(std::uint64_t x, std::uint64_t y) {
    if (x != 0 && y > UINT64_MAX / x) throw Error(ErrorCode::Overflow, "64-bit multiplication overflow");
    return x * y;
}

inline std::uint64_t checked_add(std::uint64_t x, std::uint64_t y) {
    if (y > UINT64_MAX - x) throw Error(ErrorCode::Overflow, "64-bit addition overflow");
    return x + y;
}

// Ascending reachability table over [0, bound] for the given generators.
inline std::vector<char> reachability(std::span<const Element> gens, Element bound) {
    std::vector<char> reach(bound + 1, 0);
    reach[0] = 1;
    for (Element v = 1; v <= bound; ++v) {
        for (Element g : gens) {
            if (g <= v && reach[v - g]) {
                reach[v] = 1;
                break;
            }
        }
    }
    return reach;
}

}  // namespace detail

class NumericalMonoid {
public:
    /// Normalizes `raw` into a minimal generating set: sorts, removes
    /// duplicates and drops generators expressible by the smaller ones.
    static NumericalMonoid create(std::span<const Element> raw, const Limits& limits = {}) {
        if (raw.empty()) throw Error(ErrorCode::EmptyInput, "generator list is empty");
        std::vector<Element> gens(raw.begin(), raw.end());
        Element common = 0;
        for (Element g : gens) {
            if (g == 0) throw Error(ErrorCode::ZeroGenerator, "generators must be positive");
            if (g > limits.max_generator)
                throw Error(ErrorCode::GeneratorTooLarge,
                            "generator " + std::to_string(g) + " exceeds cap " +
                                std::to_string(limits.max_generator));
            common = std::gcd(common, g);
        }
        if (common != 1) throw Error(ErrorCode::NonCoprime, "gcd of generators is " + std::to_string(common));

        std::sort(gens.begin(), gens.end());
        gens.erase(std::unique(gens.begin(), gens.end()), gens.end());

        const Element top = gens.back();
        std::vector<char> reach(top + 1, 0);
        reach[0] = 1;
        std::vector<Element> minimal;
        for (Element g : gens) {
            if (reach[g]) continue;
            minimal.push_back(g);
            for (Element v = g; v <= top; ++v)
                if (reach[v - g]) reach[v] = 1;
        }
        return NumericalMonoid(std::move(minimal));
    }

    static NumericalMonoid create(std::initializer_list<Element> raw, const Limits& limits = {}) {
        return create(std::span<const Element>(raw.begin(), raw.size()), limits);
    }

    std::span<const Element> generators() const { return gens_; }
    std::size_t embedding_dimension() const { return gens_.size(); }
    Element smallest() const { return gens_.front(); }
    Element largest() const { return gens_.back(); }
    /// g_{k-1}; equals g_1 for two generators and is undefined (returns g_1) for <1>.
    Element second_largest() const { return gens_.size() >= 2 ? gens_[gens_.size() - 2] : gens_.front(); }
    bool is_trivial() const { return gens_.size() == 1; }

    std::string to_string() const {
        std::string out = "<";
        for (std::size_t i = 0; i < gens_.size(); ++i) {
            if (i) out += ",";
            out += std::to_string(gens_[i]);
        }
        return out + ">";
    }

    friend bool operator==(const NumericalMonoid&, const NumericalMonoid&) = default;

private:
    explicit NumericalMonoid(std::vector<Element> gens) : gens_(std::move(gens)) {}

    std::vector<Element> gens_;
};

inline NumericalMonoid new_monoid(std::span<const Element> raw, const Limits& limits = {}) {
    return NumericalMonoid::create(raw, limits);
}

/// Every integer at or above this value lies in S: (g_1 - 1)(g_k - 1).
inline Element conductor_bound(const NumericalMonoid& s) {
    return detail::checked_mul(s.smallest() - 1, s.largest() - 1);
}

inline bool contains(const NumericalMonoid& s, Element n) {
    if (s.is_trivial() || n >= conductor_bound(s)) return true;
    return detail::reachability(s.generators(), n)[n] != 0;
}

/// Largest integer outside S; -1 for <1>, whose complement is empty.
inline std::int64_t frobenius(const NumericalMonoid& s) {
    if (s.is_trivial()) return -1;
    const Element bound = conductor_bound(s);
    const auto reach = detail::reachability(s.generators(), bound);
    for (Element v = bound; v-- > 0;)
        if (!reach[v]) return static_cast<std::int64_t>(v);
    return -1;
}

/// g_k / g_1, the supremum and unique accumulation point of R(S).
inline Rational max_elasticity(const NumericalMonoid& s) {
    return Rational(BigInt(s.largest()), BigInt(s.smallest()));
}

/// a, d, k describing S = <a, a+d, ..., a+kd> with gcd(a,d) = 1 and 1 <= k < a.
struct ArithmeticalParams {
    std::int64_t a = 0;
    std::int64_t d = 0;
    std::int64_t k = 0;

    static ArithmeticalParams make(std::int64_t a, std::int64_t d, std::int64_t k) {
        if (a < 1 || d < 1 || k < 1 || k >= a || std::gcd(a, d) != 1)
            throw Error(ErrorCode::InvalidParams, "need a,d,k >= 1, k < a and gcd(a,d) = 1 (got a=" +
                                                      std::to_string(a) + " d=" + std::to_string(d) +
                                                      " k=" + std::to_string(k) + ")");
        return ArithmeticalParams{a, d, k};
    }

    std::vector<Element> generators() const {
        std::vector<Element> out;
        for (std::int64_t i = 0; i <= k; ++i) out.push_back(static_cast<Element>(a + i * d));
        return out;
    }

    /// a + kd, the largest generator.
    std::int64_t top() const { return a + k * d; }

    friend bool operator==(const ArithmeticalParams&, const ArithmeticalParams&) = default;
};

inline std::optional<ArithmeticalParams> detect_arithmetical(const NumericalMonoid& s) {
    const auto gens = s.generators();
    if (gens.size() < 2) return std::nullopt;
    const Element step = gens[1] - gens[0];
    for (std::size_t i = 2; i < gens.size(); ++i)
        if (gens[i] - gens[i - 1] != step) return std::nullopt;
    const auto a = static_cast<std::int64_t>(gens[0]);
    const auto d = static_cast<std::int64_t>(step);
    const auto k = static_cast<std::int64_t>(gens.size() - 1);
    if (std::gcd(a, d) != 1 || k >= a) return std::nullopt;
    return ArithmeticalParams{a, d, k};
}

}  // namespace elast
