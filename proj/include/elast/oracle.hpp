#pragma once

/**
 * @file oracle.hpp
 * @brief Brute-force reference computations.
 *
 * Nothing here shares code with the production paths it is used to check:
 * factorizations are found by walking every coefficient vector, and the
 * "full DP" tabulates M and m over the whole range without any quasilinear
 * shortcut. Intended for tests and the verification suites only.
 */

#include <cstdint>
#include <numeric>
#include <span>
#include <vector>

#include "elast/monoid.hpp"
#include "elast/rational.hpp"

namespace elast::oracle {

struct LengthTable {
    // -1 marks integers outside the monoid.
    std::vector<std::int64_t> max_len;
    std::vector<std::int64_t> min_len;

    bool member(Element n) const { return max_len[n] >= 0; }

    Rational elasticity(Element n) const {
        if (n == 0) return Rational(1);
        return Rational(BigInt(max_len[n]), BigInt(min_len[n]));
    }
};

/// Walks every coefficient vector over `gens` whose value is at most `bound`.
inline LengthTable enumerate_lengths(std::span<const Element> gens, Element bound) {
    LengthTable out{std::vector<std::int64_t>(bound + 1, -1), std::vector<std::int64_t>(bound + 1, -1)};
    std::vector<std::int64_t> coeff(gens.size(), 0);
    auto record = [&](Element value, std::int64_t length) {
        if (out.max_len[value] < 0) {
            out.max_len[value] = out.min_len[value] = length;
        } else {
            out.max_len[value] = std::max(out.max_len[value], length);
            out.min_len[value] = std::min(out.min_len[value], length);
        }
    };
    // Odometer over coefficient vectors, last generator fastest.
    auto walk = [&](auto&& self, std::size_t i, Element value, std::int64_t length) -> void {
        if (i == gens.size()) {
            record(value, length);
            return;
        }
        for (Element v = value; v <= bound; v += gens[i], ++length) self(self, i + 1, v, length);
    };
    walk(walk, 0, 0, 0);
    return out;
}

/// Every factorization of n, by exhaustive search of coefficient vectors.
inline std::vector<std::vector<std::uint64_t>> enumerate_factorizations(std::span<const Element> gens, Element n) {
    std::vector<std::vector<std::uint64_t>> out;
    std::vector<std::uint64_t> coeff(gens.size(), 0);
    auto walk = [&](auto&& self, std::size_t i, Element value) -> void {
        if (i == gens.size()) {
            if (value == n) out.push_back(coeff);
            return;
        }
        for (coeff[i] = 0; value + coeff[i] * gens[i] <= n; ++coeff[i]) self(self, i + 1, value + coeff[i] * gens[i]);
        coeff[i] = 0;
    };
    walk(walk, 0, 0);
    return out;
}

/// M and m over [0, bound] by the plain recurrences, no thresholds.
inline LengthTable full_dp_lengths(std::span<const Element> gens, Element bound) {
    LengthTable out{std::vector<std::int64_t>(bound + 1, -1), std::vector<std::int64_t>(bound + 1, -1)};
    out.max_len[0] = out.min_len[0] = 0;
    for (Element v = 1; v <= bound; ++v) {
        for (Element g : gens) {
            if (g > v || out.max_len[v - g] < 0) continue;
            const auto hi = out.max_len[v - g] + 1;
            const auto lo = out.min_len[v - g] + 1;
            if (out.max_len[v] < 0) {
                out.max_len[v] = hi;
                out.min_len[v] = lo;
            } else {
                out.max_len[v] = std::max(out.max_len[v], hi);
                out.min_len[v] = std::min(out.min_len[v], lo);
            }
        }
    }
    return out;
}

/// Largest integer not representable, by scanning up to the product bound.
inline std::int64_t frobenius_scan(std::span<const Element> gens) {
    if (gens.size() == 1 && gens[0] == 1) return -1;
    Element bound = 1;
    for (Element g : gens) bound = std::max(bound, g);
    bound = bound * bound + bound;
    const auto table = enumerate_lengths(gens, bound);
    for (Element v = bound + 1; v-- > 0;)
        if (!table.member(v)) return static_cast<std::int64_t>(v);
    return -1;
}

}  // namespace elast::oracle
