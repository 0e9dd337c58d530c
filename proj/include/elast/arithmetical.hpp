#pragma once

/**
 * @file arithmetical.hpp
 * @brief Elasticity tuples for arithmetical monoids <a, a+d, ..., a+kd>.
 *
 * A tuple (c, s, x) with c >= 0, 0 <= s < k and
 *     ceil(sa/k) <= x <= floor((sa + 2(a-1))/k) + d
 * has elasticity (c(a+kd) + x + sd) / (ca + x), and these values are exactly
 * R(S). ck + s is the tuple's slice and x its row.
 */

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "elast/error.hpp"
#include "elast/monoid.hpp"
#include "elast/rational.hpp"

namespace elast {

struct ElasticityTuple {
    std::int64_t c = 0;
    std::int64_t s = 0;
    std::int64_t x = 0;

    std::int64_t slice(const ArithmeticalParams& p) const { return c * p.k + s; }

    std::string to_string() const {
        return "(" + std::to_string(c) + "," + std::to_string(s) + "," + std::to_string(x) + ")";
    }

    friend bool operator==(const ElasticityTuple&, const ElasticityTuple&) = default;
};

struct TupleBounds {
    std::int64_t x_min = 0;
    std::int64_t x_max = 0;
};

struct TupleRecord {
    ElasticityTuple tuple;
    bool minimal = false;
    bool maximal = false;
};

namespace detail {

inline std::int64_t floor_div(std::int64_t a, std::int64_t b) {
    std::int64_t q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

inline std::int64_t ceil_div(std::int64_t a, std::int64_t b) {
    std::int64_t q = a / b;
    if ((a % b != 0) && ((a < 0) == (b < 0))) ++q;
    return q;
}

/// Bezout coefficients (p, q) with p*x + q*y = gcd(x, y), by the iterative
/// extended Euclidean algorithm.
inline std::array<std::int64_t, 3> extended_gcd(std::int64_t x, std::int64_t y) {
    std::int64_t old_r = x, r = y;
    std::int64_t old_p = 1, p = 0;
    std::int64_t old_q = 0, q = 1;
    while (r != 0) {
        const std::int64_t quot = old_r / r;
        old_r = std::exchange(r, old_r - quot * r);
        old_p = std::exchange(p, old_p - quot * p);
        old_q = std::exchange(q, old_q - quot * q);
    }
    return {old_r, old_p, old_q};
}

}  // namespace detail

inline TupleBounds tuple_bounds(const ArithmeticalParams& p, std::int64_t s) {
    if (s < 0 || s >= p.k)
        throw Error(ErrorCode::SOutOfRange, "s=" + std::to_string(s) + " outside [0," + std::to_string(p.k) + ")");
    TupleBounds b{detail::ceil_div(s * p.a, p.k), detail::floor_div(s * p.a + 2 * (p.a - 1), p.k) + p.d};
    if (b.x_min > b.x_max) throw Error(ErrorCode::InvalidParams, "empty row range");
    return b;
}

inline bool is_valid_tuple(const ArithmeticalParams& p, const ElasticityTuple& t) {
    if (t.c < 0 || t.s < 0 || t.s >= p.k) return false;
    const auto b = tuple_bounds(p, t.s);
    return b.x_min <= t.x && t.x <= b.x_max;
}

inline void require_valid_tuple(const ArithmeticalParams& p, const ElasticityTuple& t) {
    if (!is_valid_tuple(p, t)) throw Error(ErrorCode::InvalidTuple, t.to_string() + " is not an elasticity tuple");
}

inline bool is_minimal_tuple(const ArithmeticalParams& p, const ElasticityTuple& t) {
    return is_valid_tuple(p, t) && t.x == tuple_bounds(p, t.s).x_min;
}

inline bool is_maximal_tuple(const ArithmeticalParams& p, const ElasticityTuple& t) {
    return is_valid_tuple(p, t) && t.x == tuple_bounds(p, t.s).x_max;
}

/// Every tuple with slice <= max_slice, ordered by (slice, row).
inline std::vector<TupleRecord> enumerate_tuples(const ArithmeticalParams& p, std::int64_t max_slice) {
    std::vector<TupleRecord> out;
    for (std::int64_t slice = 0; slice <= max_slice; ++slice) {
        const std::int64_t c = slice / p.k;
        const std::int64_t s = slice % p.k;
        const auto b = tuple_bounds(p, s);
        for (std::int64_t x = b.x_min; x <= b.x_max; ++x)
            out.push_back({ElasticityTuple{c, s, x}, x == b.x_min, x == b.x_max});
    }
    return out;
}

inline Rational tuple_elasticity(const ArithmeticalParams& p, const ElasticityTuple& t) {
    require_valid_tuple(p, t);
    const BigInt den = BigInt(t.c) * p.a + t.x;
    if (den == 0) return Rational(1);
    const BigInt num = BigInt(t.c) * p.top() + t.x + BigInt(t.s) * p.d;
    return Rational(num, den);
}

/// An element of S whose elasticity equals the tuple's:
///     n = (c(a+kd) + x + sd) a + y' d = (ca + x)(a+kd) - y'' d
/// with y' + y'' = xk - sa, y' < a, y'' < a+kd. The split takes y'' as small
/// as possible.
inline Element witness_element(const ArithmeticalParams& p, const ElasticityTuple& t) {
    require_valid_tuple(p, t);
    const std::int64_t spread = t.x * p.k - t.s * p.a;
    const std::int64_t y_small = std::min(p.a - 1, spread);
    const std::int64_t y_large = spread - y_small;
    if (y_small < 0 || y_large < 0 || y_large >= p.top())
        throw Error(ErrorCode::InvalidTuple, "no admissible split for " + t.to_string());
    const BigInt max_len = BigInt(t.c) * p.top() + t.x + BigInt(t.s) * p.d;
    const BigInt n = max_len * p.a + BigInt(y_small) * p.d;
    if (n > BigInt(UINT64_MAX)) throw Error(ErrorCode::Overflow, "witness exceeds 64 bits");
    return n.convert_to<Element>();
}

enum class TupleRelation { Less, LessOrEqual, Equal, GreaterOrEqual, Greater };
enum class ComparisonBasis { Identical, SliceMonotonicity, RowMonotonicity, Exact };

/// Relation of rho(first) to rho(second), and what it rests on.
struct TupleComparison {
    TupleRelation relation;
    ComparisonBasis basis;
};

inline TupleComparison compare_tuples(const ArithmeticalParams& p, const ElasticityTuple& first,
                                      const ElasticityTuple& second) {
    require_valid_tuple(p, first);
    require_valid_tuple(p, second);
    if (first == second) return {TupleRelation::Equal, ComparisonBasis::Identical};
    if (first.x == second.x && first.c == second.c) {
        // Higher slice, same row and same c: elasticity does not decrease.
        // Across different c the slice order alone decides nothing.
        return {first.slice(p) <= second.slice(p) ? TupleRelation::LessOrEqual : TupleRelation::GreaterOrEqual,
                ComparisonBasis::SliceMonotonicity};
    }
    if (first.c == second.c && first.s == second.s) {
        // Lower row, same slice: elasticity does not decrease.
        return {first.x <= second.x ? TupleRelation::GreaterOrEqual : TupleRelation::LessOrEqual,
                ComparisonBasis::RowMonotonicity};
    }
    const auto order = tuple_elasticity(p, first) <=> tuple_elasticity(p, second);
    if (order < 0) return {TupleRelation::Less, ComparisonBasis::Exact};
    if (order > 0) return {TupleRelation::Greater, ComparisonBasis::Exact};
    return {TupleRelation::Equal, ComparisonBasis::Exact};
}

/// d = (g - 1)(f - 1) / (g - f) from the second and third smallest elasticities.
inline std::int64_t recover_d(const Rational& f, const Rational& g) {
    const Rational one(1);
    if (!(one < f && f < g))
        throw Error(ErrorCode::InvalidInput, "need 1 < f < g (got f=" + f.to_string() + ", g=" + g.to_string() + ")");
    const Rational d = (g - one) * (f - one) / (g - f);
    if (!d.is_integer() || d.num() <= 0 || d.num() > BigInt(INT64_MAX))
        throw Error(ErrorCode::NonIntegerResult, "recovered step " + d.to_string() + " is not a positive integer");
    return d.num().convert_to<std::int64_t>();
}

/// a/k = d / (sup R(S) - 1).
inline Rational recover_a_over_k(const Rational& sup, std::int64_t d) {
    if (!(sup > Rational(1))) throw Error(ErrorCode::InvalidInput, "sup must exceed 1");
    if (d < 1) throw Error(ErrorCode::InvalidInput, "d must be positive");
    return Rational(d) / (sup - Rational(1));
}

/// The three smallest values of R(S): 1 and then f < g. Candidates come from
/// the tuples of slices 0 .. 2k+2; larger slices only produce larger values.
inline std::array<Rational, 3> three_minimal_elasticities(const ArithmeticalParams& p) {
    std::vector<Rational> values;
    for (const auto& rec : enumerate_tuples(p, 2 * p.k + 2)) values.push_back(tuple_elasticity(p, rec.tuple));
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    if (values.size() < 3) throw Error(ErrorCode::InvalidParams, "fewer than three distinct elasticities");
    return {values[0], values[1], values[2]};
}

inline std::array<Rational, 3> three_minimal_elasticities(const NumericalMonoid& s) {
    const auto p = detect_arithmetical(s);
    if (!p) throw Error(ErrorCode::NotArithmetical, s.to_string() + " is not arithmetical");
    return three_minimal_elasticities(*p);
}

/// For gcd(a, k) >= 2: a maximal tuple (c, s, x) with a'(s+2) == 1 (mod k')
/// and gcd(ca + x, ck + s) = 1, where a' = a/g, k' = k/g, g = gcd(a, k).
/// Its elasticity lies in R(S) but in no R(S') with d' = d, a'/k' = a/k and
/// gcd(a', k') = 1.
inline ElasticityTuple maximal_coprime_tuple(const ArithmeticalParams& p) {
    const std::int64_t g = std::gcd(p.a, p.k);
    if (g < 2) throw Error(ErrorCode::NotApplicable, "gcd(a,k) = 1");
    const std::int64_t a1 = p.a / g;
    const std::int64_t k1 = p.k / g;

    std::int64_t s = 0;
    while (s < k1 && ((s + 2) * a1 - 1) % k1 != 0) ++s;
    if (s == k1) throw Error(ErrorCode::InvalidParams, "no residue solves a'(s+2) = 1 mod k'");
    const std::int64_t x = ((s + 2) * a1 - 1) / k1 + p.d;
    if (x != tuple_bounds(p, s).x_max) throw Error(ErrorCode::InvalidParams, "seed tuple is not maximal");

    const auto [unit, bez_a, bez_k] = detail::extended_gcd(a1, k1);
    if (unit != 1) throw Error(ErrorCode::InvalidParams, "a' and k' not coprime");

    // b must satisfy b (s a' - x k') > p x + q s, where s a' - x k' < 0, so the
    // admissible b form the half-line b < (p x + q s) / (s a' - x k').
    const BigInt slope = BigInt(s) * a1 - BigInt(x) * k1;
    const BigInt rhs = BigInt(bez_a) * x + BigInt(bez_k) * s;
    const BigInt b_max = ceil_div(rhs, slope) - 1;
    const BigInt b = b_max >= 0 ? BigInt(0) : b_max;
    if (!(b * slope > rhs)) throw Error(ErrorCode::InvalidParams, "internal: b violates its inequality");

    const BigInt m = 1 - (bez_a + b * k1) * x - (bez_k - b * a1) * s;
    if (m <= 0) throw Error(ErrorCode::InvalidParams, "internal: multiplier not positive");
    const BigInt c = m / g;
    const std::int64_t r = static_cast<std::int64_t>(m % g);

    const ElasticityTuple out{c.convert_to<std::int64_t>(), s + r * k1, x + r * a1};
    if (!is_maximal_tuple(p, out)) throw Error(ErrorCode::InvalidParams, "internal: result not maximal");
    if (((out.s + 2) * a1 - 1) % k1 != 0) throw Error(ErrorCode::InvalidParams, "internal: congruence fails");
    if (std::gcd(out.c * p.a + out.x, out.c * p.k + out.s) != 1)
        throw Error(ErrorCode::InvalidParams, "internal: coprimality fails");
    return out;
}

/// Embeds a tuple of S' = (a', d, k') into S = (g a', d, g k'):
/// (c', s', x') -> (q, s' + r k', x' + r a') with c' = q g + r.
inline ElasticityTuple phi_embed(const ArithmeticalParams& from, const ArithmeticalParams& to,
                                 const ElasticityTuple& t) {
    if (from.d != to.d || to.a % from.a != 0)
        throw Error(ErrorCode::IncompatibleParams, "steps differ or a' does not divide a");
    const std::int64_t g = to.a / from.a;
    if (g < 2 || to.k != g * from.k) throw Error(ErrorCode::IncompatibleParams, "need a = g a', k = g k', g >= 2");
    require_valid_tuple(from, t);
    const ElasticityTuple out{t.c / g, t.s + (t.c % g) * from.k, t.x + (t.c % g) * from.a};
    require_valid_tuple(to, out);
    return out;
}

/// Whether R(S) = R(S'): identical, or d = d', a/k = a'/k' and both gcd(a,k), gcd(a',k') >= 2.
inline bool elasticity_sets_equal_arithmetical(const ArithmeticalParams& p, const ArithmeticalParams& q) {
    if (p == q) return true;
    return p.d == q.d && p.a * q.k == q.a * p.k && std::gcd(p.a, p.k) >= 2 && std::gcd(q.a, q.k) >= 2;
}

/// Whether the sets of length sets agree. Same criterion as for elasticities.
inline bool length_sets_equal_arithmetical(const ArithmeticalParams& p, const ArithmeticalParams& q) {
    if (p == q) return true;
    const bool ratio = p.a * q.k == q.a * p.k;
    return p.d == q.d && ratio && std::gcd(p.a, p.k) >= 2 && std::gcd(q.a, q.k) >= 2;
}

}  // namespace elast
