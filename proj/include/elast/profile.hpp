#pragma once

/**
 * @file profile.hpp
 * @brief Exact description of R(S) for an arbitrary numerical monoid.
 *
 * With B = g_{k-1} g_k and P = g_1 g_k, every n >= B satisfies
 *     rho(n + P) = (M(n) + g_k) / (m(n) + g_1),
 * so R(S) is the finite set {rho(n) : n < B + P} together with the P
 * sequences t -> (M(n0) + t g_k) / (m(n0) + t g_1), n0 in [B, B + P).
 * Each sequence is non-decreasing and tends to g_k / g_1.
 */

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "elast/arithmetical.hpp"
#include "elast/error.hpp"
#include "elast/factorizations.hpp"
#include "elast/monoid.hpp"
#include "elast/rational.hpp"

namespace elast {

struct FinitePoint {
    Rational value;
    Element witness = 0;  // smallest element attaining value
};

struct SequenceRecord {
    Element n0 = 0;
    std::uint64_t max0 = 0;
    std::uint64_t min0 = 0;
    bool constant = false;  // max0 / min0 == g_k / g_1
};

struct ElasticityProfile {
    NumericalMonoid monoid;
    Element base = 0;
    Element period = 0;
    std::vector<FinitePoint> finite_part;  // ascending by value
    std::vector<SequenceRecord> sequences;  // ascending by n0

    Rational sup() const { return max_elasticity(monoid); }
};

inline ElasticityProfile build_profile(const NumericalMonoid& s, const Limits& limits = {}) {
    if (s.is_trivial()) throw Error(ErrorCode::SingleGenerator, "R(<1>) = {1} has no sequence structure");
    const LengthEngine engine(s, limits);
    const Element g1 = s.smallest();
    const Element gk = s.largest();
    ElasticityProfile out{s, detail::checked_mul(s.second_largest(), gk), detail::checked_mul(g1, gk), {}, {}};
    if (frobenius(s) >= static_cast<std::int64_t>(out.base))
        throw Error(ErrorCode::InvalidInput, "window base does not exceed the Frobenius number");
    const Element end = detail::checked_add(out.base, out.period);
    if (end > limits.max_table_entries) throw Error(ErrorCode::TableTooLarge, "profile window too large");

    std::map<Rational, Element> first_witness;
    for (Element n = 1; n < end; ++n)
        if (engine.contains(n)) first_witness.emplace(engine.elasticity(n), n);
    for (auto& [value, witness] : first_witness) out.finite_part.push_back({value, witness});

    out.sequences.reserve(out.period);
    for (Element n0 = out.base; n0 < end; ++n0) {
        SequenceRecord rec{n0, engine.max_length(n0), engine.min_length(n0), false};
        rec.constant = detail::checked_mul(rec.max0, g1) == detail::checked_mul(rec.min0, gk);
        out.sequences.push_back(rec);
    }
    return out;
}

/// (M0 + t g_k) / (m0 + t g_1) for the sequence at `index`.
inline Rational sequence_value(const ElasticityProfile& p, std::size_t index, std::uint64_t t) {
    if (index >= p.sequences.size())
        throw Error(ErrorCode::IndexOutOfRange, "sequence index " + std::to_string(index) + " out of range");
    const auto& seq = p.sequences[index];
    return Rational(BigInt(seq.max0) + BigInt(t) * p.monoid.largest(),
                    BigInt(seq.min0) + BigInt(t) * p.monoid.smallest());
}

/// Element of S attaining sequence `index` at step t.
inline BigInt sequence_element(const ElasticityProfile& p, std::size_t index, std::uint64_t t) {
    return BigInt(p.sequences.at(index).n0) + BigInt(t) * p.period;
}

struct ElasticityMembership {
    bool member = false;
    std::optional<BigInt> witness;  // an n in S with rho(n) equal to the query
};

inline ElasticityMembership contains_elasticity(const ElasticityProfile& p, const Rational& q) {
    if (q < Rational(1)) return {};
    const auto hit = std::lower_bound(p.finite_part.begin(), p.finite_part.end(), q,
                                      [](const FinitePoint& fp, const Rational& v) { return fp.value < v; });
    if (hit != p.finite_part.end() && hit->value == q) return {true, BigInt(hit->witness)};
    if (q == p.sup()) return {true, BigInt(p.monoid.smallest()) * p.monoid.largest()};

    // q = num/den lies on a sequence iff t (den g_k - num g_1) = num m0 - den M0
    // has a solution t >= 0.
    const BigInt& num = q.num();
    const BigInt& den = q.den();
    const BigInt slope = den * p.monoid.largest() - num * p.monoid.smallest();
    if (slope == 0) return {};
    std::optional<BigInt> best;
    for (std::size_t i = 0; i < p.sequences.size(); ++i) {
        const auto& seq = p.sequences[i];
        const BigInt rhs = num * seq.min0 - den * seq.max0;
        if (rhs % slope != 0) continue;
        const BigInt t = rhs / slope;
        if (t < 0) continue;
        const BigInt n = BigInt(seq.n0) + t * p.period;
        if (!best || n < *best) best = n;
    }
    if (best) return {true, best};
    return {};
}

enum class Outcome { Equal, NotEqual, Unknown };

inline std::string_view to_string(Outcome o) {
    switch (o) {
        case Outcome::Equal: return "EQUAL";
        case Outcome::NotEqual: return "NOT_EQUAL";
        case Outcome::Unknown: return "UNKNOWN";
    }
    return "UNKNOWN";
}

/// Source sequence value at t equals target sequence value at alpha t + beta
/// whenever t >= start and t == residue (mod modulus).
struct SequenceCover {
    std::size_t target = 0;
    Rational alpha;
    Rational beta;
    std::uint64_t modulus = 1;
    std::uint64_t residue = 0;
    std::uint64_t start = 0;
};

struct SequenceCertificate {
    bool forward = true;  // true: first profile's sequence into the second
    std::size_t source = 0;
    bool constant = false;  // constantly the common supremum
    std::vector<SequenceCover> covers;
    std::uint64_t explicit_below = 0;  // steps t < this were checked one by one
};

struct ComparisonVerdict {
    Outcome outcome = Outcome::Unknown;
    std::optional<Rational> witness;
    std::uint64_t checked_bound = 0;
    std::vector<SequenceCertificate> certificate;
};

namespace detail {

// Largest residue-class modulus considered when certifying a sequence.
inline constexpr std::uint64_t kMaxCoverModulus = 4096;

inline std::optional<SequenceCover> affine_cover(const ElasticityProfile& from, const SequenceRecord& src,
                                                 const ElasticityProfile& to, std::size_t target) {
    const auto& dst = to.sequences[target];
    const BigInt g1 = from.monoid.smallest(), gk = from.monoid.largest();
    const BigInt h1 = to.monoid.smallest(), hk = to.monoid.largest();
    // Matching t^1 and t^0 coefficients of
    //   (M0 + t gk)(m0' + u h1) = (M0' + u hk)(m0 + t g1),  u = alpha t + beta;
    // the t^2 coefficients agree because gk/g1 = hk/h1.
    const BigInt denom = BigInt(src.max0) * h1 - hk * src.min0;
    if (denom == 0) return std::nullopt;
    const Rational alpha(BigInt(dst.max0) * g1 - gk * dst.min0, denom);
    const Rational beta(BigInt(dst.max0) * src.min0 - BigInt(src.max0) * dst.min0, denom);
    if (!(alpha > Rational(0))) return std::nullopt;

    // u integer  <=>  A t + B == 0 (mod D) with u = (A t + B) / D.
    const BigInt D = alpha.den() * beta.den();
    const BigInt A = alpha.num() * beta.den();
    const BigInt B = beta.num() * alpha.den();
    const BigInt h = boost::multiprecision::gcd(A, D);
    BigInt target_rem = (-B) % D;
    if (target_rem < 0) target_rem += D;
    if (target_rem % h != 0) return std::nullopt;
    const BigInt modulus = D / h;
    if (modulus > kMaxCoverModulus) return std::nullopt;
    const auto mod = modulus.convert_to<std::uint64_t>();
    std::uint64_t residue = 0;
    if (mod > 1) {
        const BigInt a_red = (A / h) % modulus;
        const BigInt rem_red = (target_rem / h) % modulus;
        bool found = false;
        for (std::uint64_t r = 0; r < mod; ++r) {
            if ((a_red * r - rem_red) % modulus == 0) {
                residue = r;
                found = true;
                break;
            }
        }
        if (!found) return std::nullopt;
    }
    // u >= 0 from t >= -beta / alpha on.
    BigInt start = 0;
    const Rational lower = -beta / alpha;
    if (lower > Rational(0)) start = elast::ceil_div(lower.num(), lower.den());
    if (start > BigInt(UINT64_MAX)) return std::nullopt;
    return SequenceCover{target, alpha, beta, mod, residue, start.convert_to<std::uint64_t>()};
}

// Tries to show every value of sequence `source` of `from` lies in R(to), with
// steps below t_max + 1 counted as verified by the caller's direct check.
inline std::optional<SequenceCertificate> certify_sequence(const ElasticityProfile& from, std::size_t source,
                                                           const ElasticityProfile& to, std::uint64_t t_max,
                                                           bool forward) {
    const auto& src = from.sequences[source];
    SequenceCertificate cert{forward, source, src.constant, {}, 0};
    if (src.constant) return cert;  // sup is attained in both sets

    std::vector<SequenceCover> candidates;
    for (std::size_t j = 0; j < to.sequences.size(); ++j)
        if (auto cover = affine_cover(from, src, to, j)) candidates.push_back(*cover);
    if (candidates.empty()) return std::nullopt;
    std::sort(candidates.begin(), candidates.end(), [](const SequenceCover& x, const SequenceCover& y) {
        return std::tie(x.modulus, x.start, x.target) < std::tie(y.modulus, y.start, y.target);
    });

    std::uint64_t period = 1;
    for (const auto& c : candidates) {
        const std::uint64_t next = std::lcm(period, c.modulus);
        if (next <= kMaxCoverModulus) period = next;
    }
    std::vector<int> chosen(period, -1);
    for (std::uint64_t r = 0; r < period; ++r) {
        for (std::size_t i = 0; i < candidates.size(); ++i) {
            const auto& c = candidates[i];
            if (period % c.modulus != 0 || r % c.modulus != c.residue) continue;
            if (chosen[r] < 0 || c.start < candidates[chosen[r]].start) chosen[r] = static_cast<int>(i);
        }
        if (chosen[r] < 0) return std::nullopt;
    }
    std::vector<int> used(chosen.begin(), chosen.end());
    std::sort(used.begin(), used.end());
    used.erase(std::unique(used.begin(), used.end()), used.end());
    std::uint64_t explicit_below = 0;
    for (int i : used) {
        cert.covers.push_back(candidates[i]);
        explicit_below = std::max(explicit_below, candidates[i].start);
    }
    if (explicit_below > t_max + 1) return std::nullopt;
    cert.explicit_below = explicit_below;
    return cert;
}

// Appends every value of `from` (finite part and sequence steps t <= t_max)
// that is missing from R(to).
inline void collect_misses(const ElasticityProfile& from, const ElasticityProfile& to, std::uint64_t t_max,
                           std::vector<Rational>& misses) {
    for (const auto& fp : from.finite_part)
        if (!contains_elasticity(to, fp.value).member) misses.push_back(fp.value);
    for (std::size_t i = 0; i < from.sequences.size(); ++i)
        for (std::uint64_t t = 0; t <= t_max; ++t) {
            Rational v = sequence_value(from, i, t);
            if (!contains_elasticity(to, v).member) misses.push_back(std::move(v));
        }
}

// For two arithmetical monoids with equal d and a/k where exactly one side has
// gcd(a, k) >= 2, the maximal coprime tuple of that side gives an elasticity
// the other side lacks.
inline std::optional<Rational> arithmetical_witness(const ElasticityProfile& first, const ElasticityProfile& second) {
    const auto p = detect_arithmetical(first.monoid);
    const auto q = detect_arithmetical(second.monoid);
    if (!p || !q || p->d != q->d || p->a * q->k != q->a * p->k) return std::nullopt;
    const bool p_split = std::gcd(p->a, p->k) >= 2;
    const bool q_split = std::gcd(q->a, q->k) >= 2;
    if (p_split == q_split) return std::nullopt;
    const auto& params = p_split ? *p : *q;
    Rational value = tuple_elasticity(params, maximal_coprime_tuple(params));
    if (contains_elasticity(first, value).member == contains_elasticity(second, value).member) return std::nullopt;
    return value;
}

}  // namespace detail

/// Decides R(S) = R(S') where possible. NotEqual carries an elasticity in
/// exactly one of the sets; Equal carries affine alignments of every eventual
/// sequence in both directions; anything less is Unknown.
inline ComparisonVerdict compare_profiles(const ElasticityProfile& first, const ElasticityProfile& second,
                                          std::uint64_t t_max = 50) {
    ComparisonVerdict verdict;
    const Rational sup1 = first.sup(), sup2 = second.sup();
    if (sup1 != sup2) {
        verdict.outcome = Outcome::NotEqual;
        verdict.witness = std::max(sup1, sup2);
        return verdict;
    }

    verdict.checked_bound = t_max;
    if (auto w = detail::arithmetical_witness(first, second)) {
        verdict.outcome = Outcome::NotEqual;
        verdict.witness = std::move(*w);
        return verdict;
    }

    std::vector<Rational> misses;
    detail::collect_misses(first, second, t_max, misses);
    detail::collect_misses(second, first, t_max, misses);
    if (!misses.empty()) {
        verdict.outcome = Outcome::NotEqual;
        verdict.witness = *std::min_element(misses.begin(), misses.end());
        return verdict;
    }

    for (int dir = 0; dir < 2; ++dir) {
        const auto& from = dir == 0 ? first : second;
        const auto& to = dir == 0 ? second : first;
        for (std::size_t i = 0; i < from.sequences.size(); ++i) {
            auto cert = detail::certify_sequence(from, i, to, t_max, dir == 0);
            if (!cert) {
                verdict.outcome = Outcome::Unknown;
                verdict.certificate.clear();
                return verdict;
            }
            verdict.certificate.push_back(std::move(*cert));
        }
    }
    verdict.outcome = Outcome::Equal;
    return verdict;
}

inline ComparisonVerdict compare_profiles(const NumericalMonoid& s, const NumericalMonoid& t,
                                          std::uint64_t t_max = 50, const Limits& limits = {}) {
    return compare_profiles(build_profile(s, limits), build_profile(t, limits), t_max);
}

}  // namespace elast
