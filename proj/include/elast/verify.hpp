#pragma once

/**
 * @file verify.hpp
 * @brief Invariant suites run by `elast verify`, each backed by the
 * brute-force oracle at desk scale.
 */

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "elast/arithmetical.hpp"
#include "elast/factorizations.hpp"
#include "elast/monoid.hpp"
#include "elast/oracle.hpp"
#include "elast/profile.hpp"

namespace elast::verify {

struct CheckResult {
    std::string suite;
    std::string name;
    bool passed = false;
    std::string detail;
};

struct Options {
    /// Negative control: corrupt one tabulated max length before the
    /// length-table check, which must then fail.
    bool inject_fault = false;
};

namespace detail {

using Gens = std::vector<Element>;

inline std::vector<Gens> core_fixtures() {
    return {{3, 5, 7}, {3, 5},           {2, 3},           {7, 41},         {20, 21, 45},
            {7, 12, 17, 22}, {5, 16, 17, 18, 19}, {6, 10, 13, 14}, {6, 11, 13, 14}, {4, 5, 6}};
}

inline std::vector<ArithmeticalParams> arith_fixtures() {
    return {ArithmeticalParams::make(7, 5, 3), ArithmeticalParams::make(3, 2, 1), ArithmeticalParams::make(14, 3, 6),
            ArithmeticalParams::make(7, 3, 3), ArithmeticalParams::make(4, 1, 2), ArithmeticalParams::make(6, 1, 3),
            ArithmeticalParams::make(5, 2, 2)};
}

inline NumericalMonoid monoid_of(const Gens& g) { return NumericalMonoid::create(std::span<const Element>(g)); }

// Runs `body`, turning a thrown exception into a failure with its message.
inline CheckResult run(std::string suite, std::string name, const std::function<std::string()>& body) {
    CheckResult r{std::move(suite), std::move(name), false, {}};
    try {
        r.detail = body();
        r.passed = r.detail.empty();
    } catch (const std::exception& e) {
        r.detail = std::string("exception: ") + e.what();
    }
    return r;
}

inline std::string where(const NumericalMonoid& s, Element n) { return s.to_string() + " n=" + std::to_string(n); }

}  // namespace detail

inline std::vector<CheckResult> core_suite(const Options& opt = {}) {
    using namespace detail;
    std::vector<CheckResult> out;
    const std::string suite = "core";

    out.push_back(run(suite, "normalization is idempotent", []() -> std::string {
        std::vector<Gens> raws = core_fixtures();
        raws.push_back({5, 3, 7, 3});
        raws.push_back({3, 5, 8});
        raws.push_back({10, 4, 6, 9, 15});
        for (const auto& raw : raws) {
            const auto s = monoid_of(raw);
            if (NumericalMonoid::create(s.generators()) != s) return "not idempotent on " + s.to_string();
        }
        return std::string();
    }));

    out.push_back(run(suite, "membership matches coefficient enumeration", []() -> std::string {
        for (const auto& g : core_fixtures()) {
            const auto s = monoid_of(g);
            if (s.largest() > 25) continue;
            const Element bound = static_cast<Element>(frobenius(s) + 1) + s.smallest() * s.largest();
            const auto table = oracle::enumerate_lengths(s.generators(), bound);
            for (Element n = 0; n <= bound; ++n)
                if (contains(s, n) != table.member(n)) return "membership differs at " + where(s, n);
        }
        return std::string();
    }));

    out.push_back(run(suite, "Frobenius number matches scan", []() -> std::string {
        for (const auto& g : core_fixtures()) {
            const auto s = monoid_of(g);
            if (frobenius(s) != oracle::frobenius_scan(s.generators())) return "mismatch on " + s.to_string();
        }
        return std::string();
    }));

    out.push_back(run(suite, "arithmetical detection round-trips", []() -> std::string {
        for (std::int64_t a = 2; a <= 20; ++a)
            for (std::int64_t d = 1; d <= 6; ++d)
                for (std::int64_t k = 1; k < a; ++k) {
                    if (std::gcd(a, d) != 1) continue;
                    const auto p = ArithmeticalParams::make(a, d, k);
                    const auto gens = p.generators();
                    const auto found = detect_arithmetical(NumericalMonoid::create(std::span<const Element>(gens)));
                    if (!found || !(*found == p)) return "round trip failed for a=" + std::to_string(a);
                }
        if (detect_arithmetical(NumericalMonoid::create({20, 21, 45}))) return std::string("<20,21,45> detected");
        return std::string();
    }));

    out.push_back(run(suite, "max elasticity is >= 1 with equality only for <1>", []() -> std::string {
        auto gens = core_fixtures();
        gens.push_back({1});
        for (const auto& g : gens) {
            const auto s = monoid_of(g);
            const auto rho = max_elasticity(s);
            if (rho < Rational(1) || ((rho == Rational(1)) != s.is_trivial())) return "bad value on " + s.to_string();
        }
        return std::string();
    }));

    out.push_back(run(suite, "max/min lengths match coefficient enumeration", [&opt]() -> std::string {
        for (const auto& g : core_fixtures()) {
            const auto s = monoid_of(g);
            if (s.largest() > 30) continue;
            LengthEngine engine(s);
            if (opt.inject_fault) engine.corrupt_max_entry(s.smallest(), 2);
            const Element bound = 2 * s.second_largest() * s.largest();
            const auto table = oracle::enumerate_lengths(s.generators(), bound);
            for (Element n = 0; n <= bound; ++n) {
                if (engine.contains(n) != table.member(n)) return "membership differs at " + where(s, n);
                if (!table.member(n)) continue;
                if (static_cast<std::int64_t>(engine.max_length(n)) != table.max_len[n] ||
                    static_cast<std::int64_t>(engine.min_length(n)) != table.min_len[n])
                    return "length mismatch at " + where(s, n);
            }
        }
        return std::string();
    }));

    out.push_back(run(suite, "quasilinearity of M and m up to 5000", []() -> std::string {
        constexpr Element kBound = 5000;
        for (const auto& g : core_fixtures()) {
            const auto s = monoid_of(g);
            const LengthEngine engine(s);
            const auto table = oracle::full_dp_lengths(s.generators(), kBound);
            for (Element n = 0; n <= kBound; ++n) {
                if (!table.member(n)) continue;
                if (static_cast<std::int64_t>(engine.max_length(n)) != table.max_len[n] ||
                    static_cast<std::int64_t>(engine.min_length(n)) != table.min_len[n])
                    return "engine disagrees with full table at " + where(s, n);
                if (n > engine.max_threshold() && table.member(n - s.smallest()) &&
                    table.max_len[n] != table.max_len[n - s.smallest()] + 1)
                    return "M step fails at " + where(s, n);
                if (n > engine.min_threshold() && n >= s.largest() && table.member(n - s.largest()) &&
                    table.min_len[n] != table.min_len[n - s.largest()] + 1)
                    return "m step fails at " + where(s, n);
            }
        }
        return std::string();
    }));

    out.push_back(run(suite, "element elasticities lie in [1, g_k/g_1]", []() -> std::string {
        for (const auto& g : core_fixtures()) {
            const auto s = monoid_of(g);
            const LengthEngine engine(s);
            const auto sup = max_elasticity(s);
            for (Element n = 0; n <= 3000; ++n) {
                if (!engine.contains(n)) continue;
                const auto rho = engine.elasticity(n);
                if (rho < Rational(1) || rho > sup) return "out of range at " + where(s, n);
            }
        }
        return std::string();
    }));

    out.push_back(run(suite, "arithmetical length sets step by d", []() -> std::string {
        for (const auto& p : arith_fixtures()) {
            const auto gens = p.generators();
            const auto s = NumericalMonoid::create(std::span<const Element>(gens));
            const auto sets = length_sets_upto(s, 400);
            for (Element n = 0; n <= 400; ++n)
                for (std::size_t i = 1; i < sets[n].size(); ++i)
                    if ((sets[n][i] - sets[n][i - 1]) % static_cast<std::uint64_t>(p.d) != 0)
                        return "gap not divisible by d at " + where(s, n);
        }
        return std::string();
    }));

    out.push_back(run(suite, "proper subcollection congruence (10^4 random)", []() -> std::string {
        std::mt19937_64 rng(20240611);
        for (int trial = 0; trial < 10000; ++trial) {
            const auto k = static_cast<std::uint64_t>(rng() % 21);
            const std::size_t r = k + rng() % (41 - k);
            std::vector<std::int64_t> c(r);
            for (auto& v : c) v = static_cast<std::int64_t>(rng() % 201) - 100;
            std::vector<std::size_t> subset;
            try {
                subset = find_proper_subcollection(k, c);
            } catch (const Error& e) {
                if (k == 0 && e.code() == ErrorCode::NoSubcollection) continue;
                throw;
            }
            if (subset.size() >= r) return std::string("subset not proper");
            std::int64_t total = std::accumulate(c.begin(), c.end(), std::int64_t{0});
            std::int64_t part = 0;
            for (auto i : subset) part += c.at(i);
            const std::int64_t diff = total - part;
            if (k == 0 ? diff != 0 : diff % static_cast<std::int64_t>(k) != 0) return std::string("congruence fails");
        }
        return std::string();
    }));
    return out;
}

inline std::vector<CheckResult> arith_suite(const Options& = {}) {
    using namespace detail;
    std::vector<CheckResult> out;
    const std::string suite = "arith";

    out.push_back(run(suite, "every element elasticity is a tuple elasticity", []() -> std::string {
        constexpr Element kBound = 1500;
        for (const auto& p : arith_fixtures()) {
            const auto table = oracle::full_dp_lengths(p.generators(), kBound);
            std::int64_t max_slice = 0;
            for (Element n = 0; n <= kBound; ++n)
                if (table.member(n)) max_slice = std::max(max_slice, (table.max_len[n] - table.min_len[n]) / p.d);
            std::set<Rational> values;
            for (const auto& rec : enumerate_tuples(p, max_slice)) values.insert(tuple_elasticity(p, rec.tuple));
            for (Element n = 0; n <= kBound; ++n)
                if (table.member(n) && !values.count(table.elasticity(n)))
                    return "rho(" + std::to_string(n) + ") missing for a=" + std::to_string(p.a);
        }
        return std::string();
    }));

    out.push_back(run(suite, "every tuple witness attains its elasticity", []() -> std::string {
        for (const auto& p : arith_fixtures()) {
            const auto tuples = enumerate_tuples(p, 20);
            Element top = 0;
            for (const auto& rec : tuples) top = std::max(top, witness_element(p, rec.tuple));
            const auto table = oracle::full_dp_lengths(p.generators(), top);
            for (const auto& rec : tuples) {
                const Element n = witness_element(p, rec.tuple);
                if (!table.member(n) || table.elasticity(n) != tuple_elasticity(p, rec.tuple))
                    return "witness fails for " + rec.tuple.to_string();
            }
        }
        return std::string();
    }));

    out.push_back(run(suite, "slice and row monotonicity", []() -> std::string {
        for (const auto& p : arith_fixtures()) {
            const auto tuples = enumerate_tuples(p, 3 * p.k + 3);
            for (const auto& x : tuples)
                for (const auto& y : tuples) {
                    const auto rx = tuple_elasticity(p, x.tuple), ry = tuple_elasticity(p, y.tuple);
                    if (x.tuple.x == y.tuple.x && x.tuple.c == y.tuple.c && x.tuple.s <= y.tuple.s && rx > ry)
                        return "slice order violated " + x.tuple.to_string() + " " + y.tuple.to_string();
                    if (x.tuple.c == y.tuple.c && x.tuple.s == y.tuple.s && x.tuple.x <= y.tuple.x && ry > rx)
                        return "row order violated " + x.tuple.to_string() + " " + y.tuple.to_string();
                }
        }
        return std::string();
    }));

    out.push_back(run(suite, "tuple elasticities lie in [1, (a+kd)/a]", []() -> std::string {
        for (const auto& p : arith_fixtures()) {
            const Rational sup(BigInt(p.top()), BigInt(p.a));
            for (const auto& rec : enumerate_tuples(p, 60)) {
                const auto r = tuple_elasticity(p, rec.tuple);
                if (r < Rational(1) || r > sup) return "out of range " + rec.tuple.to_string();
            }
        }
        return std::string();
    }));

    out.push_back(run(suite, "d and a/k recovered from brute-force elasticities", []() -> std::string {
        for (std::int64_t a = 3; a <= 9; ++a)
            for (std::int64_t d = 1; d <= 4; ++d)
                for (std::int64_t k = 1; k < a; ++k) {
                    if (std::gcd(a, d) != 1) continue;
                    const auto p = ArithmeticalParams::make(a, d, k);
                    const auto bound = static_cast<Element>(20 * a * p.top());
                    const auto table = oracle::full_dp_lengths(p.generators(), bound);
                    std::set<Rational> values;
                    for (Element n = 1; n <= bound; ++n)
                        if (table.member(n)) values.insert(table.elasticity(n));
                    auto it = values.begin();
                    const Rational f = *++it;
                    const Rational g = *++it;
                    const auto param = three_minimal_elasticities(p);
                    if (param[1] != f || param[2] != g) return "three minimal values differ for a=" + std::to_string(a);
                    if (recover_d(f, g) != d) return "d not recovered";
                    if (recover_a_over_k(max_elasticity(NumericalMonoid::create(std::span<const Element>(
                                             p.generators()))),
                                         d) != Rational(BigInt(a), BigInt(k)))
                        return "a/k not recovered";
                }
        return std::string();
    }));

    out.push_back(run(suite, "maximal coprime tuple elasticity is unique and absent from the coprime partner", []() -> std::string {
        for (const auto& p : {ArithmeticalParams::make(14, 3, 6), ArithmeticalParams::make(4, 1, 2),
                              ArithmeticalParams::make(6, 5, 4), ArithmeticalParams::make(9, 2, 3)}) {
            const auto t = maximal_coprime_tuple(p);
            const auto value = tuple_elasticity(p, t);
            int hits = 0;
            for (const auto& rec : enumerate_tuples(p, t.slice(p)))
                if (tuple_elasticity(p, rec.tuple) == value) ++hits;
            if (hits != 1) return "value repeated for a=" + std::to_string(p.a);
            const std::int64_t g = std::gcd(p.a, p.k);
            const auto partner = ArithmeticalParams::make(p.a / g, p.d, p.k / g);
            const auto gens = partner.generators();
            const auto profile = build_profile(NumericalMonoid::create(std::span<const Element>(gens)));
            if (contains_elasticity(profile, value).member) return "partner attains " + value.to_string();
        }
        return std::string();
    }));

    out.push_back(run(suite, "phi embedding preserves elasticity", []() -> std::string {
        const std::vector<std::pair<ArithmeticalParams, ArithmeticalParams>> pairs = {
            {ArithmeticalParams::make(7, 3, 3), ArithmeticalParams::make(14, 3, 6)},
            {ArithmeticalParams::make(2, 1, 1), ArithmeticalParams::make(4, 1, 2)},
            {ArithmeticalParams::make(3, 2, 2), ArithmeticalParams::make(9, 2, 6)}};
        for (const auto& [from, to] : pairs)
            for (const auto& rec : enumerate_tuples(from, 20)) {
                const auto image = phi_embed(from, to, rec.tuple);
                if (tuple_elasticity(from, rec.tuple) != tuple_elasticity(to, image))
                    return "elasticity changed for " + rec.tuple.to_string();
            }
        return std::string();
    }));

    out.push_back(run(suite, "elasticity and length-set criteria agree", []() -> std::string {
        std::vector<ArithmeticalParams> grid;
        for (std::int64_t a = 2; a <= 12; ++a)
            for (std::int64_t d = 1; d <= 3; ++d)
                for (std::int64_t k = 1; k < a; ++k)
                    if (std::gcd(a, d) == 1) grid.push_back(ArithmeticalParams::make(a, d, k));
        for (std::size_t i = 0; i < grid.size(); i += 3)
            for (std::size_t j = 0; j < grid.size(); j += 7)
                if (elasticity_sets_equal_arithmetical(grid[i], grid[j]) !=
                    length_sets_equal_arithmetical(grid[i], grid[j]))
                    return std::string("criteria disagree");
        return std::string();
    }));
    return out;
}

inline std::vector<CheckResult> profile_suite(const Options& = {}) {
    using namespace detail;
    std::vector<CheckResult> out;
    const std::string suite = "profile";
    const std::vector<Gens> fixtures = {{3, 5}, {7, 41}, {20, 21, 45}, {7, 12, 17, 22}, {6, 10, 13, 14}};

    out.push_back(run(suite, "decomposition reproduces brute-force elasticities", [&]() -> std::string {
        for (const auto& g : fixtures) {
            const auto s = monoid_of(g);
            const auto profile = build_profile(s);
            const Element bound = profile.base + 10 * profile.period;
            const auto table = oracle::full_dp_lengths(s.generators(), bound);
            for (Element n = 1; n <= bound; ++n) {
                if (!table.member(n)) continue;
                const auto rho = table.elasticity(n);
                if (n < profile.base + profile.period) {
                    const bool listed = std::any_of(profile.finite_part.begin(), profile.finite_part.end(),
                                                    [&](const FinitePoint& fp) { return fp.value == rho; });
                    if (!listed) return "finite value missing at " + where(s, n);
                }
                if (n >= profile.base) {
                    const auto idx = (n - profile.base) % profile.period;
                    const auto t = (n - profile.base) / profile.period;
                    if (sequence_value(profile, idx, t) != rho) return "sequence value wrong at " + where(s, n);
                }
            }
        }
        return std::string();
    }));

    out.push_back(run(suite, "window step identity for t = 1..10", [&]() -> std::string {
        for (const auto& g : fixtures) {
            const auto s = monoid_of(g);
            const auto profile = build_profile(s);
            const auto table = oracle::full_dp_lengths(s.generators(), profile.base + 11 * profile.period);
            for (Element n = profile.base; n < profile.base + profile.period; ++n)
                for (Element t = 1; t <= 10; ++t) {
                    const Rational expect(BigInt(table.max_len[n]) + BigInt(t * s.largest()),
                                          BigInt(table.min_len[n]) + BigInt(t * s.smallest()));
                    if (table.elasticity(n + t * profile.period) != expect) return "identity fails at " + where(s, n);
                }
        }
        return std::string();
    }));

    out.push_back(run(suite, "sequences are monotone and converge to g_k/g_1", [&]() -> std::string {
        for (const auto& g : fixtures) {
            const auto s = monoid_of(g);
            const auto profile = build_profile(s);
            const auto sup = profile.sup();
            for (std::size_t i = 0; i < profile.sequences.size(); ++i) {
                for (std::uint64_t t = 0; t < 50; ++t)
                    if (sequence_value(profile, i, t + 1) < sequence_value(profile, i, t))
                        return "decrease in " + s.to_string();
                const auto& seq = profile.sequences[i];
                for (std::uint64_t t : {1ull, 10ull, 1000ull}) {
                    const Rational bound(BigInt(s.largest() * seq.max0), BigInt(t));
                    if (sup - sequence_value(profile, i, t) > bound) return "slow convergence in " + s.to_string();
                }
            }
        }
        return std::string();
    }));

    out.push_back(run(suite, "comparison is reflexive and symmetric", [&]() -> std::string {
        std::vector<ElasticityProfile> profiles;
        for (const auto& g : fixtures) profiles.push_back(build_profile(monoid_of(g)));
        profiles.push_back(build_profile(NumericalMonoid::create({6, 11, 13, 14})));
        for (std::size_t i = 0; i < profiles.size(); ++i) {
            if (compare_profiles(profiles[i], profiles[i], 10).outcome != Outcome::Equal)
                return "not reflexive on " + profiles[i].monoid.to_string();
            for (std::size_t j = i + 1; j < profiles.size(); ++j) {
                const auto ab = compare_profiles(profiles[i], profiles[j], 10);
                const auto ba = compare_profiles(profiles[j], profiles[i], 10);
                if (ab.outcome != ba.outcome || ab.witness != ba.witness)
                    return "asymmetric on " + profiles[i].monoid.to_string() + " vs " + profiles[j].monoid.to_string();
            }
        }
        return std::string();
    }));

    out.push_back(run(suite, "NotEqual witnesses separate the two sets", [&]() -> std::string {
        const std::vector<std::pair<Gens, Gens>> pairs = {{{3, 5}, {3, 7}},
                                                          {{14, 17, 20, 23, 26, 29, 32}, {7, 10, 13, 16}},
                                                          {{3, 5}, {3, 4}},
                                                          {{6, 10, 13, 14}, {6, 10, 11, 14}}};
        for (const auto& [x, y] : pairs) {
            const auto px = build_profile(monoid_of(x));
            const auto py = build_profile(monoid_of(y));
            const auto v = compare_profiles(px, py, 20);
            if (v.outcome != Outcome::NotEqual) continue;
            if (contains_elasticity(px, *v.witness).member == contains_elasticity(py, *v.witness).member)
                return "witness " + v.witness->to_string() + " does not separate";
        }
        return std::string();
    }));
    return out;
}

inline std::vector<CheckResult> run_suite(std::string_view name, const Options& opt = {}) {
    std::vector<CheckResult> out;
    auto append = [&out](std::vector<CheckResult> more) {
        out.insert(out.end(), std::make_move_iterator(more.begin()), std::make_move_iterator(more.end()));
    };
    if (name == "core" || name == "all") append(core_suite(opt));
    if (name == "arith" || name == "all") append(arith_suite(opt));
    if (name == "profile" || name == "all") append(profile_suite(opt));
    if (out.empty()) throw Error(ErrorCode::InvalidInput, "unknown suite '" + std::string(name) + "'");
    return out;
}

}  // namespace elast::verify
