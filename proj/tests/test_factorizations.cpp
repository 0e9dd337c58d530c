#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "elast/factorizations.hpp"
#include "elast/oracle.hpp"

using namespace elast;

namespace {

using Vec = std::vector<std::uint64_t>;

std::vector<Vec> exponents_of(const std::vector<Factorization>& fs) {
    std::vector<Vec> out;
    for (const auto& f : fs) out.push_back(f.exponents);
    return out;
}

std::vector<NumericalMonoid> random_small_monoids(std::uint64_t seed, int count, Element max_gen) {
    std::mt19937_64 rng(seed);
    std::vector<NumericalMonoid> out;
    while (static_cast<int>(out.size()) < count) {
        std::vector<Element> raw(2 + rng() % 3);
        for (auto& g : raw) g = 2 + rng() % (max_gen - 1);
        try {
            out.push_back(NumericalMonoid::create(raw));
        } catch (const Error&) {
        }
    }
    return out;
}

}  // namespace

TEST(Factorizations, RemarkExample) {
    const auto s = NumericalMonoid::create({3, 5, 7});
    const auto fs = factorizations(s, 10);
    // Descending in the exponent of 7 first.
    EXPECT_EQ(exponents_of(fs), (std::vector<Vec>{{1, 0, 1}, {0, 2, 0}}));
    EXPECT_EQ(exponents_of(factorizations(s, 0)), (std::vector<Vec>{{0, 0, 0}}));
    EXPECT_TRUE(factorizations(s, 4).empty());
}

TEST(Factorizations, MatchExhaustiveSearch) {
    for (const auto& s : random_small_monoids(3, 25, 15)) {
        for (Element n = 0; n <= 60; ++n) {
            auto expected = oracle::enumerate_factorizations(s.generators(), n);
            auto got = exponents_of(factorizations(s, n));
            for (const auto& f : factorizations(s, n)) ASSERT_EQ(f.value(s.generators()), n);
            std::sort(expected.begin(), expected.end());
            std::vector<Vec> sorted = got;
            std::sort(sorted.begin(), sorted.end());
            ASSERT_EQ(sorted, expected) << s.to_string() << " n=" << n;
            // Enumeration order: lexicographic descending read from the last generator.
            auto reversed_key = [](const Vec& v) { return Vec(v.rbegin(), v.rend()); };
            ASSERT_TRUE(std::is_sorted(got.begin(), got.end(), [&](const Vec& x, const Vec& y) {
                return reversed_key(x) > reversed_key(y);
            }));
        }
    }
}

TEST(Factorizations, EnumerationGuard) {
    Limits tight;
    tight.max_factorizations = 3;
    EXPECT_THROW(factorizations(NumericalMonoid::create({2, 3}), 60, tight), Error);
}

TEST(LengthSet, Examples) {
    const auto s = NumericalMonoid::create({3, 5, 7});
    EXPECT_EQ(length_set(s, 10), (LengthSet{2}));
    EXPECT_EQ(length_set(s, 0), (LengthSet{0}));
    EXPECT_THROW(length_set(s, 4), Error);
}

TEST(LengthSet, FourSixOccursInFirstMonoidOnly) {
    const auto s = NumericalMonoid::create({6, 10, 13, 14});
    const auto n = find_element_with_length_set(s, {4, 6});
    ASSERT_TRUE(n);
    EXPECT_EQ(*n, 43u);  // 43 = 6+6+6+6+6+13 = 10+10+10+13
    EXPECT_EQ(length_set(s, *n), (LengthSet{4, 6}));
    EXPECT_FALSE(find_element_with_length_set(NumericalMonoid::create({6, 11, 13, 14}), {4, 6}));
}

TEST(LengthSet, UnionRecurrenceMatchesEnumeration) {
    for (const auto& s : random_small_monoids(17, 15, 20)) {
        const auto table = length_sets_upto(s, 120);
        for (Element n = 0; n <= 120; ++n) {
            if (table[n].empty()) {
                ASSERT_FALSE(contains(s, n));
                continue;
            }
            ASSERT_EQ(length_set(s, n), table[n]) << s.to_string() << " n=" << n;
        }
    }
}

TEST(LengthSet, ArithmeticalLengthSetsStepByD) {
    for (auto [a, d, k] : std::vector<std::array<std::int64_t, 3>>{{7, 5, 3}, {3, 2, 1}, {14, 3, 6}, {5, 3, 4}}) {
        const auto p = ArithmeticalParams::make(a, d, k);
        const auto gens = p.generators();
        const auto table = length_sets_upto(NumericalMonoid::create(std::span<const Element>(gens)), 600);
        for (Element n = 0; n <= 600; ++n)
            for (std::size_t i = 1; i < table[n].size(); ++i)
                ASSERT_EQ((table[n][i] - table[n][i - 1]) % d, 0u) << "a=" << a << " n=" << n;
    }
}

TEST(Lengths, Examples) {
    const auto s = NumericalMonoid::create({5, 16, 17, 18, 19});
    EXPECT_EQ(max_length(s, 100), 20u);
    EXPECT_EQ(min_length(s, 100), 6u);
    const auto t = NumericalMonoid::create({7, 12, 17, 22});
    EXPECT_EQ(max_length(t, 66), 8u);
    EXPECT_EQ(min_length(t, 66), 3u);
    for (const auto& m : {s, t}) {
        EXPECT_EQ(max_length(m, m.smallest()), 1u);
        EXPECT_EQ(min_length(m, m.smallest()), 1u);
    }
    EXPECT_THROW(max_length(s, 4), Error);
    EXPECT_THROW(min_length(s, 4), Error);
}

TEST(Lengths, MatchEnumerationOracle) {
    std::vector<NumericalMonoid> monoids = random_small_monoids(23, 30, 30);
    monoids.push_back(NumericalMonoid::create({5, 16, 17, 18, 19}));
    monoids.push_back(NumericalMonoid::create({7, 12, 17, 22}));
    for (const auto& s : monoids) {
        const LengthEngine engine(s);
        const Element bound = 2 * s.second_largest() * s.largest();
        const auto table = oracle::enumerate_lengths(s.generators(), bound);
        for (Element n = 0; n <= bound; ++n) {
            ASSERT_EQ(engine.contains(n), table.member(n)) << s.to_string() << " n=" << n;
            if (!table.member(n)) continue;
            ASSERT_EQ(static_cast<std::int64_t>(engine.max_length(n)), table.max_len[n]) << s.to_string() << " " << n;
            ASSERT_EQ(static_cast<std::int64_t>(engine.min_length(n)), table.min_len[n]) << s.to_string() << " " << n;
        }
    }
}

TEST(Lengths, QuasilinearBeyondThresholds) {
    for (auto raw : std::vector<std::vector<Element>>{
             {5, 16, 17, 18, 19}, {7, 12, 17, 22}, {20, 21, 45}, {3, 5}, {6, 10, 13, 14}, {7, 41}}) {
        const auto s = NumericalMonoid::create(raw);
        const LengthEngine engine(s);
        const auto table = oracle::full_dp_lengths(s.generators(), 5000);
        for (Element n = 0; n <= 5000; ++n) {
            if (!table.member(n)) continue;
            ASSERT_EQ(static_cast<std::int64_t>(engine.max_length(n)), table.max_len[n]) << s.to_string() << " " << n;
            ASSERT_EQ(static_cast<std::int64_t>(engine.min_length(n)), table.min_len[n]) << s.to_string() << " " << n;
            if (n > engine.max_threshold()) {
                ASSERT_TRUE(table.member(n - s.smallest()));
                ASSERT_EQ(table.max_len[n], table.max_len[n - s.smallest()] + 1);
            }
            if (n > engine.min_threshold()) {
                ASSERT_TRUE(table.member(n - s.largest()));
                ASSERT_EQ(table.min_len[n], table.min_len[n - s.largest()] + 1);
            }
        }
    }
}

TEST(Lengths, HugeElementsAnsweredWithoutTables) {
    const auto s = NumericalMonoid::create({5, 16, 17, 18, 19});
    const LengthEngine engine(s);
    const Element n = 1'000'000'000'000ull;
    // n = 5 * 2e11: the all-g_1 factorization is longest. m follows the g_k step.
    EXPECT_EQ(engine.max_length(n), 200'000'000'000ull);
    const Element steps = (n - 5000) / 19;
    EXPECT_EQ(engine.min_length(n), engine.min_length(n - steps * 19) + steps);
    EXPECT_EQ(NumericalMonoid::create({1}).smallest(), 1u);
    EXPECT_EQ(LengthEngine(NumericalMonoid::create({1})).max_length(77), 77u);
}

TEST(Elasticity, Examples) {
    EXPECT_EQ(elasticity(NumericalMonoid::create({7, 12, 17, 22}), 66), Rational::of(8, 3));
    EXPECT_EQ(elasticity(NumericalMonoid::create({3, 5, 7}), 10), Rational(1));
    EXPECT_EQ(elasticity(NumericalMonoid::create({3, 5, 7}), 0), Rational(1));
    EXPECT_THROW(elasticity(NumericalMonoid::create({3, 5, 7}), 4), Error);
}

TEST(Elasticity, BoundedByMaxElasticity) {
    for (const auto& s : random_small_monoids(31, 20, 40)) {
        const LengthEngine engine(s);
        for (Element n = 0; n <= 2000; ++n) {
            if (!engine.contains(n)) continue;
            const auto rho = engine.elasticity(n);
            ASSERT_GE(rho, Rational(1));
            ASSERT_LE(rho, max_elasticity(s));
        }
    }
}

TEST(LengthStatsRange, Examples) {
    const auto rows = length_stats_range(NumericalMonoid::create({3, 5, 7}), 0, 7);
    std::vector<Element> ns;
    for (const auto& r : rows) ns.push_back(r.n);
    EXPECT_EQ(ns, (std::vector<Element>{0, 3, 5, 6, 7}));
    EXPECT_TRUE(length_stats_range(NumericalMonoid::create({3, 5, 7}), 5, 4).empty());
    const auto s = NumericalMonoid::create({6, 10, 13, 14});
    const auto big = length_stats_range(s, 1, 266);
    std::size_t members = 0;
    const auto table = oracle::enumerate_lengths(s.generators(), 266);
    for (Element n = 1; n <= 266; ++n) members += table.member(n);
    EXPECT_EQ(big.size(), members);
    EXPECT_EQ(big.size(), 254u);
    for (const auto& r : big) {
        EXPECT_EQ(r.elasticity, Rational(BigInt(r.max_len), BigInt(r.min_len)));
        EXPECT_LE(r.min_len, r.max_len);
    }
}

TEST(ProperSubcollection, Examples) {
    const std::vector<std::int64_t> ones{1, 1, 1};
    EXPECT_TRUE(find_proper_subcollection(3, ones).empty());
    const std::vector<std::int64_t> c{1, 2, 1};
    EXPECT_EQ(find_proper_subcollection(2, c), (std::vector<std::size_t>{0, 2}));  // positions 1 and 3
    const std::vector<std::int64_t> d{3, 5};
    EXPECT_TRUE(find_proper_subcollection(2, d).empty());
}

TEST(ProperSubcollection, ExampleTwoIsAValidChoiceByExhaustion) {
    // Every proper subset of [1,2,1] congruent to the total 4 mod 2.
    const std::vector<std::int64_t> c{1, 2, 1};
    std::set<std::vector<std::size_t>> valid;
    for (unsigned mask = 0; mask < 7; ++mask) {
        std::int64_t sum = 0;
        std::vector<std::size_t> subset;
        for (std::size_t i = 0; i < 3; ++i)
            if (mask >> i & 1) {
                sum += c[i];
                subset.push_back(i);
            }
        if ((4 - sum) % 2 == 0) valid.insert(subset);
    }
    EXPECT_TRUE(valid.count(find_proper_subcollection(2, c)));
}

TEST(ProperSubcollection, ZeroModulus) {
    const std::vector<std::int64_t> c{2, -2, 5};
    EXPECT_EQ(find_proper_subcollection(0, c), (std::vector<std::size_t>{2}));
    const std::vector<std::int64_t> distinct{1, 2, 3};
    try {
        find_proper_subcollection(0, distinct);
        FAIL() << "expected NoSubcollection";
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::NoSubcollection);
    }
    EXPECT_THROW(find_proper_subcollection(4, c), Error);  // fewer than k values
}

TEST(ProperSubcollection, RandomInstancesSatisfyContract) {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 10000; ++trial) {
        const auto k = static_cast<std::uint64_t>(1 + rng() % 20);
        const std::size_t r = k + rng() % (41 - k);
        std::vector<std::int64_t> c(r);
        for (auto& v : c) v = static_cast<std::int64_t>(rng() % 2001) - 1000;
        const auto subset = find_proper_subcollection(k, c);
        ASSERT_LT(subset.size(), r);
        ASSERT_TRUE(std::is_sorted(subset.begin(), subset.end()));
        const std::int64_t total = std::accumulate(c.begin(), c.end(), std::int64_t{0});
        std::int64_t part = 0;
        for (auto i : subset) part += c.at(i);
        ASSERT_EQ((total - part) % static_cast<std::int64_t>(k), 0);
    }
}
