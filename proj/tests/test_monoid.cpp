#include <gtest/gtest.h>

#include <random>
#include <vector>

#include "elast/monoid.hpp"
#include "elast/oracle.hpp"

using namespace elast;

namespace {
std::vector<Element> gens_of(const NumericalMonoid& s) { return {s.generators().begin(), s.generators().end()}; }
}  // namespace

TEST(NewMonoid, SortsAndDeduplicates) {
    EXPECT_EQ(gens_of(NumericalMonoid::create({5, 3, 7, 3})), (std::vector<Element>{3, 5, 7}));
}

TEST(NewMonoid, DropsNonMinimalGenerators) {
    EXPECT_EQ(gens_of(NumericalMonoid::create({3, 5, 8})), (std::vector<Element>{3, 5}));
    EXPECT_EQ(gens_of(NumericalMonoid::create({4, 6, 9, 10, 15})), (std::vector<Element>{4, 6, 9}));
    EXPECT_EQ(gens_of(NumericalMonoid::create({1, 2, 3})), (std::vector<Element>{1}));
}

TEST(NewMonoid, Errors) {
    auto code_of = [](std::vector<Element> raw) {
        try {
            NumericalMonoid::create(raw);
        } catch (const Error& e) {
            return e.code();
        }
        return ErrorCode::Overflow;  // sentinel: nothing thrown
    };
    EXPECT_EQ(code_of({4, 6}), ErrorCode::NonCoprime);
    EXPECT_EQ(code_of({}), ErrorCode::EmptyInput);
    EXPECT_EQ(code_of({0, 3, 5}), ErrorCode::ZeroGenerator);
    EXPECT_EQ(code_of({3, 2'000'000}), ErrorCode::GeneratorTooLarge);
}

TEST(NewMonoid, NormalizationIsIdempotent) {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 300; ++i) {
        std::vector<Element> raw(1 + rng() % 6);
        for (auto& g : raw) g = 1 + rng() % 40;
        raw.push_back(1 + 2 * (rng() % 20));  // odd, so gcd is frequently 1
        raw.push_back(2 + 2 * (rng() % 20));
        try {
            const auto s = NumericalMonoid::create(raw);
            EXPECT_EQ(NumericalMonoid::create(s.generators()), s);
        } catch (const Error& e) {
            EXPECT_EQ(e.code(), ErrorCode::NonCoprime);
        }
    }
}

TEST(Contains, Examples) {
    const auto s = NumericalMonoid::create({3, 5, 7});
    EXPECT_TRUE(contains(s, 0));
    EXPECT_FALSE(contains(s, 4));
    EXPECT_TRUE(contains(s, 10));
    EXPECT_TRUE(contains(NumericalMonoid::create({1}), 12345));
}

TEST(Contains, AgreesWithEnumerationOnSmallMonoids) {
    std::mt19937_64 rng(5);
    int checked = 0;
    while (checked < 60) {
        std::vector<Element> raw(2 + rng() % 3);
        for (auto& g : raw) g = 2 + rng() % 24;
        std::optional<NumericalMonoid> s;
        try {
            s = NumericalMonoid::create(raw);
        } catch (const Error&) {
            continue;
        }
        ++checked;
        const Element bound = static_cast<Element>(frobenius(*s) + 1) + s->smallest() * s->largest();
        const auto table = oracle::enumerate_lengths(s->generators(), bound);
        for (Element n = 0; n <= bound; ++n) ASSERT_EQ(contains(*s, n), table.member(n)) << s->to_string() << " " << n;
    }
}

TEST(Frobenius, Examples) {
    EXPECT_EQ(frobenius(NumericalMonoid::create({3, 5, 7})), 4);
    EXPECT_EQ(frobenius(NumericalMonoid::create({2, 3})), 1);
    EXPECT_EQ(frobenius(NumericalMonoid::create({7, 41})), 7 * 41 - 7 - 41);
    EXPECT_EQ(frobenius(NumericalMonoid::create({1})), -1);
}

TEST(Frobenius, MatchesScan) {
    for (auto raw : std::vector<std::vector<Element>>{{3, 5, 7}, {2, 3}, {7, 41}, {20, 21, 45}, {6, 10, 13, 14},
                                                      {5, 16, 17, 18, 19}, {7, 12, 17, 22}}) {
        const auto s = NumericalMonoid::create(raw);
        EXPECT_EQ(frobenius(s), oracle::frobenius_scan(s.generators())) << s.to_string();
    }
}

TEST(DetectArithmetical, Examples) {
    const auto p = detect_arithmetical(NumericalMonoid::create({7, 12, 17, 22}));
    ASSERT_TRUE(p);
    EXPECT_EQ(*p, (ArithmeticalParams{7, 5, 3}));
    EXPECT_FALSE(detect_arithmetical(NumericalMonoid::create({20, 21, 45})));
    EXPECT_EQ(*detect_arithmetical(NumericalMonoid::create({3, 5})), (ArithmeticalParams{3, 2, 1}));
    EXPECT_FALSE(detect_arithmetical(NumericalMonoid::create({1})));
}

TEST(DetectArithmetical, RoundTripsOverGrid) {
    for (std::int64_t a = 2; a <= 25; ++a)
        for (std::int64_t d = 1; d <= 8; ++d)
            for (std::int64_t k = 1; k < a; ++k) {
                if (std::gcd(a, d) != 1) continue;
                const auto p = ArithmeticalParams::make(a, d, k);
                const auto gens = p.generators();
                const auto s = NumericalMonoid::create(std::span<const Element>(gens));
                ASSERT_EQ(s.embedding_dimension(), static_cast<std::size_t>(k + 1));
                ASSERT_EQ(detect_arithmetical(s), p);
            }
}

TEST(ArithmeticalParams, RejectsInvalid) {
    EXPECT_THROW(ArithmeticalParams::make(4, 2, 1), Error);  // gcd(a, d) = 2
    EXPECT_THROW(ArithmeticalParams::make(3, 1, 3), Error);  // k = a
    EXPECT_THROW(ArithmeticalParams::make(3, 0, 1), Error);
}

TEST(MaxElasticity, Examples) {
    EXPECT_EQ(max_elasticity(NumericalMonoid::create({7, 41})), Rational::of(41, 7));
    EXPECT_EQ(max_elasticity(NumericalMonoid::create({20, 21, 45})), Rational::of(9, 4));
    EXPECT_EQ(max_elasticity(NumericalMonoid::create({1})), Rational(1));
    EXPECT_GT(max_elasticity(NumericalMonoid::create({2, 3})), Rational(1));
}
