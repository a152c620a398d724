#include "amhs/composition.hpp"
#include "amhs/evaluator.hpp"

#include <gtest/gtest.h>

#include <random>
#include <set>

using namespace amhs;

TEST(Oplus, Examples) {
    EXPECT_EQ(oplus(2, 3), 5);
    EXPECT_EQ(oplus(-2, 3), -5);
    EXPECT_EQ(oplus(-2, -3), 5);
    EXPECT_EQ(oplus(0, -4), -4);
    EXPECT_EQ(oplus(0, 4), 4);
}

TEST(Oplus, CommutativeAndAdditiveInAbsoluteValue) {
    for (int s = -6; s <= 6; ++s)
        for (int t = -6; t <= 6; ++t) {
            if (s == 0 || t == 0) continue;
            EXPECT_EQ(oplus(s, t), oplus(t, s));
            EXPECT_EQ(std::abs(oplus(s, t)), std::abs(s) + std::abs(t));
        }
}

TEST(Composition, ParseAndFormat) {
    Composition c = Composition::parse(" 1, -2 ,-1");
    EXPECT_EQ(c, Composition({1, -2, -1}));
    EXPECT_EQ(c.weight(), 4u);
    EXPECT_EQ(c.depth(), 3u);
    EXPECT_EQ(c.sign(), 1);
    EXPECT_EQ(Composition::parse(c.str()), c);
    EXPECT_THROW(Composition::parse("1,0"), std::invalid_argument);
    EXPECT_THROW(Composition::parse("1,,2"), std::invalid_argument);
    EXPECT_THROW(Composition::parse(""), std::invalid_argument);
    EXPECT_TRUE(parse_word("").empty());
}

TEST(Composition, Reverse) {
    EXPECT_EQ(reverse(Composition({1, -2, 3})), Composition({3, -2, 1}));
    EXPECT_EQ(repeat(-1, 3), Composition({-1, -1, -1}));
    EXPECT_EQ(concat(Composition({2}), Composition({-1, 1})), Composition({2, -1, 1}));
}

TEST(Composition, Coarsenings) {
    auto cs = coarsenings(Composition({1, -2, 3}));
    ASSERT_EQ(cs.size(), 4u);
    EXPECT_EQ(cs.front(), Composition({1, -2, 3}));
    std::set<Composition> got(cs.begin(), cs.end());
    std::set<Composition> want{Composition({1, -2, 3}), Composition({-3, 3}), Composition({1, -5}), Composition({-6})};
    EXPECT_EQ(got, want);
}

TEST(Composition, SignedCompositionCount) {
    // each of the 2^{w-1} compositions carries 2^depth sign patterns: 2 * 3^{w-1}
    unsigned expect = 2;
    for (unsigned w = 1; w <= 7; ++w) {
        auto all = signed_compositions(w);
        EXPECT_EQ(all.size(), expect);
        std::set<Composition> uniq(all.begin(), all.end());
        EXPECT_EQ(uniq.size(), all.size());
        for (const auto& c : all) EXPECT_EQ(c.weight(), w);
        expect *= 3;
    }
}

TEST(Conversion, SFromHExample) {
    auto h = [](const Composition& r) { return eval(SumFamily::H, r, 2); };
    EXPECT_EQ(s_from_h(Composition({1, 1}), h), Rational(7, 4));
    EXPECT_EQ(eval(SumFamily::S, Composition({1, 1}), 2), Rational(7, 4));
}

TEST(Conversion, RoundTripToDepthFour) {
    for (unsigned w = 1; w <= 6; ++w) {
        for (const auto& c : signed_compositions(w)) {
            if (c.depth() > 4) continue;
            for (std::uint64_t n : {1u, 5u, 9u}) {
                auto h = [n](const Composition& r) { return eval(SumFamily::H, r, n); };
                auto s = [n](const Composition& r) { return eval(SumFamily::S, r, n); };
                EXPECT_EQ(s_from_h(c, h), eval(SumFamily::S, c, n)) << c.str();
                EXPECT_EQ(h_from_s(c, s), eval(SumFamily::H, c, n)) << c.str();
                auto sh = [&](const Composition& r) { return s_from_h(r, h); };
                EXPECT_EQ(h_from_s(c, sh), eval(SumFamily::H, c, n)) << c.str();
            }
        }
    }
}

TEST(Partition, OddPartitions) {
    auto odd = odd_partitions(6);
    std::set<Partition> got(odd.begin(), odd.end());
    std::set<Partition> want{Partition({5, 1}), Partition({3, 3}), Partition({3, 1, 1, 1}),
                             Partition({1, 1, 1, 1, 1, 1})};
    EXPECT_EQ(got, want);
    for (const auto& p : odd) EXPECT_TRUE(p.is_odd());
    EXPECT_FALSE(Partition({2, 1}).is_odd());
    EXPECT_EQ(Partition({1, 3, 2}).parts(), (std::vector<unsigned>{3, 2, 1}));
}

TEST(Partition, CountsMatchPartitionNumbers) {
    std::vector<std::size_t> pn{1, 1, 2, 3, 5, 7, 11, 15, 22};
    for (unsigned l = 1; l < pn.size(); ++l) EXPECT_EQ(partitions(l).size(), pn[l]);
}

TEST(CLambda, TableValues) {
    EXPECT_EQ(c_lambda(Partition({1, 1, 1})), 1);
    EXPECT_EQ(c_lambda(Partition({3})), 2);
    EXPECT_EQ(c_lambda(Partition({1, 3})), 8);
    EXPECT_EQ(c_lambda(Partition({1, 1, 3})), 20);
    EXPECT_EQ(c_lambda(Partition({1, 1, 1, 3})), 40);
    EXPECT_EQ(c_lambda(Partition({3, 3})), 40);
}

// l! e_l(x) = sum_lambda c_lambda p_lambda(x) at random rational points
TEST(CLambda, MatchesSymmetricFunctionsNumerically) {
    std::mt19937_64 rng(5);
    for (unsigned l = 1; l <= 6; ++l) {
        for (int trial = 0; trial < 3; ++trial) {
            std::vector<Rational> x;
            for (unsigned i = 0; i < l + 2; ++i) x.emplace_back(long(rng() % 19) - 9, long(rng() % 7) + 1);
            // e_j by the product expansion
            std::vector<Rational> e(l + 1);
            e[0] = Rational(1);
            for (const auto& xi : x)
                for (unsigned j = l; j >= 1; --j) e[j] += e[j - 1] * xi;
            std::vector<Rational> p(l + 1);
            for (unsigned k = 1; k <= l; ++k)
                for (const auto& xi : x) p[k] += pow(xi, k);
            Rational rhs;
            for (const auto& lam : partitions(l)) {
                Rational term(c_lambda(lam));
                for (unsigned part : lam.parts()) term *= p[part];
                rhs += term;
            }
            EXPECT_EQ(Rational(factorial(l)) * e[l], rhs) << l;
        }
    }
}
