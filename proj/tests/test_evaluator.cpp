#include "amhs/composition.hpp"
#include "amhs/evaluator.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace amhs;

namespace {

const SumFamily kFamilies[] = {SumFamily::H, SumFamily::S, SumFamily::U, SumFamily::V};

Composition random_composition(std::mt19937_64& rng, unsigned max_weight) {
    unsigned w = 1 + unsigned(rng() % max_weight);
    std::vector<int> parts;
    while (w > 0) {
        int a = 1 + int(rng() % w);
        parts.push_back(rng() % 2 ? a : -a);
        w -= unsigned(a);
    }
    return Composition(parts);
}

// sign(prod s) (-1)^weight
int reversal_sign(const Composition& c) { return c.sign() * (c.weight() % 2 ? -1 : 1); }

}  // namespace

TEST(Family, ParseAndLetter) {
    EXPECT_EQ(parse_family("H"), SumFamily::H);
    EXPECT_EQ(parse_family("V"), SumFamily::V);
    EXPECT_EQ(family_letter(SumFamily::U), 'U');
    EXPECT_THROW(parse_family("X"), std::invalid_argument);
}

TEST(Eval, Examples) {
    EXPECT_EQ(eval(SumFamily::H, Composition({1, -3}), 6), Rational(4769, 51840));
    EXPECT_EQ(eval(SumFamily::H, Composition({1, -3}), 6, 7, 1).value(), 6u);
    EXPECT_EQ(eval(SumFamily::U, Composition({-1}), 3), Rational(20, 3));
    EXPECT_EQ(eval(SumFamily::V, Composition({-1}), 2), Rational(5, 8));
    EXPECT_EQ(eval(SumFamily::H, Composition({1, -2}), 3), Rational(1, 12));
    // -1 + 1/4 - 1/9 + 1/16
    EXPECT_EQ(eval(SumFamily::H, Composition({-2}), 4), Rational(-115, 144));
    EXPECT_EQ(eval(SumFamily::S, Composition({1, 1}), 2), Rational(7, 4));
    EXPECT_EQ(eval(SumFamily::H, Composition({1, 1}), 0), Rational(0));
    EXPECT_EQ(eval(SumFamily::H, Composition({1, 1, 1}), 2), Rational(0));
    EXPECT_EQ(eval(SumFamily::S, Composition({1, 1, 1}), 1), Rational(1));
}

TEST(Eval, IndexNotInvertible) {
    EXPECT_THROW(eval(SumFamily::H, Composition({1}), 7, 7, 1), IndexNotInvertible);
    EXPECT_THROW(eval(SumFamily::S, Composition({2, 1}), 20, 7, 2), IndexNotInvertible);
    EXPECT_NO_THROW(eval(SumFamily::H, Composition({1}), 6, 7, 1));
}

TEST(Eval, DpMatchesNaiveExact) {
    for (unsigned w = 1; w <= 3; ++w)
        for (const auto& c : signed_compositions(w))
            for (auto f : kFamilies)
                for (std::uint64_t n : {0u, 1u, 4u, 11u})
                    EXPECT_EQ(eval(f, c, n), eval_naive(f, c, n)) << family_letter(f) << c.str() << " n=" << n;
}

TEST(Eval, DpMatchesNaiveResidue) {
    std::mt19937_64 rng(97);
    for (int trial = 0; trial < 400; ++trial) {
        std::uint64_t p;
        do p = 7 + rng() % 91;
        while (!is_prime(p));
        unsigned k = 1 + unsigned(rng() % 3);
        Modulus mod = Modulus::of(p, k);
        Composition c = random_composition(rng, 5);
        SumFamily f = kFamilies[rng() % 4];
        std::uint64_t n = rng() % p;
        EXPECT_EQ(eval(f, c, n, mod), eval_naive(f, c, n, mod)) << family_letter(f) << c.str() << " p=" << p;
    }
}

TEST(Eval, ResidueModeAgreesWithReducedExact) {
    for (const auto& c : signed_compositions(4))
        for (auto f : kFamilies)
            EXPECT_EQ(eval(f, c, 10, 11, 2), reduce_mod(eval(f, c, 10), 11, 2)) << family_letter(f) << c.str();
}

TEST(Reversal, WeightSignHolds) {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 300; ++trial) {
        Composition c = random_composition(rng, 6);
        std::uint64_t p;
        do p = c.weight() + 1 + rng() % (200 - c.weight());
        while (!is_prime(p) || p < 5);
        Composition r = reverse(c);
        for (auto f : {SumFamily::H, SumFamily::S}) {
            Residue lhs = eval(f, c, p - 1, p, 1);
            Residue rhs = eval(f, r, p - 1, p, 1) * reversal_sign(c);
            EXPECT_EQ(lhs, rhs) << family_letter(f) << c.str() << " p=" << p;
        }
    }
}

// sign(prod s)(-1)^depth is wrong already for (1,2)
TEST(Reversal, DepthSignFailsForOneTwo) {
    Composition c({1, 2});
    for (std::uint64_t p : {5u, 7u, 11u, 13u}) {
        Residue h12 = eval(SumFamily::H, c, p - 1, p, 1);
        Residue h21 = eval(SumFamily::H, reverse(c), p - 1, p, 1);
        EXPECT_EQ(h12, -h21);
        EXPECT_NE(h12.value(), 0u);
        EXPECT_NE(h12, h21 * (c.sign() * (c.depth() % 2 ? -1 : 1)));
    }
}

// exponents above p-1 behave like their reduction mod p-1 on 1..p-1
TEST(Eval, LargeExponentsReduceModPMinusOne) {
    for (std::uint64_t p : {7u, 11u, 13u, 31u}) {
        for (int a : {1, 2, 3}) {
            int big = a + int(p - 1), bigger = a + 2 * int(p - 1);
            for (int sg : {1, -1}) {
                Composition lo({sg * a, -1}), hi({sg * big, -1}), hi2({sg * bigger, -1});
                for (auto f : {SumFamily::H, SumFamily::S}) {
                    EXPECT_EQ(eval(f, hi, p - 1, p, 1), eval(f, lo, p - 1, p, 1));
                    EXPECT_EQ(eval(f, hi2, p - 1, p, 1), eval(f, lo, p - 1, p, 1));
                }
            }
        }
    }
}

TEST(Eval, H31IsHalfRangeSum) {
    for (std::uint64_t p : {7u, 11u, 101u})
        for (unsigned k = 1; k <= 3; ++k)
            EXPECT_EQ(h31(p, k), eval(SumFamily::H, Composition({3, 1}), (p - 1) / 2, p, k));
}

TEST(Eval, InverseTable) {
    auto inv = inverse_table(12, 13);
    for (std::uint64_t j = 1; j <= 12; ++j) EXPECT_EQ(j * inv[j] % 13, 1u);
}
