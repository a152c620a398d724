#include "amhs/rational.hpp"
#include "amhs/residue.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace amhs;

namespace {

// trial division on numerator and denominator separately
long factor_count(BigInt n, unsigned long p) {
    if (n < 0) n = -n;
    long e = 0;
    while (n % p == 0) {
        n /= p;
        ++e;
    }
    return e;
}

long oracle_valuation(const Rational& r, unsigned long p) {
    return factor_count(r.numerator(), p) - factor_count(r.denominator(), p);
}

// x with a * x = 1 mod m, by search
std::uint64_t slow_inverse(std::uint64_t a, std::uint64_t m) {
    for (std::uint64_t x = 1; x < m; ++x)
        if (a % m * x % m == 1) return x;
    return 0;
}

Rational random_p_integral(std::mt19937_64& rng, std::uint64_t p) {
    long num = long(rng() % 20001) - 10000;
    long den;
    do den = long(rng() % 5000) + 1;
    while (den % long(p) == 0);
    return Rational(num, den);
}

}  // namespace

TEST(Rational, CanonicalForm) {
    Rational r(6, -4);
    EXPECT_EQ(r.numerator(), -3);
    EXPECT_EQ(r.denominator(), 2);
    EXPECT_EQ(Rational(0, 5).str(), "0");
    EXPECT_EQ(Rational(0, 5).denominator(), 1);
    EXPECT_THROW(Rational(1, 0), std::domain_error);
    EXPECT_EQ(Rational::parse("-37/60"), Rational(-37, 60));
    EXPECT_EQ(Rational::parse("4"), Rational(4));
}

TEST(Valuation, FactorizationOracle) {
    EXPECT_EQ(valuation(Rational(49, 3), 7), 2);
    EXPECT_EQ(valuation(Rational(3, 7), 7), -1);
    EXPECT_EQ(valuation(Rational(0), 7), kInfiniteValuation);
    std::mt19937_64 rng(7);
    for (int i = 0; i < 300; ++i) {
        Rational r(long(rng() % 100000) + 1, long(rng() % 100000) + 1);
        for (unsigned long p : {2ul, 3ul, 5ul, 7ul, 11ul})
            EXPECT_EQ(valuation(r, p), oracle_valuation(r, p)) << r.str() << " at " << p;
    }
}

TEST(ReduceMod, Examples) {
    EXPECT_EQ(reduce_mod(Rational(-37, 60), 7, 1).value(), 3u);
    EXPECT_THROW(reduce_mod(Rational(1, 7), 7, 1), NotPIntegral);
    EXPECT_EQ(reduce_mod(Rational(0), 11, 3).value(), 0u);
}

TEST(ReduceMod, MatchesSearchInverse) {
    for (std::uint64_t p : {7u, 11u, 13u}) {
        for (unsigned k = 1; k <= 2; ++k) {
            Modulus mod = Modulus::of(p, k);
            for (long den = 1; den < 40; ++den) {
                if (den % long(p) == 0) continue;
                std::uint64_t expect = slow_inverse(std::uint64_t(den), mod.m);
                EXPECT_EQ(reduce_mod(Rational(1, den), mod).value(), expect);
            }
        }
    }
}

TEST(ReduceMod, RingHomomorphism) {
    std::mt19937_64 rng(11);
    for (std::uint64_t p : {7u, 13u, 101u}) {
        for (unsigned k = 1; k <= 4; ++k) {
            Modulus mod = Modulus::of(p, k);
            for (int i = 0; i < 100; ++i) {
                Rational r = random_p_integral(rng, p), s = random_p_integral(rng, p);
                EXPECT_EQ(reduce_mod(r * s, mod), reduce_mod(r, mod) * reduce_mod(s, mod));
                EXPECT_EQ(reduce_mod(r + s, mod), reduce_mod(r, mod) + reduce_mod(s, mod));
                EXPECT_EQ(reduce_mod(r - s, mod), reduce_mod(r, mod) - reduce_mod(s, mod));
            }
        }
    }
}

TEST(ReduceMod, ProjectionCommutes) {
    std::mt19937_64 rng(13);
    for (std::uint64_t p : {7u, 31u}) {
        for (int i = 0; i < 100; ++i) {
            Rational r = random_p_integral(rng, p);
            Residue top = reduce_mod(r, p, 4);
            for (unsigned j = 1; j < 4; ++j) EXPECT_EQ(top.project(j), reduce_mod(r, p, j));
        }
    }
}

TEST(Residue, ArithmeticAndErrors) {
    Modulus m7 = Modulus::of(7, 1), m49 = Modulus::of(7, 2);
    Residue a(3, m7), b(5, m7);
    EXPECT_EQ((a + b).value(), 1u);
    EXPECT_EQ((a - b).value(), 5u);
    EXPECT_EQ((a * b).value(), 1u);
    EXPECT_EQ(a.inverse().value(), 5u);
    EXPECT_EQ(Residue::from_int(-1, m49).value(), 48u);
    EXPECT_THROW(Residue(7, m49).inverse(), NotPIntegral);
    EXPECT_FALSE(Residue(14, m49).is_unit());
    EXPECT_THROW(a + Residue(3, m49), std::invalid_argument);
    EXPECT_THROW(Modulus::of(1000003, 4), std::overflow_error);
}

TEST(FermatQuotient, SmallPrimes) {
    EXPECT_EQ(fermat_quotient(3), Rational(1));
    EXPECT_EQ(fermat_quotient(5), Rational(3));
    EXPECT_EQ(fermat_quotient(7), Rational(9));
}

TEST(FermatQuotient, AlwaysInteger) {
    for (std::uint64_t p = 3; p < 600; ++p) {
        if (!is_prime(p)) continue;
        Rational q = fermat_quotient(p);
        EXPECT_TRUE(q.is_integer()) << p;
        // direct big-integer check
        BigInt two_pow = 1;
        for (std::uint64_t i = 0; i + 1 < p; ++i) two_pow *= 2;
        EXPECT_EQ(q.numerator() * BigInt(static_cast<unsigned long>(p)) + 1, two_pow);
    }
}

TEST(FermatQuotient, WieferichPrimesVanish) {
    EXPECT_EQ(reduce_mod(fermat_quotient(1093), 1093, 1).value(), 0u);
    EXPECT_EQ(reduce_mod(fermat_quotient(3511), 3511, 1).value(), 0u);
    EXPECT_NE(reduce_mod(fermat_quotient(1091), 1091, 1).value(), 0u);
}
