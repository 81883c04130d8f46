#include <useq/rational.hpp>

#include "testutil.hpp"

#include <gtest/gtest.h>

#include <random>
#include <sstream>

using useq::rational;

TEST(Rational, CanonicalForm) {
    EXPECT_EQ(rational(mpz_class(6), mpz_class(4)).str(), "3/2");
    EXPECT_EQ(rational(mpz_class(12), mpz_class(-9)).str(), "-4/3");
    EXPECT_EQ(rational(mpz_class(-12), mpz_class(-9)).str(), "4/3");
    EXPECT_EQ(rational(mpz_class(0), mpz_class(7)).str(), "0");
    EXPECT_EQ(rational(mpz_class(0), mpz_class(7)).denominator(), 1);
    EXPECT_EQ(rational(mpz_class(6), mpz_class(2)).str(), "3");
    EXPECT_TRUE(rational(mpz_class(6), mpz_class(2)).is_integer());
}

TEST(Rational, CanonicalFormRandomized) {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long> dist(-4000, 4000);
    for (int i = 0; i < 2000; ++i) {
        long p = dist(rng);
        long q = dist(rng);
        if (q == 0) continue;
        rational v{mpz_class(p), mpz_class(q)};
        EXPECT_GT(v.denominator(), 0);
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), v.numerator().get_mpz_t(), v.denominator().get_mpz_t());
        EXPECT_EQ(g, 1);
        // value preserved: v.num * q == p * v.den
        EXPECT_EQ(v.numerator() * q, v.denominator() * p);
    }
}

TEST(Rational, StructuralEquality) {
    EXPECT_EQ(rational(mpz_class(1), mpz_class(2)), rational(mpz_class(2), mpz_class(4)));
    EXPECT_EQ(rational(mpz_class(5), mpz_class(6)) + rational(mpz_class(1), mpz_class(6)),
              rational(1));
    EXPECT_NE(rational(1), rational(2));
    EXPECT_LT(rational(mpz_class(1), mpz_class(3)), rational(mpz_class(1), mpz_class(2)));
    EXPECT_LT(rational(mpz_class(-1), mpz_class(2)), rational(mpz_class(1), mpz_class(3)));
    EXPECT_GE(rational(3), rational(3));
}

TEST(Rational, Arithmetic) {
    const rational x(mpz_class(3), mpz_class(5));
    EXPECT_EQ((x * x).str(), "9/25");
    EXPECT_EQ((x * x + rational(1)).str(), "34/25");
    EXPECT_EQ((x * x + x).str(), "24/25");
    EXPECT_EQ((-rational(mpz_class(3), mpz_class(8)) - rational(mpz_class(1), mpz_class(16))).str(),
              "-7/16");
    EXPECT_EQ((rational(7) / rational(mpz_class(-14), mpz_class(6))).str(), "-3");
}

TEST(Rational, FieldAxiomsRandomized) {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 500; ++i) {
        const rational x = testutil::rnd_rational(rng, 50, 20);
        const rational y = testutil::rnd_rational(rng, 50, 20);
        const rational z = testutil::rnd_rational(rng, 50, 20);
        EXPECT_EQ((x + y) + z, x + (y + z));
        EXPECT_EQ(x * (y + z), x * y + x * z);
        EXPECT_EQ(x + y, y + x);
        EXPECT_EQ(x - x, rational(0));
        if (!y.is_zero()) {
            EXPECT_EQ((x / y) * y, x);
        }
    }
}

TEST(Rational, DivisionByZeroThrows) {
    EXPECT_THROW(rational(1) / rational(0), std::domain_error);
    EXPECT_THROW(rational(mpz_class(1), mpz_class(0)), std::invalid_argument);
}

TEST(Rational, Pow) {
    EXPECT_EQ(pow(rational(mpz_class(3), mpz_class(2)), 3).str(), "27/8");
    EXPECT_EQ(pow(rational(2), -3).str(), "1/8");
    EXPECT_EQ(pow(rational(mpz_class(-2), mpz_class(3)), -2).str(), "9/4");
    EXPECT_EQ(pow(rational(mpz_class(-1), mpz_class(2)), 3).str(), "-1/8");
    EXPECT_EQ(pow(rational(mpz_class(-1), mpz_class(2)), -3).str(), "-8");
    EXPECT_EQ(pow(rational(0), 5), rational(0));
    EXPECT_EQ(pow(rational(0), 0), rational(1));
    EXPECT_EQ(pow(rational(7), 0), rational(1));
    EXPECT_THROW(pow(rational(0), -1), std::domain_error);
}

TEST(Rational, PowMatchesRepeatedMultiplication) {
    std::mt19937_64 rng(13);
    for (int i = 0; i < 200; ++i) {
        const rational x = testutil::rnd_nonzero_rational(rng);
        std::uniform_int_distribution<int> exp(-12, 12);
        const int e = exp(rng);
        EXPECT_EQ(pow(x, e), testutil::opow(x, e));
    }
}

TEST(Rational, ParseAndFormat) {
    EXPECT_EQ(rational::parse("21").str(), "21");
    EXPECT_EQ(rational::parse("-7/4").str(), "-7/4");
    EXPECT_EQ(rational::parse("3/6").str(), "1/2");
    EXPECT_EQ(rational::parse(" 5/3 ").str(), "5/3");
    EXPECT_EQ(rational::parse("010").str(), "10");
    EXPECT_EQ(rational::parse("-0").str(), "0");
    EXPECT_THROW(rational::parse(""), std::invalid_argument);
    EXPECT_THROW(rational::parse("abc"), std::invalid_argument);
    EXPECT_THROW(rational::parse("1.5"), std::invalid_argument);
    EXPECT_THROW(rational::parse("1/0"), std::invalid_argument);
    EXPECT_THROW(rational::parse("1/2/3"), std::invalid_argument);
}

TEST(Rational, ParseRoundTripRandomized) {
    std::mt19937_64 rng(17);
    for (int i = 0; i < 500; ++i) {
        const rational v = testutil::rnd_rational(rng, 100000, 99);
        EXPECT_EQ(rational::parse(v.str()), v);
    }
}

TEST(Rational, ToInt64) {
    EXPECT_EQ(useq::to_int64(rational(42)), 42);
    EXPECT_EQ(useq::to_int64(rational(-3)), -3);
    EXPECT_FALSE(useq::to_int64(rational(mpz_class(1), mpz_class(2))).has_value());
    mpz_class huge;
    mpz_ui_pow_ui(huge.get_mpz_t(), 2, 80);
    EXPECT_FALSE(useq::to_int64(rational(huge)).has_value());
}

TEST(Rational, StreamOutput) {
    std::ostringstream os;
    os << rational(mpz_class(-3), mpz_class(9));
    EXPECT_EQ(os.str(), "-1/3");
}
