#include <gtest/gtest.h>

#include "zxw/ring.hpp"

using namespace zxw;

TEST(Dyadic, NormalizesOddNumerator)
{
    Dyadic a(BigInt(6), 3); // 6/8 = 3/4
    EXPECT_EQ(a.numerator(), BigInt(3));
    EXPECT_EQ(a.exponent(), 2);
    EXPECT_EQ(Dyadic(BigInt(8), 3), Dyadic(1));
}

TEST(Dyadic, ArithmeticIsExact)
{
    Dyadic half(BigInt(1), 1);
    EXPECT_EQ(half + half, Dyadic(1));
    EXPECT_EQ(half * Dyadic(2), Dyadic(1));
    EXPECT_EQ(Dyadic(3) - Dyadic(5), Dyadic(-2));
    EXPECT_TRUE((half - half).is_zero());
    EXPECT_DOUBLE_EQ(Dyadic(BigInt(-3), 2).to_double(), -0.75);
}

TEST(Dyadic, ParseAndPrint)
{
    EXPECT_EQ(Dyadic::parse("3/2^2"), Dyadic(BigInt(3), 2));
    EXPECT_EQ(Dyadic::parse("-7"), Dyadic(-7));
    EXPECT_EQ(Dyadic(BigInt(3), 2).str(), "3/2^2");
    EXPECT_THROW(Dyadic::parse("1/3"), std::invalid_argument);
    EXPECT_THROW(Dyadic::parse("x"), std::invalid_argument);
}

TEST(Dyadic, LargeNumeratorsStayExact)
{
    Dyadic x(1);
    for (int i = 0; i < 200; ++i)
        x = x * Dyadic(3);
    Dyadic y = x;
    for (int i = 0; i < 200; ++i)
        y = y * Dyadic(BigInt(1), 1);
    EXPECT_EQ(y.exponent(), 200);
    EXPECT_EQ(y.scaled(200), x);
}

TEST(Cyclo, OmegaHasOrderEight)
{
    Cyclo w = Cyclo::omega_pow(1);
    Cyclo p(1);
    for (int k = 0; k < 8; ++k)
        p = p * w;
    EXPECT_EQ(p, Cyclo(1));
    EXPECT_EQ(Cyclo::omega_pow(4), Cyclo(-1));
    EXPECT_EQ(Cyclo::omega_pow(-1), Cyclo::omega_pow(7));
}

TEST(Cyclo, SqrtTwo)
{
    EXPECT_EQ(Cyclo::sqrt2() * Cyclo::sqrt2(), Cyclo(2));
    EXPECT_EQ(Cyclo::sqrt2() * Cyclo::inv_sqrt2(), Cyclo(1));
    EXPECT_EQ(Cyclo::sqrt2(), Cyclo::omega_pow(1) - Cyclo::omega_pow(3));
    EXPECT_NEAR(Cyclo::inv_sqrt2().to_complex().real(), 1 / std::sqrt(2.0), 1e-15);
}

TEST(Cyclo, ConjugateAndComplexValue)
{
    Cyclo z = Cyclo(Dyadic(1), Dyadic(BigInt(1), 1), Dyadic(-2), Dyadic(3));
    std::complex<double> v = z.to_complex();
    EXPECT_NEAR(std::abs(z.conj().to_complex() - std::conj(v)), 0.0, 1e-14);
    Cyclo n = z * z.conj();
    EXPECT_NEAR(n.to_complex().imag(), 0.0, 1e-14);
    EXPECT_NEAR(n.to_complex().real(), std::norm(v), 1e-12);
}

TEST(Matrices, KronAndEquality)
{
    ExactMatrix a(1, 2), b(2, 1);
    a << Cyclo(1), Cyclo::omega_pow(2);
    b << Cyclo(2), Cyclo(-1);
    ExactMatrix k = kron<Cyclo>(a, b);
    ASSERT_EQ(k.rows(), 2);
    ASSERT_EQ(k.cols(), 2);
    EXPECT_EQ(k(1, 1), Cyclo::omega_pow(6));
    EXPECT_TRUE(exact_equal(k, k));
    EXPECT_TRUE(approx_equal(to_float(k), to_float(k)));
}
