#include <gtest/gtest.h>

#include <cmath>

#include "zxw/dsl.hpp"
#include "zxw/phase.hpp"

using namespace zxw;

TEST(Phase, ReducedModTwoPi)
{
    EXPECT_EQ(Phase::pi(9, 4), Phase::pi4(1));
    EXPECT_EQ(Phase::pi(-1, 4), Phase::pi4(7));
    EXPECT_EQ(Phase::pi(2, 1), Phase());
    EXPECT_TRUE(Phase::pi(4, 2).is_zero());
    EXPECT_EQ(Phase::pi(2, 4), Phase::pi(1, 2));
}

TEST(Phase, Pi4Multiple)
{
    EXPECT_EQ(Phase::pi(3, 4).pi4_multiple(), 3);
    EXPECT_EQ(Phase::pi(1, 2).pi4_multiple(), 2);
    EXPECT_FALSE(Phase::pi(1, 8).pi4_multiple().has_value());
    EXPECT_FALSE(Phase::radians(0.3).pi4_multiple().has_value());
    EXPECT_FALSE(Phase::var("a").pi4_multiple().has_value());
}

TEST(Phase, AffineArithmetic)
{
    Phase a = Phase::var("a"), b = Phase::var("b");
    Phase p = a * 2 - b + Phase::pi4(1);
    EXPECT_EQ(p.coeffs().at("a"), 2);
    EXPECT_EQ(p.coeffs().at("b"), -1);
    EXPECT_TRUE((a - a).is_zero());
    Valuation v{{"a", Phase::pi4(1)}, {"b", Phase::pi4(2)}};
    EXPECT_EQ(p.substitute(v), Phase::pi4(1));
}

TEST(Phase, FloatAndExactMix)
{
    Phase p = Phase::radians(0.5) + Phase::pi(1);
    EXPECT_FALSE(p.is_exact());
    EXPECT_NEAR(p.to_radians(), 0.5 + M_PI, 1e-12);
}

TEST(Phase, TextRoundTrip)
{
    for (const Phase& p : {Phase::pi4(3), Phase::pi(1, 8), Phase(), Phase::radians(1.25), Phase::var("x") * 3 - Phase::pi(1, 2),
                           Phase::var("alpha") + Phase::var("b")}) {
        EXPECT_EQ(parse_phase(p.str()), p) << p.str();
    }
    EXPECT_EQ(parse_phase("3*pi/4"), Phase::pi4(3));
    EXPECT_EQ(parse_phase("-pi/4"), Phase::pi4(7));
    EXPECT_EQ(parse_phase("pi"), Phase::pi(1));
    EXPECT_EQ(parse_phase("a+pi/2"), Phase::var("a") + Phase::pi(1, 2));
    EXPECT_THROW(parse_phase("pi/0"), std::invalid_argument);
    EXPECT_THROW(parse_phase("3**pi"), std::invalid_argument);
    EXPECT_THROW(parse_phase(""), std::invalid_argument);
}
