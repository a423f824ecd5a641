#include <gtest/gtest.h>

#include <random>

#include "golden.hpp"
#include "zxw/sample.hpp"
#include "zxw/semantics.hpp"

using namespace zxw;

TEST(Semantics, GoldenGeneratorMatrices)
{
    auto gs = gold::load_golden(gold::source_path("tests/golden/generators.json"));
    ASSERT_GE(gs.size(), 15u);
    for (const auto& g : gs) {
        ExactMatrix m = interp_exact(g.diagram);
        EXPECT_TRUE(exact_equal(m, g.matrix)) << g.name;
        EXPECT_TRUE(approx_equal(interp_float(g.diagram), to_float(g.matrix), 1e-12)) << g.name;
    }
}

TEST(Semantics, HadamardIsSelfInverse)
{
    EXPECT_TRUE(eq_semantic(compose(had(), had()), identity(1), InterpMode::exact()));
}

TEST(Semantics, SpiderFusionAddsPhases)
{
    Diagram d = compose(zsp(Phase::pi4(1), 1, 1), zsp(Phase::pi4(1), 1, 1));
    ExactMatrix m = interp_exact(d);
    EXPECT_EQ(m(0, 0), Cyclo(1));
    EXPECT_EQ(m(1, 1), Cyclo::omega_pow(2));
    EXPECT_TRUE(m(0, 1).is_zero());
}

TEST(Semantics, ScalarsAndLoops)
{
    EXPECT_EQ(interp_exact(compose(cup(), cap()))(0, 0), Cyclo(2));
    EXPECT_EQ(interp_exact(zsp(Phase::pi(1), 0, 0))(0, 0), Cyclo(0));
    EXPECT_EQ(interp_exact(empty())(0, 0), Cyclo(1));
}

TEST(Semantics, ExactEligibility)
{
    EXPECT_TRUE(exact_eligible(zsp(Phase::pi4(3), 1, 1)));
    EXPECT_FALSE(exact_eligible(zsp(Phase::pi(1, 8), 1, 1)));
    EXPECT_FALSE(exact_eligible(zsp(Phase::var("a"), 1, 1)));
    EXPECT_FALSE(exact_eligible(white(Param(std::complex<double>(0.1, 0.2)), 1, 1)));
    EXPECT_THROW(interp_exact(zsp(Phase::pi(1, 8), 1, 1)), std::invalid_argument);
}

TEST(Semantics, FloatMatchesExactOnRandomDiagrams)
{
    std::mt19937_64 rng(11);
    for (int i = 0; i < 40; ++i) {
        SampleOptions o;
        o.inputs = i % 3;
        o.generators = 10;
        Diagram d = random_diagram(i % 2 ? Calculus::ZX : Calculus::ZW, o, rng);
        EXPECT_TRUE(approx_equal(interp_float(d), to_float(interp_exact(d)), 1e-9));
    }
}

TEST(Semantics, LinearEquality)
{
    Phase a = Phase::var("a");
    auto lc = eq_linear(compose(zsp(-a, 1, 1), zsp(a, 1, 1)), identity(1), 32, 5);
    EXPECT_TRUE(lc.equal);
    EXPECT_GT(lc.exact_valuations + lc.float_valuations, 0);
    auto bad = eq_linear(zsp(a, 1, 1), identity(1), 32, 5);
    ASSERT_FALSE(bad.equal);
    ASSERT_TRUE(bad.witness.has_value());
    EXPECT_FALSE(eq_semantic(substitute(zsp(a, 1, 1), *bad.witness), identity(1), InterpMode::floating()));
}
