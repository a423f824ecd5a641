#include <gtest/gtest.h>

#include "zxw/axioms.hpp"

using namespace zxw;

namespace {

Budget small_budget()
{
    Budget b;
    b.max_exact = 48;
    b.float_samples = 16;
    return b;
}

} // namespace

class AxiomSets : public ::testing::TestWithParam<std::string> {};

TEST_P(AxiomSets, SoundUnderSmallBudget)
{
    Report r = verify_soundness(axiom_set(GetParam()), small_budget(), 3);
    EXPECT_EQ(r.set, GetParam());
    EXPECT_FALSE(r.rules.empty());
    for (const auto& rr : r.rules) {
        EXPECT_TRUE(rr.pass()) << rr.rule << ": " << (rr.failures.empty() ? "" : rr.failures[0].binding);
        EXPECT_GT(rr.instances(), 0) << rr.rule;
    }
    EXPECT_TRUE(r.pass());
}

INSTANTIATE_TEST_SUITE_P(All, AxiomSets, ::testing::ValuesIn(axiom_set_names()),
                         [](const auto& info) {
                             std::string s = info.param;
                             for (char& c : s)
                                 if (c == '-') c = '_';
                             return s;
                         });

TEST(Axioms, MutationsAreCaught)
{
    auto ms = mutations();
    ASSERT_GE(ms.size(), 10u);
    for (const auto& m : ms) {
        RuleReport r = verify_rule(m, small_budget(), 3);
        EXPECT_FALSE(r.pass()) << m.name;
        ASSERT_FALSE(r.failures.empty()) << m.name;
        EXPECT_GT(r.failure_count, 0) << m.name;
    }
}

TEST(Axioms, LookupByAlias)
{
    AxiomSet s = axiom_set("zx-pi4");
    ASSERT_NE(s.find("CP"), nullptr);
    EXPECT_EQ(s.find("CP")->name, "B1");
    EXPECT_EQ(s.find("nope"), nullptr);
    EXPECT_THROW(axiom_set("zx-pi8"), std::invalid_argument);
    EXPECT_NE(axiom_set("zx-t").find("TD"), nullptr);
    EXPECT_EQ(axiom_set("zx-pi4").find("TD"), nullptr);
}

TEST(Axioms, InstantiateChecksBindings)
{
    AxiomSet s = axiom_set("zx-pi4");
    const Rule* k = s.find("K");
    ASSERT_NE(k, nullptr);
    Binding b;
    b.arity = {{"n", 1}, {"m", 1}};
    b.angle = {{"a", Phase::pi4(1)}};
    auto [l, r] = instantiate(*k, b);
    EXPECT_EQ(l.inputs(), r.inputs());
    EXPECT_EQ(l.outputs(), r.outputs());

    Binding big = b;
    big.arity["n"] = 9;
    EXPECT_THROW(instantiate(*k, big), std::invalid_argument);
    Binding missing;
    EXPECT_THROW(instantiate(*k, missing), std::invalid_argument);
    Binding open = b;
    open.angle["a"] = Phase::var("x");
    EXPECT_THROW(instantiate(*k, open), std::invalid_argument);

    const Rule* b1 = s.find("B1");
    Binding off;
    off.angle = {{"a", Phase::pi4(1)}};
    EXPECT_THROW(instantiate(*b1, off), std::invalid_argument);
}

TEST(Axioms, ContinuousRulesSampleFloats)
{
    AxiomSet s = axiom_set("zx-t");
    const Rule* ta = s.find("TA");
    ASSERT_NE(ta, nullptr);
    RuleReport r = verify_rule(*ta, small_budget(), 5);
    EXPECT_TRUE(r.pass());
    EXPECT_GT(r.float_instances, 0);
}
