#include <gtest/gtest.h>

#include <random>

#include "zxw/gadgets.hpp"
#include "zxw/rewrite.hpp"
#include "zxw/sample.hpp"
#include "zxw/semantics.hpp"

using namespace zxw;

namespace {

bool same(const Diagram& a, const Diagram& b) { return exact_equal(interp_exact(a), interp_exact(b)); }

} // namespace

TEST(Rewrite, FusionFindsAdjacentSpiders)
{
    Diagram d = compose(zsp(Phase::pi4(1), 1, 1), zsp(Phase::pi4(1), 1, 1));
    Schema s = schema("fusion");
    auto locs = find(s, d);
    ASSERT_EQ(locs.size(), 1u);
    Diagram e = apply(s, d, locs[0]);
    EXPECT_EQ(e.node_count(), 1u);
    EXPECT_EQ(e.nodes()[0].phase, Phase::pi4(2));
    EXPECT_TRUE(same(e, d));
}

TEST(Rewrite, FusionIgnoresDifferentColours)
{
    Diagram d = compose(xsp(Phase(), 1, 1), zsp(Phase(), 1, 1));
    EXPECT_TRUE(find(schema("fusion"), d).empty());
    Diagram xs = seq_all({xsp(Phase::pi4(1), 1, 2), tensor(xsp(Phase(), 1, 1), xsp(Phase::pi4(2), 1, 1)),
                          xsp(Phase(), 2, 1)});
    Simplified r = simplify(xs);
    EXPECT_TRUE(same(r.diagram, xs));
    EXPECT_LT(r.diagram.node_count(), xs.node_count());
}

TEST(Rewrite, IdentityChainCollapsesToWire)
{
    Diagram d = seq_all(std::vector<Diagram>(5, zsp(Phase(), 1, 1)));
    Simplified r = simplify(d);
    EXPECT_EQ(r.diagram.node_count(), 0u);
    EXPECT_TRUE(iso_equal(r.diagram, identity(1)));
    EXPECT_FALSE(r.trace.empty());
}

TEST(Rewrite, HadamardPairRemoved)
{
    Diagram d = compose(had(), had());
    Schema s = schema("hh");
    auto locs = find(s, d);
    ASSERT_EQ(locs.size(), 1u);
    Diagram e = apply(s, d, locs[0]);
    EXPECT_EQ(e.node_count(), 0u);
    EXPECT_TRUE(same(e, d));
}

TEST(Rewrite, StaleLocationRejected)
{
    Diagram d = compose(had(), had());
    Schema s = schema("hh");
    auto locs = find(s, d);
    Diagram e = apply(s, d, locs[0]);
    EXPECT_THROW(apply(s, e, locs[0]), std::invalid_argument);
    EXPECT_THROW(apply(schema("fusion"), d, locs[0]), std::invalid_argument);
}

TEST(Rewrite, HopfPair)
{
    Diagram d = compose(xsp(Phase(), 2, 0), zsp(Phase(), 0, 2));
    EXPECT_FALSE(find(schema("hopf"), d).empty());
    Simplified r = simplify(d);
    EXPECT_TRUE(same(r.diagram, d));
    EXPECT_LT(r.diagram.node_count(), d.node_count());
}

TEST(Rewrite, ColourChangeSound)
{
    Diagram d = seq_all({zsp(Phase::pi4(3), 1, 2), tensor(xsp(Phase::pi4(1), 1, 1), had())});
    Schema s = schema("color-change");
    auto locs = find(s, d);
    ASSERT_FALSE(locs.empty());
    for (const auto& l : locs)
        EXPECT_TRUE(same(apply(s, d, l), d));
}

TEST(Rewrite, MinimalDiagramHasEmptyTrace)
{
    Simplified r = simplify(zsp(Phase::pi4(1), 1, 2));
    EXPECT_TRUE(r.trace.empty());
    EXPECT_FALSE(r.fuel_exhausted);
    Simplified e = simplify(empty());
    EXPECT_TRUE(e.trace.empty());
}

TEST(Rewrite, ScalarsMerge)
{
    // (1 + i)(1 - i) = 2
    Diagram d = tensor_all({zsp(Phase::pi4(2), 0, 0), zsp(Phase::pi4(6), 0, 0), identity(1)}, Calculus::ZX);
    Simplified r = simplify(d);
    EXPECT_TRUE(same(r.diagram, d));
    EXPECT_LT(r.diagram.node_count(), d.node_count());
}

TEST(Rewrite, FuelLimitsSteps)
{
    Diagram d = seq_all(std::vector<Diagram>(6, zsp(Phase(), 1, 1)));
    Simplified r = simplify(d, default_strategy(), 2);
    EXPECT_TRUE(r.fuel_exhausted);
    EXPECT_EQ(r.trace.size(), 2u);
    EXPECT_TRUE(same(r.diagram, d));
}

TEST(Rewrite, RandomDiagramsPreserveSemantics)
{
    std::mt19937_64 rng(12);
    for (int i = 0; i < 60; ++i) {
        SampleOptions o;
        o.inputs = 1 + i % 2;
        o.generators = 12;
        Diagram d = random_diagram(Calculus::ZX, o, rng);
        for (const auto& name : schema_names()) {
            Schema s = schema(name);
            for (const auto& l : find(s, d))
                ASSERT_TRUE(same(apply(s, d, l), d)) << name << " on sample " << i;
        }
        Simplified r = simplify(d);
        EXPECT_TRUE(same(r.diagram, d)) << i;
        EXPECT_LE(r.diagram.node_count(), d.node_count());
    }
}

TEST(Rewrite, ReplaceSubgraph)
{
    Diagram d = seq_all({zsp(Phase::pi4(1), 1, 1), zsp(Phase::pi4(2), 1, 1)});
    // both spiders replaced by one state-shaped cup
    Diagram rep = zsp(Phase::pi4(3), 0, 2);
    std::vector<End> legs;
    for (const auto& [a, b] : d.edges()) {
        if (!a.is_port() && b.is_port()) legs.push_back(b);
        if (a.is_port() && !b.is_port()) legs.push_back(a);
    }
    ASSERT_EQ(legs.size(), 2u);
    Diagram e = replace_subgraph(d, {0, 1}, legs, rep);
    EXPECT_EQ(e.node_count(), 1u);
    EXPECT_TRUE(same(e, zsp(Phase::pi4(3), 1, 1)));
    EXPECT_THROW(schema("nope"), std::invalid_argument);
}
