#include <gtest/gtest.h>

#include "zxw/diagram.hpp"
#include "zxw/semantics.hpp"

using namespace zxw;

TEST(Diagram, ComposeAndTensorArity)
{
    Diagram d = compose(zsp(Phase(), 2, 1), tensor(had(), identity(1)));
    EXPECT_EQ(d.inputs(), 2);
    EXPECT_EQ(d.outputs(), 1);
    EXPECT_EQ(d.node_count(), 2u);
    EXPECT_THROW(compose(zsp(Phase(), 2, 1), had()), std::invalid_argument);
}

TEST(Diagram, ValidateRejectsDanglingPorts)
{
    Diagram d(Calculus::ZX, 1, 1);
    int z = d.add_node(make_node(Kind::Z, 1, 1));
    d.connect(End::in(0), End::at(z, 0));
    EXPECT_THROW(d.validate(), std::invalid_argument);
    d.connect(End::at(z, 1), End::out(0));
    EXPECT_NO_THROW(d.validate());
    d.connect(End::at(z, 1), End::out(0));
    EXPECT_THROW(d.validate(), std::invalid_argument);
}

TEST(Diagram, CalculusAdmissibility)
{
    EXPECT_TRUE(admissible(Calculus::ZX, Kind::H));
    EXPECT_FALSE(admissible(Calculus::ZX, Kind::Half));
    EXPECT_FALSE(admissible(Calculus::ZW, Kind::Z));
    EXPECT_TRUE(admissible(Calculus::ZXT, Kind::Triangle));
    EXPECT_THROW(tensor(had(), half()), std::invalid_argument);
    // ZX lifts into ZX_T
    EXPECT_EQ(tensor(had(), triangle()).calculus(), Calculus::ZXT);
}

TEST(Diagram, IsoEqualIgnoresNodeOrder)
{
    Diagram a = compose(xsp(Phase::pi4(1), 1, 1), zsp(Phase::pi4(2), 1, 1));
    Diagram b(Calculus::ZX, 1, 1);
    Node x = make_node(Kind::X, 1, 1);
    x.phase = Phase::pi4(1);
    Node z = make_node(Kind::Z, 1, 1);
    z.phase = Phase::pi4(2);
    int ix = b.add_node(x), iz = b.add_node(z);
    b.connect(End::at(ix, 1), End::out(0));
    b.connect(End::in(0), End::at(iz, 0));
    b.connect(End::at(iz, 1), End::at(ix, 0));
    EXPECT_TRUE(iso_equal(a, b));
    EXPECT_FALSE(iso_equal(a, compose(zsp(Phase::pi4(2), 1, 1), xsp(Phase::pi4(1), 1, 1))));
}

TEST(Diagram, FlipTransposes)
{
    Diagram d = seq_all({zsp(Phase::pi4(1), 1, 2), tensor(had(), xsp(Phase::pi4(3), 1, 1))});
    Diagram f = flipped(d);
    EXPECT_EQ(f.inputs(), 2);
    EXPECT_EQ(f.outputs(), 1);
    EXPECT_TRUE(exact_equal(interp_exact(f), interp_exact(d).transpose()));
}

TEST(Diagram, ColorSwapConjugatesByHadamard)
{
    Diagram d = zsp(Phase::pi4(3), 1, 2);
    Diagram h = seq_all({had(), color_swapped(d), tensor(had(), had())});
    EXPECT_TRUE(eq_semantic(h, d, InterpMode::exact()));
}

TEST(Diagram, PermuteOutputs)
{
    Diagram d = tensor(zsp(Phase(), 0, 1), xsp(Phase(), 0, 1));
    Diagram p = permute_outputs(d, {1, 0});
    EXPECT_TRUE(eq_semantic(p, compose(swap(), d), InterpMode::exact()));
}

TEST(Diagram, FreeVariablesAndSubstitution)
{
    Diagram d = compose(zsp(Phase::var("a"), 1, 1), zsp(Phase::var("b") * 2, 1, 1));
    EXPECT_EQ(d.free_variables(), (std::set<std::string>{"a", "b"}));
    EXPECT_FALSE(d.is_pi4_exact());
    Diagram s = substitute(d, {{"a", Phase::pi4(1)}, {"b", Phase::pi4(3)}});
    EXPECT_TRUE(s.free_variables().empty());
    EXPECT_TRUE(eq_semantic(s, zsp(Phase::pi4(7), 1, 1), InterpMode::exact()));
}

namespace {

// zw-cross with every incident wire moved to the image of its port
Diagram cross_with_ports(const int (&to)[4])
{
    Diagram d(Calculus::ZW, 2, 2);
    int c = d.add_node(make_node(Kind::ZWCross));
    d.connect(End::in(0), End::at(c, to[0]));
    d.connect(End::in(1), End::at(c, to[1]));
    d.connect(End::at(c, to[2]), End::out(0));
    d.connect(End::at(c, to[3]), End::out(1));
    return d;
}

} // namespace

TEST(Diagram, CrossInvariantUnderCyclicRotationOnly)
{
    const int id[4] = {0, 1, 2, 3};
    // around the node: in0, in1, out1, out0
    const int rot[4] = {1, 3, 0, 2};
    const int flip[4] = {1, 0, 2, 3};
    Diagram a = cross_with_ports(id);
    EXPECT_TRUE(iso_equal(a, zw_cross()));
    EXPECT_TRUE(iso_equal(a, cross_with_ports(rot)));
    EXPECT_TRUE(eq_semantic(a, cross_with_ports(rot), InterpMode::exact()));
    EXPECT_FALSE(iso_equal(a, cross_with_ports(flip)));
}
