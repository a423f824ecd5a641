#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "zxw/gadgets.hpp"
#include "zxw/sample.hpp"
#include "zxw/semantics.hpp"
#include "zxw/translate.hpp"

using namespace zxw;
using cd = std::complex<double>;

namespace {

FloatMatrix unit_triangle(cd r)
{
    FloatMatrix m(2, 2);
    m << 1, r, 0, 1;
    return m;
}

cd scalar_of(const Diagram& d) { return interp_float(d)(0, 0); }

} // namespace

TEST(Translate, ZxGeneratorsRoundTripExactly)
{
    std::vector<Diagram> ds = {empty(), identity(1), had(), cup(), cap(), swap(),
                               xsp(Phase::pi4(1), 1, 2), xsp(Phase::pi4(5), 2, 1), zsp(Phase::pi4(3), 0, 0)};
    for (int k = 0; k < 8; ++k)
        ds.push_back(zsp(Phase::pi4(k), 1, 1));
    for (const auto& d : ds) {
        Diagram w = zx_to_zw(d);
        EXPECT_EQ(w.calculus(), Calculus::ZW);
        EXPECT_EQ(w.inputs(), d.inputs() + kRegister);
        EXPECT_EQ(w.outputs(), d.outputs() + kRegister);
        EXPECT_TRUE(exact_equal(interp_exact(round_trip(d)), interp_exact(d)));
    }
}

TEST(Translate, RandomDiagramsRoundTrip)
{
    std::mt19937_64 rng(21);
    for (int i = 0; i < 10; ++i) {
        SampleOptions o;
        o.inputs = i % 3;
        o.generators = 5;
        Diagram d = random_diagram(Calculus::ZX, o, rng);
        EXPECT_TRUE(exact_equal(interp_exact(round_trip(d)), interp_exact(d))) << i;
    }
}

TEST(Translate, ZwGeneratorsToZx)
{
    std::vector<Diagram> ds = {black_not(), black_w(), white_sign(), white_merge(), zw_cross(), half(),
                               white(Param(Cyclo::omega_pow(1)), 1, 2), white(Param(0), 2, 1),
                               white(Param(cd(0.3, 2.1)), 1, 1)};
    for (const auto& d : ds) {
        Diagram x = zw_to_zx(d);
        EXPECT_NE(x.calculus(), Calculus::ZW);
        EXPECT_TRUE(approx_equal(interp_float(x), interp_float(d)));
        Diagram t = zw_to_zx(d, true);
        EXPECT_TRUE(approx_equal(interp_float(t), interp_float(d)));
    }
}

TEST(Translate, GnInverseOnGridIsExact)
{
    for (int k = 0; k < 8; ++k) {
        if (k == 4) continue;
        GnInverse g = gn_inverse(Phase::pi4(k));
        ASSERT_TRUE(exact_eligible(g.diagram));
        EXPECT_EQ(interp_exact(tensor(g.diagram, zsp(Phase::pi4(k), 0, 0)))(0, 0), Cyclo(1)) << k;
    }
    EXPECT_THROW(gn_inverse(Phase::pi(1)), std::domain_error);
}

TEST(Translate, GnInverseOffGrid)
{
    for (double a : {0.1, 1.0, 2.5, -3.0, 3.1}) {
        GnInverse g = gn_inverse(Phase::radians(a));
        cd v = scalar_of(g.diagram) * (1.0 + std::polar(1.0, a));
        EXPECT_NEAR(std::abs(v - 1.0), 0.0, 1e-12) << a;
    }
}

TEST(Translate, EncodingsReconstruct)
{
    cd r(1.5, -0.7);
    ParamEncoding e = encode_param(r);
    cd back = std::ldexp(1.0, e.n) * std::cos(e.beta) * std::polar(1.0, e.theta);
    EXPECT_NEAR(std::abs(back - r), 0.0, 1e-12);

    cd r1(0.3, 1.0), r2(-2.0, 0.5);
    SumEncoding s = encode_sum(r1, r2);
    cd sum = std::ldexp(1.0, s.n) * std::polar(1.0, s.theta3) * std::cos(s.lambda);
    EXPECT_NEAR(std::abs(sum - (r1 + r2)), 0.0, 1e-12);
    Diagram w = white_from_sum(s, 1, 1);
    EXPECT_TRUE(approx_equal(interp_float(w), interp_float(white(Param(r1 + r2), 1, 1)), 1e-9));
}

TEST(Translate, TriangleExpansion)
{
    EXPECT_TRUE(approx_equal(interp_float(triangle(Param(cd(0.5, 2)))), unit_triangle(cd(0.5, 2))));
    Cyclo s2 = Cyclo::sqrt2();
    for (Param r : {Param(0), Param(1), Param(s2 - Cyclo(1)), Param(Cyclo::omega_pow(3) * (s2 + Cyclo(1)))}) {
        Diagram e = expand_triangle(triangle(r), true);
        EXPECT_TRUE(exact_eligible(e));
        EXPECT_TRUE(exact_equal(interp_exact(e), interp_exact(triangle(r))));
    }
    Param f(cd(1.5, -0.7));
    Diagram e = expand_triangle(triangle(f));
    EXPECT_TRUE(approx_equal(interp_float(e), unit_triangle(f.value())));
    EXPECT_THROW(expand_triangle(triangle(f), true), std::domain_error);
    EXPECT_EQ(expand_triangle(triangle(Param(0))).calculus(), Calculus::ZX);
}

TEST(Translate, TriangleTdForm)
{
    double a = 0.4, t = 1.1;
    Diagram td = gadget::triangle_td(Phase::radians(2 * a), Phase::radians(t));
    FloatMatrix want = unit_triangle(std::polar(std::tan(a), t)) * (2.0 * std::polar(1.0, a) * std::cos(a));
    EXPECT_TRUE(approx_equal(interp_float(td), want));
}

TEST(Translate, ParallelTriangles)
{
    auto [l, r] = parallel_triangles(Param(cd(0.3, 1)), Param(cd(-2, 0.5)));
    EXPECT_TRUE(approx_equal(interp_float(l), interp_float(r)));
    auto [le, re] = parallel_triangles(Param(1), Param(Cyclo::omega_pow(2)));
    EXPECT_TRUE(exact_equal(interp_exact(le), interp_exact(re)));
}

TEST(Translate, SplitTriangle)
{
    cd s(3.3, -1.2);
    TriangleSplit sp = split_triangle(s);
    EXPECT_GE(sp.n, 1);
    EXPECT_TRUE(approx_equal(interp_float(sp.chain), unit_triangle(s)));
}
