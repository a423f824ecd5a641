#include <gtest/gtest.h>

#include <random>

#include "golden.hpp"
#include "zxw/dsl.hpp"
#include "zxw/json_io.hpp"
#include "zxw/proof.hpp"
#include "zxw/sample.hpp"
#include "zxw/semantics.hpp"
#include "zxw/translate.hpp"

using namespace zxw;

TEST(Dsl, ParsesCombinators)
{
    Diagram d = parse_diagram("(seq (Z 1 1 pi/4) (Z 1 1 pi/4))");
    EXPECT_TRUE(eq_semantic(d, zsp(Phase::pi4(2), 1, 1), InterpMode::exact()));
    Diagram t = parse_diagram("(ten id id)");
    EXPECT_EQ(t.inputs(), 2);
    EXPECT_EQ(t.outputs(), 2);
    EXPECT_EQ(parse_diagram("(seq cap cup)").inputs(), 0);
    EXPECT_EQ(parse_diagram("(seq cup cap)").inputs(), 2);
    EXPECT_EQ(parse_diagram("(id 3)").outputs(), 3);
    EXPECT_EQ(parse_diagram("empty").node_count(), 0u);
}

TEST(Dsl, InfersCalculus)
{
    EXPECT_EQ(parse_diagram("(Z 1 1 pi)").calculus(), Calculus::ZX);
    EXPECT_EQ(parse_diagram("(W 1 2)").calculus(), Calculus::ZW);
    EXPECT_EQ(parse_diagram("(ten H (tri 1))").calculus(), Calculus::ZXT);
    EXPECT_EQ(parse_diagram("swap", Calculus::ZW).calculus(), Calculus::ZW);
    EXPECT_EQ(parse_diagram("(zw swap)", Calculus::ZX).calculus(), Calculus::ZW);
    EXPECT_THROW(parse_diagram("(ten H (W 1 2))"), ParseError);
}

TEST(Dsl, PhasesAndParams)
{
    EXPECT_EQ(parse_phase("3*pi/4"), Phase::pi4(3));
    EXPECT_EQ(parse_phase("a-2*b+pi/2"), Phase::var("a") - Phase::var("b", 2) + Phase::pi(1, 2));
    EXPECT_FALSE(parse_phase("0.25").is_exact());
    EXPECT_TRUE(parse_param("1/2-3i").is_exact());
    EXPECT_EQ(parse_param("1/2-3i").exact(), Cyclo(Dyadic(1, 1)) - Cyclo(3) * Cyclo::omega_pow(2));
    EXPECT_FALSE(parse_param("0.3+2.1i").is_exact());
    EXPECT_EQ(parse_param("2@pi/4").exact(), Cyclo(2) * Cyclo::omega_pow(1));
    EXPECT_EQ(parse_param("[0,1,0,0]").exact(), Cyclo::omega_pow(1));
}

TEST(Dsl, ErrorsCarryPosition)
{
    try {
        parse_diagram("(seq (Z 1 1 pi/4)\n  (Q 1 2))");
        FAIL() << "no error";
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line(), 2);
        EXPECT_GT(e.column(), 0);
        EXPECT_NE(std::string(e.what()).find("parse: 2:"), std::string::npos);
    }
    for (const char* bad : {"(Z 1 1 3*pi/4", "(foo)", "(seq cup cup)", "(Z 1 1)", "", "(W 3 3)"}) {
        EXPECT_THROW(parse_diagram(bad), ParseError) << bad;
    }
    try {
        parse_diagram("(Z 1 1 pi)", std::nullopt, 10);
    } catch (...) {
        FAIL();
    }
}

TEST(Dsl, NetlistRoundTrip)
{
    const char* text = "(diagram zx (inputs 1) (outputs 1)\n"
                       "  (node 0 (Z 1 1 pi/4))\n"
                       "  (node 1 H)\n"
                       "  (edge (in 0) (port 0 0))\n"
                       "  (edge (port 0 1) (port 1 0))\n"
                       "  (edge (port 1 1) (out 0)))";
    Diagram d = parse_diagram(text);
    EXPECT_TRUE(eq_semantic(d, compose(had(), zsp(Phase::pi4(1), 1, 1)), InterpMode::exact()));
    std::string p = print_diagram(d);
    EXPECT_EQ(print_diagram(parse_diagram(p)), p);
    EXPECT_THROW(parse_diagram("(diagram zx (inputs 1) (outputs 1) (node 0 H) (edge (in 0) (port 0 0)))"),
                 std::invalid_argument);
}

TEST(Dsl, RandomCorpusRoundTrip)
{
    std::mt19937_64 rng(3);
    for (int i = 0; i < 200; ++i) {
        SampleOptions o;
        o.generators = 10;
        Calculus c = i % 3 == 0 ? Calculus::ZW : Calculus::ZX;
        Diagram r = random_diagram(c, o, rng);
        if (i % 5 == 1 && c == Calculus::ZX) r = round_trip(r);
        std::string p = print_diagram(r);
        Diagram q = parse_diagram(p);
        ASSERT_EQ(print_diagram(q), p) << i;
        ASSERT_TRUE(iso_equal(q, r)) << i;
    }
}

TEST(Dsl, GoldenDiagramsPrintAndParse)
{
    for (const auto& g : gold::load_golden(gold::source_path("tests/golden/generators.json"))) {
        Diagram q = parse_diagram(print_diagram(g.diagram));
        EXPECT_TRUE(exact_equal(interp_exact(q), g.matrix)) << g.name;
    }
}

TEST(Proof, ParsesHeaderAndSteps)
{
    ProofScript s = parse_proof("name: demo\nset: zx-pi4\n(seq H H)\nby EU\nid\n");
    EXPECT_EQ(s.name, "demo");
    EXPECT_EQ(s.set, "zx-pi4");
    ASSERT_EQ(s.steps.size(), 2u);
    EXPECT_EQ(s.steps[1].rules, std::vector<std::string>{"EU"});
    ProofReport r = check_proof(s);
    EXPECT_TRUE(r.pass());
    EXPECT_EQ(r.steps[0].mode, "exact");
}

TEST(Proof, UnknownRuleAndWrongStepFail)
{
    ProofReport a = check_proof(parse_proof("name: x\nset: zx-pi4\n(seq H H)\nby bogus\nid\n"));
    EXPECT_EQ(a.failed_at, 1);
    EXPECT_FALSE(a.steps[0].unknown_rules.empty());
    ProofReport b = check_proof(parse_proof("name: x\nset: zx-pi4\nH\nby EU\nid\n"));
    EXPECT_EQ(b.failed_at, 1);
    ProofReport c = check_proof(parse_proof("name: x\nset: zx-pi4\n(seq (Z 1 1 -a) (Z 1 1 a))\nby S\nid\n"));
    EXPECT_TRUE(c.pass());
    EXPECT_EQ(c.steps[0].mode, "linear");
    EXPECT_THROW(parse_proof("name: x\nid\n"), std::invalid_argument);
    EXPECT_THROW(parse_proof("name: x\nset: zx-pi4\n"), std::invalid_argument);
}

TEST(Proof, ShippedProofs)
{
    for (const char* p : {"proofs/gn_inverse.proof", "proofs/rule_2b.proof", "proofs/param_triangle_0.proof"}) {
        ProofReport r = check_proof(load_proof(gold::source_path(p)));
        EXPECT_TRUE(r.pass()) << p << " failed at " << r.failed_at;
    }
    std::vector<std::pair<const char*, int>> bad = {{"proofs/corrupted/gn_inverse_step2.proof", 2},
                                                    {"proofs/corrupted/rule_2b_step2.proof", 2},
                                                    {"proofs/corrupted/param_triangle_0_step3.proof", 3}};
    for (const auto& [p, at] : bad)
        EXPECT_EQ(check_proof(load_proof(gold::source_path(p))).failed_at, at) << p;
}

TEST(Json, MatrixRoundTrip)
{
    AnyMatrix m{interp_exact(parse_diagram("(seq (Z 1 2 3*pi/4) (ten H (X 1 1 pi/4)))"))};
    nlohmann::json j = matrix_json(m);
    EXPECT_EQ(j["rows"], 4);
    EXPECT_EQ(j["cols"], 2);
    EXPECT_TRUE(j["exact"].get<bool>());
    AnyMatrix back = matrix_from_json(nlohmann::json::parse(j.dump()));
    ASSERT_TRUE(back.is_exact());
    EXPECT_TRUE(exact_equal(back.exact(), m.exact()));

    Cyclo c = Cyclo(Dyadic(BigInt(3), 5)) - Cyclo::omega_pow(3);
    EXPECT_EQ(cyclo_from_json(cyclo_json(c)), c);

    AnyMatrix f{interp_float(parse_diagram("(Z 1 1 0.3)"))};
    AnyMatrix fb = matrix_from_json(matrix_json(f));
    EXPECT_FALSE(fb.is_exact());
    EXPECT_TRUE(approx_equal(fb.as_float(), f.as_float(), 1e-15));
}

TEST(Json, ReportShape)
{
    Budget b;
    b.max_exact = 8;
    b.float_samples = 2;
    nlohmann::json j = report_json(verify_soundness(axiom_set("zx-pi2"), b, 1));
    EXPECT_EQ(j["set"], "zx-pi2");
    EXPECT_TRUE(j["pass"].get<bool>());
    ASSERT_TRUE(j["rules"].is_array());
    for (const auto& r : j["rules"]) {
        EXPECT_TRUE(r.contains("rule"));
        EXPECT_TRUE(r.contains("instances"));
        EXPECT_TRUE(r.contains("exhaustive"));
        EXPECT_EQ(r["failure_count"], 0);
    }
}
