#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include <CLI11.hpp>

#include "zxw/axioms.hpp"
#include "zxw/dsl.hpp"
#include "zxw/json_io.hpp"
#include "zxw/proof.hpp"
#include "zxw/rewrite.hpp"
#include "zxw/semantics.hpp"
#include "zxw/translate.hpp"

using namespace zxw;
using nlohmann::json;

namespace {

// exit codes
constexpr int kOk = 0;
constexpr int kNo = 1;
constexpr int kInputError = 2;

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::uint64_t default_seed()
{
    if (const char* s = std::getenv("ZXZW_SEED")) {
        try {
            return std::stoull(s);
        } catch (const std::exception&) {
            throw InputError("ZXZW_SEED: not an unsigned integer: '" + std::string(s) + "'");
        }
    }
    return 1;
}

std::string slurp(const std::string& path)
{
    std::ifstream f(path);
    if (!f)
        throw InputError("cannot open '" + path + "'");
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

Diagram load(const std::string& path)
{
    std::optional<Calculus> hint;
    if (path.size() > 3 && path.substr(path.size() - 3) == ".zw")
        hint = Calculus::ZW;
    return parse_diagram(slurp(path), hint);
}

std::string entry_text(const AnyMatrix& m, Eigen::Index i, Eigen::Index k)
{
    if (m.is_exact())
        return m.exact()(i, k).str();
    std::complex<double> z = m.as_float()(i, k);
    std::ostringstream os;
    os << std::setprecision(12) << z.real() << (z.imag() < 0 ? "-" : "+") << std::abs(z.imag()) << "i";
    return os.str();
}

void print_matrix(const AnyMatrix& m)
{
    std::cout << m.rows() << "x" << m.cols() << (m.is_exact() ? " exact" : " float") << "\n";
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index k = 0; k < m.cols(); ++k)
            std::cout << (k ? "  " : "") << entry_text(m, i, k);
        std::cout << "\n";
    }
}

std::string valuation_text(const Valuation& v)
{
    std::string s;
    for (const auto& [k, p] : v)
        s += (s.empty() ? "" : ", ") + k + "=" + p.str();
    return s;
}

int run_eval(const std::string& file, bool exact, bool flt, bool as_json)
{
    Diagram d = load(file);
    if (!d.free_variables().empty())
        throw InputError("eval: diagram has free variables");
    InterpMode mode = InterpMode::floating();
    if (exact) {
        if (!exact_eligible(d))
            throw InputError("eval: diagram is not exact-eligible");
        mode = InterpMode::exact();
    } else if (!flt && exact_eligible(d)) {
        mode = InterpMode::exact();
    }
    AnyMatrix m = interp(d, mode);
    if (as_json)
        std::cout << json{{"inputs", d.inputs()}, {"outputs", d.outputs()}, {"matrix", matrix_json(m)}}.dump(2) << "\n";
    else
        print_matrix(m);
    return kOk;
}

int run_eq(const std::string& a, const std::string& b, bool exact, double tol, int samples, std::uint64_t seed)
{
    Diagram d1 = load(a), d2 = load(b);
    if (d1.inputs() != d2.inputs() || d1.outputs() != d2.outputs()) {
        std::cout << "not equal: arity " << d1.inputs() << "->" << d1.outputs() << " vs " << d2.inputs() << "->"
                  << d2.outputs() << "\n";
        return kNo;
    }
    bool vars = !d1.free_variables().empty() || !d2.free_variables().empty();
    if (vars) {
        auto lc = eq_linear(d1, d2, samples, seed, tol);
        if (lc.equal) {
            std::cout << "equal (" << lc.exact_valuations << " exact, " << lc.float_valuations << " float valuations)\n";
            return kOk;
        }
        std::cout << "not equal at " << (lc.witness ? valuation_text(*lc.witness) : std::string("?")) << "\n";
        return kNo;
    }
    bool eligible = exact_eligible(d1) && exact_eligible(d2);
    if (exact && !eligible)
        throw InputError("eq: --exact needs pi/4 phases and exact parameters");
    InterpMode mode = eligible ? InterpMode::exact() : InterpMode::floating(tol);
    bool same = eq_semantic(d1, d2, mode);
    std::cout << (same ? "equal" : "not equal") << " (" << (mode.is_exact() ? "exact" : "float") << ")\n";
    return same ? kOk : kNo;
}

int run_verify(const std::string& set, int budget, int samples, bool as_json, bool mutated, std::uint64_t seed)
{
    Budget b;
    b.max_exact = budget;
    b.float_samples = samples;
    if (mutated) {
        // every mutation must be refuted
        json out = json::array();
        bool all_fail = true;
        for (const auto& r : mutations()) {
            RuleReport rr = verify_rule(r, b, seed);
            all_fail = all_fail && !rr.pass();
            if (as_json)
                out.push_back(rule_report_json(rr));
            else
                std::cout << (rr.pass() ? "UNDETECTED " : "REFUTED    ") << rr.rule << " (" << rr.failure_count << "/"
                          << rr.instances() << " failing)\n";
        }
        if (as_json)
            std::cout << json{{"mutations", out}, {"pass", all_fail}}.dump(2) << "\n";
        return all_fail ? kOk : kNo;
    }
    AxiomSet s;
    try {
        s = axiom_set(set);
    } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
    }
    Report r = verify_soundness(s, b, seed);
    if (as_json) {
        std::cout << report_json(r).dump(2) << "\n";
    } else {
        for (const auto& rr : r.rules) {
            std::cout << (rr.pass() ? "PASS " : "FAIL ") << std::left << std::setw(10) << rr.rule << " "
                      << rr.exact_instances << " exact" << (rr.exhaustive ? " (exhaustive)" : " (sampled)") << ", "
                      << rr.float_instances << " float\n";
            for (const auto& f : rr.failures)
                std::cout << "  at " << f.binding << (f.variant.empty() ? "" : " [" + f.variant + "]")
                          << (f.error.empty() ? "" : ": " + f.error) << "\n";
        }
        std::cout << r.set << ": " << (r.pass() ? "PASS" : "FAIL") << "\n";
    }
    return r.pass() ? kOk : kNo;
}

int run_translate(const std::string& file, const std::string& to, bool keep)
{
    Diagram d = load(file);
    Diagram out;
    if (to == "zw") {
        if (d.calculus() == Calculus::ZW)
            throw InputError("translate: input is already ZW");
        out = zx_to_zw(d);
    } else {
        if (d.calculus() != Calculus::ZW)
            throw InputError("translate: --to zx needs a ZW input");
        out = zw_to_zx(d, keep);
    }
    std::cout << print_diagram(out);
    return kOk;
}

int run_roundtrip(const std::string& file, double tol)
{
    Diagram d = load(file);
    if (d.calculus() == Calculus::ZW)
        throw InputError("roundtrip: needs a ZX input");
    Diagram r = round_trip(d);
    bool eligible = exact_eligible(d) && exact_eligible(r);
    bool same = eq_semantic(d, r, eligible ? InterpMode::exact() : InterpMode::floating(tol));
    std::cerr << "round trip: " << d.node_count() << " -> " << r.node_count() << " nodes, "
              << (same ? "equal" : "not equal") << (eligible ? " (exact)" : " (float)") << "\n";
    std::cout << print_diagram(r);
    return same ? kOk : kNo;
}

int run_check_proof(const std::string& file, bool as_json, std::uint64_t seed)
{
    ProofScript s = parse_proof(slurp(file));
    ProofOptions opt;
    opt.seed = seed;
    ProofReport r = check_proof(s, opt);
    if (as_json) {
        std::cout << proof_report_json(r).dump(2) << "\n";
    } else {
        for (const auto& st : r.steps) {
            std::string rules;
            for (const auto& n : st.rules)
                rules += (rules.empty() ? "" : ",") + n;
            std::cout << (st.pass() ? "ok   " : "FAIL ") << "step " << st.index << " by " << rules << " [" << st.mode
                      << "]" << (st.message.empty() ? "" : ": " + st.message) << "\n";
        }
        std::cout << r.name << ": " << (r.pass() ? "PASS" : "FAIL at step " + std::to_string(r.failed_at)) << "\n";
    }
    return r.pass() ? kOk : kNo;
}

int run_simplify(const std::string& file, int fuel, bool as_json)
{
    Diagram d = load(file);
    Simplified s = simplify(d, default_strategy(), fuel);
    if (as_json) {
        std::cout << json{{"nodes_before", d.node_count()},
                          {"nodes_after", s.diagram.node_count()},
                          {"fuel_exhausted", s.fuel_exhausted},
                          {"trace", trace_json(s.trace)},
                          {"diagram", print_diagram(s.diagram)}}
                         .dump(2)
                  << "\n";
    } else {
        std::cerr << "simplify: " << d.node_count() << " -> " << s.diagram.node_count() << " nodes in "
                  << s.trace.size() << " steps" << (s.fuel_exhausted ? " (fuel exhausted)" : "") << "\n";
        std::cout << print_diagram(s.diagram);
    }
    return kOk;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"zxw: ZX and ZW diagram engine"};
    app.require_subcommand(1);

    std::string file, file2, set = "zx-pi4", to;
    bool exact = false, flt = false, as_json = false, keep = false, mutated = false;
    double tol = 1e-9;
    int samples = 64, budget = 4096, float_samples = 1000, fuel = -1;
    std::uint64_t seed = 0;
    bool seed_given = false;

    auto* eval = app.add_subcommand("eval", "interpret a diagram");
    eval->add_option("FILE", file, "diagram file")->required();
    auto* ex = eval->add_flag("--exact", exact, "exact arithmetic");
    eval->add_flag("--float", flt, "floating point")->excludes(ex);
    eval->add_flag("--json", as_json, "JSON output");

    auto* eq = app.add_subcommand("eq", "semantic equality of two diagrams");
    eq->add_option("A", file, "first diagram")->required();
    eq->add_option("B", file2, "second diagram")->required();
    eq->add_flag("--exact", exact, "require exact comparison");
    eq->add_option("--tol", tol, "float tolerance");
    eq->add_option("--samples", samples, "valuations for variable phases");
    eq->add_option("--seed", seed, "random seed")->each([&](const std::string&) { seed_given = true; });

    auto* va = app.add_subcommand("verify-axioms", "check soundness of an axiom set");
    va->add_option("--set", set, "zx-pi2, zx-pi4, zx-pi4-a, zx-t, zw, zw-half");
    va->add_option("--budget", budget, "max exact instances per rule");
    va->add_option("--samples", float_samples, "float samples per continuous rule");
    va->add_option("--seed", seed, "random seed")->each([&](const std::string&) { seed_given = true; });
    va->add_flag("--mutations", mutated, "check that the corrupted rules are refuted");
    va->add_flag("--json", as_json, "JSON output");

    auto* tr = app.add_subcommand("translate", "translate between ZX and ZW");
    tr->add_option("--to", to, "target calculus")->required()->check(CLI::IsMember({"zw", "zx"}));
    tr->add_option("FILE", file, "diagram file")->required();
    tr->add_flag("--keep-triangles", keep, "emit triangle nodes (ZX_T)");

    auto* rt = app.add_subcommand("roundtrip", "translate ZX -> ZW -> ZX and compare");
    rt->add_option("FILE", file, "diagram file")->required();
    rt->add_option("--tol", tol, "float tolerance");

    auto* cp = app.add_subcommand("check-proof", "check a proof script");
    cp->add_option("FILE", file, "proof file")->required();
    cp->add_flag("--json", as_json, "JSON output");

    auto* si = app.add_subcommand("simplify", "rewrite with the default strategy");
    si->add_option("FILE", file, "diagram file")->required();
    si->add_option("--fuel", fuel, "maximum rewrite steps");
    si->add_flag("--json", as_json, "JSON output");

    auto* pr = app.add_subcommand("print", "print a diagram in canonical form");
    pr->add_option("FILE", file, "diagram file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kInputError;
    }

    try {
        if (!seed_given)
            seed = default_seed();
        if (*eval)
            return run_eval(file, exact, flt, as_json);
        if (*eq)
            return run_eq(file, file2, exact, tol, samples, seed);
        if (*va)
            return run_verify(set, budget, float_samples, as_json, mutated, seed);
        if (*tr)
            return run_translate(file, to, keep);
        if (*rt)
            return run_roundtrip(file, tol);
        if (*cp)
            return run_check_proof(file, as_json, seed);
        if (*si)
            return run_simplify(file, fuel, as_json);
        if (*pr) {
            std::cout << print_diagram(load(file));
            return kOk;
        }
    } catch (const std::exception& e) {
        std::cerr << "zxw: " << e.what() << "\n";
        return kInputError;
    }
    return kInputError;
}
