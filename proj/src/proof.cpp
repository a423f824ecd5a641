#include "zxw/proof.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "zxw/axioms.hpp"
#include "zxw/dsl.hpp"
#include "zxw/semantics.hpp"

namespace zxw {

namespace {

std::string trim(const std::string& s)
{
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos)
        return "";
    auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

bool blank(const std::string& block)
{
    std::istringstream in(block);
    std::string line;
    while (std::getline(in, line)) {
        std::string t = trim(line);
        if (!t.empty() && t[0] != ';')
            return false;
    }
    return true;
}

std::vector<std::string> split_rules(const std::string& s)
{
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string r;
    while (std::getline(ss, r, ',')) {
        r = trim(r);
        if (!r.empty())
            out.push_back(r);
    }
    return out;
}

} // namespace

ProofScript parse_proof(const std::string& text)
{
    ProofScript s;
    std::istringstream in(text);
    std::string line;
    int ln = 0;
    std::string block;
    int block_start = 0;
    std::vector<std::string> pending;
    bool have_pending = false;
    Calculus calc = Calculus::ZX;
    bool set_known = false;

    auto flush = [&](int at_line) {
        if (blank(block)) {
            if (have_pending || !s.steps.empty())
                throw ParseError(at_line, 1, "missing diagram after 'by'");
            return;
        }
        if (!set_known)
            throw ParseError(block_start + 1, 1, "diagram before the 'set:' header");
        ProofStep st;
        st.diagram = parse_diagram(block, calc, block_start);
        st.rules = pending;
        st.line = block_start + 1;
        if (!s.steps.empty() && !have_pending)
            throw ParseError(st.line, 1, "two diagrams without a 'by' line between them");
        s.steps.push_back(std::move(st));
        pending.clear();
        have_pending = false;
    };

    while (std::getline(in, line)) {
        ++ln;
        std::string t = trim(line);
        if (s.steps.empty() && blank(block) && !have_pending) {
            if (t.rfind("name:", 0) == 0) {
                s.name = trim(t.substr(5));
                block_start = ln;
                continue;
            }
            if (t.rfind("lemmas:", 0) == 0) {
                for (auto& l : split_rules(t.substr(7)))
                    s.lemmas.push_back(l);
                block_start = ln;
                continue;
            }
            if (t.rfind("set:", 0) == 0) {
                s.set = trim(t.substr(4));
                try {
                    calc = axiom_set(s.set).calculus;
                } catch (const std::invalid_argument& e) {
                    throw ParseError(ln, 1, e.what());
                }
                set_known = true;
                block_start = ln;
                continue;
            }
        }
        if (t.rfind("by ", 0) == 0 || t == "by") {
            flush(ln);
            if (s.steps.empty())
                throw ParseError(ln, 1, "'by' before the first diagram");
            pending = split_rules(t.substr(2));
            if (pending.empty())
                throw ParseError(ln, 1, "'by' without a rule name");
            have_pending = true;
            block.clear();
            block_start = ln;
            continue;
        }
        if (blank(block) && (t.empty() || t[0] == ';'))
            block_start = ln;
        block += line + "\n";
    }
    flush(ln + 1);
    if (have_pending)
        throw ParseError(ln, 1, "missing diagram after the last 'by'");
    if (!set_known)
        throw ParseError(1, 1, "missing 'set:' header");
    if (s.steps.empty())
        throw ParseError(1, 1, "proof has no diagrams");
    return s;
}

ProofScript load_proof(const std::string& path)
{
    std::ifstream f(path);
    if (!f)
        throw std::runtime_error("load_proof: cannot open '" + path + "'");
    std::stringstream ss;
    ss << f.rdbuf();
    return parse_proof(ss.str());
}

ProofReport check_proof(const ProofScript& s, const ProofOptions& opt)
{
    ProofReport r;
    r.name = s.name;
    r.set = s.set;
    AxiomSet set = axiom_set(s.set);
    for (std::size_t i = 1; i < s.steps.size(); ++i) {
        const Diagram& a = s.steps[i - 1].diagram;
        const Diagram& b = s.steps[i].diagram;
        StepCheck c;
        c.index = static_cast<int>(i);
        c.rules = s.steps[i].rules;
        for (const auto& name : c.rules)
            if (!set.find(name) && name != "translation" &&
                std::find(s.lemmas.begin(), s.lemmas.end(), name) == s.lemmas.end())
                c.unknown_rules.push_back(name);
        if (a.inputs() != b.inputs() || a.outputs() != b.outputs()) {
            c.message = "arity " + std::to_string(a.inputs()) + "->" + std::to_string(a.outputs()) + " vs " +
                        std::to_string(b.inputs()) + "->" + std::to_string(b.outputs());
        } else if (!a.free_variables().empty() || !b.free_variables().empty()) {
            c.mode = "linear";
            auto lc = eq_linear(a, b, opt.samples, opt.seed + i, opt.tol);
            c.equal = lc.equal;
            if (!lc.equal && lc.witness) {
                std::string w;
                for (const auto& [k, v] : *lc.witness)
                    w += (w.empty() ? "" : ", ") + k + "=" + v.str();
                c.message = "differs at " + w;
            }
        } else if (exact_eligible(a) && exact_eligible(b)) {
            c.mode = "exact";
            c.equal = eq_semantic(a, b, InterpMode::exact());
        } else {
            c.mode = "float";
            c.equal = eq_semantic(a, b, InterpMode::floating(opt.tol));
        }
        if (!c.equal && c.message.empty())
            c.message = "interpretations differ";
        if (!c.unknown_rules.empty()) {
            std::string u;
            for (const auto& n : c.unknown_rules)
                u += (u.empty() ? "" : ", ") + n;
            c.message += (c.message.empty() ? "" : "; ") + std::string("not in ") + s.set + ": " + u;
        }
        if (!c.pass() && r.failed_at < 0)
            r.failed_at = c.index;
        r.steps.push_back(std::move(c));
    }
    return r;
}

} // namespace zxw
