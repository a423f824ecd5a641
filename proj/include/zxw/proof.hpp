#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "zxw/diagram.hpp"

namespace zxw {

struct ProofStep {
    Diagram diagram;
    // rules cited for the step from the previous diagram; empty for the first
    std::vector<std::string> rules;
    int line = 0;
};

struct ProofScript {
    std::string name;
    std::string set;
    // derived results that may be cited next to the rules of the set
    std::vector<std::string> lemmas;
    std::vector<ProofStep> steps;
};

// header lines `name: ...`, `set: ...` and optional `lemmas: a, b`, then diagram blocks
// separated by `by RULE[,RULE...]`; the citation `translation` marks a change of calculus
ProofScript parse_proof(const std::string& text);
ProofScript load_proof(const std::string& path);

struct StepCheck {
    int index = 0; // index of the later diagram
    std::vector<std::string> rules;
    std::vector<std::string> unknown_rules;
    bool equal = false;
    std::string mode; // exact, linear, float
    std::string message;

    bool pass() const { return equal && unknown_rules.empty(); }
};

struct ProofReport {
    std::string name;
    std::string set;
    std::vector<StepCheck> steps;
    int failed_at = -1;

    bool pass() const { return failed_at < 0; }
};

struct ProofOptions {
    double tol = 1e-9;
    int samples = 64;
    std::uint64_t seed = 1;
};

ProofReport check_proof(const ProofScript& s, const ProofOptions& opt = {});

} // namespace zxw
