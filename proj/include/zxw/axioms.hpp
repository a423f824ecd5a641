#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "zxw/diagram.hpp"
#include "zxw/semantics.hpp"

namespace zxw {

// parameter assignment for one rule instance
struct Binding {
    std::map<std::string, int> arity;
    Valuation angle;
    std::map<std::string, Param> complex;

    std::string str() const;
};

struct ParamSpec {
    enum class Type { Arity, Angle, Complex };
    Type type = Type::Angle;
    std::string name;
    int lo = 0, hi = 0; // arity range, inclusive
};

struct Rule {
    std::string name;
    std::vector<std::string> aliases;
    std::vector<ParamSpec> params;
    // angles range over the pi/4 grid, complex parameters over a fixed exact list
    bool exact = true;
    // also sampled with real angles and random complex parameters
    bool continuous = false;
    // flipped and colour-swapped copies are checked too
    bool variants = false;
    std::function<bool(const Binding&)> domain;
    std::function<std::pair<Diagram, Diagram>(const Binding&)> build;

    bool matches(const std::string& n) const;
};

// throws std::invalid_argument when the binding is outside the rule's domain or arity bounds
std::pair<Diagram, Diagram> instantiate(const Rule& r, const Binding& b);

struct AxiomSet {
    std::string name;
    Calculus calculus = Calculus::ZX;
    std::vector<Rule> rules;

    const Rule* find(const std::string& rule) const;
};

// zx-pi2, zx-pi4, zx-pi4-a, zx-t, zw, zw-half
AxiomSet axiom_set(const std::string& name);
std::vector<std::string> axiom_set_names();

// deliberately unsound rules, each must fail verification
std::vector<Rule> mutations();

struct Budget {
    int max_exact = 4096;
    int float_samples = 1000;
    double tol = 1e-9;
};

struct Failure {
    std::string binding;
    std::string variant;
    AnyMatrix lhs, rhs;
    std::string error;
};

struct RuleReport {
    std::string rule;
    int exact_instances = 0;
    int float_instances = 0;
    bool exhaustive = true;
    std::vector<Failure> failures;
    int failure_count = 0;

    int instances() const { return exact_instances + float_instances; }
    bool pass() const { return failure_count == 0; }
};

struct Report {
    std::string set;
    std::vector<RuleReport> rules;

    bool pass() const;
};

RuleReport verify_rule(const Rule& r, const Budget& budget, std::uint64_t seed);
Report verify_soundness(const AxiomSet& set, const Budget& budget, std::uint64_t seed);

} // namespace zxw
