#pragma once

#include <cstdint>
#include <optional>

#include "zxw/diagram.hpp"
#include "zxw/ring.hpp"

namespace zxw {

struct InterpMode {
    enum class Kind { Exact, Float };
    Kind kind = Kind::Exact;
    double tol = 1e-9;

    static InterpMode exact() { return {Kind::Exact, 0.0}; }
    static InterpMode floating(double tol = 1e-9) { return {Kind::Float, tol}; }
    bool is_exact() const { return kind == Kind::Exact; }
};

// closed, pi/4 phases, parameters in Z[1/2][w]
bool exact_eligible(const Diagram& d);

// generator matrices, 2^n_out x 2^n_in
ExactMatrix generator_matrix_exact(const Node& n);
FloatMatrix generator_matrix_float(const Node& n);

ExactMatrix interp_exact(const Diagram& d);
FloatMatrix interp_float(const Diagram& d);
AnyMatrix interp(const Diagram& d, InterpMode mode);

bool eq_semantic(const Diagram& d1, const Diagram& d2, InterpMode mode);
// exact when both sides are eligible, float otherwise
bool eq_auto(const Diagram& d1, const Diagram& d2, double tol = 1e-9);

struct LinearCheck {
    bool equal = true;
    std::optional<Valuation> witness;
    int exact_valuations = 0;
    int float_valuations = 0;
};

LinearCheck eq_linear(const Diagram& d1, const Diagram& d2, int samples, std::uint64_t seed, double tol = 1e-9);

void clear_contraction_cache();

} // namespace zxw
