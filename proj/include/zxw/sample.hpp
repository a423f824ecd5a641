#pragma once

#include <cstdint>
#include <random>

#include "zxw/diagram.hpp"

namespace zxw {

struct SampleOptions {
    int inputs = 1;
    int generators = 8;
    int max_width = 5;
    // ZX only: phases k pi/4, otherwise k pi/2
    bool pi4 = true;
};

// layered random diagram in the given calculus; generators placed on adjacent wires
Diagram random_diagram(Calculus c, const SampleOptions& opt, std::mt19937_64& rng);

} // namespace zxw
