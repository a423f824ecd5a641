#pragma once

#include <functional>
#include <vector>

#include "zxw/diagram.hpp"

namespace zxw {

// sub-diagrams glued along their boundary legs; wires through parts are resolved on build
class Net {
public:
    // part < 0 is the outer boundary: legs 0..n_in-1 are inputs, then outputs
    struct Leg {
        int part = -1;
        int leg = 0;
    };

    Net(Calculus c, int n_in, int n_out) : calc_(c), n_in_(n_in), n_out_(n_out) {}

    // legs of a part: its inputs, then its outputs
    // nodes of the part get group prefix + [part id] + their own group
    int add(const Diagram& d, const std::vector<std::uint32_t>& prefix = {});
    Leg in(int k) const { return {-1, k}; }
    Leg out(int k) const { return {-1, n_in_ + k}; }
    Leg input(int part, int k) const { return {part, k}; }
    Leg output(int part, int k) const;
    int legs(int part) const;
    void link(Leg a, Leg b) { links_.emplace_back(a, b); }

    // throws std::logic_error if a leg is unlinked or linked twice
    Diagram build() const;

private:
    Calculus calc_;
    int n_in_, n_out_;
    std::vector<Diagram> parts_;
    std::vector<std::vector<std::uint32_t>> prefix_;
    std::vector<std::pair<Leg, Leg>> links_;
};

// every node replaced by a diagram over its legs plus `thread` extra wires;
// the extra wires run through the replacements in node order, after the boundary wires
Diagram replace_nodes(const Diagram& d, Calculus c, const std::function<Diagram(const Node&)>& f, int thread = 0);

} // namespace zxw
