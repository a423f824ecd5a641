#pragma once

#include "zxw/diagram.hpp"

namespace zxw {

// incremental graph construction with per-node port cursors
class Builder {
public:
    Builder(Calculus c, int n_in, int n_out) : d_(c, n_in, n_out) {}

    int add(Node n)
    {
        int id = d_.add_node(std::move(n));
        next_.push_back(0);
        return id;
    }
    int z(const Phase& a, int legs) { return spider(Kind::Z, a, legs); }
    int x(const Phase& a, int legs) { return spider(Kind::X, a, legs); }
    int spider(Kind k, const Phase& a, int legs);
    int white(const Param& r, int legs);
    int node(Kind k) { return add(make_node(k)); }

    // next unused port of a node
    End port(int node);
    End at(int node, int port) { return End::at(node, port); }
    void link(End a, End b) { d_.connect(a, b); }
    void link_ports(int u, int v) { link(port(u), port(v)); }
    // splice another diagram in, return node id offset; its boundary ends are returned in ins/outs
    int splice(const Diagram& sub, std::vector<End>& ins, std::vector<End>& outs);
    // splice and connect its inputs to the given ends, return its output ends
    std::vector<End> feed(const Diagram& sub, const std::vector<End>& ins);
    void scalar(const Diagram& s);

    Diagram& raw() { return d_; }
    Diagram done() const;

private:
    Diagram d_;
    std::vector<int> next_;
};

namespace gadget {

// Z(a,0->1) wired to X(b,1->0): (1 + e^{ib} + e^{ia} - e^{i(a+b)})/sqrt2
Diagram bic(const Phase& a, const Phase& b);
// Z(0,0->3) triple-wired to X(0,3->0): 1/sqrt2
Diagram hopf3();
// Z(0,0->0): 2
Diagram two();
// (sqrt2)^k from bicolours or triple Hopf pairs
Diagram sqrt2_pow(int k);
// e^{ia}
Diagram phase_scalar(const Phase& a);
// exact Clifford+T scalar for 1/(1 + e^{i k pi/4}), k != 4 mod 8
Diagram grid_inverse(int k);

// triangle [[1,1],[0,1]] as a pi/4 diagram; the core alone is half of it
Diagram triangle_core();
Diagram triangle_zx();
// |0> -> |00>, |1> -> |01>+|10>
Diagram w_std(bool keep_triangles = false);
// the ZW black node 1->2, w_std after a NOT
Diagram w_black(bool keep_triangles = false);
Diagram cz();
Diagram cross_zx();
// CNOT control first
Diagram cnot();
// phase e^{ia x} on the parity x of k wires, k->k
Diagram parity_phase(const Phase& a, int k);
// sqrt2 diag(1, e^{i theta} cos beta), 1->1
Diagram cos_gadget(double beta, double theta);
// 2 e^{i alpha} cos(alpha) [[1, e^{i theta} tan alpha],[0,1]] from a copy, a unit triangle and a phase gadget;
// takes 2 alpha
Diagram triangle_td(const Phase& two_alpha, const Phase& theta, bool keep_triangles = true);
// |0> + 2|1>
Diagram two_state(bool keep_triangles = false);

} // namespace gadget

} // namespace zxw
