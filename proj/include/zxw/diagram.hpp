#pragma once

#include <complex>
#include <cstdint>
#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "zxw/phase.hpp"
#include "zxw/ring.hpp"

namespace zxw {

enum class Calculus { ZX, ZW, ZXT };

enum class Kind {
    Z,
    X,
    H,
    Cup,
    Cap,
    Swap,
    WhiteZW,
    BlackW1to1,
    BlackW1to2,
    WhiteZW1to1,
    WhiteZW2to1,
    ZWCross,
    Half,
    Triangle
};

std::string calculus_name(Calculus c);
std::string kind_name(Kind k);
bool admissible(Calculus c, Kind k);

// complex node parameter, exact in Z[1/2][w] when possible
class Param {
public:
    Param() : exact_(true), value_(0) {}
    Param(const Cyclo& c) : exact_(true), cyclo_(c), value_(c.to_complex()) {}
    Param(long long n) : Param(Cyclo(n)) {}
    Param(std::complex<double> z) : exact_(false), value_(z) {}

    bool is_exact() const { return exact_; }
    const Cyclo& exact() const { return cyclo_; }
    std::complex<double> value() const { return value_; }

    friend bool operator==(const Param& a, const Param& b)
    {
        return a.exact_ == b.exact_ && (a.exact_ ? a.cyclo_ == b.cyclo_ : a.value_ == b.value_);
    }
    friend bool operator!=(const Param& a, const Param& b) { return !(a == b); }

    std::string str() const;

private:
    bool exact_;
    Cyclo cyclo_;
    std::complex<double> value_;
};

struct Node {
    Kind kind = Kind::Z;
    Phase phase;
    Param param;
    int n_in = 0;
    int n_out = 0;
    // contraction hint, ignored by equality
    std::vector<std::uint32_t> group;

    int ports() const { return n_in + n_out; }
};

Node make_node(Kind k, int n_in = -1, int n_out = -1);
// same kind, arity, phase and parameter
bool same_label(const Node& a, const Node& b);

struct End {
    enum class Type : std::uint8_t { Port, In, Out };
    Type type = Type::Port;
    int node = -1;
    int port = 0;

    static End at(int node, int port) { return {Type::Port, node, port}; }
    static End in(int k) { return {Type::In, -1, k}; }
    static End out(int k) { return {Type::Out, -1, k}; }

    bool is_port() const { return type == Type::Port; }
    friend bool operator==(const End& a, const End& b) { return a.type == b.type && a.node == b.node && a.port == b.port; }
    friend bool operator<(const End& a, const End& b)
    {
        return std::tie(a.type, a.node, a.port) < std::tie(b.type, b.node, b.port);
    }
};

using Edge = std::pair<End, End>;

class Diagram {
public:
    Diagram() = default;
    Diagram(Calculus c, int n_in, int n_out) : calc_(c), n_in_(n_in), n_out_(n_out) {}

    Calculus calculus() const { return calc_; }
    int inputs() const { return n_in_; }
    int outputs() const { return n_out_; }
    const std::vector<Node>& nodes() const { return nodes_; }
    const std::vector<Edge>& edges() const { return edges_; }
    std::size_t node_count() const { return nodes_.size(); }

    int add_node(Node n);
    void connect(End a, End b) { edges_.emplace_back(a, b); }
    void set_calculus(Calculus c) { calc_ = c; }
    Node& node(int i) { return nodes_.at(static_cast<std::size_t>(i)); }
    const Node& node(int i) const { return nodes_.at(static_cast<std::size_t>(i)); }
    std::vector<Edge>& mutable_edges() { return edges_; }
    std::vector<Node>& mutable_nodes() { return nodes_; }

    // throws std::invalid_argument on dangling or doubly used ports
    void validate() const;

    std::set<std::string> free_variables() const;
    bool is_pi4_exact() const;

    // tag every node with a leading group label
    void push_group(std::uint32_t g);

private:
    Calculus calc_ = Calculus::ZX;
    int n_in_ = 0;
    int n_out_ = 0;
    std::vector<Node> nodes_;
    std::vector<Edge> edges_;
};

Diagram tensor(const Diagram& d1, const Diagram& d2);
// d2 after d1
Diagram compose(const Diagram& d2, const Diagram& d1);
Diagram substitute(const Diagram& d, const Valuation& v);
bool iso_equal(const Diagram& d1, const Diagram& d2);

// boundary inputs and outputs exchanged, interpretation transposed
Diagram flipped(const Diagram& d);
// Z and X spiders exchanged
Diagram color_swapped(const Diagram& d);
// same graph under another calculus tag, checked
Diagram retagged(const Diagram& d, Calculus c);
// outputs permuted, output k of the result is output perm[k] of d
Diagram permute_outputs(const Diagram& d, const std::vector<int>& perm);
Diagram permute_inputs(const Diagram& d, const std::vector<int>& perm);

Diagram generator(Calculus c, const Node& n);
Diagram empty(Calculus c = Calculus::ZX);
Diagram identity(int n = 1, Calculus c = Calculus::ZX);

Diagram zsp(const Phase& a, int n, int m);
Diagram xsp(const Phase& a, int n, int m);
Diagram had();
Diagram cup(Calculus c = Calculus::ZX);
Diagram cap(Calculus c = Calculus::ZX);
Diagram swap(Calculus c = Calculus::ZX);
Diagram triangle(const Param& r = Param(1));

Diagram white(const Param& r, int n, int m);
Diagram black_not();
Diagram black_w();
Diagram white_sign();
Diagram white_merge();
Diagram zw_cross();
Diagram half();

// tensor / compose folds
Diagram tensor_all(const std::vector<Diagram>& ds, Calculus c);
Diagram seq_all(const std::vector<Diagram>& ds);
Diagram power(const Diagram& d, int k, Calculus c);

} // namespace zxw
