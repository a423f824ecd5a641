#include "zxw/diagram.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace zxw {

std::string calculus_name(Calculus c)
{
    switch (c) {
    case Calculus::ZX: return "ZX";
    case Calculus::ZW: return "ZW";
    case Calculus::ZXT: return "ZX_T";
    }
    return "?";
}

std::string kind_name(Kind k)
{
    switch (k) {
    case Kind::Z: return "Z";
    case Kind::X: return "X";
    case Kind::H: return "H";
    case Kind::Cup: return "cup";
    case Kind::Cap: return "cap";
    case Kind::Swap: return "swap";
    case Kind::WhiteZW: return "white";
    case Kind::BlackW1to1: return "W11";
    case Kind::BlackW1to2: return "W12";
    case Kind::WhiteZW1to1: return "zw-z11";
    case Kind::WhiteZW2to1: return "zw-z21";
    case Kind::ZWCross: return "zw-cross";
    case Kind::Half: return "half";
    case Kind::Triangle: return "tri";
    }
    return "?";
}

bool admissible(Calculus c, Kind k)
{
    switch (k) {
    case Kind::Cup:
    case Kind::Cap:
    case Kind::Swap:
        return true;
    case Kind::Z:
    case Kind::X:
    case Kind::H:
        return c != Calculus::ZW;
    case Kind::Triangle:
        return c == Calculus::ZXT;
    default:
        return c == Calculus::ZW;
    }
}

std::string Param::str() const
{
    auto fmt = [](double x) {
        std::ostringstream os;
        os.precision(17);
        os << x;
        return os.str();
    };
    if (!exact_) {
        std::string re = fmt(value_.real());
        std::string im = fmt(value_.imag());
        if (re.find_first_of(".eE") == std::string::npos)
            re += ".0";
        if (im.find_first_of(".eE") == std::string::npos)
            im += ".0";
        return re + (value_.imag() < 0 || (value_.imag() == 0 && std::signbit(value_.imag())) ? "" : "+") + im + "i";
    }
    if (cyclo_.coeff(1).is_zero() && cyclo_.coeff(3).is_zero()) {
        const Dyadic& a = cyclo_.coeff(0);
        const Dyadic& b = cyclo_.coeff(2);
        if (b.is_zero())
            return a.str();
        std::string bs = b.str();
        return a.str() + (b.sign() < 0 ? "" : "+") + bs + "i";
    }
    return "[" + cyclo_.coeff(0).str() + "," + cyclo_.coeff(1).str() + "," + cyclo_.coeff(2).str() + "," +
           cyclo_.coeff(3).str() + "]";
}

Node make_node(Kind k, int n_in, int n_out)
{
    Node n;
    n.kind = k;
    int fi = 0, fo = 0;
    switch (k) {
    case Kind::Z:
    case Kind::X:
    case Kind::WhiteZW:
        if (n_in < 0 || n_out < 0)
            throw std::invalid_argument("make_node: spider needs explicit arity");
        fi = n_in;
        fo = n_out;
        break;
    case Kind::H:
    case Kind::BlackW1to1:
    case Kind::WhiteZW1to1:
    case Kind::Triangle:
        fi = 1;
        fo = 1;
        break;
    case Kind::Cup: fi = 2; break;
    case Kind::Cap: fo = 2; break;
    case Kind::Swap:
    case Kind::ZWCross:
        fi = 2;
        fo = 2;
        break;
    case Kind::BlackW1to2:
        fi = 1;
        fo = 2;
        break;
    case Kind::WhiteZW2to1:
        fi = 2;
        fo = 1;
        break;
    case Kind::Half: break;
    }
    if ((n_in >= 0 && n_in != fi) || (n_out >= 0 && n_out != fo))
        throw std::invalid_argument("make_node: arity " + std::to_string(n_in) + "->" + std::to_string(n_out) +
                                    " does not match generator " + kind_name(k));
    n.n_in = fi;
    n.n_out = fo;
    if (k == Kind::Triangle)
        n.param = Param(1);
    return n;
}

bool same_label(const Node& a, const Node& b)
{
    if (a.kind != b.kind)
        return false;
    // spider legs are interchangeable between inputs and outputs
    bool spider = a.kind == Kind::Z || a.kind == Kind::X || a.kind == Kind::WhiteZW;
    if (spider ? a.ports() != b.ports() : (a.n_in != b.n_in || a.n_out != b.n_out))
        return false;
    switch (a.kind) {
    case Kind::Z:
    case Kind::X:
        return a.phase == b.phase;
    case Kind::WhiteZW:
    case Kind::Triangle:
        return a.param == b.param;
    default:
        return true;
    }
}

int Diagram::add_node(Node n)
{
    if (!admissible(calc_, n.kind))
        throw std::invalid_argument("Diagram::add_node: generator " + kind_name(n.kind) + " not allowed in " +
                                    calculus_name(calc_));
    nodes_.push_back(std::move(n));
    return static_cast<int>(nodes_.size()) - 1;
}

void Diagram::validate() const
{
    std::vector<std::vector<int>> seen(nodes_.size());
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
        if (!admissible(calc_, nodes_[i].kind))
            throw std::invalid_argument("Diagram::validate: generator " + kind_name(nodes_[i].kind) +
                                        " not allowed in " + calculus_name(calc_));
        seen[i].assign(static_cast<std::size_t>(nodes_[i].ports()), 0);
    }
    std::vector<int> ins(static_cast<std::size_t>(n_in_), 0), outs(static_cast<std::size_t>(n_out_), 0);
    auto mark = [&](const End& e) {
        switch (e.type) {
        case End::Type::Port:
            if (e.node < 0 || e.node >= static_cast<int>(nodes_.size()) || e.port < 0 ||
                e.port >= nodes_[static_cast<std::size_t>(e.node)].ports())
                throw std::invalid_argument("Diagram::validate: edge end refers to missing port");
            ++seen[static_cast<std::size_t>(e.node)][static_cast<std::size_t>(e.port)];
            break;
        case End::Type::In:
            if (e.port < 0 || e.port >= n_in_)
                throw std::invalid_argument("Diagram::validate: bad input index");
            ++ins[static_cast<std::size_t>(e.port)];
            break;
        case End::Type::Out:
            if (e.port < 0 || e.port >= n_out_)
                throw std::invalid_argument("Diagram::validate: bad output index");
            ++outs[static_cast<std::size_t>(e.port)];
            break;
        }
    };
    for (const auto& [a, b] : edges_) {
        mark(a);
        mark(b);
    }
    for (std::size_t i = 0; i < nodes_.size(); ++i)
        for (std::size_t p = 0; p < seen[i].size(); ++p)
            if (seen[i][p] != 1)
                throw std::invalid_argument("Diagram::validate: port " + std::to_string(p) + " of node " +
                                            std::to_string(i) + " (" + kind_name(nodes_[i].kind) + ") has " +
                                            std::to_string(seen[i][p]) + " edge ends");
    for (int k = 0; k < n_in_; ++k)
        if (ins[static_cast<std::size_t>(k)] != 1)
            throw std::invalid_argument("Diagram::validate: input " + std::to_string(k) + " not wired exactly once");
    for (int k = 0; k < n_out_; ++k)
        if (outs[static_cast<std::size_t>(k)] != 1)
            throw std::invalid_argument("Diagram::validate: output " + std::to_string(k) + " not wired exactly once");
}

std::set<std::string> Diagram::free_variables() const
{
    std::set<std::string> vs;
    for (const auto& n : nodes_)
        n.phase.collect_vars(vs);
    return vs;
}

bool Diagram::is_pi4_exact() const
{
    for (const auto& n : nodes_) {
        if ((n.kind == Kind::Z || n.kind == Kind::X) && !n.phase.is_pi4_exact())
            return false;
        if ((n.kind == Kind::WhiteZW || n.kind == Kind::Triangle) && !n.param.is_exact())
            return false;
    }
    return true;
}

void Diagram::push_group(std::uint32_t g)
{
    for (auto& n : nodes_)
        n.group.insert(n.group.begin(), g);
}

namespace {

Calculus join_calculus(Calculus a, Calculus b, const char* op)
{
    if (a == b)
        return a;
    if (a != Calculus::ZW && b != Calculus::ZW)
        return Calculus::ZXT;
    throw std::invalid_argument(std::string(op) + ": calculus mismatch (" + calculus_name(a) + " vs " +
                                calculus_name(b) + ")");
}

End shift(const End& e, int node_off, int in_off, int out_off)
{
    switch (e.type) {
    case End::Type::Port: return End::at(e.node + node_off, e.port);
    case End::Type::In: return End::in(e.port + in_off);
    case End::Type::Out: return End::out(e.port + out_off);
    }
    return e;
}

} // namespace

Diagram tensor(const Diagram& d1, const Diagram& d2)
{
    Diagram r(join_calculus(d1.calculus(), d2.calculus(), "tensor"), d1.inputs() + d2.inputs(),
              d1.outputs() + d2.outputs());
    auto& nodes = r.mutable_nodes();
    nodes = d1.nodes();
    nodes.insert(nodes.end(), d2.nodes().begin(), d2.nodes().end());
    auto& edges = r.mutable_edges();
    edges = d1.edges();
    int off = static_cast<int>(d1.node_count());
    for (const auto& [a, b] : d2.edges())
        edges.emplace_back(shift(a, off, d1.inputs(), d1.outputs()), shift(b, off, d1.inputs(), d1.outputs()));
    return r;
}

Diagram compose(const Diagram& d2, const Diagram& d1)
{
    if (d1.outputs() != d2.inputs())
        throw std::invalid_argument("compose: arity mismatch (" + std::to_string(d1.outputs()) + " outputs into " +
                                    std::to_string(d2.inputs()) + " inputs)");
    Diagram r(join_calculus(d1.calculus(), d2.calculus(), "compose"), d1.inputs(), d2.outputs());
    auto& nodes = r.mutable_nodes();
    nodes = d1.nodes();
    nodes.insert(nodes.end(), d2.nodes().begin(), d2.nodes().end());
    int off = static_cast<int>(d1.node_count());

    // junction k = d1 output k = d2 input k, encoded as node -(k+2)
    auto junction = [](int k) { return End{End::Type::Port, -(k + 2), 0}; };
    auto is_junction = [](const End& e) { return e.type == End::Type::Port && e.node <= -2; };
    std::vector<Edge> all;
    for (const auto& [a, b] : d1.edges()) {
        auto m = [&](const End& e) { return e.type == End::Type::Out ? junction(e.port) : e; };
        all.emplace_back(m(a), m(b));
    }
    for (const auto& [a, b] : d2.edges()) {
        auto m = [&](const End& e) { return e.type == End::Type::In ? junction(e.port) : shift(e, off, 0, 0); };
        all.emplace_back(m(a), m(b));
    }
    std::vector<std::vector<std::pair<std::size_t, int>>> jadj(static_cast<std::size_t>(d1.outputs()));
    for (std::size_t i = 0; i < all.size(); ++i) {
        if (is_junction(all[i].first))
            jadj[static_cast<std::size_t>(-all[i].first.node - 2)].emplace_back(i, 0);
        if (is_junction(all[i].second))
            jadj[static_cast<std::size_t>(-all[i].second.node - 2)].emplace_back(i, 1);
    }
    std::vector<char> used(all.size(), 0);
    auto& edges = r.mutable_edges();
    auto end_of = [&](std::size_t i, int side) { return side == 0 ? all[i].first : all[i].second; };
    for (std::size_t i = 0; i < all.size(); ++i) {
        if (used[i])
            continue;
        bool ja = is_junction(all[i].first), jb = is_junction(all[i].second);
        if (!ja && !jb) {
            used[i] = 1;
            edges.push_back(all[i]);
            continue;
        }
        if (ja && jb)
            continue;
        // walk from the real end through junctions
        End start = ja ? all[i].second : all[i].first;
        std::size_t cur = i;
        int side = ja ? 0 : 1;
        used[cur] = 1;
        while (true) {
            End j = end_of(cur, side);
            auto& adj = jadj[static_cast<std::size_t>(-j.node - 2)];
            if (adj.size() != 2)
                throw std::invalid_argument("compose: dangling boundary port");
            auto nxt = (adj[0].first == cur && adj[0].second == side) ? adj[1] : adj[0];
            cur = nxt.first;
            used[cur] = 1;
            End far = end_of(cur, 1 - nxt.second);
            if (!is_junction(far)) {
                edges.emplace_back(start, far);
                break;
            }
            side = 1 - nxt.second;
        }
    }
    for (std::size_t i = 0; i < all.size(); ++i)
        if (!used[i])
            throw std::invalid_argument("compose: closed wire without nodes");
    return r;
}

Diagram substitute(const Diagram& d, const Valuation& v)
{
    for (const auto& name : d.free_variables())
        if (!v.count(name))
            throw std::invalid_argument("substitute: missing variable " + name);
    Diagram r = d;
    for (auto& n : r.mutable_nodes())
        if (!n.phase.is_closed())
            n.phase = n.phase.substitute(v);
    return r;
}

Diagram flipped(const Diagram& d)
{
    Diagram r(d.calculus(), d.outputs(), d.inputs());
    r.mutable_nodes() = d.nodes();
    auto f = [](End e) {
        if (e.type == End::Type::In)
            e.type = End::Type::Out;
        else if (e.type == End::Type::Out)
            e.type = End::Type::In;
        return e;
    };
    for (const auto& [a, b] : d.edges())
        r.connect(f(a), f(b));
    return r;
}

Diagram color_swapped(const Diagram& d)
{
    Diagram r = d;
    for (auto& n : r.mutable_nodes()) {
        if (n.kind == Kind::Z)
            n.kind = Kind::X;
        else if (n.kind == Kind::X)
            n.kind = Kind::Z;
    }
    return r;
}

Diagram retagged(const Diagram& d, Calculus c)
{
    Diagram r = d;
    r.set_calculus(c);
    for (const auto& n : r.nodes())
        if (!admissible(c, n.kind))
            throw std::invalid_argument("retagged: generator " + kind_name(n.kind) + " not allowed in " +
                                        calculus_name(c));
    return r;
}

Diagram permute_outputs(const Diagram& d, const std::vector<int>& perm)
{
    if (static_cast<int>(perm.size()) != d.outputs())
        throw std::invalid_argument("permute_outputs: permutation size mismatch");
    std::vector<int> inv(perm.size());
    for (std::size_t k = 0; k < perm.size(); ++k)
        inv.at(static_cast<std::size_t>(perm[k])) = static_cast<int>(k);
    Diagram r = d;
    for (auto& [a, b] : r.mutable_edges()) {
        if (a.type == End::Type::Out)
            a.port = inv[static_cast<std::size_t>(a.port)];
        if (b.type == End::Type::Out)
            b.port = inv[static_cast<std::size_t>(b.port)];
    }
    return r;
}

Diagram permute_inputs(const Diagram& d, const std::vector<int>& perm)
{
    if (static_cast<int>(perm.size()) != d.inputs())
        throw std::invalid_argument("permute_inputs: permutation size mismatch");
    std::vector<int> inv(perm.size());
    for (std::size_t k = 0; k < perm.size(); ++k)
        inv.at(static_cast<std::size_t>(perm[k])) = static_cast<int>(k);
    Diagram r = d;
    for (auto& [a, b] : r.mutable_edges()) {
        if (a.type == End::Type::In)
            a.port = inv[static_cast<std::size_t>(a.port)];
        if (b.type == End::Type::In)
            b.port = inv[static_cast<std::size_t>(b.port)];
    }
    return r;
}

Diagram generator(Calculus c, const Node& n)
{
    Diagram d(c, n.n_in, n.n_out);
    int id = d.add_node(n);
    for (int k = 0; k < n.n_in; ++k)
        d.connect(End::in(k), End::at(id, k));
    for (int k = 0; k < n.n_out; ++k)
        d.connect(End::at(id, n.n_in + k), End::out(k));
    return d;
}

Diagram empty(Calculus c) { return Diagram(c, 0, 0); }

Diagram identity(int n, Calculus c)
{
    Diagram d(c, n, n);
    for (int k = 0; k < n; ++k)
        d.connect(End::in(k), End::out(k));
    return d;
}

Diagram zsp(const Phase& a, int n, int m)
{
    Node nd = make_node(Kind::Z, n, m);
    nd.phase = a;
    return generator(Calculus::ZX, nd);
}

Diagram xsp(const Phase& a, int n, int m)
{
    Node nd = make_node(Kind::X, n, m);
    nd.phase = a;
    return generator(Calculus::ZX, nd);
}

Diagram had() { return generator(Calculus::ZX, make_node(Kind::H)); }
Diagram cup(Calculus c) { return generator(c, make_node(Kind::Cup)); }
Diagram cap(Calculus c) { return generator(c, make_node(Kind::Cap)); }
Diagram swap(Calculus c) { return generator(c, make_node(Kind::Swap)); }

Diagram triangle(const Param& r)
{
    Node nd = make_node(Kind::Triangle);
    nd.param = r;
    return generator(Calculus::ZXT, nd);
}

Diagram white(const Param& r, int n, int m)
{
    Node nd = make_node(Kind::WhiteZW, n, m);
    nd.param = r;
    return generator(Calculus::ZW, nd);
}

Diagram black_not() { return generator(Calculus::ZW, make_node(Kind::BlackW1to1)); }
Diagram black_w() { return generator(Calculus::ZW, make_node(Kind::BlackW1to2)); }
Diagram white_sign() { return generator(Calculus::ZW, make_node(Kind::WhiteZW1to1)); }
Diagram white_merge() { return generator(Calculus::ZW, make_node(Kind::WhiteZW2to1)); }
Diagram zw_cross() { return generator(Calculus::ZW, make_node(Kind::ZWCross)); }
Diagram half() { return generator(Calculus::ZW, make_node(Kind::Half)); }

Diagram tensor_all(const std::vector<Diagram>& ds, Calculus c)
{
    Diagram r = empty(c);
    for (const auto& d : ds)
        r = tensor(r, d);
    return r;
}

Diagram seq_all(const std::vector<Diagram>& ds)
{
    if (ds.empty())
        throw std::invalid_argument("seq_all: empty sequence");
    Diagram r = ds.front();
    for (std::size_t i = 1; i < ds.size(); ++i)
        r = compose(ds[i], r);
    return r;
}

Diagram power(const Diagram& d, int k, Calculus c)
{
    Diagram r = empty(c);
    for (int i = 0; i < k; ++i)
        r = tensor(r, d);
    return r;
}

// isomorphism

namespace {

enum class Sym { Full, Fixed, Cyclic, Pairs };

Sym symmetry(Kind k)
{
    switch (k) {
    case Kind::Triangle: return Sym::Fixed;
    case Kind::ZWCross: return Sym::Cyclic;
    case Kind::Swap: return Sym::Pairs;
    default: return Sym::Full;
    }
}

// port permutations allowed for a node, empty list for fully symmetric kinds
std::vector<std::vector<int>> port_group(const Node& n)
{
    switch (symmetry(n.kind)) {
    case Sym::Full: return {};
    case Sym::Fixed: {
        std::vector<int> id(static_cast<std::size_t>(n.ports()));
        std::iota(id.begin(), id.end(), 0);
        return {id};
    }
    case Sym::Cyclic: {
        // ports around the node: in0, in1, out1, out0
        const int cyc[4] = {0, 1, 3, 2};
        std::vector<std::vector<int>> g;
        for (int r = 0; r < 4; ++r) {
            std::vector<int> p(4);
            for (int i = 0; i < 4; ++i)
                p[static_cast<std::size_t>(cyc[i])] = cyc[(i + r) % 4];
            g.push_back(p);
        }
        return g;
    }
    case Sym::Pairs: {
        // wires in0-out1 and in1-out0
        std::vector<std::vector<int>> g;
        std::vector<int> p = {0, 1, 2, 3};
        do {
            auto pair_of = [](int a) { return (a == 0 || a == 3) ? 0 : 1; };
            bool ok = pair_of(p[0]) == pair_of(p[3]) && pair_of(p[1]) == pair_of(p[2]);
            if (ok)
                g.push_back(p);
        } while (std::next_permutation(p.begin(), p.end()));
        return g;
    }
    }
    return {};
}

struct Graph {
    const Diagram* d;
    // opposite end for each node port
    std::vector<std::vector<End>> opp;
    std::vector<Edge> boundary_only;
};

Graph build_graph(const Diagram& d)
{
    Graph g;
    g.d = &d;
    g.opp.resize(d.node_count());
    for (std::size_t i = 0; i < d.node_count(); ++i)
        g.opp[i].resize(static_cast<std::size_t>(d.nodes()[i].ports()));
    for (const auto& [a, b] : d.edges()) {
        if (a.is_port())
            g.opp[static_cast<std::size_t>(a.node)][static_cast<std::size_t>(a.port)] = b;
        if (b.is_port())
            g.opp[static_cast<std::size_t>(b.node)][static_cast<std::size_t>(b.port)] = a;
        if (!a.is_port() && !b.is_port()) {
            Edge e = a < b ? Edge{a, b} : Edge{b, a};
            g.boundary_only.push_back(e);
        }
    }
    std::sort(g.boundary_only.begin(), g.boundary_only.end());
    return g;
}

std::string label_key(const Node& n)
{
    bool spider = n.kind == Kind::Z || n.kind == Kind::X || n.kind == Kind::WhiteZW;
    std::string s = kind_name(n.kind) + ":" +
                    (spider ? std::to_string(n.ports()) : std::to_string(n.n_in) + ":" + std::to_string(n.n_out));
    if (n.kind == Kind::Z || n.kind == Kind::X)
        s += ":" + n.phase.str();
    if (n.kind == Kind::WhiteZW || n.kind == Kind::Triangle)
        s += ":" + n.param.str();
    return s;
}

// joint colour refinement over both graphs
std::pair<std::vector<int>, std::vector<int>> refine(const Graph& g1, const Graph& g2)
{
    std::map<std::string, int> dict;
    auto intern = [&](const std::string& s) {
        auto it = dict.find(s);
        if (it != dict.end())
            return it->second;
        int id = static_cast<int>(dict.size());
        dict.emplace(s, id);
        return id;
    };
    auto init = [&](const Graph& g) {
        std::vector<int> c;
        for (const auto& n : g.d->nodes())
            c.push_back(intern(label_key(n)));
        return c;
    };
    std::vector<int> c1 = init(g1), c2 = init(g2);
    auto end_key = [](const End& e, const std::vector<int>& col, const Graph& g) {
        if (e.type == End::Type::In)
            return "i" + std::to_string(e.port);
        if (e.type == End::Type::Out)
            return "o" + std::to_string(e.port);
        const Node& n = g.d->nodes()[static_cast<std::size_t>(e.node)];
        std::string pc = symmetry(n.kind) == Sym::Fixed ? std::to_string(e.port) : "*";
        return "n" + std::to_string(col[static_cast<std::size_t>(e.node)]) + "/" + pc;
    };
    for (int round = 0; round < 64; ++round) {
        dict.clear();
        auto step = [&](const Graph& g, const std::vector<int>& col) {
            std::vector<int> nc;
            for (std::size_t i = 0; i < g.d->node_count(); ++i) {
                const Node& n = g.d->nodes()[i];
                std::vector<std::string> parts;
                for (std::size_t p = 0; p < g.opp[i].size(); ++p) {
                    std::string mine = symmetry(n.kind) == Sym::Fixed ? std::to_string(p) : "*";
                    parts.push_back(mine + ">" + end_key(g.opp[i][p], col, g));
                }
                std::sort(parts.begin(), parts.end());
                std::string key = std::to_string(col[i]) + "|";
                for (const auto& s : parts)
                    key += s + ";";
                nc.push_back(intern(key));
            }
            return nc;
        };
        auto n1 = step(g1, c1), n2 = step(g2, c2);
        auto classes = [](const std::vector<int>& v) { return std::set<int>(v.begin(), v.end()).size(); };
        bool stable = classes(n1) == classes(c1) && classes(n2) == classes(c2);
        c1 = std::move(n1);
        c2 = std::move(n2);
        if (stable)
            break;
    }
    return {c1, c2};
}

struct IsoSearch {
    const Graph& g1;
    const Graph& g2;
    std::vector<int> col1, col2;
    std::vector<int> map12, map21;
    std::vector<std::vector<int>> perm;
    std::vector<int> order;

    // descriptor of the far end of an edge after mapping
    std::string far_key(const End& e, bool first) const
    {
        if (e.type == End::Type::In)
            return "i" + std::to_string(e.port);
        if (e.type == End::Type::Out)
            return "o" + std::to_string(e.port);
        int node = first ? map12[static_cast<std::size_t>(e.node)] : e.node;
        const Graph& g = first ? g1 : g2;
        const Node& n = g.d->nodes()[static_cast<std::size_t>(e.node)];
        std::string pc = "*";
        if (symmetry(n.kind) != Sym::Full)
            pc = std::to_string(first ? perm[static_cast<std::size_t>(e.node)][static_cast<std::size_t>(e.port)] : e.port);
        return "n" + std::to_string(node) + "/" + pc;
    }

    bool mapped_end(const End& e, bool first) const
    {
        if (!e.is_port())
            return true;
        return first ? map12[static_cast<std::size_t>(e.node)] >= 0 : map21[static_cast<std::size_t>(e.node)] >= 0;
    }

    bool consistent(int u, int v) const
    {
        const Node& nu = g1.d->nodes()[static_cast<std::size_t>(u)];
        bool full = symmetry(nu.kind) == Sym::Full;
        std::vector<std::string> a, b;
        const auto& pu = perm[static_cast<std::size_t>(u)];
        for (std::size_t p = 0; p < g1.opp[static_cast<std::size_t>(u)].size(); ++p) {
            const End& e = g1.opp[static_cast<std::size_t>(u)][p];
            if (!mapped_end(e, true))
                continue;
            std::string mine = full ? "*" : std::to_string(pu[p]);
            a.push_back(mine + ">" + far_key(e, true));
        }
        for (std::size_t p = 0; p < g2.opp[static_cast<std::size_t>(v)].size(); ++p) {
            const End& e = g2.opp[static_cast<std::size_t>(v)][p];
            if (!mapped_end(e, false))
                continue;
            std::string mine = full ? "*" : std::to_string(p);
            b.push_back(mine + ">" + far_key(e, false));
        }
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        return a == b;
    }

    bool search(std::size_t k)
    {
        if (k == order.size())
            return true;
        int u = order[k];
        const Node& nu = g1.d->nodes()[static_cast<std::size_t>(u)];
        auto group = port_group(nu);
        if (group.empty())
            group.push_back({});
        for (std::size_t v = 0; v < g2.d->node_count(); ++v) {
            if (map21[v] >= 0 || col2[v] != col1[static_cast<std::size_t>(u)])
                continue;
            for (const auto& p : group) {
                map12[static_cast<std::size_t>(u)] = static_cast<int>(v);
                map21[v] = u;
                perm[static_cast<std::size_t>(u)] = p;
                if (consistent(u, static_cast<int>(v)) && search(k + 1))
                    return true;
                map12[static_cast<std::size_t>(u)] = -1;
                map21[v] = -1;
            }
        }
        return false;
    }
};

} // namespace

bool iso_equal(const Diagram& d1, const Diagram& d2)
{
    if (d1.inputs() != d2.inputs() || d1.outputs() != d2.outputs() || d1.node_count() != d2.node_count() ||
        d1.edges().size() != d2.edges().size())
        return false;
    Graph g1 = build_graph(d1), g2 = build_graph(d2);
    if (g1.boundary_only != g2.boundary_only)
        return false;
    auto [c1, c2] = refine(g1, g2);
    auto s1 = c1, s2 = c2;
    std::sort(s1.begin(), s1.end());
    std::sort(s2.begin(), s2.end());
    if (s1 != s2)
        return false;

    IsoSearch s{g1, g2, c1, c2, {}, {}, {}, {}};
    s.map12.assign(d1.node_count(), -1);
    s.map21.assign(d2.node_count(), -1);
    s.perm.assign(d1.node_count(), {});
    // breadth-first from the boundary so constraints bite early
    std::vector<char> seen(d1.node_count(), 0);
    std::vector<int> queue;
    for (const auto& [a, b] : d1.edges())
        for (const End& e : {a, b})
            if (e.is_port() && (!a.is_port() || !b.is_port()) && !seen[static_cast<std::size_t>(e.node)]) {
                seen[static_cast<std::size_t>(e.node)] = 1;
                queue.push_back(e.node);
            }
    for (std::size_t start = 0; start < d1.node_count(); ++start) {
        if (!seen[start]) {
            seen[start] = 1;
            queue.push_back(static_cast<int>(start));
        }
        for (std::size_t h = s.order.size(); h < queue.size(); ++h) {
            int u = queue[h];
            s.order.push_back(u);
            for (const End& e : g1.opp[static_cast<std::size_t>(u)])
                if (e.is_port() && !seen[static_cast<std::size_t>(e.node)]) {
                    seen[static_cast<std::size_t>(e.node)] = 1;
                    queue.push_back(e.node);
                }
        }
    }
    return s.search(0);
}

} // namespace zxw
