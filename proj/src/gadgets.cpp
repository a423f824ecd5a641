#include "zxw/gadgets.hpp"

#include <stdexcept>

namespace zxw {

int Builder::spider(Kind k, const Phase& a, int legs)
{
    Node n = make_node(k, 0, legs);
    n.phase = a;
    return add(std::move(n));
}

int Builder::white(const Param& r, int legs)
{
    Node n = make_node(Kind::WhiteZW, 0, legs);
    n.param = r;
    return add(std::move(n));
}

End Builder::port(int node)
{
    int& p = next_.at(static_cast<std::size_t>(node));
    if (p >= d_.node(node).ports())
        throw std::logic_error("Builder::port: node " + std::to_string(node) + " has no free port");
    return End::at(node, p++);
}

int Builder::splice(const Diagram& sub, std::vector<End>& ins, std::vector<End>& outs)
{
    int off = static_cast<int>(d_.node_count());
    for (const auto& n : sub.nodes()) {
        d_.mutable_nodes().push_back(n);
        next_.push_back(n.ports());
    }
    if (d_.calculus() != sub.calculus()) {
        if (d_.calculus() == Calculus::ZW || sub.calculus() == Calculus::ZW)
            throw std::invalid_argument("Builder::splice: calculus mismatch");
        d_.set_calculus(Calculus::ZXT);
    }
    ins.assign(static_cast<std::size_t>(sub.inputs()), End{});
    outs.assign(static_cast<std::size_t>(sub.outputs()), End{});
    auto shift = [&](End e) {
        if (e.is_port())
            e.node += off;
        return e;
    };
    for (const auto& [a0, b0] : sub.edges()) {
        End a = shift(a0), b = shift(b0);
        if (a.is_port() && b.is_port()) {
            d_.connect(a, b);
        } else if (!a.is_port() && !b.is_port()) {
            throw std::invalid_argument("Builder::splice: pass-through wire");
        } else {
            End bd = a.is_port() ? b : a;
            End in = a.is_port() ? a : b;
            (bd.type == End::Type::In ? ins : outs)[static_cast<std::size_t>(bd.port)] = in;
        }
    }
    return off;
}

std::vector<End> Builder::feed(const Diagram& sub, const std::vector<End>& ins)
{
    if (static_cast<int>(ins.size()) != sub.inputs())
        throw std::invalid_argument("Builder::feed: arity mismatch");
    int off = static_cast<int>(d_.node_count());
    for (const auto& n : sub.nodes()) {
        d_.mutable_nodes().push_back(n);
        next_.push_back(n.ports());
    }
    if (d_.calculus() != sub.calculus()) {
        if (d_.calculus() == Calculus::ZW || sub.calculus() == Calculus::ZW)
            throw std::invalid_argument("Builder::feed: calculus mismatch");
        d_.set_calculus(Calculus::ZXT);
    }
    std::vector<End> outs(static_cast<std::size_t>(sub.outputs()));
    auto map = [&](End e) {
        if (e.is_port())
            e.node += off;
        else if (e.type == End::Type::In)
            e = ins[static_cast<std::size_t>(e.port)];
        return e;
    };
    for (const auto& [a0, b0] : sub.edges()) {
        End a = map(a0), b = map(b0);
        if (a.type == End::Type::Out && b.type == End::Type::Out)
            throw std::invalid_argument("Builder::feed: output-to-output wire");
        if (a.type == End::Type::Out)
            outs[static_cast<std::size_t>(a.port)] = b;
        else if (b.type == End::Type::Out)
            outs[static_cast<std::size_t>(b.port)] = a;
        else
            d_.connect(a, b);
    }
    return outs;
}

void Builder::scalar(const Diagram& s)
{
    if (s.inputs() != 0 || s.outputs() != 0)
        throw std::invalid_argument("Builder::scalar: not a scalar diagram");
    feed(s, {});
}

Diagram Builder::done() const
{
    d_.validate();
    return d_;
}

namespace gadget {

Diagram bic(const Phase& a, const Phase& b) { return compose(xsp(b, 1, 0), zsp(a, 0, 1)); }

Diagram hopf3()
{
    Builder g(Calculus::ZX, 0, 0);
    int z = g.z(Phase(), 3), x = g.x(Phase(), 3);
    for (int k = 0; k < 3; ++k)
        g.link_ports(z, x);
    return g.done();
}

Diagram two() { return zsp(Phase(), 0, 0); }

Diagram sqrt2_pow(int k)
{
    Diagram r = empty();
    for (int i = 0; i < k; ++i)
        r = tensor(r, bic(Phase(), Phase()));
    for (int i = 0; i < -k; ++i)
        r = tensor(r, hopf3());
    return r;
}

Diagram phase_scalar(const Phase& a) { return tensor(bic(a, Phase::pi(1)), hopf3()); }

Diagram grid_inverse(int k)
{
    k %= 8;
    if (k < 0)
        k += 8;
    // bicolour phases in units of pi/4, found by exhaustive search over pairs
    static const int table[8][2] = {{-1, -1}, {2, 7}, {3, 7}, {5, 6}, {-1, -1}, {2, 3}, {1, 5}, {1, 6}};
    if (k == 4)
        throw std::domain_error("grid_inverse: 1 + e^{i pi} = 0 has no inverse");
    if (k == 0)
        return tensor(hopf3(), hopf3());
    return tensor(bic(Phase::pi4(table[k][0]), Phase::pi4(table[k][1])), hopf3());
}

namespace {

// half-triangle core between two c-side ends and two a-side ends
void core_into(Builder& g, End c0, End c1, End a0, End a1)
{
    int h = g.z(Phase::pi4(1), 3);
    auto gad = [&](std::vector<End> legs, int k) {
        int hub = g.x(Phase(), static_cast<int>(legs.size()) + 1);
        int leaf = g.z(Phase::pi4(k), 1);
        for (const End& e : legs)
            g.link(g.port(hub), e);
        g.link(g.port(hub), g.port(leaf));
    };
    gad({g.port(h), c0}, -1);
    gad({g.port(h), a0}, 1);
    gad({g.port(h), c1, a1}, -1);
}

Diagram w_impl(const Phase& head, bool keep)
{
    Builder g(keep ? Calculus::ZXT : Calculus::ZX, 1, 2);
    int x = g.x(head, 3);
    int legs = keep ? 3 : 4;
    int a = g.z(Phase(), legs), b = g.z(Phase(), legs);
    g.link(End::in(0), g.port(x));
    g.link_ports(x, a);
    g.link_ports(x, b);
    g.link(g.port(a), End::out(0));
    g.link(g.port(b), End::out(1));
    if (keep) {
        int c = g.z(Phase::pi(1), 2);
        for (int s : {a, b}) {
            int t = g.node(Kind::Triangle);
            g.link(g.port(s), g.at(t, 0));
            g.link(g.at(t, 1), g.port(c));
        }
        g.scalar(bic(Phase(), Phase()));
    } else {
        int c = g.z(Phase::pi(1), 4);
        for (int s : {a, b}) {
            End c0 = g.port(c), c1 = g.port(c);
            End s0 = g.port(s), s1 = g.port(s);
            core_into(g, c0, c1, s0, s1);
        }
        g.scalar(two());
        g.scalar(two());
        g.scalar(bic(Phase(), Phase()));
    }
    return g.done();
}

Diagram cz_impl(bool crossed)
{
    Builder g(Calculus::ZX, 2, 2);
    int a = g.z(Phase(), 3), b = g.z(Phase(), 3), h = g.node(Kind::H);
    g.link(End::in(0), g.port(a));
    g.link(End::in(1), g.port(b));
    g.link(g.port(a), End::out(crossed ? 1 : 0));
    g.link(g.port(b), End::out(crossed ? 0 : 1));
    g.link_ports(a, h);
    g.link_ports(h, b);
    g.scalar(bic(Phase(), Phase()));
    return g.done();
}

} // namespace

Diagram triangle_core()
{
    Builder g(Calculus::ZX, 1, 1);
    int a = g.z(Phase(), 3), c = g.z(Phase(), 3);
    g.link(End::in(0), g.port(a));
    g.link(g.port(c), End::out(0));
    End c0 = g.port(c), c1 = g.port(c), a0 = g.port(a), a1 = g.port(a);
    core_into(g, c0, c1, a0, a1);
    return g.done();
}

Diagram triangle_zx() { return tensor(triangle_core(), two()); }

Diagram w_std(bool keep_triangles) { return w_impl(Phase(), keep_triangles); }
Diagram w_black(bool keep_triangles) { return w_impl(Phase::pi(1), keep_triangles); }
Diagram cz() { return cz_impl(false); }
Diagram cross_zx() { return cz_impl(true); }

Diagram cnot()
{
    Builder g(Calculus::ZX, 2, 2);
    int c = g.z(Phase(), 3), t = g.x(Phase(), 3);
    g.link(End::in(0), g.port(c));
    g.link(End::in(1), g.port(t));
    g.link(g.port(c), End::out(0));
    g.link(g.port(t), End::out(1));
    g.link_ports(c, t);
    g.scalar(bic(Phase(), Phase()));
    return g.done();
}

Diagram parity_phase(const Phase& a, int k)
{
    Builder g(Calculus::ZX, k, k);
    int hub = g.x(Phase(), k + 1);
    for (int i = 0; i < k; ++i) {
        int s = g.z(Phase(), 3);
        g.link(End::in(i), g.port(s));
        g.link(g.port(s), End::out(i));
        g.link_ports(s, hub);
    }
    int leaf = g.z(a, 1);
    g.link_ports(hub, leaf);
    g.scalar(sqrt2_pow(k - 1));
    return g.done();
}

Diagram cos_gadget(double beta, double theta)
{
    Builder g(Calculus::ZX, 1, 1);
    int s = g.z(Phase::radians(theta), 3);
    g.link(End::in(0), g.port(s));
    g.link(g.port(s), End::out(0));
    int hub = g.x(Phase(), 3);
    g.link_ports(s, hub);
    int p = g.z(Phase::radians(beta), 1), m = g.z(Phase::radians(-beta), 1);
    g.link_ports(hub, p);
    g.link_ports(hub, m);
    return g.done();
}

Diagram triangle_td(const Phase& two_alpha, const Phase& theta, bool keep_triangles)
{
    Builder g(keep_triangles ? Calculus::ZXT : Calculus::ZX, 1, 1);
    int a = g.z(Phase(), 3), c = g.z(Phase(), 3);
    int hub = g.x(Phase(), 3), p = g.z(theta + Phase::pi(1, 2), 2), leaf = g.x(two_alpha, 1);
    g.link(End::in(0), g.port(a));
    End ta = g.port(a), tc = g.port(c);
    if (keep_triangles) {
        int t = g.node(Kind::Triangle);
        g.link(ta, g.at(t, 0));
        g.link(g.at(t, 1), tc);
    } else {
        auto outs = g.feed(triangle_zx(), {ta});
        g.link(outs[0], tc);
    }
    g.link(g.port(c), End::out(0));
    g.link_ports(a, hub);
    g.link_ports(c, hub);
    g.link_ports(hub, p);
    g.link_ports(p, leaf);
    g.scalar(two());
    return g.done();
}

Diagram two_state(bool keep_triangles)
{
    Diagram t = keep_triangles ? triangle(Param(1)) : triangle_zx();
    return seq_all({zsp(Phase(), 0, 1), t, xsp(Phase::pi(1), 1, 1)});
}

} // namespace gadget

} // namespace zxw
