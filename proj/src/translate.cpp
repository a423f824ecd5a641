#include "zxw/translate.hpp"

#include <cmath>
#include <algorithm>
#include <map>
#include <optional>
#include <numbers>
#include <stdexcept>
#include <string>
#include <tuple>

#include "zxw/gadgets.hpp"
#include "zxw/net.hpp"

namespace zxw {

namespace {

constexpr double kPi = std::numbers::pi;
using Term = std::pair<std::vector<int>, int>; // leg bits, sign

// ZW building blocks

Diagram zw_one()
{
    Builder g(Calculus::ZW, 0, 1);
    int w = g.node(Kind::BlackW1to2);
    g.link(g.port(w), End::out(0));
    g.link_ports(w, w);
    return g.done();
}

Diagram zw_zero() { return compose(black_not(), zw_one()); }

// k-leg tensor, 1 on all zeros and sign on all ones
Diagram ghz(int k, int sign = 1)
{
    if (k == 0) {
        if (sign > 0)
            return compose(cup(Calculus::ZW), cap(Calculus::ZW));
        Builder g(Calculus::ZW, 0, 0);
        int s = g.node(Kind::WhiteZW1to1);
        g.link_ports(s, s);
        return g.done();
    }
    if (k == 1) {
        Builder g(Calculus::ZW, 0, 1);
        int z = g.node(Kind::WhiteZW2to1);
        g.link(g.at(z, 0), g.at(z, 1));
        if (sign > 0) {
            int s = g.node(Kind::WhiteZW1to1);
            g.link(g.at(z, 2), g.at(s, 0));
            g.link(g.at(s, 1), End::out(0));
        } else {
            g.link(g.at(z, 2), End::out(0));
        }
        return g.done();
    }
    if (k == 2) {
        Diagram c = cap(Calculus::ZW);
        return sign > 0 ? c : compose(tensor(white_sign(), identity(1, Calculus::ZW)), c);
    }
    Builder g(Calculus::ZW, 0, k);
    std::vector<int> zs;
    for (int i = 0; i < k - 2; ++i)
        zs.push_back(g.node(Kind::WhiteZW2to1));
    for (std::size_t i = 0; i + 1 < zs.size(); ++i)
        g.link(g.at(zs[i], 2), g.at(zs[i + 1], 0));
    std::vector<End> ext{g.at(zs[0], 0)};
    for (int z : zs)
        ext.push_back(g.at(z, 1));
    ext.push_back(g.at(zs.back(), 2));
    bool flip = ((k - 2) % 2 == 1) != (sign < 0);
    for (int i = 0; i < k; ++i) {
        if (i == 0 && flip) {
            int s = g.node(Kind::WhiteZW1to1);
            g.link(ext[0], g.at(s, 0));
            g.link(g.at(s, 1), End::out(0));
        } else {
            g.link(ext[static_cast<std::size_t>(i)], End::out(i));
        }
    }
    return g.done();
}

// sum of the k one-hot basis states
Diagram onehot(int k)
{
    if (k < 1)
        throw std::logic_error("onehot: needs at least one leg");
    if (k == 1)
        return zw_one();
    Builder g(Calculus::ZW, 0, k);
    if (k == 2) {
        int n = g.node(Kind::BlackW1to1);
        g.link(g.at(n, 0), End::out(0));
        g.link(g.at(n, 1), End::out(1));
        return g.done();
    }
    std::vector<int> ws;
    for (int i = 0; i < k - 2; ++i)
        ws.push_back(g.node(Kind::BlackW1to2));
    for (std::size_t i = 0; i + 1 < ws.size(); ++i) {
        int n = g.node(Kind::BlackW1to1);
        g.link(g.at(ws[i], 2), g.at(n, 0));
        g.link(g.at(n, 1), g.at(ws[i + 1], 0));
    }
    std::vector<End> ext{g.at(ws[0], 0)};
    for (int w : ws)
        ext.push_back(g.at(w, 1));
    ext.push_back(g.at(ws.back(), 2));
    for (int i = 0; i < k; ++i)
        g.link(ext[static_cast<std::size_t>(i)], End::out(i));
    return g.done();
}

// ZW diagram with tensor 2^-halves * sum of signed basis terms over inputs then outputs
Diagram synth(int nin, int nout, const std::vector<Term>& terms, int halves)
{
    int legs = nin + nout;
    Net net(Calculus::ZW, nin, nout);
    int src = net.add(onehot(static_cast<int>(terms.size())));
    std::vector<std::vector<Net::Leg>> copies(static_cast<std::size_t>(legs));
    for (std::size_t t = 0; t < terms.size(); ++t) {
        const auto& [bits, sign] = terms[t];
        Net::Leg cur = net.output(src, static_cast<int>(t));
        if (sign < 0) {
            int z = net.add(white_sign());
            net.link(cur, net.input(z, 0));
            cur = net.output(z, 0);
        }
        std::vector<int> ones;
        for (int l = 0; l < legs; ++l)
            if (bits[static_cast<std::size_t>(l)])
                ones.push_back(l);
        if (ones.empty()) {
            int g = net.add(ghz(1));
            net.link(cur, net.output(g, 0));
        } else if (ones.size() == 1) {
            copies[static_cast<std::size_t>(ones[0])].push_back(cur);
        } else {
            int g = net.add(ghz(static_cast<int>(ones.size()) + 1));
            net.link(cur, net.output(g, 0));
            for (std::size_t i = 0; i < ones.size(); ++i)
                copies[static_cast<std::size_t>(ones[i])].push_back(net.output(g, static_cast<int>(i) + 1));
        }
    }
    for (int l = 0; l < legs; ++l) {
        Net::Leg b = l < nin ? net.in(l) : net.out(l - nin);
        const auto& cs = copies[static_cast<std::size_t>(l)];
        if (cs.empty()) {
            int z = net.add(zw_zero());
            net.link(net.output(z, 0), b);
        } else if (cs.size() == 1) {
            net.link(cs[0], b);
        } else {
            int d = static_cast<int>(cs.size());
            int oh = net.add(onehot(d + 1));
            for (int i = 0; i < d; ++i)
                net.link(cs[static_cast<std::size_t>(i)], net.output(oh, i));
            int n = net.add(black_not());
            net.link(net.output(oh, d), net.input(n, 0));
            net.link(net.output(n, 0), b);
        }
    }
    for (int h = 0; h < halves; ++h)
        net.add(half());
    return net.build();
}

// w^k on the register index j = 2 r1 + r0: e_j -> +-e_{j+k}
std::pair<int, int> shift(int j, int k)
{
    int t = j + k;
    int sign = ((t / 4) % 2 == 0) ? 1 : -1;
    return {t % 4, sign};
}

std::vector<int> bits_of(std::initializer_list<std::pair<int, int>> fields)
{
    // (value, width) pairs, most significant first
    std::vector<int> r;
    for (auto [v, w] : fields)
        for (int b = w - 1; b >= 0; --b)
            r.push_back((v >> b) & 1);
    return r;
}

// control, register in -> register out: identity when control is 0, w^k when 1
Diagram ctrl_w(int k)
{
    std::vector<Term> terms;
    for (int c = 0; c < 2; ++c)
        for (int j = 0; j < 4; ++j) {
            auto [o, s] = c ? shift(j, k) : std::pair{j, 1};
            terms.push_back({bits_of({{c, 1}, {j, 2}, {o, 2}}), s});
        }
    return synth(3, 2, terms, 0);
}

// (w - w^3)/2, the image of 1/sqrt2
Diagram r2()
{
    std::vector<Term> terms;
    for (int j = 0; j < 4; ++j) {
        auto [o1, s1] = shift(j, 1);
        auto [o3, s3] = shift(j, 3);
        terms.push_back({bits_of({{j, 2}, {o1, 2}}), s1});
        terms.push_back({bits_of({{j, 2}, {o3, 2}}), -s3});
    }
    return synth(2, 2, terms, 1);
}

// (a, b) -> (-1)^{ab}
Diagram h_int()
{
    Net net(Calculus::ZW, 1, 1);
    int x = net.add(zw_cross());
    net.link(net.in(0), net.input(x, 0));
    net.link(net.input(x, 1), net.out(0));
    for (int k = 0; k < 2; ++k) {
        int g = net.add(ghz(1));
        net.link(net.output(x, k), net.output(g, 0));
    }
    return net.build();
}

Diagram zw_id(int n) { return identity(n, Calculus::ZW); }

Diagram z_hat(int k, int n, int m)
{
    Net net(Calculus::ZW, n + kRegister, m + kRegister);
    auto leg = [&](int i) { return i < n ? net.in(i) : net.out(i - n); };
    if (k == 0) {
        int g = net.add(ghz(n + m));
        for (int i = 0; i < n + m; ++i)
            net.link(net.output(g, i), leg(i));
        for (int t = 0; t < kRegister; ++t)
            net.link(net.in(n + t), net.out(m + t));
        return net.build();
    }
    int g = net.add(ghz(n + m + 1));
    for (int i = 0; i < n + m; ++i)
        net.link(net.output(g, i), leg(i));
    int cw = net.add(ctrl_w(k));
    net.link(net.output(g, n + m), net.input(cw, 0));
    for (int t = 0; t < kRegister; ++t) {
        net.link(net.in(n + t), net.input(cw, 1 + t));
        net.link(net.output(cw, t), net.out(m + t));
    }
    return net.build();
}

Diagram x_hat(int k, int n, int m)
{
    Net net(Calculus::ZW, n + kRegister, m + kRegister);
    int z = net.add(z_hat(k, n, m));
    for (int i = 0; i < n; ++i) {
        int h = net.add(h_int());
        net.link(net.in(i), net.input(h, 0));
        net.link(net.output(h, 0), net.input(z, i));
    }
    for (int i = 0; i < m; ++i) {
        int h = net.add(h_int());
        net.link(net.output(z, i), net.input(h, 0));
        net.link(net.output(h, 0), net.out(i));
    }
    if ((n + m) % 2 == 1) {
        int r = net.add(r2());
        for (int t = 0; t < kRegister; ++t) {
            net.link(net.in(n + t), net.input(z, n + t));
            net.link(net.output(z, m + t), net.input(r, t));
            net.link(net.output(r, t), net.out(m + t));
        }
    } else {
        for (int t = 0; t < kRegister; ++t) {
            net.link(net.in(n + t), net.input(z, n + t));
            net.link(net.output(z, m + t), net.out(m + t));
        }
    }
    for (int h = 0; h < (n + m) / 2; ++h)
        net.add(half());
    return net.build();
}

Diagram h_hat() { return tensor(h_int(), r2()); }

int grid_k(const Phase& p, const char* who)
{
    if (!p.is_closed())
        throw std::domain_error(std::string(who) + ": free variable in phase " + p.str());
    auto k = p.pi4_multiple();
    if (!k)
        throw std::domain_error(std::string(who) + ": phase " + p.str() + " is not a multiple of pi/4");
    return *k;
}

// r = +-w^k 2^N exactly
std::optional<std::pair<int, int>> unit_power_of_two(const Cyclo& r)
{
    for (int N = 0; N <= 32; ++N)
        for (int k = 0; k < 8; ++k)
            if (Cyclo::omega_pow(k).scaled(N) == r)
                return std::pair{k, N};
    return std::nullopt;
}

Diagram white_build(const Phase& theta, const Phase& beta, int N, int n, int m, bool keep, bool cos_leg)
{
    Builder g(keep ? Calculus::ZXT : Calculus::ZX, n, m);
    int s = g.z(theta, n + m + N + (cos_leg ? 1 : 0));
    for (int i = 0; i < n; ++i)
        g.link(End::in(i), g.port(s));
    for (int i = 0; i < m; ++i)
        g.link(g.port(s), End::out(i));
    if (cos_leg) {
        int hub = g.x(Phase(), 3);
        g.link_ports(s, hub);
        int p = g.z(beta, 1), q = g.z(-beta, 1);
        g.link_ports(hub, p);
        g.link_ports(hub, q);
        g.scalar(gadget::hopf3());
    }
    for (int i = 0; i < N; ++i) {
        auto outs = g.feed(gadget::two_state(keep), {});
        g.link(g.port(s), outs[0]);
    }
    return g.done();
}

Diagram white_param(const Param& r, int n, int m, bool keep)
{
    if (r.is_exact()) {
        if (r.exact().is_zero()) {
            Builder g(keep ? Calculus::ZXT : Calculus::ZX, n, m);
            int s = g.z(Phase(), n + m + 1);
            for (int i = 0; i < n; ++i)
                g.link(End::in(i), g.port(s));
            for (int i = 0; i < m; ++i)
                g.link(g.port(s), End::out(i));
            int x = g.x(Phase(), 1);
            g.link_ports(s, x);
            g.scalar(gadget::hopf3());
            return g.done();
        }
        if (auto kn = unit_power_of_two(r.exact()))
            return white_build(Phase::pi4(kn->first), Phase(), kn->second, n, m, keep, false);
    }
    ParamEncoding e = encode_param(r.value());
    return white_build(Phase::radians(e.theta), Phase::radians(e.beta), e.n, n, m, keep, true);
}

Diagram zx_of(const Node& n, bool keep)
{
    switch (n.kind) {
    case Kind::WhiteZW1to1: return zsp(Phase::pi(1), 1, 1);
    case Kind::WhiteZW2to1: return zsp(Phase::pi(1), 2, 1);
    case Kind::BlackW1to1: return xsp(Phase::pi(1), 1, 1);
    case Kind::BlackW1to2: return gadget::w_black(keep);
    case Kind::ZWCross: return gadget::cross_zx();
    case Kind::Half: return tensor(gadget::hopf3(), gadget::hopf3());
    case Kind::Cup: return cup();
    case Kind::Cap: return cap();
    case Kind::Swap: return swap();
    case Kind::WhiteZW: return white_param(n.param, n.n_in, n.n_out, keep);
    default: throw std::invalid_argument("zw_to_zx: " + kind_name(n.kind) + " is not a ZW generator");
    }
}

std::optional<std::pair<int, int>> exact_triangle(const Cyclo& r)
{
    // tan(j pi/8) for j = 1, 2, 3
    Cyclo s2 = Cyclo::sqrt2();
    const Cyclo tans[3] = {s2 - Cyclo(1), Cyclo(1), s2 + Cyclo(1)};
    for (int j = 0; j < 3; ++j)
        for (int k = 0; k < 8; ++k)
            if (Cyclo::omega_pow(k) * tans[j] == r)
                return std::pair{j + 1, k};
    return std::nullopt;
}

} // namespace

ParamEncoding encode_param(std::complex<double> r)
{
    ParamEncoding e;
    double rho = std::abs(r);
    if (rho == 0.0) {
        e.beta = kPi / 2;
        return e;
    }
    e.n = std::max(0, static_cast<int>(std::ceil(std::log2(rho))));
    while (std::ldexp(1.0, e.n) < rho)
        ++e.n;
    e.beta = std::acos(std::min(1.0, rho / std::ldexp(1.0, e.n)));
    e.gamma = std::acos(1.0 / std::ldexp(1.0, e.n));
    e.theta = std::arg(r);
    return e;
}

SumEncoding encode_sum(std::complex<double> r1, std::complex<double> r2)
{
    std::complex<double> s = r1 + r2;
    SumEncoding e;
    e.n = encode_param(s).n;
    e.theta3 = std::abs(s) == 0.0 ? 0.0 : std::arg(s);
    e.lambda = std::acos(s / (std::polar(1.0, e.theta3) * std::ldexp(1.0, e.n)));
    return e;
}

GnInverse gn_inverse(const Phase& alpha)
{
    if (!alpha.is_closed())
        throw std::invalid_argument("gn_inverse: free variable in " + alpha.str());
    double a = alpha.to_radians();
    auto k = alpha.pi4_multiple();
    double c = std::cos(a / 2);
    if ((k && ((*k % 8) + 8) % 8 == 4) || std::abs(c) < 1e-12)
        throw std::domain_error("gn_inverse: alpha = pi mod 2pi has no inverse");
    GnInverse r;
    while (std::ldexp(std::abs(c), r.n) < 1.0)
        ++r.n;
    r.beta = 2 * std::acos(std::clamp(1.0 / (std::ldexp(c, r.n)), -1.0, 1.0));
    if (k) {
        r.diagram = gadget::grid_inverse(*k);
    } else {
        Phase b = Phase::radians(r.beta);
        r.diagram = tensor_all({zsp(b, 0, 0), gadget::bic(Phase::radians(-(a + r.beta) / 2), Phase::pi(1)),
                                gadget::sqrt2_pow(2 * r.n - 5)},
                               Calculus::ZX);
    }
    return r;
}

Diagram zx_to_zw(const Diagram& d0)
{
    if (d0.calculus() == Calculus::ZW)
        throw std::invalid_argument("zx_to_zw: input is already a ZW diagram");
    Diagram d = d0.calculus() == Calculus::ZXT ? expand_triangle(d0, true) : d0;
    std::map<std::tuple<int, int, int, int>, Diagram> memo;
    auto f = [&](const Node& n) -> Diagram {
        int k = 0;
        if (n.kind == Kind::Z || n.kind == Kind::X)
            k = ((grid_k(n.phase, "zx_to_zw") % 8) + 8) % 8;
        auto key = std::tuple{static_cast<int>(n.kind), k, n.n_in, n.n_out};
        auto it = memo.find(key);
        if (it != memo.end())
            return it->second;
        Diagram r;
        switch (n.kind) {
        case Kind::Z: r = z_hat(k, n.n_in, n.n_out); break;
        case Kind::X: r = x_hat(k, n.n_in, n.n_out); break;
        case Kind::H: r = h_hat(); break;
        case Kind::Cup: r = tensor(cup(Calculus::ZW), zw_id(kRegister)); break;
        case Kind::Cap: r = tensor(cap(Calculus::ZW), zw_id(kRegister)); break;
        case Kind::Swap: r = tensor(swap(Calculus::ZW), zw_id(kRegister)); break;
        default: throw std::invalid_argument("zx_to_zw: unexpected generator " + kind_name(n.kind));
        }
        memo.emplace(key, r);
        return r;
    };
    return replace_nodes(d, Calculus::ZW, f, kRegister);
}

Diagram zw_to_zx(const Diagram& d, bool keep_triangles)
{
    if (d.calculus() != Calculus::ZW)
        throw std::invalid_argument("zw_to_zx: input is not a ZW diagram");
    return replace_nodes(d, keep_triangles ? Calculus::ZXT : Calculus::ZX,
                         [&](const Node& n) { return zx_of(n, keep_triangles); });
}

Diagram register_state() { return tensor(zsp(Phase::pi(-1, 2), 0, 1), zsp(Phase::pi4(-1), 0, 1)); }

Diagram register_effect()
{
    Diagram quarter = power(gadget::hopf3(), 4, Calculus::ZX);
    return tensor_all({zsp(Phase::pi(1, 2), 1, 0), zsp(Phase::pi4(1), 1, 0), quarter}, Calculus::ZX);
}

Diagram round_trip(const Diagram& d)
{
    Diagram x = zw_to_zx(zx_to_zw(d));
    Diagram pre = tensor(identity(d.inputs()), register_state());
    Diagram post = tensor(identity(d.outputs()), register_effect());
    return seq_all({pre, x, post});
}

Diagram white_zx(std::complex<double> r, int n, int m, bool keep_triangles)
{
    return white_param(Param(r), n, m, keep_triangles);
}

Diagram white_from_sum(const SumEncoding& e, int n, int m)
{
    if (std::abs(e.lambda.imag()) > 1e-9)
        throw std::domain_error("white_from_sum: lambda is not real");
    return white_build(Phase::radians(e.theta3), Phase::radians(e.lambda.real()), e.n, n, m, false, true);
}

Diagram triangle_decomposition(const Param& r, bool require_exact)
{
    if (r.is_exact()) {
        if (r.exact().is_zero())
            return identity(1);
        if (r.exact() == Cyclo(1))
            return gadget::triangle_zx();
        if (auto jk = exact_triangle(r.exact())) {
            Phase two_alpha = Phase::pi4(jk->first);
            return tensor(gadget::triangle_td(two_alpha, Phase::pi4(jk->second), false), gn_inverse(two_alpha).diagram);
        }
    }
    if (require_exact)
        throw std::domain_error("expand_triangle: parameter " + r.str() + " has no exact pi/4 decomposition");
    std::complex<double> v = r.value();
    double alpha = std::atan(std::abs(v));
    double theta = std::abs(v) == 0.0 ? 0.0 : std::arg(v);
    Phase two_alpha = Phase::radians(2 * alpha);
    return tensor(gadget::triangle_td(two_alpha, Phase::radians(theta), false), gn_inverse(two_alpha).diagram);
}

Diagram expand_triangle(const Diagram& d, bool require_exact)
{
    if (d.calculus() == Calculus::ZW)
        throw std::invalid_argument("expand_triangle: ZW diagram");
    return replace_nodes(d, Calculus::ZX, [&](const Node& n) {
        if (n.kind == Kind::Triangle)
            return triangle_decomposition(n.param, require_exact);
        return generator(Calculus::ZX, n);
    });
}

std::pair<Diagram, Diagram> parallel_triangles(const Param& r, const Param& s)
{
    Diagram lhs = seq_all({zsp(Phase(), 1, 2), tensor(flipped(triangle(r)), flipped(triangle(s))),
                           flipped(gadget::w_std(true))});
    Param sum = r.is_exact() && s.is_exact() ? Param(r.exact() + s.exact()) : Param(r.value() + s.value());
    Diagram proj = tensor_all({compose(xsp(Phase(), 0, 1), xsp(Phase(), 1, 0)), gadget::hopf3(), gadget::hopf3()},
                              Calculus::ZX);
    Diagram rhs = compose(flipped(triangle(sum)), proj);
    return {lhs, rhs};
}

TriangleSplit split_triangle(std::complex<double> s)
{
    TriangleSplit t;
    double m = std::abs(s);
    t.n = std::max(1, static_cast<int>(std::ceil(m / 2)));
    t.theta = std::acos(std::min(1.0, m / (2.0 * t.n)));
    t.alpha = m == 0.0 ? 0.0 : std::arg(s);
    std::vector<Diagram> steps;
    for (int i = 0; i < t.n; ++i) {
        steps.push_back(triangle(Param(std::polar(1.0, t.alpha + t.theta))));
        steps.push_back(triangle(Param(std::polar(1.0, t.alpha - t.theta))));
    }
    t.chain = seq_all(steps);
    return t;
}

} // namespace zxw
