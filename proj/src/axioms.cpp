#include "zxw/axioms.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>
#include <stdexcept>

#include "zxw/gadgets.hpp"

namespace zxw {

namespace {

using PT = ParamSpec::Type;
constexpr double kPi = std::numbers::pi;

ParamSpec arity(const std::string& n, int lo, int hi) { return {PT::Arity, n, lo, hi}; }
ParamSpec angle(const std::string& n) { return {PT::Angle, n, 0, 0}; }
ParamSpec cplx(const std::string& n) { return {PT::Complex, n, 0, 0}; }

int ar(const Binding& b, const std::string& n) { return b.arity.at(n); }
const Phase& ph(const Binding& b, const std::string& n) { return b.angle.at(n); }
const Param& pr(const Binding& b, const std::string& n) { return b.complex.at(n); }

Param pmul(const Param& a, const Param& b)
{
    if (a.is_exact() && b.is_exact())
        return Param(a.exact() * b.exact());
    return Param(a.value() * b.value());
}

Param padd(const Param& a, const Param& b)
{
    if (a.is_exact() && b.is_exact())
        return Param(a.exact() + b.exact());
    return Param(a.value() + b.value());
}

Diagram hs(int n) { return power(had(), n, Calculus::ZX); }
Diagram xpi_n(int n) { return power(xsp(Phase::pi(1), 1, 1), n, Calculus::ZX); }

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
Diagram zw_split() { return compose(black_w(), black_not()); }
Diagram zw_merge() { return flipped(zw_split()); }
Diagram zw_id(int n = 1) { return identity(n, Calculus::ZW); }
Diagram zw_minus_one() { return seq_all({zw_one(), white_sign(), flipped(zw_one())}); }

Diagram zw_sign_trace()
{
    Builder g(Calculus::ZW, 0, 0);
    int s = g.node(Kind::WhiteZW1to1);
    g.link_ports(s, s);
    return g.done();
}

Diagram zw_cross_loop()
{
    Builder g(Calculus::ZW, 1, 1);
    int c = g.node(Kind::ZWCross);
    g.link(End::in(0), g.at(c, 0));
    g.link(g.at(c, 1), g.at(c, 3));
    g.link(g.at(c, 2), End::out(0));
    return g.done();
}

Diagram zx_w_merge() { return flipped(gadget::w_std()); }

// e^{i theta} tan(alpha), exact on the pi/4 grid
Param tan_param(const Phase& alpha, const Phase& theta)
{
    auto ka = alpha.pi4_multiple();
    auto kt = theta.pi4_multiple();
    if (ka && kt && *ka % 4 != 2) {
        int t = (*ka % 4 == 0) ? 0 : (*ka % 4 == 1 ? 1 : -1);
        return Param(Cyclo::omega_pow(*kt) * Cyclo(t));
    }
    double a = alpha.to_radians(), th = theta.to_radians();
    return Param(std::polar(1.0, th) * std::tan(a));
}

bool off_pole(const Phase& alpha)
{
    auto k = alpha.pi4_multiple();
    if (k)
        return *k % 4 != 2;
    return std::abs(std::cos(alpha.to_radians())) > 1e-3;
}

// sum of two cos-gadgets through W, and its single-parameter form
Diagram a_side(double b1, double t1, double b2, double t2)
{
    return seq_all({gadget::w_std(), tensor(gadget::cos_gadget(b1, t1), gadget::cos_gadget(b2, t2)), zx_w_merge()});
}

Rule rule(std::string name, std::vector<std::string> aliases, std::vector<ParamSpec> params,
          std::function<std::pair<Diagram, Diagram>(const Binding&)> build)
{
    Rule r;
    r.name = std::move(name);
    r.aliases = std::move(aliases);
    r.params = std::move(params);
    r.build = std::move(build);
    return r;
}

Rule fig1(Rule r)
{
    r.variants = true;
    return r;
}

Rule continuous(Rule r, bool exact = true)
{
    r.continuous = true;
    r.exact = exact;
    return r;
}

Rule with_domain(Rule r, std::function<bool(const Binding&)> dom)
{
    r.domain = std::move(dom);
    return r;
}

// Clifford rules

Rule rule_s()
{
    return fig1(rule("S", {}, {arity("n1", 0, 1), arity("m1", 0, 1), arity("n2", 0, 1), arity("m2", 0, 1), arity("k", 1, 3), angle("a"), angle("b")},
                     [](const Binding& b) {
                         int n1 = ar(b, "n1"), m1 = ar(b, "m1"), n2 = ar(b, "n2"), m2 = ar(b, "m2"), k = ar(b, "k");
                         Diagram l = compose(tensor(identity(m1), zsp(ph(b, "b"), k + n2, m2)),
                                             tensor(zsp(ph(b, "a"), n1, m1 + k), identity(n2)));
                         return std::pair{l, zsp(ph(b, "a") + ph(b, "b"), n1 + n2, m1 + m2)};
                     }));
}

Rule rule_i()
{
    return fig1(rule("I", {}, {}, [](const Binding&) { return std::pair{zsp(Phase(), 1, 1), identity(1)}; }));
}

Rule rule_h()
{
    return fig1(rule("H", {}, {arity("n", 0, 3), arity("m", 0, 3), angle("a")}, [](const Binding& b) {
        int n = ar(b, "n"), m = ar(b, "m");
        return std::pair{xsp(ph(b, "a"), n, m), seq_all({hs(n), zsp(ph(b, "a"), n, m), hs(m)})};
    }));
}

Rule rule_iv()
{
    return fig1(rule("IV", {}, {}, [](const Binding&) {
        return std::pair{tensor(gadget::bic(Phase(), Phase()), gadget::hopf3()), empty()};
    }));
}

Rule rule_b1()
{
    return with_domain(fig1(rule("B1", {"CP"}, {angle("a")},
                                 [](const Binding& b) {
                                     const Phase& a = ph(b, "a");
                                     Diagram l = tensor(compose(zsp(Phase(), 1, 2), xsp(a, 0, 1)), gadget::bic(Phase(), Phase()));
                                     return std::pair{l, tensor(xsp(a, 0, 1), xsp(a, 0, 1))};
                                 })),
                       [](const Binding& b) {
                           auto k = ph(b, "a").pi4_multiple();
                           return k && *k % 4 == 0;
                       });
}

Rule rule_b2()
{
    return fig1(rule("B2", {"B"}, {}, [](const Binding&) {
        Diagram l = compose(xsp(Phase(), 1, 2), zsp(Phase(), 2, 1));
        Diagram mid = tensor_all({identity(1), swap(), identity(1)}, Calculus::ZX);
        Diagram r = seq_all({tensor(xsp(Phase(), 1, 2), xsp(Phase(), 1, 2)), mid,
                             tensor(zsp(Phase(), 2, 1), zsp(Phase(), 2, 1))});
        return std::pair{l, tensor(r, gadget::bic(Phase(), Phase()))};
    }));
}

Rule rule_k()
{
    return with_domain(fig1(rule("K", {}, {arity("n", 0, 3), arity("m", 0, 3), angle("a")},
                                 [](const Binding& b) {
                                     int n = ar(b, "n"), m = ar(b, "m");
                                     const Phase& a = ph(b, "a");
                                     Diagram l = tensor(compose(zsp(a, n, m), xpi_n(n)), gadget::bic(Phase(), Phase()));
                                     Diagram r = tensor(compose(xpi_n(m), zsp(-a, n, m)), gadget::bic(a, Phase::pi(1)));
                                     return std::pair{l, r};
                                 })),
                       [](const Binding& b) { return ar(b, "n") + ar(b, "m") >= 1; });
}

Rule rule_eu()
{
    return fig1(rule("EU", {}, {}, [](const Binding&) {
        Phase q = Phase::pi(1, 2);
        Diagram r = seq_all({zsp(q, 1, 1), xsp(q, 1, 1), zsp(q, 1, 1)});
        return std::pair{tensor(had(), gadget::bic(Phase(), Phase())), tensor(r, zsp(-q, 0, 0))};
    }));
}

Rule rule_zo()
{
    return fig1(rule("ZO", {}, {}, [](const Binding&) {
        Diagram z = zsp(Phase::pi(1), 0, 0);
        return std::pair{tensor(z, identity(1)), tensor(z, compose(xsp(Phase(), 0, 1), xsp(Phase(), 1, 0)))};
    }));
}

// Clifford+T rules

Rule rule_sup()
{
    return continuous(rule("SUP", {}, {angle("a")}, [](const Binding& b) {
        const Phase& a = ph(b, "a");
        Diagram l = tensor(compose(xsp(Phase(), 2, 1), tensor(zsp(a, 0, 1), zsp(a + Phase::pi(1), 0, 1))), gadget::two());
        return std::pair{l, tensor(xsp(Phase(), 0, 1), zsp(a * 2 + Phase::pi(1), 0, 0))};
    }));
}

Rule rule_e()
{
    return rule("E", {}, {}, [](const Binding&) { return std::pair{gadget::bic(Phase::pi4(1), Phase::pi4(7)), empty()}; });
}

Rule rule_c()
{
    return continuous(rule("C", {}, {angle("a")}, [](const Binding& b) {
        const Phase& a = ph(b, "a");
        Diagram l = compose(gadget::parity_phase(a, 2), gadget::cnot());
        Diagram r = compose(gadget::cnot(), tensor(identity(1), zsp(a, 1, 1)));
        return std::pair{l, r};
    }));
}

Rule rule_bw()
{
    return rule("BW", {}, {}, [](const Binding&) {
        Diagram w = gadget::w_std();
        return std::pair{compose(tensor(w, identity(1)), w), compose(tensor(identity(1), w), w)};
    });
}

Rule rule_a()
{
    return continuous(rule("A", {}, {angle("b1"), angle("t1"), angle("b2"), angle("t2")},
                           [](const Binding& b) {
                               double b1 = ph(b, "b1").to_radians(), t1 = ph(b, "t1").to_radians();
                               double b2 = ph(b, "b2").to_radians(), t2 = ph(b, "t2").to_radians();
                               std::complex<double> s = std::polar(std::cos(b1), t1) + std::polar(std::cos(b2), t2);
                               double g = std::acos(std::min(1.0, std::abs(s) / 2));
                               double t3 = std::abs(s) == 0 ? 0.0 : std::arg(s);
                               return std::pair{a_side(b1, t1, b2, t2), a_side(g, t3, g, t3)};
                           }),
                      false);
}

Rule rule_td()
{
    return with_domain(continuous(rule("TD", {}, {angle("a"), angle("t")},
                                       [](const Binding& b) {
                                           const Phase& a = ph(b, "a");
                                           const Phase& t = ph(b, "t");
                                           Diagram l = tensor(triangle(tan_param(a, t)), zsp(a * 2, 0, 0));
                                           return std::pair{l, gadget::triangle_td(a * 2, t)};
                                       })),
                       [](const Binding& b) { return off_pole(ph(b, "a")); });
}

Rule rule_ta()
{
    return continuous(rule("TA", {}, {cplx("r"), cplx("s")}, [](const Binding& b) {
        const Param& r = pr(b, "r");
        const Param& s = pr(b, "s");
        return std::pair{compose(triangle(s), triangle(r)), triangle(padd(r, s))};
    }));
}

// ZW rules

Rule zw(std::string n, std::vector<ParamSpec> params, std::function<std::pair<Diagram, Diagram>(const Binding&)> f)
{
    std::string alias = n;
    Rule r = rule("ZW-" + n, {alias}, std::move(params), std::move(f));
    for (const auto& p : r.params)
        if (p.type == PT::Complex)
            r.continuous = true;
    return r;
}

std::vector<Rule> zw_rules()
{
    std::vector<Rule> rs;
    rs.push_back(zw("0a", {}, [](const Binding&) { return std::pair{compose(black_not(), black_not()), zw_id()}; }));
    rs.push_back(zw("0b", {}, [](const Binding&) { return std::pair{compose(white_sign(), white_sign()), zw_id()}; }));
    rs.push_back(zw("0c", {}, [](const Binding&) { return std::pair{white(Param(1), 1, 1), zw_id()}; }));
    rs.push_back(zw("1a", {}, [](const Binding&) {
        return std::pair{compose(white_merge(), tensor(white_merge(), zw_id())),
                         compose(white_merge(), tensor(zw_id(), white_merge()))};
    }));
    rs.push_back(zw("1b", {}, [](const Binding&) { return std::pair{compose(white_merge(), swap(Calculus::ZW)), white_merge()}; }));
    rs.push_back(zw("1c", {arity("n", 0, 2), arity("m", 0, 2), cplx("r1"), cplx("r2")}, [](const Binding& b) {
        int n = ar(b, "n"), m = ar(b, "m");
        return std::pair{compose(white(pr(b, "r2"), 1, m), white(pr(b, "r1"), n, 1)),
                         white(pmul(pr(b, "r1"), pr(b, "r2")), n, m)};
    }));
    rs.push_back(zw("2a", {}, [](const Binding&) {
        Diagram w = zw_split();
        return std::pair{compose(tensor(w, zw_id()), w), compose(tensor(zw_id(), w), w)};
    }));
    rs.push_back(zw("2b", {}, [](const Binding&) { return std::pair{compose(swap(Calculus::ZW), black_w()), black_w()}; }));
    rs.push_back(zw("2c", {}, [](const Binding&) {
        return std::pair{compose(tensor(zw_id(), flipped(zw_zero())), zw_split()), zw_id()};
    }));
    rs.push_back(zw("3a", {}, [](const Binding&) {
        return std::pair{compose(flipped(white_merge()), zw_zero()), tensor(zw_zero(), zw_zero())};
    }));
    rs.push_back(zw("3b", {cplx("r")}, [](const Binding& b) {
        Diagram w = white(pr(b, "r"), 1, 1);
        return std::pair{compose(w, zw_merge()), compose(zw_merge(), tensor(w, w))};
    }));
    rs.push_back(zw("4a", {cplx("r1"), cplx("r2")}, [](const Binding& b) {
        Diagram mid = tensor(white(pr(b, "r1"), 1, 1), white(pr(b, "r2"), 1, 1));
        return std::pair{seq_all({zw_split(), mid, zw_merge()}), white(padd(pr(b, "r1"), pr(b, "r2")), 1, 1)};
    }));
    rs.push_back(zw("4b", {}, [](const Binding&) {
        return std::pair{white(Param(0), 1, 1), compose(zw_zero(), flipped(zw_zero()))};
    }));
    rs.push_back(zw("5a", {}, [](const Binding&) { return std::pair{compose(zw_cross(), zw_cross()), zw_id(2)}; }));
    rs.push_back(zw("5b", {}, [](const Binding&) {
        return std::pair{compose(zw_cross(), tensor(zw_zero(), zw_id())), tensor(zw_id(), zw_zero())};
    }));
    rs.push_back(zw("5c", {}, [](const Binding&) {
        return std::pair{compose(zw_cross(), tensor(white_sign(), zw_id())), compose(tensor(zw_id(), white_sign()), zw_cross())};
    }));
    rs.push_back(zw("6a", {}, [](const Binding&) {
        return std::pair{compose(zw_cross(), tensor(black_not(), zw_id())),
                         compose(tensor(white_sign(), black_not()), zw_cross())};
    }));
    rs.push_back(zw("6b", {}, [](const Binding&) {
        return std::pair{tensor(compose(black_not(), white_sign()), zw_minus_one()), compose(white_sign(), black_not())};
    }));
    rs.push_back(zw("6c", {cplx("r")}, [](const Binding& b) {
        return std::pair{white(pr(b, "r"), 1, 2), compose(white(Param(1), 1, 2), white(pr(b, "r"), 1, 1))};
    }));
    rs.push_back(zw("7a", {}, [](const Binding&) { return std::pair{zw_cross_loop(), white_sign()}; }));
    rs.push_back(zw("7b", {}, [](const Binding&) {
        return std::pair{tensor(zw_sign_trace(), zw_id()), tensor(zw_sign_trace(), compose(zw_zero(), flipped(zw_zero())))};
    }));
    rs.push_back(zw("X", {}, [](const Binding&) {
        Diagram ss = tensor(white_sign(), white_sign());
        return std::pair{compose(zw_cross(), ss), compose(ss, zw_cross())};
    }));
    rs.push_back(zw("R3", {}, [](const Binding&) {
        Diagram a = tensor(zw_cross(), zw_id()), b = tensor(zw_id(), zw_cross());
        return std::pair{seq_all({a, b, a}), seq_all({b, a, b})};
    }));
    return rs;
}

Rule rule_half()
{
    return rule("ZW-half", {"half"}, {}, [](const Binding&) {
        return std::pair{tensor(half(), compose(cup(Calculus::ZW), cap(Calculus::ZW))), empty(Calculus::ZW)};
    });
}

std::vector<Rule> zx_pi2()
{
    return {rule_s(), rule_i(), rule_iv(), rule_b1(), rule_b2(), rule_k(), rule_eu(), rule_h(), rule_zo()};
}

std::vector<Rule> zx_pi4()
{
    std::vector<Rule> rs;
    for (auto& r : zx_pi2())
        if (r.name != "IV" && r.name != "ZO")
            rs.push_back(std::move(r));
    for (auto r : {rule_sup(), rule_e(), rule_c(), rule_bw()})
        rs.push_back(std::move(r));
    return rs;
}

std::string lower(std::string s)
{
    for (auto& c : s)
        c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return s;
}

std::vector<Param> exact_params()
{
    Cyclo w = Cyclo::omega_pow(1);
    return {Param(0),
            Param(1),
            Param(-1),
            Param(2),
            Param(Cyclo::half()),
            Param(w),
            Param(Cyclo::omega_pow(2)),
            Param(Cyclo(1) + w),
            Param(Cyclo(Dyadic(-3, 2), Dyadic(), Dyadic(1, 1), Dyadic()))};
}

} // namespace

std::string Binding::str() const
{
    std::ostringstream os;
    bool first = true;
    auto sep = [&]() {
        if (!first)
            os << ", ";
        first = false;
    };
    for (const auto& [k, v] : arity) {
        sep();
        os << k << "=" << v;
    }
    for (const auto& [k, v] : angle) {
        sep();
        os << k << "=" << v.str();
    }
    for (const auto& [k, v] : complex) {
        sep();
        os << k << "=" << v.str();
    }
    return os.str();
}

bool Rule::matches(const std::string& n) const
{
    if (lower(n) == lower(name))
        return true;
    return std::any_of(aliases.begin(), aliases.end(), [&](const std::string& a) { return lower(a) == lower(n); });
}

std::pair<Diagram, Diagram> instantiate(const Rule& r, const Binding& b)
{
    for (const auto& p : r.params) {
        bool have = p.type == PT::Arity ? b.arity.count(p.name) : p.type == PT::Angle ? b.angle.count(p.name)
                                                                                     : b.complex.count(p.name);
        if (!have)
            throw std::invalid_argument("instantiate: rule " + r.name + " missing parameter " + p.name);
        if (p.type == PT::Arity) {
            int v = b.arity.at(p.name);
            if (v < p.lo || v > p.hi)
                throw std::invalid_argument("instantiate: rule " + r.name + " arity " + p.name + "=" + std::to_string(v) +
                                            " outside [" + std::to_string(p.lo) + "," + std::to_string(p.hi) + "]");
        }
        if (p.type == PT::Angle && !b.angle.at(p.name).is_closed())
            throw std::invalid_argument("instantiate: rule " + r.name + " angle " + p.name + " is not closed");
    }
    if (r.domain && !r.domain(b))
        throw std::invalid_argument("instantiate: binding " + b.str() + " outside the domain of rule " + r.name);
    auto pr = r.build(b);
    if (pr.first.inputs() != pr.second.inputs() || pr.first.outputs() != pr.second.outputs())
        throw std::logic_error("instantiate: rule " + r.name + " produced mismatched arities");
    return pr;
}

const Rule* AxiomSet::find(const std::string& rule) const
{
    for (const auto& r : rules)
        if (r.matches(rule))
            return &r;
    return nullptr;
}

std::vector<std::string> axiom_set_names() { return {"zx-pi2", "zx-pi4", "zx-pi4-a", "zx-t", "zw", "zw-half"}; }

AxiomSet axiom_set(const std::string& name)
{
    std::string n = lower(name);
    for (auto& c : n)
        if (c == '_' || c == '+')
            c = '-';
    AxiomSet s;
    if (n == "zx-pi2" || n == "zxpi2") {
        s = {"zx-pi2", Calculus::ZX, zx_pi2()};
    } else if (n == "zx-pi4" || n == "zxpi4") {
        s = {"zx-pi4", Calculus::ZX, zx_pi4()};
    } else if (n == "zx-pi4-a" || n == "zxpi4-a") {
        s = {"zx-pi4-a", Calculus::ZX, zx_pi4()};
        s.rules.push_back(rule_a());
    } else if (n == "zx-t" || n == "zxt") {
        s = {"zx-t", Calculus::ZXT, zx_pi4()};
        s.rules.push_back(rule_td());
        s.rules.push_back(rule_ta());
    } else if (n == "zw") {
        s = {"zw", Calculus::ZW, zw_rules()};
    } else if (n == "zw-half" || n == "zwhalf") {
        s = {"zw-half", Calculus::ZW, zw_rules()};
        s.rules.push_back(rule_half());
    } else {
        throw std::invalid_argument("axiom_set: unknown set '" + name + "'");
    }
    return s;
}

std::vector<Rule> mutations()
{
    std::vector<Rule> ms;
    ms.push_back(rule("SUP~pi/2", {}, {}, [](const Binding&) {
        Phase a = Phase::pi4(1);
        Diagram l = tensor(compose(xsp(Phase(), 2, 1), tensor(zsp(Phase::pi(1, 2), 0, 1), zsp(a + Phase::pi(1), 0, 1))), gadget::two());
        return std::pair{l, tensor(xsp(Phase(), 0, 1), zsp(a * 2 + Phase::pi(1), 0, 0))};
    }));
    ms.push_back(rule("S~offset", {}, {angle("a"), angle("b")}, [](const Binding& b) {
        return std::pair{compose(zsp(ph(b, "b"), 1, 1), zsp(ph(b, "a"), 1, 1)),
                         zsp(ph(b, "a") + ph(b, "b") + Phase::pi4(1), 1, 1)};
    }));
    ms.push_back(rule("K~scalar", {}, {angle("a")}, [](const Binding& b) {
        const Phase& a = ph(b, "a");
        Diagram x = xsp(Phase::pi(1), 1, 1);
        return std::pair{compose(zsp(a, 1, 1), x), compose(x, zsp(-a, 1, 1))};
    }));
    ms.push_back(rule("EU~sign", {}, {}, [](const Binding&) {
        Phase q = Phase::pi(1, 2);
        Diagram r = seq_all({zsp(q, 1, 1), xsp(q, 1, 1), zsp(q, 1, 1)});
        return std::pair{tensor(had(), gadget::bic(Phase(), Phase())), tensor(r, zsp(q, 0, 0))};
    }));
    ms.push_back(rule("E~phase", {}, {}, [](const Binding&) {
        return std::pair{gadget::bic(Phase::pi4(1), Phase::pi4(1)), empty()};
    }));
    ms.push_back(rule("B2~scalar", {}, {}, [](const Binding&) {
        Diagram l = compose(xsp(Phase(), 1, 2), zsp(Phase(), 2, 1));
        Diagram mid = tensor_all({identity(1), swap(), identity(1)}, Calculus::ZX);
        Diagram r = seq_all({tensor(xsp(Phase(), 1, 2), xsp(Phase(), 1, 2)), mid,
                             tensor(zsp(Phase(), 2, 1), zsp(Phase(), 2, 1))});
        return std::pair{l, r};
    }));
    ms.push_back(zw("1c~sum", {cplx("r1"), cplx("r2")}, [](const Binding& b) {
        return std::pair{compose(white(pr(b, "r2"), 1, 1), white(pr(b, "r1"), 1, 1)),
                         white(padd(pr(b, "r1"), pr(b, "r2")), 1, 1)};
    }));
    ms.push_back(rule("ZW-half~missing", {}, {}, [](const Binding&) {
        return std::pair{compose(cup(Calculus::ZW), cap(Calculus::ZW)), empty(Calculus::ZW)};
    }));
    ms.push_back(zw("6b~sign", {}, [](const Binding&) {
        return std::pair{compose(black_not(), white_sign()), compose(white_sign(), black_not())};
    }));
    ms.push_back(continuous(rule("TA~product", {}, {cplx("r"), cplx("s")}, [](const Binding& b) {
        return std::pair{compose(triangle(pr(b, "s")), triangle(pr(b, "r"))), triangle(pmul(pr(b, "r"), pr(b, "s")))};
    })));
    return ms;
}

namespace {

struct Checker {
    const Rule& rule;
    const Budget& budget;
    RuleReport& rep;

    void fail(const Binding& b, const std::string& variant, AnyMatrix l, AnyMatrix r, std::string err)
    {
        ++rep.failure_count;
        if (rep.failures.size() < 3)
            rep.failures.push_back({b.str(), variant, std::move(l), std::move(r), std::move(err)});
    }

    void compare(const Binding& b, const std::string& variant, const Diagram& l, const Diagram& r, bool exact)
    {
        AnyMatrix ml, mr;
        try {
            InterpMode mode = exact ? InterpMode::exact() : InterpMode::floating(budget.tol);
            ml = interp(l, mode);
            mr = interp(r, mode);
        } catch (const std::exception& e) {
            fail(b, variant, ml, mr, e.what());
            return;
        }
        bool ok;
        if (ml.rows() != mr.rows() || ml.cols() != mr.cols())
            ok = false;
        else if (exact)
            ok = exact_equal(ml.exact(), mr.exact());
        else
            ok = approx_equal(ml.as_float(), mr.as_float(), budget.tol);
        if (!ok)
            fail(b, variant, std::move(ml), std::move(mr), "");
    }

    void check(const Binding& b, bool exact)
    {
        std::pair<Diagram, Diagram> pr;
        try {
            pr = instantiate(rule, b);
        } catch (const std::exception& e) {
            fail(b, "base", {}, {}, e.what());
            return;
        }
        exact = exact && exact_eligible(pr.first) && exact_eligible(pr.second);
        compare(b, "base", pr.first, pr.second, exact);
        if (rule.variants) {
            compare(b, "flipped", flipped(pr.first), flipped(pr.second), exact);
            compare(b, "colour-swapped", color_swapped(pr.first), color_swapped(pr.second), exact);
        }
        (exact ? rep.exact_instances : rep.float_instances)++;
    }
};

} // namespace

RuleReport verify_rule(const Rule& r, const Budget& budget, std::uint64_t seed)
{
    RuleReport rep;
    rep.rule = r.name;
    Checker ck{r, budget, rep};
    std::mt19937_64 rng(seed ^ std::hash<std::string>{}(r.name));

    if (r.exact) {
        // axis values per parameter
        std::vector<std::size_t> sizes;
        std::vector<Param> cvals = exact_params();
        for (const auto& p : r.params)
            sizes.push_back(p.type == PT::Arity ? static_cast<std::size_t>(p.hi - p.lo + 1)
                                                : p.type == PT::Angle ? 8 : cvals.size());
        std::size_t total = 1;
        for (auto s : sizes)
            total *= s;
        auto binding_at = [&](std::size_t idx) {
            Binding b;
            for (std::size_t i = 0; i < r.params.size(); ++i) {
                const auto& p = r.params[i];
                std::size_t v = idx % sizes[i];
                idx /= sizes[i];
                if (p.type == PT::Arity)
                    b.arity[p.name] = p.lo + static_cast<int>(v);
                else if (p.type == PT::Angle)
                    b.angle[p.name] = Phase::pi4(static_cast<std::int64_t>(v));
                else
                    b.complex[p.name] = cvals[v];
            }
            return b;
        };
        std::vector<std::size_t> order;
        if (total <= static_cast<std::size_t>(budget.max_exact)) {
            for (std::size_t i = 0; i < total; ++i)
                order.push_back(i);
        } else {
            rep.exhaustive = false;
            std::uniform_int_distribution<std::size_t> pick(0, total - 1);
            for (int i = 0; i < budget.max_exact; ++i)
                order.push_back(pick(rng));
        }
        for (auto idx : order) {
            Binding b = binding_at(idx);
            if (r.domain && !r.domain(b))
                continue;
            ck.check(b, true);
        }
    }

    if (r.continuous) {
        std::uniform_real_distribution<double> ang(0.0, 2 * kPi), mod(0.0, 3.0);
        int done = 0, attempts = 0;
        while (done < budget.float_samples && attempts < 20 * budget.float_samples + 100) {
            ++attempts;
            Binding b;
            for (const auto& p : r.params) {
                if (p.type == PT::Arity)
                    b.arity[p.name] = std::uniform_int_distribution<int>(p.lo, p.hi)(rng);
                else if (p.type == PT::Angle)
                    b.angle[p.name] = Phase::radians(ang(rng));
                else
                    b.complex[p.name] = Param(std::polar(mod(rng), ang(rng)));
            }
            if (r.domain && !r.domain(b))
                continue;
            ck.check(b, false);
            ++done;
        }
    }
    return rep;
}

bool Report::pass() const
{
    return std::all_of(rules.begin(), rules.end(), [](const RuleReport& r) { return r.pass(); });
}

Report verify_soundness(const AxiomSet& set, const Budget& budget, std::uint64_t seed)
{
    Report rep;
    rep.set = set.name;
    for (const auto& r : set.rules)
        rep.rules.push_back(verify_rule(r, budget, seed));
    return rep;
}

} // namespace zxw
