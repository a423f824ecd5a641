#include "zxw/dsl.hpp"

#include <cctype>
#include <cmath>
#include <sstream>
#include <vector>

namespace zxw {

ParseError::ParseError(int line, int column, const std::string& msg)
    : std::invalid_argument("parse: " + std::to_string(line) + ":" + std::to_string(column) + ": " + msg),
      line_(line), column_(column)
{
}

namespace {

struct Sx {
    bool list = false;
    std::string atom;
    std::vector<Sx> items;
    int line = 1, col = 1;

    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(line, col, msg); }
    const std::string& head() const
    {
        if (!list || items.empty() || items[0].list)
            fail("expected a form with a symbol head");
        return items[0].atom;
    }
};

class Reader {
public:
    Reader(const std::string& s, int line_offset) : s_(s), line_(1 + line_offset) {}

    Sx read_all()
    {
        skip();
        if (i_ >= s_.size())
            throw ParseError(line_, col_, "empty input");
        Sx x = read();
        skip();
        if (i_ < s_.size())
            throw ParseError(line_, col_, "trailing input after the diagram");
        return x;
    }

private:
    const std::string& s_;
    std::size_t i_ = 0;
    int line_, col_ = 1;

    void bump()
    {
        if (s_[i_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++i_;
    }
    void skip()
    {
        while (i_ < s_.size()) {
            if (std::isspace(static_cast<unsigned char>(s_[i_])))
                bump();
            else if (s_[i_] == ';')
                while (i_ < s_.size() && s_[i_] != '\n')
                    bump();
            else
                break;
        }
    }
    Sx read()
    {
        Sx x;
        x.line = line_;
        x.col = col_;
        if (s_[i_] == ')')
            throw ParseError(line_, col_, "unexpected ')'");
        if (s_[i_] == '(') {
            x.list = true;
            bump();
            for (;;) {
                skip();
                if (i_ >= s_.size())
                    throw ParseError(x.line, x.col, "unclosed '('");
                if (s_[i_] == ')') {
                    bump();
                    return x;
                }
                x.items.push_back(read());
            }
        }
        while (i_ < s_.size() && !std::isspace(static_cast<unsigned char>(s_[i_])) && s_[i_] != '(' && s_[i_] != ')' &&
               s_[i_] != ';') {
            x.atom += s_[i_];
            bump();
        }
        return x;
    }
};

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }

// split "a+b-c" into signed terms, keeping exponent signs inside numbers
std::vector<std::string> signed_terms(const std::string& s)
{
    std::vector<std::string> out;
    std::string cur;
    auto numeric = [&] {
        std::size_t k = !cur.empty() && (cur[0] == '+' || cur[0] == '-') ? 1 : 0;
        return k < cur.size() && (std::isdigit(static_cast<unsigned char>(cur[k])) || cur[k] == '.');
    };
    for (std::size_t i = 0; i < s.size(); ++i) {
        char c = s[i];
        if ((c == '+' || c == '-') && i > 0) {
            char p = s[i - 1];
            bool exponent = (p == 'e' || p == 'E') && numeric();
            if (!exponent && p != '*' && p != '/') {
                out.push_back(cur);
                cur.clear();
            }
        }
        cur += c;
    }
    out.push_back(cur);
    return out;
}

bool parse_int(const std::string& s, long long& v)
{
    if (s.empty())
        return false;
    std::size_t used = 0;
    try {
        v = std::stoll(s, &used);
    } catch (const std::exception&) {
        return false;
    }
    return used == s.size();
}

bool parse_double(const std::string& s, double& v)
{
    if (s.empty())
        return false;
    std::size_t used = 0;
    try {
        v = std::stod(s, &used);
    } catch (const std::exception&) {
        return false;
    }
    return used == s.size();
}

bool looks_float(const std::string& s) { return s.find_first_of(".eE") != std::string::npos; }

// n, n/2^k, n/m with m a power of two
bool parse_dyadic(const std::string& s, Dyadic& out)
{
    if (s.empty() || looks_float(s))
        return false;
    auto slash = s.find('/');
    long long den = 1;
    std::string head = s.substr(0, slash);
    if (slash != std::string::npos) {
        std::string tail = s.substr(slash + 1);
        if (tail.rfind("2^", 0) == 0) {
            try {
                out = Dyadic::parse(s);
                return true;
            } catch (const std::invalid_argument&) {
                return false;
            }
        }
        if (!parse_int(tail, den) || den <= 0 || (den & (den - 1)) != 0)
            return false;
    }
    std::size_t start = (!head.empty() && (head[0] == '-' || head[0] == '+')) ? 1 : 0;
    if (start == head.size())
        return false;
    for (std::size_t i = start; i < head.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(head[i])))
            return false;
    int e = 0;
    while ((1LL << e) < den)
        ++e;
    out = Dyadic(BigInt(head[0] == '+' ? head.substr(1) : head), e);
    return true;
}

std::string lower(std::string s)
{
    for (auto& c : s)
        c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return s;
}

int as_count(const Sx& x, const char* what)
{
    long long v = 0;
    if (x.list || !parse_int(x.atom, v) || v < 0 || v > 64)
        x.fail(std::string("expected a wire count for ") + what);
    return static_cast<int>(v);
}

int as_index(const Sx& x, const char* what)
{
    long long v = 0;
    if (x.list || !parse_int(x.atom, v) || v < 0 || v > 1000000000)
        x.fail(std::string("expected an index for ") + what);
    return static_cast<int>(v);
}

Phase phase_at(const Sx& x)
{
    if (x.list)
        x.fail("expected a phase");
    try {
        return parse_phase(x.atom);
    } catch (const std::invalid_argument& e) {
        x.fail(e.what());
    }
}

Param param_at(const Sx& x)
{
    if (x.list)
        x.fail("expected a parameter");
    try {
        return parse_param(x.atom);
    } catch (const std::invalid_argument& e) {
        x.fail(e.what());
    }
}

void expect_size(const Sx& x, std::size_t n)
{
    if (x.items.size() != n)
        x.fail("'" + x.head() + "' takes " + std::to_string(n - 1) + " argument(s)");
}

// generator node for an atom or generator form; nullopt if not a generator
std::optional<Node> generator_node(const Sx& x)
{
    auto plain = [](Kind k) { return std::optional<Node>(make_node(k)); };
    if (!x.list) {
        const std::string& a = x.atom;
        if (a == "H")
            return plain(Kind::H);
        if (a == "cup")
            return plain(Kind::Cup);
        if (a == "cap")
            return plain(Kind::Cap);
        if (a == "swap")
            return plain(Kind::Swap);
        if (a == "half")
            return plain(Kind::Half);
        if (a == "zw-cross")
            return plain(Kind::ZWCross);
        if (a == "tri")
            return plain(Kind::Triangle);
        return std::nullopt;
    }
    const std::string& h = x.head();
    if (h == "Z" || h == "X") {
        expect_size(x, 4);
        Node n = make_node(h == "Z" ? Kind::Z : Kind::X, as_count(x.items[1], "a spider"), as_count(x.items[2], "a spider"));
        n.phase = phase_at(x.items[3]);
        return n;
    }
    if (h == "white") {
        expect_size(x, 4);
        Node n = make_node(Kind::WhiteZW, as_count(x.items[1], "white"), as_count(x.items[2], "white"));
        n.param = param_at(x.items[3]);
        return n;
    }
    if (h == "W" || h == "zw-z") {
        expect_size(x, 3);
        int a = as_count(x.items[1], h.c_str()), b = as_count(x.items[2], h.c_str());
        if (h == "W" && a == 1 && b == 2)
            return plain(Kind::BlackW1to2);
        if (h == "W" && a == 1 && b == 1)
            return plain(Kind::BlackW1to1);
        if (h == "zw-z" && a == 1 && b == 1)
            return plain(Kind::WhiteZW1to1);
        if (h == "zw-z" && a == 2 && b == 1)
            return plain(Kind::WhiteZW2to1);
        x.fail("no generator (" + h + " " + std::to_string(a) + " " + std::to_string(b) + ")");
    }
    if (h == "zw-cross") {
        expect_size(x, 1);
        return plain(Kind::ZWCross);
    }
    if (h == "tri") {
        expect_size(x, 2);
        Node n = make_node(Kind::Triangle);
        n.param = param_at(x.items[1]);
        return n;
    }
    return std::nullopt;
}

// calculus forced by the generators used; neutral text gives nullopt
struct Usage {
    bool zx = false, zw = false, tri = false;
    const Sx* zx_at = nullptr;
    const Sx* zw_at = nullptr;
};

void scan(const Sx& x, Usage& u)
{
    if (x.list && !x.items.empty() && !x.items[0].list) {
        const std::string& h = x.items[0].atom;
        if (h == "seq" || h == "ten") {
            for (std::size_t i = 1; i < x.items.size(); ++i)
                scan(x.items[i], u);
            return;
        }
        if (h == "id")
            return;
    }
    auto n = generator_node(x);
    if (!n)
        return;
    switch (n->kind) {
    case Kind::Z:
    case Kind::X:
    case Kind::H:
        u.zx = true;
        if (!u.zx_at)
            u.zx_at = &x;
        break;
    case Kind::Triangle:
        u.tri = true;
        if (!u.zx_at)
            u.zx_at = &x;
        break;
    case Kind::Cup:
    case Kind::Cap:
    case Kind::Swap: break;
    default:
        u.zw = true;
        if (!u.zw_at)
            u.zw_at = &x;
    }
}

Calculus infer(const Sx& x, std::optional<Calculus> hint)
{
    Usage u;
    scan(x, u);
    if (u.zw && (u.zx || u.tri))
        u.zx_at->fail("ZX generator mixed with ZW generators");
    if (u.zw)
        return Calculus::ZW;
    if (u.tri)
        return Calculus::ZXT;
    if (u.zx)
        return hint && *hint == Calculus::ZXT ? Calculus::ZXT : Calculus::ZX;
    return hint.value_or(Calculus::ZX);
}

Diagram build(const Sx& x, Calculus c)
{
    if (!x.list) {
        if (x.atom == "id")
            return identity(1, c);
        if (x.atom == "empty")
            return empty(c);
    } else if (!x.items.empty() && !x.items[0].list) {
        const std::string& h = x.items[0].atom;
        if (h == "seq" || h == "ten") {
            if (x.items.size() < 2)
                x.fail("'" + h + "' needs at least one argument");
            Diagram d = build(x.items[1], c);
            for (std::size_t i = 2; i < x.items.size(); ++i) {
                Diagram e = build(x.items[i], c);
                if (h == "seq" && d.outputs() != e.inputs())
                    x.items[i].fail("arity mismatch in seq: " + std::to_string(d.outputs()) + " output(s) into " +
                                    std::to_string(e.inputs()) + " input(s)");
                d = h == "seq" ? compose(e, d) : tensor(d, e);
            }
            return d;
        }
        if (h == "id") {
            expect_size(x, 2);
            return identity(as_count(x.items[1], "id"), c);
        }
    }
    auto n = generator_node(x);
    if (!n)
        x.fail("unknown form '" + (x.list ? x.head() : x.atom) + "'");
    if (!admissible(c, n->kind))
        x.fail("generator " + kind_name(n->kind) + " is not part of " + calculus_name(c));
    return generator(c, *n);
}

End end_at(const Sx& x, int n_in, int n_out, const Diagram& d)
{
    const std::string& h = x.head();
    if (h == "in" || h == "out") {
        expect_size(x, 2);
        int k = as_index(x.items[1], h.c_str());
        if (k >= (h == "in" ? n_in : n_out))
            x.items[1].fail("boundary index out of range");
        return h == "in" ? End::in(k) : End::out(k);
    }
    if (h == "port") {
        expect_size(x, 3);
        int node = as_index(x.items[1], "port");
        int p = as_index(x.items[2], "port");
        if (node >= static_cast<int>(d.node_count()))
            x.items[1].fail("unknown node " + std::to_string(node));
        if (p >= d.node(node).ports())
            x.items[2].fail("node " + std::to_string(node) + " has no port " + std::to_string(p));
        return End::at(node, p);
    }
    x.fail("expected (in k), (out k) or (port NODE PORT)");
}

Diagram netlist(const Sx& x)
{
    if (x.items.size() < 4)
        x.fail("diagram needs a calculus, (inputs n) and (outputs m)");
    Calculus c;
    if (x.items[1].list)
        x.items[1].fail("expected a calculus tag");
    try {
        c = parse_calculus_tag(x.items[1].atom);
    } catch (const std::invalid_argument& e) {
        x.items[1].fail(e.what());
    }
    auto count = [&](const Sx& f, const char* name) {
        if (!f.list || f.head() != name)
            f.fail(std::string("expected (") + name + " n)");
        expect_size(f, 2);
        return as_index(f.items[1], name);
    };
    int n_in = count(x.items[2], "inputs");
    int n_out = count(x.items[3], "outputs");
    Diagram d(c, n_in, n_out);
    for (std::size_t i = 4; i < x.items.size(); ++i) {
        const Sx& f = x.items[i];
        const std::string& h = f.head();
        if (h == "node") {
            expect_size(f, 3);
            int id = as_index(f.items[1], "node");
            if (id != static_cast<int>(d.node_count()))
                f.items[1].fail("nodes must be numbered 0, 1, ... in order");
            auto n = generator_node(f.items[2]);
            if (!n)
                f.items[2].fail("unknown generator");
            if (!admissible(c, n->kind))
                f.items[2].fail("generator " + kind_name(n->kind) + " is not part of " + calculus_name(c));
            d.add_node(*n);
        } else if (h == "edge") {
            expect_size(f, 3);
            d.connect(end_at(f.items[1], n_in, n_out, d), end_at(f.items[2], n_in, n_out, d));
        } else {
            f.fail("expected (node ...) or (edge ...)");
        }
    }
    try {
        d.validate();
    } catch (const std::invalid_argument& e) {
        x.fail(e.what());
    }
    return d;
}

std::string node_text(const Node& n)
{
    auto arity = [&] { return std::to_string(n.n_in) + " " + std::to_string(n.n_out); };
    switch (n.kind) {
    case Kind::Z: return "(Z " + arity() + " " + n.phase.str() + ")";
    case Kind::X: return "(X " + arity() + " " + n.phase.str() + ")";
    case Kind::H: return "H";
    case Kind::Cup: return "cup";
    case Kind::Cap: return "cap";
    case Kind::Swap: return "swap";
    case Kind::WhiteZW: return "(white " + arity() + " " + n.param.str() + ")";
    case Kind::BlackW1to1: return "(W 1 1)";
    case Kind::BlackW1to2: return "(W 1 2)";
    case Kind::WhiteZW1to1: return "(zw-z 1 1)";
    case Kind::WhiteZW2to1: return "(zw-z 2 1)";
    case Kind::ZWCross: return "(zw-cross)";
    case Kind::Half: return "half";
    case Kind::Triangle: return "(tri " + n.param.str() + ")";
    }
    return "?";
}

std::string end_text(const End& e)
{
    switch (e.type) {
    case End::Type::In: return "(in " + std::to_string(e.port) + ")";
    case End::Type::Out: return "(out " + std::to_string(e.port) + ")";
    case End::Type::Port: break;
    }
    return "(port " + std::to_string(e.node) + " " + std::to_string(e.port) + ")";
}

} // namespace

std::string calculus_tag(Calculus c)
{
    switch (c) {
    case Calculus::ZX: return "zx";
    case Calculus::ZW: return "zw";
    case Calculus::ZXT: return "zxt";
    }
    return "zx";
}

Calculus parse_calculus_tag(const std::string& s)
{
    std::string t = lower(s);
    if (t == "zx")
        return Calculus::ZX;
    if (t == "zw")
        return Calculus::ZW;
    if (t == "zxt" || t == "zx_t")
        return Calculus::ZXT;
    throw std::invalid_argument("parse_calculus_tag: unknown calculus '" + s + "'");
}

Phase parse_phase(const std::string& s)
{
    if (s.empty())
        throw std::invalid_argument("parse_phase: empty phase");
    Phase total;
    bool any_float = false;
    double rad = 0.0;
    for (std::string t : signed_terms(s)) {
        int sign = 1;
        if (!t.empty() && (t[0] == '+' || t[0] == '-')) {
            sign = t[0] == '-' ? -1 : 1;
            t = t.substr(1);
        }
        if (t.empty())
            throw std::invalid_argument("parse_phase: dangling sign in '" + s + "'");
        // coefficient
        long long coeff = 1;
        auto star = t.find('*');
        std::string body = t;
        if (star != std::string::npos) {
            if (!parse_int(t.substr(0, star), coeff))
                throw std::invalid_argument("parse_phase: bad coefficient in '" + t + "'");
            body = t.substr(star + 1);
        }
        long long q = 1;
        auto slash = body.find('/');
        std::string atom = body.substr(0, slash);
        if (slash != std::string::npos && (!parse_int(body.substr(slash + 1), q) || q <= 0))
            throw std::invalid_argument("parse_phase: bad denominator in '" + t + "'");
        if (atom == "pi") {
            total += Phase::pi(sign * coeff, q);
        } else if (!atom.empty() && is_ident_start(atom[0])) {
            if (slash != std::string::npos)
                throw std::invalid_argument("parse_phase: variables take integer coefficients, got '" + t + "'");
            for (char c : atom)
                if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_')
                    throw std::invalid_argument("parse_phase: bad variable name '" + atom + "'");
            total += Phase::var(atom, sign * coeff);
        } else {
            double v = 0;
            long long iv = 0;
            if (star == std::string::npos && slash == std::string::npos && parse_int(atom, iv) && iv == 0)
                continue;
            if (star != std::string::npos || !parse_double(atom, v))
                throw std::invalid_argument("parse_phase: bad term '" + t + "'");
            if (slash != std::string::npos)
                v /= static_cast<double>(q);
            rad += sign * v;
            any_float = true;
        }
    }
    if (any_float)
        total += Phase::radians(rad);
    return total;
}

Param parse_param(const std::string& s)
{
    if (s.empty())
        throw std::invalid_argument("parse_param: empty parameter");
    if (s.front() == '[') {
        if (s.back() != ']')
            throw std::invalid_argument("parse_param: unclosed '[' in '" + s + "'");
        std::vector<Dyadic> c;
        std::stringstream ss(s.substr(1, s.size() - 2));
        std::string part;
        while (std::getline(ss, part, ',')) {
            Dyadic d;
            if (!parse_dyadic(part, d))
                throw std::invalid_argument("parse_param: bad coordinate '" + part + "'");
            c.push_back(d);
        }
        if (c.size() != 4)
            throw std::invalid_argument("parse_param: expected 4 coordinates in '" + s + "'");
        return Param(Cyclo(c[0], c[1], c[2], c[3]));
    }
    auto at = s.find('@');
    if (at != std::string::npos) {
        std::string rs = s.substr(0, at);
        Phase th = parse_phase(s.substr(at + 1));
        if (!th.is_closed())
            throw std::invalid_argument("parse_param: variable angle in '" + s + "'");
        Dyadic rho;
        if (parse_dyadic(rs, rho) && th.pi4_multiple())
            return Param(Cyclo(rho) * Cyclo::omega_pow(*th.pi4_multiple()));
        double r = 0;
        if (!parse_double(rs, r))
            throw std::invalid_argument("parse_param: bad modulus '" + rs + "'");
        return Param(std::polar(r, th.to_radians()));
    }
    auto terms = signed_terms(s);
    if (terms.size() > 2)
        throw std::invalid_argument("parse_param: expected a+bi, got '" + s + "'");
    std::string re_s, im_s;
    for (const auto& t : terms) {
        if (!t.empty() && t.back() == 'i') {
            if (!im_s.empty())
                throw std::invalid_argument("parse_param: two imaginary parts in '" + s + "'");
            im_s = t.substr(0, t.size() - 1);
            if (im_s.empty() || im_s == "+" || im_s == "-")
                im_s += "1";
        } else {
            if (!re_s.empty())
                throw std::invalid_argument("parse_param: two real parts in '" + s + "'");
            re_s = t;
        }
    }
    if (re_s.empty())
        re_s = "0";
    if (im_s.empty())
        im_s = "0";
    auto strip = [](std::string v) { return !v.empty() && v[0] == '+' ? v.substr(1) : v; };
    re_s = strip(re_s);
    im_s = strip(im_s);
    Dyadic a, b;
    if (parse_dyadic(re_s, a) && parse_dyadic(im_s, b))
        return Param(Cyclo(a, Dyadic(0), b, Dyadic(0)));
    double x = 0, y = 0;
    if (!parse_double(re_s, x) || !parse_double(im_s, y))
        throw std::invalid_argument("parse_param: bad complex literal '" + s + "'");
    return Param(std::complex<double>(x, y));
}

Diagram parse_diagram(const std::string& text, std::optional<Calculus> calc, int line_offset)
{
    Sx x = Reader(text, line_offset).read_all();
    if (x.list && !x.items.empty() && !x.items[0].list) {
        const std::string& h = x.items[0].atom;
        if (h == "diagram")
            return netlist(x);
        if (h == "zx" || h == "zw" || h == "zxt") {
            expect_size(x, 2);
            Calculus c = parse_calculus_tag(h);
            return build(x.items[1], c);
        }
    }
    return build(x, infer(x, calc));
}

std::string print_diagram(const Diagram& d)
{
    std::ostringstream os;
    os << "(diagram " << calculus_tag(d.calculus()) << " (inputs " << d.inputs() << ") (outputs " << d.outputs() << ")";
    for (std::size_t i = 0; i < d.node_count(); ++i)
        os << "\n  (node " << i << " " << node_text(d.nodes()[i]) << ")";
    for (const auto& [a, b] : d.edges())
        os << "\n  (edge " << end_text(a) << " " << end_text(b) << ")";
    os << ")\n";
    return os.str();
}

} // namespace zxw
