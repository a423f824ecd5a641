#include "zxw/rewrite.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "zxw/gadgets.hpp"
#include "zxw/net.hpp"
#include "zxw/semantics.hpp"

namespace zxw {

namespace {

bool is_spider(Kind k) { return k == Kind::Z || k == Kind::X; }

// other[node][port] is the end wired to that port
std::vector<std::vector<End>> adjacency(const Diagram& d)
{
    std::vector<std::vector<End>> other(d.node_count());
    for (std::size_t i = 0; i < d.node_count(); ++i)
        other[i].resize(static_cast<std::size_t>(d.nodes()[i].ports()));
    for (const auto& [a, b] : d.edges()) {
        if (a.is_port())
            other[static_cast<std::size_t>(a.node)][static_cast<std::size_t>(a.port)] = b;
        if (b.is_port())
            other[static_cast<std::size_t>(b.node)][static_cast<std::size_t>(b.port)] = a;
    }
    return other;
}

void check_nodes(const Diagram& d, const Location& loc, std::size_t count)
{
    if (loc.nodes.size() != count)
        throw std::invalid_argument("apply: " + loc.schema + " location needs " + std::to_string(count) + " nodes");
    for (int n : loc.nodes)
        if (n < 0 || static_cast<std::size_t>(n) >= d.node_count())
            throw std::invalid_argument("apply: node " + std::to_string(n) + " out of range");
}

// ports of the given nodes whose other end lies outside the set, inputs first
std::vector<End> outer_ports(const Diagram& d, const std::vector<std::vector<End>>& adj, const std::vector<int>& nodes,
                             int* n_inputs = nullptr)
{
    std::set<int> in(nodes.begin(), nodes.end());
    std::vector<End> ins, outs;
    for (int u : nodes) {
        const Node& n = d.node(u);
        for (int p = 0; p < n.ports(); ++p) {
            const End& o = adj[static_cast<std::size_t>(u)][static_cast<std::size_t>(p)];
            if (o.is_port() && in.count(o.node))
                continue;
            (p < n.n_in ? ins : outs).push_back(End::at(u, p));
        }
    }
    if (n_inputs)
        *n_inputs = static_cast<int>(ins.size());
    ins.insert(ins.end(), outs.begin(), outs.end());
    return ins;
}

Diagram wire_state(Calculus c)
{
    Diagram w(c, 0, 2);
    w.connect(End::out(0), End::out(1));
    return w;
}

Diagram loop_scalar()
{
    return compose(cup(), cap());
}

// closed sub-diagram on a boundary-free set of nodes
Diagram induced(const Diagram& d, const std::vector<int>& nodes)
{
    Diagram s(d.calculus(), 0, 0);
    std::unordered_map<int, int> id;
    for (int u : nodes) {
        Node n = d.node(u);
        n.group.clear();
        id[u] = s.add_node(std::move(n));
    }
    for (const auto& [a, b] : d.edges()) {
        if (!a.is_port() || !id.count(a.node))
            continue;
        s.connect(End::at(id[a.node], a.port), End::at(id.at(b.node), b.port));
    }
    s.validate();
    return s;
}

// smallest known ZX scalar for each exact value
const std::map<std::string, Diagram>& scalar_table()
{
    static const std::map<std::string, Diagram> table = [] {
        std::vector<std::pair<Cyclo, Diagram>> singles;
        singles.emplace_back(Cyclo(1), empty());
        for (int k = 0; k < 8; ++k)
            singles.emplace_back(Cyclo(1) + Cyclo::omega_pow(k), zsp(Phase::pi4(k), 0, 0));
        singles.emplace_back(Cyclo::inv_sqrt2(), gadget::hopf3());
        for (int a = 0; a < 8; ++a)
            for (int b = 0; b < 8; ++b) {
                Diagram g = gadget::bic(Phase::pi4(a), Phase::pi4(b));
                singles.emplace_back(interp_exact(g)(0, 0), g);
            }
        std::map<std::string, Diagram> t;
        auto offer = [&](const Cyclo& v, const Diagram& g) {
            auto key = v.str();
            auto it = t.find(key);
            if (it == t.end() || g.node_count() < it->second.node_count())
                t[key] = g;
        };
        for (const auto& [v, g] : singles)
            offer(v, g);
        for (std::size_t i = 0; i < singles.size(); ++i)
            for (std::size_t j = i; j < singles.size(); ++j)
                offer(singles[i].first * singles[j].first, tensor(singles[i].second, singles[j].second));
        return t;
    }();
    return table;
}

// boundary-free components small enough to evaluate exactly
std::vector<std::vector<int>> exact_scalar_components(const Diagram& d)
{
    const std::size_t n = d.node_count();
    std::vector<int> parent(n);
    for (std::size_t i = 0; i < n; ++i)
        parent[i] = static_cast<int>(i);
    auto root = [&](int x) {
        while (parent[static_cast<std::size_t>(x)] != x)
            x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
        return x;
    };
    std::vector<bool> open(n, false);
    for (const auto& [a, b] : d.edges()) {
        if (a.is_port() && b.is_port())
            parent[static_cast<std::size_t>(root(a.node))] = root(b.node);
        else if (a.is_port())
            open[static_cast<std::size_t>(a.node)] = true;
        else if (b.is_port())
            open[static_cast<std::size_t>(b.node)] = true;
    }
    std::map<int, std::vector<int>> comp;
    std::set<int> bad;
    for (std::size_t i = 0; i < n; ++i) {
        int r = root(static_cast<int>(i));
        comp[r].push_back(static_cast<int>(i));
        if (open[i])
            bad.insert(r);
    }
    std::vector<std::vector<int>> out;
    for (auto& [r, nodes] : comp) {
        if (bad.count(r) || nodes.size() > 32)
            continue;
        if (!exact_eligible(induced(d, nodes)))
            continue;
        out.push_back(nodes);
    }
    return out;
}

struct Merge {
    std::vector<int> nodes;
    Diagram replacement;
};

std::optional<Merge> plan_merge(const Diagram& d)
{
    if (d.calculus() == Calculus::ZW)
        return std::nullopt;
    auto comps = exact_scalar_components(d);
    if (comps.empty())
        return std::nullopt;
    Merge m;
    Cyclo v(1);
    for (const auto& c : comps) {
        v *= interp_exact(induced(d, c))(0, 0);
        m.nodes.insert(m.nodes.end(), c.begin(), c.end());
    }
    std::sort(m.nodes.begin(), m.nodes.end());
    const auto& t = scalar_table();
    auto it = t.find(v.str());
    if (it == t.end() || it->second.node_count() >= m.nodes.size())
        return std::nullopt;
    m.replacement = it->second;
    return m;
}

// hash filled in by the schema wrapper
Location stamp(const Diagram&, const std::string& schema, std::vector<int> nodes)
{
    return {schema, std::move(nodes), 0};
}

// ---- schemas ----

std::vector<Location> find_fusion(const Diagram& d)
{
    std::set<std::vector<int>> seen;
    std::vector<Location> out;
    for (const auto& [a, b] : d.edges()) {
        if (!a.is_port() || !b.is_port())
            continue;
        const Node& u = d.node(a.node);
        const Node& v = d.node(b.node);
        if (!is_spider(u.kind) || u.kind != v.kind)
            continue;
        std::vector<int> key = a.node == b.node ? std::vector<int>{a.node}
                                                : std::vector<int>{std::min(a.node, b.node), std::max(a.node, b.node)};
        if (seen.insert(key).second)
            out.push_back(stamp(d, "fusion", key));
    }
    return out;
}

Diagram apply_fusion(const Diagram& d, const Location& loc)
{
    if (loc.nodes.empty() || loc.nodes.size() > 2)
        throw std::invalid_argument("apply: fusion location needs 1 or 2 nodes");
    check_nodes(d, loc, loc.nodes.size());
    auto adj = adjacency(d);
    const Node& u = d.node(loc.nodes.front());
    const Node& v = d.node(loc.nodes.back());
    if (!is_spider(u.kind) || u.kind != v.kind)
        throw std::invalid_argument("apply: fusion needs two spiders of one colour");
    bool linked = false;
    for (const auto& o : adj[static_cast<std::size_t>(loc.nodes.front())])
        linked = linked || (o.is_port() && o.node == loc.nodes.back());
    if (!linked)
        throw std::invalid_argument("apply: fusion nodes are not adjacent");
    Phase a = loc.nodes.size() == 2 ? u.phase + v.phase : u.phase;
    int n_in = 0;
    auto legs = outer_ports(d, adj, loc.nodes, &n_in);
    int k = static_cast<int>(legs.size());
    Diagram rep(d.calculus(), 0, k);
    Node s = make_node(u.kind, n_in, k - n_in);
    s.phase = a;
    int id = rep.add_node(s);
    for (int p = 0; p < k; ++p)
        rep.connect(End::at(id, p), End::out(p));
    return replace_subgraph(d, loc.nodes, legs, rep);
}

std::vector<Location> find_identity(const Diagram& d)
{
    auto adj = adjacency(d);
    std::vector<Location> out;
    for (std::size_t i = 0; i < d.node_count(); ++i) {
        const Node& n = d.nodes()[i];
        if (!is_spider(n.kind) || n.ports() != 2 || !n.phase.is_zero())
            continue;
        const End& o = adj[i][0];
        if (o.is_port() && o.node == static_cast<int>(i))
            continue;
        out.push_back(stamp(d, "identity", {static_cast<int>(i)}));
    }
    return out;
}

Diagram apply_identity(const Diagram& d, const Location& loc)
{
    check_nodes(d, loc, 1);
    int u = loc.nodes[0];
    const Node& n = d.node(u);
    if (!is_spider(n.kind) || n.ports() != 2 || !n.phase.is_zero())
        throw std::invalid_argument("apply: identity needs a phase-free spider with two legs");
    auto adj = adjacency(d);
    auto legs = outer_ports(d, adj, {u});
    if (legs.size() != 2)
        throw std::invalid_argument("apply: identity spider has a self-loop");
    return replace_subgraph(d, {u}, legs, wire_state(d.calculus()));
}

std::vector<Location> find_hh(const Diagram& d)
{
    std::set<std::pair<int, int>> seen;
    std::vector<Location> out;
    for (const auto& [a, b] : d.edges()) {
        if (!a.is_port() || !b.is_port() || a.node == b.node)
            continue;
        if (d.node(a.node).kind != Kind::H || d.node(b.node).kind != Kind::H)
            continue;
        auto key = std::minmax(a.node, b.node);
        if (seen.insert(key).second)
            out.push_back(stamp(d, "hh", {key.first, key.second}));
    }
    return out;
}

Diagram apply_hh(const Diagram& d, const Location& loc)
{
    check_nodes(d, loc, 2);
    int u = loc.nodes[0], v = loc.nodes[1];
    if (u == v || d.node(u).kind != Kind::H || d.node(v).kind != Kind::H)
        throw std::invalid_argument("apply: hh needs two distinct H nodes");
    auto adj = adjacency(d);
    int shared = 0;
    for (const auto& o : adj[static_cast<std::size_t>(u)])
        shared += o.is_port() && o.node == v;
    if (shared == 0)
        throw std::invalid_argument("apply: hh nodes are not adjacent");
    auto legs = outer_ports(d, adj, {u, v});
    if (legs.empty())
        return replace_subgraph(d, {u, v}, legs, loop_scalar());
    return replace_subgraph(d, {u, v}, legs, wire_state(d.calculus()));
}

std::vector<Location> find_hopf(const Diagram& d)
{
    std::map<std::pair<int, int>, int> count;
    for (const auto& [a, b] : d.edges()) {
        if (!a.is_port() || !b.is_port())
            continue;
        Kind ka = d.node(a.node).kind, kb = d.node(b.node).kind;
        if (ka == Kind::Z && kb == Kind::X)
            ++count[{a.node, b.node}];
        else if (ka == Kind::X && kb == Kind::Z)
            ++count[{b.node, a.node}];
    }
    std::vector<Location> out;
    for (const auto& [k, c] : count)
        if (c >= 2)
            out.push_back(stamp(d, "hopf", {k.first, k.second}));
    return out;
}

Diagram apply_hopf(const Diagram& d, const Location& loc)
{
    check_nodes(d, loc, 2);
    int u = loc.nodes[0], v = loc.nodes[1];
    const Node& zu = d.node(u);
    const Node& xv = d.node(v);
    if (zu.kind != Kind::Z || xv.kind != Kind::X)
        throw std::invalid_argument("apply: hopf needs a Z spider then an X spider");
    auto adj = adjacency(d);
    std::vector<std::pair<int, int>> between;
    for (int p = 0; p < zu.ports(); ++p) {
        const End& o = adj[static_cast<std::size_t>(u)][static_cast<std::size_t>(p)];
        if (o.is_port() && o.node == u)
            throw std::invalid_argument("apply: hopf spider has a self-loop");
        if (o.is_port() && o.node == v)
            between.emplace_back(p, o.port);
    }
    for (const auto& o : adj[static_cast<std::size_t>(v)])
        if (o.is_port() && o.node == v)
            throw std::invalid_argument("apply: hopf spider has a self-loop");
    if (between.size() < 2)
        throw std::invalid_argument("apply: hopf needs two parallel edges");

    // leg order: outer ports of u, then outer ports of v
    std::vector<End> legs;
    int lu = 0;
    for (int w : {u, v})
        for (int p = 0; p < d.node(w).ports(); ++p) {
            const End& o = adj[static_cast<std::size_t>(w)][static_cast<std::size_t>(p)];
            if (o.is_port() && (o.node == u || o.node == v))
                continue;
            legs.push_back(End::at(w, p));
            lu += w == u;
        }
    int k = static_cast<int>(legs.size());
    int keep = static_cast<int>(between.size()) - 2;
    Diagram rep(d.calculus(), 0, k);
    Node z = make_node(Kind::Z, 0, lu + keep);
    z.phase = zu.phase;
    Node x = make_node(Kind::X, 0, k - lu + keep);
    x.phase = xv.phase;
    int iz = rep.add_node(z), ix = rep.add_node(x);
    for (int p = 0; p < lu; ++p)
        rep.connect(End::at(iz, p), End::out(p));
    for (int p = 0; p < k - lu; ++p)
        rep.connect(End::at(ix, p), End::out(lu + p));
    for (int j = 0; j < keep; ++j)
        rep.connect(End::at(iz, lu + j), End::at(ix, k - lu + j));
    rep = tensor(rep, retagged(scalar_table().at(Cyclo::half().str()), d.calculus()));
    return replace_subgraph(d, {u, v}, legs, rep);
}

std::vector<Location> find_color_change(const Diagram& d)
{
    std::vector<Location> out;
    for (std::size_t i = 0; i < d.node_count(); ++i)
        if (d.nodes()[i].kind == Kind::X)
            out.push_back(stamp(d, "color-change", {static_cast<int>(i)}));
    return out;
}

Diagram apply_color_change(const Diagram& d, const Location& loc)
{
    check_nodes(d, loc, 1);
    int u = loc.nodes[0];
    const Node& n = d.node(u);
    if (n.kind != Kind::X)
        throw std::invalid_argument("apply: color-change needs an X spider");
    auto adj = adjacency(d);
    auto legs = outer_ports(d, adj, {u});
    Diagram rep(d.calculus(), 0, static_cast<int>(legs.size()));
    Node z = n;
    z.kind = Kind::Z;
    z.group.clear();
    int iz = rep.add_node(z);
    std::vector<int> hs;
    for (int p = 0; p < n.ports(); ++p) {
        int h = rep.add_node(make_node(Kind::H));
        hs.push_back(h);
        rep.connect(End::at(iz, p), End::at(h, 0));
    }
    int leg = 0;
    for (const auto& e : legs)
        rep.connect(End::at(hs[static_cast<std::size_t>(e.port)], 1), End::out(leg++));
    // self-loops become H-H paths
    for (int p = 0; p < n.ports(); ++p) {
        const End& o = adj[static_cast<std::size_t>(u)][static_cast<std::size_t>(p)];
        if (o.is_port() && o.node == u && p < o.port)
            rep.connect(End::at(hs[static_cast<std::size_t>(p)], 1), End::at(hs[static_cast<std::size_t>(o.port)], 1));
    }
    return replace_subgraph(d, {u}, legs, rep);
}

std::vector<Location> find_scalar_merge(const Diagram& d)
{
    auto m = plan_merge(d);
    if (!m)
        return {};
    return {stamp(d, "scalar-merge", m->nodes)};
}

Diagram apply_scalar_merge(const Diagram& d, const Location& loc)
{
    auto m = plan_merge(d);
    if (!m || m->nodes != loc.nodes)
        throw std::invalid_argument("apply: scalar-merge location does not match the scalar parts");
    return replace_subgraph(d, m->nodes, {}, m->replacement);
}

std::size_t edge_count(const Diagram& d) { return d.edges().size(); }

} // namespace

std::size_t diagram_hash(const Diagram& d)
{
    std::string s = calculus_name(d.calculus()) + ":" + std::to_string(d.inputs()) + ":" + std::to_string(d.outputs());
    for (const auto& n : d.nodes()) {
        s += "|" + kind_name(n.kind) + "," + std::to_string(n.n_in) + "," + std::to_string(n.n_out) + "," +
             n.phase.str() + "," + n.param.str();
    }
    auto end = [](const End& e) {
        return std::to_string(static_cast<int>(e.type)) + "." + std::to_string(e.node) + "." + std::to_string(e.port);
    };
    for (const auto& [a, b] : d.edges())
        s += "|" + end(a) + "-" + end(b);
    return std::hash<std::string>{}(s);
}

Diagram replace_subgraph(const Diagram& d, const std::vector<int>& nodes, const std::vector<End>& legs,
                         const Diagram& rep)
{
    const int k = static_cast<int>(legs.size());
    if (rep.inputs() != 0 || rep.outputs() != k)
        throw std::invalid_argument("replace_subgraph: replacement must be 0->" + std::to_string(k));
    std::set<int> gone(nodes.begin(), nodes.end());
    std::map<End, int> leg_of;
    for (int i = 0; i < k; ++i) {
        if (!legs[static_cast<std::size_t>(i)].is_port() || !gone.count(legs[static_cast<std::size_t>(i)].node))
            throw std::invalid_argument("replace_subgraph: leg is not a port of a replaced node");
        if (!leg_of.emplace(legs[static_cast<std::size_t>(i)], i).second)
            throw std::invalid_argument("replace_subgraph: repeated leg");
    }
    Diagram rest(d.calculus(), d.inputs(), d.outputs() + k);
    std::vector<int> id(d.node_count(), -1);
    for (std::size_t i = 0; i < d.node_count(); ++i)
        if (!gone.count(static_cast<int>(i))) {
            Node n = d.nodes()[i];
            n.group.clear();
            id[i] = rest.add_node(std::move(n));
        }
    auto kept = [&](const End& e) { return !e.is_port() || !gone.count(e.node); };
    auto map = [&](const End& e) { return e.is_port() ? End::at(id[static_cast<std::size_t>(e.node)], e.port) : e; };
    auto leg = [&](const End& e) {
        auto it = leg_of.find(e);
        if (it == leg_of.end())
            throw std::invalid_argument("replace_subgraph: outer edge at a port that is not a leg");
        return End::out(d.outputs() + it->second);
    };
    int used = 0;
    for (const auto& [a, b] : d.edges()) {
        bool ka = kept(a), kb = kept(b);
        if (ka && kb)
            rest.connect(map(a), map(b));
        else if (ka) {
            rest.connect(map(a), leg(b));
            ++used;
        } else if (kb) {
            rest.connect(leg(a), map(b));
            ++used;
        } else if (leg_of.count(a) || leg_of.count(b))
            throw std::invalid_argument("replace_subgraph: leg is an inner edge");
    }
    if (used != k)
        throw std::invalid_argument("replace_subgraph: unattached leg");

    Net net(d.calculus(), d.inputs(), d.outputs());
    int pr = net.add(rest);
    int pn = net.add(rep);
    for (int i = 0; i < d.inputs(); ++i)
        net.link(net.in(i), net.input(pr, i));
    for (int j = 0; j < d.outputs(); ++j)
        net.link(net.output(pr, j), net.out(j));
    for (int i = 0; i < k; ++i)
        net.link(net.output(pr, d.outputs() + i), net.output(pn, i));
    Diagram r = net.build();
    for (auto& n : r.mutable_nodes())
        n.group.clear();
    return r;
}

std::vector<std::string> schema_names()
{
    return {"fusion", "identity", "hh", "hopf", "color-change", "scalar-merge"};
}

Schema schema(const std::string& name)
{
    using Finder = std::vector<Location> (*)(const Diagram&);
    using Applier = Diagram (*)(const Diagram&, const Location&);
    static const std::map<std::string, std::pair<Finder, Applier>> table = {
        {"fusion", {find_fusion, apply_fusion}},
        {"identity", {find_identity, apply_identity}},
        {"hh", {find_hh, apply_hh}},
        {"hopf", {find_hopf, apply_hopf}},
        {"color-change", {find_color_change, apply_color_change}},
        {"scalar-merge", {find_scalar_merge, apply_scalar_merge}},
    };
    auto it = table.find(name);
    if (it != table.end()) {
        Finder f = it->second.first;
        auto stamped = [f](const Diagram& d) {
            auto locs = f(d);
            if (!locs.empty()) {
                std::size_t h = diagram_hash(d);
                for (auto& l : locs)
                    l.hash = h;
            }
            return locs;
        };
        return {name, stamped, it->second.second};
    }
    throw std::invalid_argument("schema: unknown schema '" + name + "'");
}

std::vector<Schema> default_strategy()
{
    return {schema("fusion"), schema("identity"), schema("hh"), schema("scalar-merge"), schema("hopf")};
}

std::vector<Location> find(const Schema& s, const Diagram& d)
{
    return s.find(d);
}

Diagram apply(const Schema& s, const Diagram& d, const Location& loc)
{
    if (loc.schema != s.name)
        throw std::invalid_argument("apply: location of '" + loc.schema + "' given to '" + s.name + "'");
    if (loc.hash != diagram_hash(d))
        throw std::invalid_argument("apply: stale location");
    return s.apply(d, loc);
}

Simplified simplify(const Diagram& d, const std::vector<Schema>& strategy, int fuel)
{
    if (fuel < 0)
        fuel = 10 * static_cast<int>(std::max<std::size_t>(1, d.node_count()));
    Simplified out{d, {}, false};
    const Schema merge = schema("scalar-merge");
    auto step = [&](const Schema& s, const Location& loc, const Diagram& from) {
        Diagram to = apply(s, from, loc);
        out.trace.push_back({s.name, loc.nodes, from.node_count(), to.node_count()});
        return to;
    };
    for (;;) {
        bool moved = false;
        for (const auto& s : strategy) {
            for (const auto& loc : find(s, out.diagram)) {
                if (fuel <= 0) {
                    out.fuel_exhausted = true;
                    return out;
                }
                const Diagram& cur = out.diagram;
                std::size_t mark = out.trace.size();
                Diagram next = step(s, loc, cur);
                if (s.name == "hopf") {
                    auto ml = find(merge, next);
                    if (!ml.empty())
                        next = step(merge, ml.front(), next);
                }
                // (nodes, edges) must drop; nodes must never grow
                bool fewer = next.node_count() < cur.node_count() ||
                             (next.node_count() == cur.node_count() && edge_count(next) < edge_count(cur));
                if (!fewer) {
                    out.trace.resize(mark);
                    continue;
                }
                fuel -= static_cast<int>(out.trace.size() - mark);
                out.diagram = std::move(next);
                moved = true;
                break;
            }
            if (moved)
                break;
        }
        if (!moved)
            return out;
    }
}

Simplified simplify(const Diagram& d)
{
    return simplify(d, default_strategy());
}

} // namespace zxw
