#include "zxw/net.hpp"

#include <stdexcept>
#include <string>

namespace zxw {

int Net::add(const Diagram& d, const std::vector<std::uint32_t>& prefix)
{
    if (d.calculus() != calc_) {
        bool ok = calc_ == Calculus::ZXT && d.calculus() == Calculus::ZX;
        if (!ok && !(d.node_count() == 0))
            throw std::invalid_argument("Net::add: calculus " + calculus_name(d.calculus()) + " in a " +
                                        calculus_name(calc_) + " net");
    }
    parts_.push_back(d);
    prefix_.push_back(prefix);
    return static_cast<int>(parts_.size()) - 1;
}

Net::Leg Net::output(int part, int k) const
{
    return {part, parts_.at(static_cast<std::size_t>(part)).inputs() + k};
}

int Net::legs(int part) const
{
    const auto& d = parts_.at(static_cast<std::size_t>(part));
    return d.inputs() + d.outputs();
}

Diagram Net::build() const
{
    Diagram r(calc_, n_in_, n_out_);
    // junction ids per part leg
    std::vector<int> base(parts_.size());
    int nj = 0;
    for (std::size_t p = 0; p < parts_.size(); ++p) {
        base[p] = nj;
        nj += parts_[p].inputs() + parts_[p].outputs();
    }
    std::vector<int> offset(parts_.size());
    for (std::size_t p = 0; p < parts_.size(); ++p) {
        offset[p] = static_cast<int>(r.node_count());
        for (auto n : parts_[p].nodes()) {
            n.group.insert(n.group.begin(), static_cast<std::uint32_t>(p));
            n.group.insert(n.group.begin(), prefix_[p].begin(), prefix_[p].end());
            r.mutable_nodes().push_back(std::move(n));
        }
    }

    // a terminal is a real end of the result or a junction
    struct Term {
        bool junction = false;
        End end;
        int j = -1;
    };
    std::vector<std::pair<Term, Term>> segs;
    auto outer = [&](int leg) {
        Term t;
        if (leg < 0 || leg >= n_in_ + n_out_)
            throw std::logic_error("Net::build: outer leg " + std::to_string(leg) + " out of range");
        t.end = leg < n_in_ ? End::in(leg) : End::out(leg - n_in_);
        return t;
    };
    auto junction = [&](int part, int leg) {
        if (part < 0)
            return outer(leg);
        const auto& d = parts_.at(static_cast<std::size_t>(part));
        if (leg < 0 || leg >= d.inputs() + d.outputs())
            throw std::logic_error("Net::build: leg " + std::to_string(leg) + " of part " + std::to_string(part) +
                                   " out of range");
        Term t;
        t.junction = true;
        t.j = base[static_cast<std::size_t>(part)] + leg;
        return t;
    };
    for (std::size_t p = 0; p < parts_.size(); ++p) {
        const auto& d = parts_[p];
        auto map = [&](const End& e) {
            if (e.is_port()) {
                Term t;
                t.end = End::at(e.node + offset[p], e.port);
                return t;
            }
            return junction(static_cast<int>(p), e.type == End::Type::In ? e.port : d.inputs() + e.port);
        };
        for (const auto& [a, b] : d.edges())
            segs.emplace_back(map(a), map(b));
    }
    for (const auto& [a, b] : links_)
        segs.emplace_back(junction(a.part, a.leg), junction(b.part, b.leg));

    std::vector<std::vector<int>> at(static_cast<std::size_t>(nj));
    for (std::size_t s = 0; s < segs.size(); ++s) {
        if (segs[s].first.junction)
            at[static_cast<std::size_t>(segs[s].first.j)].push_back(static_cast<int>(s));
        if (segs[s].second.junction)
            at[static_cast<std::size_t>(segs[s].second.j)].push_back(static_cast<int>(s));
    }
    for (int j = 0; j < nj; ++j)
        if (at[static_cast<std::size_t>(j)].size() != 2)
            throw std::logic_error("Net::build: part leg used " + std::to_string(at[static_cast<std::size_t>(j)].size()) +
                                   " times");

    std::vector<bool> used(segs.size(), false);
    auto walk = [&](int s, const Term& from) {
        // follow junctions from a real end to the next real end
        used[static_cast<std::size_t>(s)] = true;
        Term cur = segs[static_cast<std::size_t>(s)].first;
        Term nxt = segs[static_cast<std::size_t>(s)].second;
        if (cur.junction || !(cur.end == from.end))
            std::swap(cur, nxt);
        while (nxt.junction) {
            const auto& pair = at[static_cast<std::size_t>(nxt.j)];
            int t = pair[0] == s ? pair[1] : pair[0];
            if (pair[0] == pair[1])
                throw std::logic_error("Net::build: degenerate junction");
            used[static_cast<std::size_t>(t)] = true;
            const auto& seg = segs[static_cast<std::size_t>(t)];
            Term other = seg.first.junction && seg.first.j == nxt.j ? seg.second : seg.first;
            // a segment may connect a junction to itself only through a real end, so this is safe
            s = t;
            nxt = other;
        }
        return nxt.end;
    };
    for (std::size_t s = 0; s < segs.size(); ++s) {
        if (used[s])
            continue;
        const auto& [a, b] = segs[s];
        if (!a.junction && !b.junction) {
            used[s] = true;
            r.connect(a.end, b.end);
        } else if (!a.junction || !b.junction) {
            const Term& real = a.junction ? b : a;
            End other = walk(static_cast<int>(s), real);
            r.connect(real.end, other);
        }
    }
    // remaining segments form closed loops of bare wire
    for (std::size_t s = 0; s < segs.size(); ++s) {
        if (used[s])
            continue;
        int cur = static_cast<int>(s);
        int j = segs[s].first.j;
        while (!used[static_cast<std::size_t>(cur)]) {
            used[static_cast<std::size_t>(cur)] = true;
            const auto& seg = segs[static_cast<std::size_t>(cur)];
            int nj2 = seg.first.j == j ? seg.second.j : seg.first.j;
            const auto& pair = at[static_cast<std::size_t>(nj2)];
            cur = pair[0] == cur ? pair[1] : pair[0];
            j = nj2;
        }
        int cp = r.add_node(make_node(Kind::Cap));
        int cu = r.add_node(make_node(Kind::Cup));
        r.connect(End::at(cp, 0), End::at(cu, 0));
        r.connect(End::at(cp, 1), End::at(cu, 1));
    }
    r.validate();
    return r;
}

Diagram replace_nodes(const Diagram& d, Calculus c, const std::function<Diagram(const Node&)>& f, int thread)
{
    Net net(c, d.inputs() + thread, d.outputs() + thread);
    std::vector<int> part(d.node_count());
    std::vector<Net::Leg> carry;
    for (int t = 0; t < thread; ++t)
        carry.push_back(net.in(d.inputs() + t));
    for (std::size_t i = 0; i < d.node_count(); ++i) {
        const Node& n = d.nodes()[i];
        Diagram sub = f(n);
        if (sub.inputs() != n.n_in + thread || sub.outputs() != n.n_out + thread)
            throw std::logic_error("replace_nodes: replacement of " + kind_name(n.kind) + " has arity " +
                                   std::to_string(sub.inputs()) + "->" + std::to_string(sub.outputs()));
        int p = net.add(sub, n.group);
        part[i] = p;
        for (int t = 0; t < thread; ++t) {
            net.link(carry[static_cast<std::size_t>(t)], net.input(p, n.n_in + t));
            carry[static_cast<std::size_t>(t)] = net.output(p, n.n_out + t);
        }
    }
    for (int t = 0; t < thread; ++t)
        net.link(carry[static_cast<std::size_t>(t)], net.out(d.outputs() + t));
    auto leg = [&](const End& e) -> Net::Leg {
        if (e.type == End::Type::In)
            return net.in(e.port);
        if (e.type == End::Type::Out)
            return net.out(e.port);
        const Node& n = d.nodes()[static_cast<std::size_t>(e.node)];
        int p = part[static_cast<std::size_t>(e.node)];
        return e.port < n.n_in ? net.input(p, e.port) : net.output(p, e.port - n.n_in);
    };
    for (const auto& [a, b] : d.edges())
        net.link(leg(a), leg(b));
    return net.build();
}

} // namespace zxw
