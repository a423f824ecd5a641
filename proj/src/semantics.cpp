#include "zxw/semantics.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <random>
#include <stdexcept>
#include <unordered_map>

namespace zxw {

namespace {

template <typename S>
struct Ops;

template <>
struct Ops<Cyclo> {
    static Cyclo one() { return Cyclo(1); }
    static bool zero(const Cyclo& x) { return x.is_zero(); }
    static Cyclo inv_sqrt2() { return Cyclo::inv_sqrt2(); }
    static Cyclo half() { return Cyclo::half(); }
    static Cyclo phase(const Phase& p)
    {
        auto k = p.pi4_multiple();
        if (!k)
            throw std::invalid_argument("interp: phase " + p.str() + " is not a closed multiple of pi/4");
        return Cyclo::omega_pow(*k);
    }
    static Cyclo param(const Param& r)
    {
        if (!r.is_exact())
            throw std::invalid_argument("interp: parameter " + r.str() + " is not in Z[1/2][w]");
        return r.exact();
    }
};

template <>
struct Ops<std::complex<double>> {
    using C = std::complex<double>;
    static C one() { return 1.0; }
    static bool zero(const C& x) { return x == 0.0; }
    static C inv_sqrt2() { return std::sqrt(0.5); }
    static C half() { return 0.5; }
    static C phase(const Phase& p) { return std::polar(1.0, p.to_radians()); }
    static C param(const Param& r) { return r.value(); }
};

template <typename S>
struct Tensor {
    std::vector<int> legs;
    std::vector<S> data;

    std::size_t rank() const { return legs.size(); }
};

// bit of leg j in an index of a rank r tensor
inline std::size_t bit(std::size_t r, std::size_t j) { return std::size_t(1) << (r - 1 - j); }

template <typename S>
void apply_hadamard_leg(std::vector<S>& data, std::size_t r, std::size_t j)
{
    std::size_t b = bit(r, j);
    S f = Ops<S>::inv_sqrt2();
    for (std::size_t i = 0; i < data.size(); ++i) {
        if (i & b)
            continue;
        S a = data[i], c = data[i | b];
        data[i] = (a + c) * f;
        data[i | b] = (a - c) * f;
    }
}

// node tensor, legs in port order, port 0 most significant
template <typename S>
std::vector<S> node_data(const Node& n)
{
    std::size_t r = static_cast<std::size_t>(n.ports());
    std::vector<S> t(std::size_t(1) << r, S(0));
    std::size_t all = t.size() - 1;
    auto set = [&](std::initializer_list<int> bits, const S& v) {
        std::size_t idx = 0;
        for (int b : bits)
            idx = (idx << 1) | static_cast<std::size_t>(b);
        t[idx] = v;
    };
    const S one = Ops<S>::one();
    switch (n.kind) {
    case Kind::Z:
    case Kind::X:
    case Kind::WhiteZW: {
        S v = n.kind == Kind::WhiteZW ? Ops<S>::param(n.param) : Ops<S>::phase(n.phase);
        if (r == 0) {
            t[0] = one + v;
        } else {
            t[0] = one;
            t[all] = v;
        }
        if (n.kind == Kind::X)
            for (std::size_t j = 0; j < r; ++j)
                apply_hadamard_leg(t, r, j);
        break;
    }
    case Kind::H: {
        S f = Ops<S>::inv_sqrt2();
        t = {f, f, f, -f};
        break;
    }
    case Kind::Cup:
    case Kind::Cap:
        set({0, 0}, one);
        set({1, 1}, one);
        break;
    case Kind::Swap:
        for (int a = 0; a < 2; ++a)
            for (int b = 0; b < 2; ++b)
                set({a, b, b, a}, one);
        break;
    case Kind::BlackW1to1:
        set({0, 1}, one);
        set({1, 0}, one);
        break;
    case Kind::BlackW1to2:
        set({1, 0, 0}, one);
        set({0, 1, 0}, one);
        set({0, 0, 1}, one);
        break;
    case Kind::WhiteZW1to1:
        set({0, 0}, one);
        set({1, 1}, -one);
        break;
    case Kind::WhiteZW2to1:
        set({0, 0, 0}, one);
        set({1, 1, 1}, -one);
        break;
    case Kind::ZWCross:
        set({0, 0, 0, 0}, one);
        set({0, 1, 1, 0}, one);
        set({1, 0, 0, 1}, one);
        set({1, 1, 1, 1}, -one);
        break;
    case Kind::Half:
        t[0] = Ops<S>::half();
        break;
    case Kind::Triangle:
        set({0, 0}, one);
        set({1, 0}, Ops<S>::param(n.param));
        set({1, 1}, one);
        break;
    }
    return t;
}

template <typename S>
Mat<S> tensor_to_matrix(const std::vector<S>& t, int n_in, int n_out)
{
    Mat<S> m(std::size_t(1) << n_out, std::size_t(1) << n_in);
    for (std::size_t i = 0; i < (std::size_t(1) << n_in); ++i)
        for (std::size_t o = 0; o < (std::size_t(1) << n_out); ++o)
            m(static_cast<Eigen::Index>(o), static_cast<Eigen::Index>(i)) = t[(i << n_out) | o];
    return m;
}

// sum over repeated labels inside one tensor
template <typename S>
Tensor<S> trace_repeats(Tensor<S> t)
{
    while (true) {
        std::size_t r = t.rank();
        std::size_t a = r, b = r;
        for (std::size_t i = 0; i < r && a == r; ++i)
            for (std::size_t j = i + 1; j < r; ++j)
                if (t.legs[i] == t.legs[j]) {
                    a = i;
                    b = j;
                    break;
                }
        if (a == r)
            return t;
        Tensor<S> out;
        for (std::size_t i = 0; i < r; ++i)
            if (i != a && i != b)
                out.legs.push_back(t.legs[i]);
        std::size_t nr = out.rank();
        out.data.assign(std::size_t(1) << nr, S(0));
        for (std::size_t idx = 0; idx < t.data.size(); ++idx) {
            bool ba = idx & bit(r, a), bb = idx & bit(r, b);
            if (ba != bb || Ops<S>::zero(t.data[idx]))
                continue;
            std::size_t o = 0;
            for (std::size_t i = 0; i < r; ++i) {
                if (i == a || i == b)
                    continue;
                o = (o << 1) | ((idx & bit(r, i)) ? 1 : 0);
            }
            out.data[o] += t.data[idx];
        }
        t = std::move(out);
    }
}

template <typename S>
Tensor<S> contract_pair(const Tensor<S>& A, const Tensor<S>& B)
{
    std::vector<std::size_t> fa, fb, sa, sb;
    for (std::size_t i = 0; i < A.rank(); ++i) {
        auto it = std::find(B.legs.begin(), B.legs.end(), A.legs[i]);
        if (it == B.legs.end()) {
            fa.push_back(i);
        } else {
            sa.push_back(i);
            sb.push_back(static_cast<std::size_t>(it - B.legs.begin()));
        }
    }
    for (std::size_t j = 0; j < B.rank(); ++j)
        if (std::find(A.legs.begin(), A.legs.end(), B.legs[j]) == A.legs.end())
            fb.push_back(j);
    auto offsets = [](const std::vector<std::size_t>& pos, std::size_t r) {
        std::vector<std::size_t> off(std::size_t(1) << pos.size(), 0);
        for (std::size_t x = 0; x < off.size(); ++x) {
            std::size_t o = 0;
            for (std::size_t k = 0; k < pos.size(); ++k)
                if (x & (std::size_t(1) << (pos.size() - 1 - k)))
                    o |= bit(r, pos[k]);
            off[x] = o;
        }
        return off;
    };
    auto ofa = offsets(fa, A.rank()), osa = offsets(sa, A.rank());
    auto ofb = offsets(fb, B.rank()), osb = offsets(sb, B.rank());
    Tensor<S> R;
    for (auto i : fa)
        R.legs.push_back(A.legs[i]);
    for (auto j : fb)
        R.legs.push_back(B.legs[j]);
    std::size_t nb = ofb.size();
    R.data.assign(ofa.size() * nb, S(0));
    for (std::size_t x = 0; x < ofa.size(); ++x) {
        S* row = R.data.data() + x * nb;
        for (std::size_t s = 0; s < osa.size(); ++s) {
            const S& a = A.data[ofa[x] | osa[s]];
            if (Ops<S>::zero(a))
                continue;
            for (std::size_t y = 0; y < nb; ++y) {
                const S& b = B.data[osb[s] | ofb[y]];
                if (Ops<S>::zero(b))
                    continue;
                row[y] += a * b;
            }
        }
    }
    return R;
}

// greedy: always merge the adjacent pair with the smallest result
template <typename S>
Tensor<S> contract_all(std::vector<Tensor<S>> ts)
{
    if (ts.empty()) {
        Tensor<S> one;
        one.data = {Ops<S>::one()};
        return one;
    }
    std::vector<char> alive(ts.size(), 1);
    std::size_t live = ts.size();
    std::unordered_map<int, std::vector<std::size_t>> holders;
    for (std::size_t i = 0; i < ts.size(); ++i)
        for (int l : ts[i].legs)
            holders[l].push_back(i);
    while (live > 1) {
        std::size_t best_a = 0, best_b = 0;
        long best_rank = -1;
        std::size_t best_size = 0;
        for (const auto& [label, hs] : holders) {
            if (hs.size() != 2 || hs[0] == hs[1])
                continue;
            const auto& A = ts[hs[0]];
            const auto& B = ts[hs[1]];
            std::size_t shared = 0;
            for (int l : A.legs)
                if (std::find(B.legs.begin(), B.legs.end(), l) != B.legs.end())
                    ++shared;
            long r = static_cast<long>(A.rank() + B.rank() - 2 * shared);
            std::size_t sz = std::max(A.data.size(), B.data.size());
            if (best_rank < 0 || r < best_rank || (r == best_rank && sz < best_size) ||
                (r == best_rank && sz == best_size && std::minmax(hs[0], hs[1]) < std::minmax(best_a, best_b))) {
                best_rank = r;
                best_size = sz;
                best_a = std::min(hs[0], hs[1]);
                best_b = std::max(hs[0], hs[1]);
            }
        }
        if (best_rank < 0) {
            // disconnected: outer product of the two smallest
            std::vector<std::size_t> idx;
            for (std::size_t i = 0; i < ts.size(); ++i)
                if (alive[i])
                    idx.push_back(i);
            std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
                return std::make_pair(ts[a].rank(), a) < std::make_pair(ts[b].rank(), b);
            });
            best_a = std::min(idx[0], idx[1]);
            best_b = std::max(idx[0], idx[1]);
        }
        Tensor<S> merged = contract_pair(ts[best_a], ts[best_b]);
        for (std::size_t who : {best_a, best_b})
            for (int l : ts[who].legs) {
                auto it = holders.find(l);
                if (it == holders.end())
                    continue;
                auto& h = it->second;
                h.erase(std::remove(h.begin(), h.end(), who), h.end());
                if (h.empty())
                    holders.erase(it);
            }
        ts[best_a] = std::move(merged);
        ts[best_b] = Tensor<S>();
        alive[best_b] = 0;
        --live;
        for (int l : ts[best_a].legs)
            holders[l].push_back(best_a);
    }
    for (std::size_t i = 0; i < ts.size(); ++i)
        if (alive[i])
            return std::move(ts[i]);
    return {};
}

template <typename S>
struct Cache {
    std::mutex mu;
    std::unordered_map<std::string, std::shared_ptr<const Tensor<S>>> map;
};

template <typename S>
Cache<S>& cache()
{
    static Cache<S> c;
    return c;
}

std::string node_key(const Node& n)
{
    std::string s = kind_name(n.kind) + "," + std::to_string(n.n_in) + "," + std::to_string(n.n_out);
    if (n.kind == Kind::Z || n.kind == Kind::X)
        s += "," + n.phase.str();
    if (n.kind == Kind::WhiteZW || n.kind == Kind::Triangle)
        s += "," + n.param.str();
    return s;
}

template <typename S>
class Contractor {
public:
    explicit Contractor(const Diagram& d) : d_(d)
    {
        labels_.resize(d.node_count());
        for (std::size_t i = 0; i < d.node_count(); ++i)
            labels_[i].assign(static_cast<std::size_t>(d.nodes()[i].ports()), -1);
        in_label_.assign(static_cast<std::size_t>(d.inputs()), -1);
        out_label_.assign(static_cast<std::size_t>(d.outputs()), -1);
        int next = 0;
        for (const auto& [a, b] : d.edges()) {
            if (!a.is_port() && !b.is_port()) {
                int la = next++, lb = next++;
                assign(a, la);
                assign(b, lb);
                Tensor<S> delta;
                delta.legs = {la, lb};
                delta.data = {Ops<S>::one(), S(0), S(0), Ops<S>::one()};
                deltas_.push_back(std::move(delta));
            } else {
                int l = next++;
                assign(a, l);
                assign(b, l);
            }
        }
    }

    Mat<S> run()
    {
        std::vector<int> all(d_.node_count());
        for (std::size_t i = 0; i < all.size(); ++i)
            all[i] = static_cast<int>(i);
        std::vector<Tensor<S>> parts = group_parts(all, 0);
        for (auto& t : deltas_)
            parts.push_back(t);
        Tensor<S> t = contract_all(std::move(parts));
        // order legs as outputs then inputs
        std::vector<int> want;
        for (int l : out_label_)
            want.push_back(l);
        for (int l : in_label_)
            want.push_back(l);
        std::size_t r = want.size();
        if (t.rank() != r)
            throw std::logic_error("interp: open leg count mismatch");
        std::vector<std::size_t> pos(r);
        for (std::size_t k = 0; k < r; ++k) {
            auto it = std::find(t.legs.begin(), t.legs.end(), want[k]);
            pos[k] = static_cast<std::size_t>(it - t.legs.begin());
        }
        std::size_t nout = out_label_.size(), nin = in_label_.size();
        Mat<S> m(std::size_t(1) << nout, std::size_t(1) << nin);
        for (std::size_t o = 0; o < (std::size_t(1) << nout); ++o)
            for (std::size_t i = 0; i < (std::size_t(1) << nin); ++i) {
                std::size_t w = (o << nin) | i;
                std::size_t idx = 0;
                for (std::size_t k = 0; k < r; ++k)
                    if (w & (std::size_t(1) << (r - 1 - k)))
                        idx |= bit(r, pos[k]);
                m(static_cast<Eigen::Index>(o), static_cast<Eigen::Index>(i)) = t.data[idx];
            }
        return m;
    }

private:
    void assign(const End& e, int l)
    {
        switch (e.type) {
        case End::Type::Port: labels_[static_cast<std::size_t>(e.node)][static_cast<std::size_t>(e.port)] = l; break;
        case End::Type::In: in_label_[static_cast<std::size_t>(e.port)] = l; break;
        case End::Type::Out: out_label_[static_cast<std::size_t>(e.port)] = l; break;
        }
    }

    Tensor<S> leaf(int v)
    {
        Tensor<S> t;
        t.legs = labels_[static_cast<std::size_t>(v)];
        t.data = node_data<S>(d_.nodes()[static_cast<std::size_t>(v)]);
        return trace_repeats(std::move(t));
    }

    // tensors for the nodes of one group level, subgroups contracted first
    std::vector<Tensor<S>> group_parts(const std::vector<int>& members, std::size_t depth)
    {
        std::vector<Tensor<S>> parts;
        std::map<std::uint32_t, std::vector<int>> sub;
        for (int v : members) {
            const auto& g = d_.nodes()[static_cast<std::size_t>(v)].group;
            if (g.size() > depth)
                sub[g[depth]].push_back(v);
            else
                parts.push_back(leaf(v));
        }
        if (parts.empty() && sub.size() == 1)
            return group_parts(sub.begin()->second, depth + 1);
        for (auto& [g, vs] : sub)
            parts.push_back(contract_group(vs, depth + 1));
        return parts;
    }

    Tensor<S> contract_group(const std::vector<int>& vs, std::size_t depth)
    {
        if (vs.size() == 1)
            return leaf(vs[0]);
        // structural key with external labels numbered by first use
        std::unordered_map<int, int> count;
        for (int v : vs)
            for (int l : labels_[static_cast<std::size_t>(v)])
                ++count[l];
        std::unordered_map<int, int> local;
        std::vector<int> ext;
        std::string key;
        key.reserve(vs.size() * 24);
        for (int v : vs) {
            key += node_key(d_.nodes()[static_cast<std::size_t>(v)]);
            key += '[';
            for (int l : labels_[static_cast<std::size_t>(v)]) {
                auto it = local.find(l);
                int id;
                if (it == local.end()) {
                    id = static_cast<int>(local.size());
                    local.emplace(l, id);
                    if (count[l] == 1)
                        ext.push_back(l);
                } else {
                    id = it->second;
                }
                key += (count[l] == 1 ? 'e' : 'i');
                key += std::to_string(id);
                key += ' ';
            }
            key += ']';
        }
        auto& c = cache<S>();
        {
            std::lock_guard<std::mutex> lock(c.mu);
            auto it = c.map.find(key);
            if (it != c.map.end())
                return relabel(*it->second, ext);
        }
        Tensor<S> t = contract_all(group_parts(vs, depth));
        // canonical leg order: external labels by first use
        std::vector<int> want = ext;
        Tensor<S> canon = reorder(t, want);
        Tensor<S> stored = canon;
        for (std::size_t k = 0; k < stored.legs.size(); ++k)
            stored.legs[k] = static_cast<int>(k);
        {
            std::lock_guard<std::mutex> lock(c.mu);
            if (c.map.size() > 50000)
                c.map.clear();
            c.map.emplace(key, std::make_shared<const Tensor<S>>(std::move(stored)));
        }
        return canon;
    }

    static Tensor<S> relabel(const Tensor<S>& t, const std::vector<int>& ext)
    {
        Tensor<S> r = t;
        for (std::size_t k = 0; k < r.legs.size(); ++k)
            r.legs[k] = ext[static_cast<std::size_t>(t.legs[k])];
        return r;
    }

    static Tensor<S> reorder(const Tensor<S>& t, const std::vector<int>& want)
    {
        std::size_t r = t.rank();
        if (want.size() != r)
            throw std::logic_error("interp: group leg mismatch");
        std::vector<std::size_t> pos(r);
        for (std::size_t k = 0; k < r; ++k)
            pos[k] = static_cast<std::size_t>(std::find(t.legs.begin(), t.legs.end(), want[k]) - t.legs.begin());
        Tensor<S> out;
        out.legs = want;
        out.data.assign(t.data.size(), S(0));
        for (std::size_t w = 0; w < t.data.size(); ++w) {
            std::size_t idx = 0;
            for (std::size_t k = 0; k < r; ++k)
                if (w & bit(r, k))
                    idx |= bit(r, pos[k]);
            out.data[w] = t.data[idx];
        }
        return out;
    }

    const Diagram& d_;
    std::vector<std::vector<int>> labels_;
    std::vector<int> in_label_, out_label_;
    std::vector<Tensor<S>> deltas_;
};

} // namespace

bool exact_eligible(const Diagram& d) { return d.free_variables().empty() && d.is_pi4_exact(); }

ExactMatrix generator_matrix_exact(const Node& n) { return tensor_to_matrix(node_data<Cyclo>(n), n.n_in, n.n_out); }

FloatMatrix generator_matrix_float(const Node& n)
{
    return tensor_to_matrix(node_data<std::complex<double>>(n), n.n_in, n.n_out);
}

ExactMatrix interp_exact(const Diagram& d)
{
    d.validate();
    if (!d.free_variables().empty())
        throw std::invalid_argument("interp: free variable " + *d.free_variables().begin());
    if (!d.is_pi4_exact())
        throw std::invalid_argument("interp: diagram is not eligible for exact mode");
    return Contractor<Cyclo>(d).run();
}

FloatMatrix interp_float(const Diagram& d)
{
    d.validate();
    if (!d.free_variables().empty())
        throw std::invalid_argument("interp: free variable " + *d.free_variables().begin());
    return Contractor<std::complex<double>>(d).run();
}

AnyMatrix interp(const Diagram& d, InterpMode mode)
{
    if (mode.is_exact())
        return AnyMatrix{interp_exact(d)};
    return AnyMatrix{interp_float(d)};
}

bool eq_semantic(const Diagram& d1, const Diagram& d2, InterpMode mode)
{
    if (d1.inputs() != d2.inputs() || d1.outputs() != d2.outputs())
        throw std::invalid_argument("eq_semantic: arity mismatch");
    if (mode.is_exact())
        return exact_equal(interp_exact(d1), interp_exact(d2));
    return approx_equal(interp_float(d1), interp_float(d2), mode.tol);
}

bool eq_auto(const Diagram& d1, const Diagram& d2, double tol)
{
    bool ex = exact_eligible(d1) && exact_eligible(d2);
    return eq_semantic(d1, d2, ex ? InterpMode::exact() : InterpMode::floating(tol));
}

LinearCheck eq_linear(const Diagram& d1, const Diagram& d2, int samples, std::uint64_t seed, double tol)
{
    if (d1.inputs() != d2.inputs() || d1.outputs() != d2.outputs())
        throw std::invalid_argument("eq_linear: arity mismatch");
    std::set<std::string> vs = d1.free_variables();
    for (const auto& v : d2.free_variables())
        vs.insert(v);
    std::vector<std::string> names(vs.begin(), vs.end());
    LinearCheck res;
    auto check = [&](const Valuation& val, bool grid) {
        Diagram a = substitute(d1, val), b = substitute(d2, val);
        bool ok = eq_auto(a, b, tol);
        if (grid)
            ++res.exact_valuations;
        else
            ++res.float_valuations;
        if (!ok && res.equal) {
            res.equal = false;
            res.witness = val;
        }
        return ok;
    };
    if (names.empty()) {
        res.equal = eq_auto(d1, d2, tol);
        return res;
    }
    // grid valuations
    std::mt19937_64 rng(seed);
    std::uint64_t total = 1;
    bool capped = false;
    for (std::size_t i = 0; i < names.size(); ++i) {
        total *= 8;
        if (total > 4096) {
            capped = true;
            break;
        }
    }
    if (!capped) {
        for (std::uint64_t code = 0; code < total; ++code) {
            Valuation val;
            std::uint64_t c = code;
            for (const auto& n : names) {
                val[n] = Phase::pi4(static_cast<std::int64_t>(c % 8));
                c /= 8;
            }
            if (!check(val, true))
                return res;
        }
    } else {
        std::uniform_int_distribution<int> k8(0, 7);
        for (int s = 0; s < 4096; ++s) {
            Valuation val;
            for (const auto& n : names)
                val[n] = Phase::pi4(k8(rng));
            if (!check(val, true))
                return res;
        }
    }
    std::uniform_real_distribution<double> ang(0.0, 2 * 3.14159265358979323846);
    for (int s = 0; s < samples; ++s) {
        Valuation val;
        for (const auto& n : names)
            val[n] = Phase::radians(ang(rng));
        if (!check(val, false))
            return res;
    }
    return res;
}

void clear_contraction_cache()
{
    {
        auto& c = cache<Cyclo>();
        std::lock_guard<std::mutex> lock(c.mu);
        c.map.clear();
    }
    auto& c = cache<std::complex<double>>();
    std::lock_guard<std::mutex> lock(c.mu);
    c.map.clear();
}

} // namespace zxw
