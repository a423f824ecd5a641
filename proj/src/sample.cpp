#include "zxw/sample.hpp"

#include <stdexcept>
#include <vector>

namespace zxw {

namespace {

Diagram pick(Calculus c, const SampleOptions& opt, int width, std::mt19937_64& rng)
{
    std::uniform_int_distribution<int> phase(0, 7);
    auto ph = [&] { return opt.pi4 ? Phase::pi4(phase(rng)) : Phase::pi(phase(rng) % 4, 2); };
    std::vector<Diagram> cands;
    bool grow = width < opt.max_width;
    if (c == Calculus::ZW) {
        if (width >= 1) {
            cands.push_back(black_not());
            cands.push_back(white_sign());
            if (grow)
                cands.push_back(black_w());
        }
        if (width >= 2) {
            cands.push_back(white_merge());
            cands.push_back(zw_cross());
            cands.push_back(swap(c));
            cands.push_back(cup(c));
        }
        if (grow && width + 2 <= opt.max_width)
            cands.push_back(cap(c));
        cands.push_back(half());
        return cands[std::uniform_int_distribution<std::size_t>(0, cands.size() - 1)(rng)];
    }
    if (width >= 1) {
        cands.push_back(zsp(ph(), 1, 1));
        cands.push_back(xsp(ph(), 1, 1));
        cands.push_back(had());
        cands.push_back(had());
        if (grow) {
            cands.push_back(zsp(ph(), 1, 2));
            cands.push_back(xsp(ph(), 1, 2));
        }
        cands.push_back(zsp(ph(), 1, 0));
    }
    if (width >= 2) {
        cands.push_back(zsp(ph(), 2, 1));
        cands.push_back(xsp(ph(), 2, 1));
        cands.push_back(swap(c));
        cands.push_back(cup(c));
    }
    if (grow) {
        cands.push_back(xsp(ph(), 0, 1));
        if (width + 2 <= opt.max_width)
            cands.push_back(cap(c));
    }
    Diagram g = cands[std::uniform_int_distribution<std::size_t>(0, cands.size() - 1)(rng)];
    return c == Calculus::ZXT ? retagged(g, c) : g;
}

} // namespace

Diagram random_diagram(Calculus c, const SampleOptions& opt, std::mt19937_64& rng)
{
    if (opt.inputs < 0 || opt.generators < 0 || opt.max_width < 2)
        throw std::invalid_argument("random_diagram: bad options");
    Diagram d = identity(opt.inputs, c);
    int width = opt.inputs;
    for (int i = 0; i < opt.generators; ++i) {
        Diagram g = pick(c, opt, width, rng);
        int at = std::uniform_int_distribution<int>(0, width - g.inputs())(rng);
        Diagram layer = tensor(tensor(identity(at, c), g), identity(width - at - g.inputs(), c));
        d = compose(layer, d);
        width = d.outputs();
    }
    return d;
}

} // namespace zxw
