#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "zxw/diagram.hpp"

namespace zxw {

std::size_t diagram_hash(const Diagram& d);

// an occurrence of a schema, valid only for the diagram it was found in
struct Location {
    std::string schema;
    std::vector<int> nodes;
    std::size_t hash = 0;
};

struct Schema {
    std::string name;
    std::function<std::vector<Location>(const Diagram&)> find;
    std::function<Diagram(const Diagram&, const Location&)> apply;
};

// fusion, identity, hh, hopf, color-change, scalar-merge
Schema schema(const std::string& name);
std::vector<std::string> schema_names();
std::vector<Schema> default_strategy();

std::vector<Location> find(const Schema& s, const Diagram& d);
// throws std::invalid_argument on a stale or foreign location
Diagram apply(const Schema& s, const Diagram& d, const Location& loc);

struct TraceStep {
    std::string schema;
    std::vector<int> nodes;
    std::size_t nodes_before = 0;
    std::size_t nodes_after = 0;
};

struct Simplified {
    Diagram diagram;
    std::vector<TraceStep> trace;
    bool fuel_exhausted = false;
};

// fuel < 0 means 10 * node count
Simplified simplify(const Diagram& d, const std::vector<Schema>& strategy, int fuel = -1);
Simplified simplify(const Diagram& d);

// nodes replaced by a diagram 0 -> k whose outputs attach to the given ports, in order;
// the ports must be exactly the ends of the nodes leaving the set
Diagram replace_subgraph(const Diagram& d, const std::vector<int>& nodes, const std::vector<End>& legs,
                         const Diagram& rep);

} // namespace zxw
