#pragma once

#include <string>
#include <variant>

#include <json.hpp>

#include "qtsp/core.hpp"
#include "qtsp/graphs.hpp"

namespace qtsp {

using GraphSpec = std::variant<GStarGraph, PVGraph, MEEGraph>;

struct Instance {
    Family family = Family::SEE;
    GraphSpec graph;
    CostModel costs;
    nlohmann::ordered_json meta;

    Instance() : graph(PVGraph(4)), costs(LinearCosts{{0, 0, 0, 0, 0, 0}}) {}

    const Graph& base() const;
};

// Textual instance format.  Rendering is canonical (fixed key order, sorted
// adjacent triples), so parse/render round-trips are byte-stable.
Instance parse_instance(const std::string& text);
std::string render_instance(const Instance& inst);

}  // namespace qtsp
