#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "core/graph.hpp"

namespace floodit {

// One solver or oracle run, serialised as a single JSON line. Field names and
// order are a stable interface:
//
//   instance, variant, method, root, terminals, target, per_colour, overall,
//   value, witness, subgraph_count, state_count, wall_ms
//
// Absent parameters and unknown per-colour entries are JSON null. Free and
// link witnesses are [[vertex, colour], ...]; fixed witnesses list colours.
struct ResultRecord {
    std::string instance;
    std::string variant; // free | fixed | link
    std::string method;  // dp | oracle
    std::optional<Vertex> root;
    std::optional<std::vector<Vertex>> terminals;
    Target target;
    std::vector<std::optional<std::uint32_t>> per_colour;
    std::uint32_t overall = 0;
    std::uint32_t value = 0;
    std::optional<std::vector<Move>> move_witness;
    std::optional<std::vector<Colour>> colour_witness;
    std::optional<std::size_t> subgraph_count;
    std::optional<std::size_t> state_count;
    double wall_ms = 0.0;
};

std::string to_json_line(const ResultRecord& record);

} // namespace floodit
