#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "core/graph.hpp"

namespace floodit {

// The root's maximal monochromatic region together with its current colour.
struct StateNode {
    VertexSet region;
    Colour colour = 0;
};

// States are every (connected region containing the root, colour) pair, so
// node ids are region_id * colour_count + colour. (i -> j) is an edge when
// region_i is a subset of region_j, region_j \ region_i is empty or
// initially coloured colour_j, and no vertex bordering region_j is initially
// coloured colour_j. Self-loops are omitted.
struct StateDigraph {
    std::vector<VertexSet> regions;
    std::size_t colour_count = 0;
    // Out-neighbours per node, ordered by (region minimum, colour, node id).
    std::vector<std::vector<std::uint32_t>> out;
    std::uint32_t initial = 0;

    std::size_t node_count() const { return regions.size() * colour_count; }
    StateNode node(std::uint32_t id) const {
        return {regions[id / colour_count], static_cast<Colour>(id % colour_count)};
    }
    std::optional<std::uint32_t> find(const VertexSet& region, Colour colour) const;

    std::unordered_map<VertexSet, std::uint32_t, VertexSetHash> region_ids;
};

// Throws InputError for a disconnected graph or bad root, CapacityError when g
// exceeds VertexSet, ResourceError when the region count passes `region_cap`
// (0 = unbounded).
StateDigraph build_state_digraph(const ColouredGraph& g, Vertex root, std::size_t region_cap = 0);

struct FixedSolution {
    // nullopt marks a colour whose flooded state was never reached.
    std::vector<std::optional<std::uint32_t>> per_colour;
    std::uint32_t overall = 0;
    Colour overall_colour = 0;
    // Colours to play at the root, optimally reaching witness_colour: the
    // requested target, else overall_colour.
    Colour witness_colour = 0;
    std::vector<Colour> witness;
    // States visited by the witness, starting at the initial state.
    std::vector<StateNode> path;
    std::size_t state_count = 0;
};

// InputError when `target` is out of range.
FixedSolution solve_fixed(const ColouredGraph& g, Vertex root, Target target = std::nullopt,
                          std::size_t region_cap = 0);

} // namespace floodit
