#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "core/graph.hpp"

namespace floodit {

// Exhaustive breadth-first search over whole-board colourings. Exact, and
// exponential: use for ground truth on small instances only.

struct OracleBudget {
    std::size_t max_states = 5'000'000;
    // 0 disables the wall-clock limit.
    double max_seconds = 0.0;
};

struct FreeOracleResult {
    std::uint32_t moves = 0;
    std::vector<Move> witness;
};

struct FixedOracleResult {
    std::uint32_t moves = 0;
    std::vector<Colour> witness; // colours played at the root, in order
};

// Minimum moves to make g monochromatic (in `target`, or any colour).
FreeOracleResult oracle_free(const ColouredGraph& g, Target target, const OracleBudget& budget = {});

// Same as oracle_free with every move played at `root`.
FixedOracleResult oracle_fixed(const ColouredGraph& g, Vertex root, Target target, const OracleBudget& budget = {});

// Minimum moves, played anywhere, until all terminals share one monochromatic
// component of colour `target` (any colour when unset).
FreeOracleResult oracle_link(const ColouredGraph& g, const VertexSet& terminals, Target target,
                             const OracleBudget& budget = {});

// Per-colour variants: entry d is the result for target d. One search each.
std::vector<std::uint32_t> oracle_free_all(const ColouredGraph& g, const OracleBudget& budget = {});
std::vector<std::uint32_t> oracle_fixed_all(const ColouredGraph& g, Vertex root, const OracleBudget& budget = {});
std::vector<std::uint32_t> oracle_link_all(const ColouredGraph& g, const VertexSet& terminals,
                                           const OracleBudget& budget = {});

// min over spanning trees T of g of oracle_free(T with g's colouring, target).
std::uint32_t min_over_spanning_trees(const ColouredGraph& g, Colour target, const OracleBudget& budget = {});
std::vector<std::uint32_t> min_over_spanning_trees_all(const ColouredGraph& g, const OracleBudget& budget = {});

} // namespace floodit
