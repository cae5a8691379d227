#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "core/enumeration.hpp"
#include "core/graph.hpp"

namespace floodit {

// Optimal flood counts for every (connected subgraph, colour) pair of a
// properly coloured graph. Row-major: one row of colour_count() values per
// subgraph id of the index.
class FreeDpTable {
public:
    // g must be connected and properly coloured.
    static FreeDpTable build(const ColouredGraph& g, std::size_t subgraph_cap = 0);

    const SubgraphIndex& index() const { return index_; }
    std::size_t colour_count() const { return colours_; }
    std::uint32_t at(SubgraphIndex::Id h, Colour d) const { return values_[h * colours_ + d]; }

private:
    SubgraphIndex index_;
    std::size_t colours_ = 0;
    std::vector<std::uint32_t> values_;
};

// Table entry for (h, d). Throws InternalError if h has no entry.
std::uint32_t dp_value(const FreeDpTable& table, const VertexSet& h, Colour d);

struct FreeSolution {
    std::vector<std::uint32_t> per_colour;
    std::uint32_t overall = 0;
    // Connected subgraphs of the contracted graph (N).
    std::size_t subgraph_count = 0;
};

// Contracts monochromatic components, then fills the table bottom-up by
// subgraph order. Throws InputError when g is disconnected, CapacityError
// when the contracted graph exceeds VertexSet, ResourceError past the cap.
FreeSolution solve_free(const ColouredGraph& g, std::size_t subgraph_cap = 0);

} // namespace floodit
