#include "core/solver_free.hpp"

#include <algorithm>
#include <limits>
#include <string>

namespace floodit {

FreeDpTable FreeDpTable::build(const ColouredGraph& g, std::size_t subgraph_cap) {
    require_connected(g);
    for (auto [u, v] : g.edges())
        if (g.colour(u) == g.colour(v))
            throw InputError("subgraph table needs a properly coloured graph; contract it first");

    FreeDpTable table;
    table.index_ = enumerate_connected_subgraphs(g, g.vertex_count(), subgraph_cap);
    table.colours_ = g.colour_count();
    const std::size_t c = table.colours_;
    table.values_.assign(table.index_.size() * c, 0);

    for (SubgraphIndex::Id id = 0; id < g.vertex_count(); ++id) {
        const Colour own = g.colour(table.index_.at(id).min());
        for (Colour d = 0; d < c; ++d)
            table.values_[id * c + d] = own == d ? 0 : 1;
    }

    constexpr auto kUnset = std::numeric_limits<std::uint32_t>::max();
    std::vector<std::uint32_t> same(c);
    for (SubgraphIndex::Id h = static_cast<SubgraphIndex::Id>(g.vertex_count()); h < table.index_.size(); ++h) {
        // First branch: both halves flooded in d directly.
        std::fill(same.begin(), same.end(), kUnset);
        for_each_split(table.index_, h, [&](SubgraphIndex::Id a, SubgraphIndex::Id b) {
            const std::uint32_t* va = &table.values_[a * c];
            const std::uint32_t* vb = &table.values_[b * c];
            for (Colour d = 0; d < c; ++d)
                same[d] = std::min(same[d], va[d] + vb[d]);
        });
        // Second branch: flood in some d2 (d2 = d included), then one recolour.
        const std::uint32_t via_other = *std::min_element(same.begin(), same.end());
        if (via_other == kUnset)
            throw InternalError("connected subgraph without a split");
        for (Colour d = 0; d < c; ++d)
            table.values_[h * c + d] = std::min(same[d], via_other + 1);
    }
    return table;
}

std::uint32_t dp_value(const FreeDpTable& table, const VertexSet& h, Colour d) {
    const auto id = table.index().find(h);
    if (!id || d >= table.colour_count())
        throw InternalError("no table entry for the requested subgraph and colour");
    return table.at(*id, d);
}

FreeSolution solve_free(const ColouredGraph& g, std::size_t subgraph_cap) {
    require_connected(g);
    const Contraction contracted = contract_monochromatic(g);
    require_vertex_set_capacity(contracted.quotient);

    const FreeDpTable table = FreeDpTable::build(contracted.quotient, subgraph_cap);
    const auto whole = table.index().find(contracted.quotient.all_vertices());
    if (!whole)
        throw InternalError("whole graph missing from the subgraph index");

    FreeSolution out;
    out.subgraph_count = table.index().size();
    out.per_colour.resize(g.colour_count());
    for (Colour d = 0; d < g.colour_count(); ++d)
        out.per_colour[d] = table.at(*whole, d);
    out.overall = *std::min_element(out.per_colour.begin(), out.per_colour.end());
    return out;
}

} // namespace floodit
