#include "core/solver_fixed.hpp"

#include <algorithm>
#include <string>
#include <tuple>

#include "core/enumeration.hpp"

namespace floodit {

std::optional<std::uint32_t> StateDigraph::find(const VertexSet& region, Colour colour) const {
    if (colour >= colour_count)
        return std::nullopt;
    auto it = region_ids.find(region);
    if (it == region_ids.end())
        return std::nullopt;
    return static_cast<std::uint32_t>(it->second * colour_count + colour);
}

namespace {

// The unique region_j reachable from `region` by a move to colour d: the
// region plus everything reachable through initially d-coloured vertices.
VertexSet absorb(const ColouredGraph& g, const VertexSet& region, const VertexSet& boundary,
                 const VertexSet& colour_class) {
    VertexSet grown = region;
    VertexSet frontier = boundary & colour_class;
    while (!frontier.empty()) {
        grown |= frontier;
        VertexSet reach;
        for (Vertex v : frontier)
            reach |= g.neighbour_set(v);
        frontier = (reach & colour_class) - grown;
    }
    return grown;
}

} // namespace

StateDigraph build_state_digraph(const ColouredGraph& g, Vertex root, std::size_t region_cap) {
    require_vertex_set_capacity(g);
    require_connected(g);
    if (root >= g.vertex_count())
        throw InputError("root " + std::to_string(root) + " out of range");

    StateDigraph dg;
    dg.colour_count = g.colour_count();
    const std::size_t c = dg.colour_count;
    dg.regions = enumerate_rooted_subgraphs(g, root, g.vertex_count(), region_cap);
    dg.region_ids.reserve(dg.regions.size());
    for (std::uint32_t r = 0; r < dg.regions.size(); ++r)
        dg.region_ids.emplace(dg.regions[r], r);

    std::vector<VertexSet> colour_class(c);
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        colour_class[g.colour(v)].insert(v);

    dg.out.assign(dg.node_count(), {});
    std::vector<std::uint32_t> targets(c);
    for (std::uint32_t r = 0; r < dg.regions.size(); ++r) {
        const VertexSet& region = dg.regions[r];
        VertexSet boundary;
        for (Vertex v : region)
            boundary |= g.neighbour_set(v);
        boundary -= region;

        // Successors depend only on the region and the colour played.
        for (Colour d = 0; d < c; ++d) {
            const VertexSet next = absorb(g, region, boundary, colour_class[d]);
            auto it = dg.region_ids.find(next);
            if (it == dg.region_ids.end())
                throw InternalError("absorbed region missing from the state set");
            targets[d] = static_cast<std::uint32_t>(it->second * c + d);
        }
        std::vector<std::uint32_t> ordered = targets;
        std::sort(ordered.begin(), ordered.end(), [&](std::uint32_t a, std::uint32_t b) {
            return std::make_tuple(dg.regions[a / c].min(), a % c, a) <
                   std::make_tuple(dg.regions[b / c].min(), b % c, b);
        });
        for (Colour own = 0; own < c; ++own) {
            const std::uint32_t id = static_cast<std::uint32_t>(r * c + own);
            for (std::uint32_t t : ordered)
                if (t != id)
                    dg.out[id].push_back(t);
        }
    }

    const VertexSet start = monochromatic_component(g, g.colouring(), root);
    const auto initial = dg.find(start, g.colour(root));
    if (!initial)
        throw InternalError("initial state missing from the state set");
    dg.initial = *initial;
    return dg;
}

FixedSolution solve_fixed(const ColouredGraph& g, Vertex root, Target target, std::size_t region_cap) {
    if (target && *target >= g.colour_count())
        throw InputError("target colour " + std::to_string(*target) + " out of range");
    const StateDigraph dg = build_state_digraph(g, root, region_cap);
    constexpr auto kUnseen = static_cast<std::uint32_t>(-1);
    std::vector<std::uint32_t> dist(dg.node_count(), kUnseen);
    std::vector<std::uint32_t> parent(dg.node_count(), kUnseen);

    std::vector<std::uint32_t> queue{dg.initial};
    dist[dg.initial] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const std::uint32_t u = queue[head];
        for (std::uint32_t w : dg.out[u])
            if (dist[w] == kUnseen) {
                dist[w] = dist[u] + 1;
                parent[w] = u;
                queue.push_back(w);
            }
    }

    FixedSolution out;
    out.state_count = dg.node_count();
    out.per_colour.assign(dg.colour_count, std::nullopt);
    const VertexSet everything = g.all_vertices();
    std::optional<std::uint32_t> best_node;
    for (Colour d = 0; d < dg.colour_count; ++d) {
        const auto id = dg.find(everything, d);
        if (!id || dist[*id] == kUnseen)
            continue;
        out.per_colour[d] = dist[*id];
        if (!best_node || dist[*id] < out.overall) {
            best_node = *id;
            out.overall = dist[*id];
            out.overall_colour = d;
        }
    }
    if (!best_node)
        throw InternalError("no flooded state is reachable from the initial state");
    out.witness_colour = out.overall_colour;
    if (target) {
        if (!out.per_colour[*target])
            throw InternalError("flooded state for the target colour is unreachable");
        out.witness_colour = *target;
        best_node = dg.find(everything, *target);
    }

    for (std::uint32_t v = *best_node; v != kUnseen; v = parent[v])
        out.path.push_back(dg.node(v));
    std::reverse(out.path.begin(), out.path.end());
    for (std::size_t i = 1; i < out.path.size(); ++i)
        out.witness.push_back(out.path[i].colour);
    return out;
}

} // namespace floodit
