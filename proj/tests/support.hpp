#pragma once

#include <algorithm>
#include <initializer_list>
#include <vector>

#include "core/generators.hpp"
#include "core/graph.hpp"

namespace support {

using namespace floodit;

inline ColouredGraph make(std::size_t colours, std::vector<Colour> col, std::vector<Edge> edges) {
    const std::size_t n = col.size();
    return ColouredGraph(n, colours, std::move(col), std::move(edges));
}

inline ColouredGraph path(std::vector<Colour> col, std::size_t colours = 0) {
    const std::size_t n = col.size();
    Colour top = 0;
    for (auto c : col)
        top = std::max(top, c);
    return ColouredGraph(n, colours ? colours : top + 1, std::move(col), path_edges(n));
}

inline ColouredGraph cycle(std::vector<Colour> col, std::size_t colours = 0) {
    const std::size_t n = col.size();
    Colour top = 0;
    for (auto c : col)
        top = std::max(top, c);
    return ColouredGraph(n, colours ? colours : top + 1, std::move(col), cycle_edges(n));
}

inline VertexSet set_of(std::initializer_list<Vertex> vs) {
    VertexSet s;
    for (auto v : vs)
        s.insert(v);
    return s;
}

// Seeded random connected instance with 1 <= n <= max_n.
inline ColouredGraph random_graph(Rng& rng, std::size_t max_n, std::size_t colours) {
    const std::size_t n = 1 + uniform_below(rng, max_n);
    const double p = uniform_unit(rng);
    auto edges = random_connected_edges(n, p, rng);
    return ColouredGraph(n, colours, random_colouring(n, colours, rng), std::move(edges));
}

// Connectivity of g[s] by plain BFS over adjacency tests.
inline bool connected_subset(const ColouredGraph& g, unsigned mask) {
    if (mask == 0)
        return false;
    unsigned seen = mask & (~mask + 1), frontier = seen;
    while (frontier) {
        unsigned next = 0;
        for (Vertex u = 0; u < g.vertex_count(); ++u)
            if ((frontier >> u) & 1)
                for (Vertex v = 0; v < g.vertex_count(); ++v)
                    if (((mask >> v) & 1) && !((seen >> v) & 1) && g.adjacent(u, v))
                        next |= 1u << v;
        seen |= next;
        frontier = next;
    }
    return seen == mask;
}

inline VertexSet from_mask(unsigned mask) {
    VertexSet s;
    for (Vertex v = 0; v < 32; ++v)
        if ((mask >> v) & 1)
            s.insert(v);
    return s;
}

} // namespace support
