#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "core/errors.hpp"
#include "core/vertex_set.hpp"

namespace floodit {

using Colour = std::uint32_t;

// A full assignment vertex -> colour; one game state.
using Colouring = std::vector<Colour>;

// Requested final colour; nullopt accepts any monochromatic outcome.
using Target = std::optional<Colour>;

using Edge = std::pair<Vertex, Vertex>;

struct Move {
    Vertex vertex = 0;
    Colour colour = 0;

    friend bool operator==(const Move&, const Move&) = default;
};

// Simple undirected graph with an initial colouring drawn from
// {0..colour_count-1}. Immutable once built.
class ColouredGraph {
public:
    ColouredGraph() = default;

    // Throws InputError on self-loops, duplicate edges, out-of-range vertices
    // or colours, n == 0 or colour_count == 0.
    ColouredGraph(std::size_t n, std::size_t colour_count, Colouring colours, std::vector<Edge> edges);

    std::size_t vertex_count() const { return colours_.size(); }
    std::size_t colour_count() const { return colour_count_; }
    std::size_t edge_count() const { return edges_.size(); }

    const Colouring& colouring() const { return colours_; }
    Colour colour(Vertex v) const { return colours_[v]; }

    // Edges as (u, v) with u < v, sorted ascending.
    const std::vector<Edge>& edges() const { return edges_; }
    std::span<const Vertex> neighbours(Vertex v) const { return neighbours_[v]; }
    bool adjacent(Vertex u, Vertex v) const;

    // Only available when vertex_count() <= VertexSet::kCapacity.
    const VertexSet& neighbour_set(Vertex v) const;
    bool fits_vertex_set() const { return vertex_count() <= VertexSet::kCapacity; }
    VertexSet all_vertices() const;

    bool is_connected() const;

    // Same topology, different colouring (validated against colour_count).
    ColouredGraph with_colouring(Colouring colours) const;
    // Same vertices and colouring, different edge set.
    ColouredGraph with_edges(std::vector<Edge> edges) const;

private:
    std::size_t colour_count_ = 0;
    Colouring colours_;
    std::vector<Edge> edges_;
    std::vector<std::vector<Vertex>> neighbours_;
    std::vector<VertexSet> neighbour_sets_;
};

// Throws CapacityError when g is too large for VertexSet.
void require_vertex_set_capacity(const ColouredGraph& g);
void require_connected(const ColouredGraph& g);
void validate_move(const ColouredGraph& g, const Move& m);

// Maximal connected set of vertices sharing col[v], containing v.
VertexSet monochromatic_component(const ColouredGraph& g, const Colouring& col, Vertex v);

// Recolours the component of m.vertex; col itself is left untouched.
Colouring apply_move(const ColouredGraph& g, const Colouring& col, const Move& m);

bool is_monochromatic(const Colouring& col);

// Component labels under col, numbered in order of each component's smallest
// vertex. Returns the number of components.
std::size_t label_components(const ColouredGraph& g, const Colouring& col, std::vector<std::uint32_t>& labels);

struct Contraction {
    ColouredGraph quotient;
    // original vertex -> quotient vertex
    std::vector<Vertex> map;
    // quotient vertex -> smallest original vertex in its class
    std::vector<Vertex> representative;
};

// Quotients every monochromatic component of (g, g.colouring()) to a single
// vertex. Quotient vertices are numbered by smallest original member, so a
// properly coloured g maps to itself with the identity map.
Contraction contract_monochromatic(const ColouredGraph& g);

// True iff s is non-empty and g[s] is connected.
bool is_connected_induced(const ColouredGraph& g, const VertexSet& s);

struct InducedSubgraph {
    ColouredGraph graph;
    // subgraph vertex -> original vertex (ascending)
    std::vector<Vertex> original;
};

// g[s] relabelled densely in ascending order, keeping g's colour_count.
InducedSubgraph induced_subgraph(const ColouredGraph& g, const VertexSet& s);

} // namespace floodit
