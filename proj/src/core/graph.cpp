#include "core/graph.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <string>

namespace floodit {

namespace {

class DisjointSets {
public:
    explicit DisjointSets(std::size_t n) : parent_(n), size_(n, 1) {
        std::iota(parent_.begin(), parent_.end(), 0u);
    }

    std::uint32_t find(std::uint32_t x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    void unite(std::uint32_t a, std::uint32_t b) {
        a = find(a);
        b = find(b);
        if (a == b)
            return;
        if (size_[a] < size_[b])
            std::swap(a, b);
        parent_[b] = a;
        size_[a] += size_[b];
    }

private:
    std::vector<std::uint32_t> parent_;
    std::vector<std::uint32_t> size_;
};

} // namespace

ColouredGraph::ColouredGraph(std::size_t n, std::size_t colour_count, Colouring colours, std::vector<Edge> edges)
    : colour_count_(colour_count), colours_(std::move(colours)) {
    if (n == 0)
        throw InputError("graph must have at least one vertex");
    if (colour_count == 0)
        throw InputError("colour count must be at least 1");
    if (colours_.size() != n)
        throw InputError("colouring has " + std::to_string(colours_.size()) + " entries, expected " +
                         std::to_string(n));
    for (std::size_t v = 0; v < n; ++v)
        if (colours_[v] >= colour_count)
            throw InputError("vertex " + std::to_string(v) + " has colour " + std::to_string(colours_[v]) +
                             " outside 0.." + std::to_string(colour_count - 1));

    for (auto& [u, v] : edges) {
        if (u >= n || v >= n)
            throw InputError("edge (" + std::to_string(u) + "," + std::to_string(v) + ") out of range");
        if (u == v)
            throw InputError("self-loop at vertex " + std::to_string(u));
        if (u > v)
            std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    if (auto dup = std::adjacent_find(edges.begin(), edges.end()); dup != edges.end())
        throw InputError("duplicate edge (" + std::to_string(dup->first) + "," + std::to_string(dup->second) + ")");
    edges_ = std::move(edges);

    neighbours_.assign(n, {});
    for (auto [u, v] : edges_) {
        neighbours_[u].push_back(v);
        neighbours_[v].push_back(u);
    }
    for (auto& adj : neighbours_)
        std::sort(adj.begin(), adj.end());

    if (n <= VertexSet::kCapacity) {
        neighbour_sets_.assign(n, VertexSet{});
        for (auto [u, v] : edges_) {
            neighbour_sets_[u].insert(v);
            neighbour_sets_[v].insert(u);
        }
    }
}

bool ColouredGraph::adjacent(Vertex u, Vertex v) const {
    const auto& adj = neighbours_[u];
    return std::binary_search(adj.begin(), adj.end(), v);
}

const VertexSet& ColouredGraph::neighbour_set(Vertex v) const {
    if (!fits_vertex_set())
        throw CapacityError("graph has " + std::to_string(vertex_count()) + " vertices; vertex sets hold at most " +
                            std::to_string(VertexSet::kCapacity));
    return neighbour_sets_[v];
}

VertexSet ColouredGraph::all_vertices() const {
    require_vertex_set_capacity(*this);
    return VertexSet::range(vertex_count());
}

bool ColouredGraph::is_connected() const {
    const std::size_t n = vertex_count();
    std::vector<char> seen(n, 0);
    std::vector<Vertex> stack{0};
    seen[0] = 1;
    std::size_t reached = 1;
    while (!stack.empty()) {
        Vertex u = stack.back();
        stack.pop_back();
        for (Vertex w : neighbours_[u])
            if (!seen[w]) {
                seen[w] = 1;
                ++reached;
                stack.push_back(w);
            }
    }
    return reached == n;
}

ColouredGraph ColouredGraph::with_colouring(Colouring colours) const {
    return ColouredGraph(vertex_count(), colour_count_, std::move(colours), edges_);
}

ColouredGraph ColouredGraph::with_edges(std::vector<Edge> edges) const {
    return ColouredGraph(vertex_count(), colour_count_, colours_, std::move(edges));
}

void require_vertex_set_capacity(const ColouredGraph& g) {
    if (!g.fits_vertex_set())
        throw CapacityError("graph has " + std::to_string(g.vertex_count()) +
                            " vertices; vertex sets hold at most " + std::to_string(VertexSet::kCapacity));
}

void require_connected(const ColouredGraph& g) {
    if (!g.is_connected())
        throw InputError("graph is not connected");
}

namespace {

void require_colouring_size(const ColouredGraph& g, const Colouring& col) {
    if (col.size() != g.vertex_count())
        throw InputError("colouring has " + std::to_string(col.size()) + " entries, expected " +
                         std::to_string(g.vertex_count()));
}

} // namespace

void validate_move(const ColouredGraph& g, const Move& m) {
    if (m.vertex >= g.vertex_count())
        throw InputError("move vertex " + std::to_string(m.vertex) + " out of range");
    if (m.colour >= g.colour_count())
        throw InputError("move colour " + std::to_string(m.colour) + " out of range");
}

VertexSet monochromatic_component(const ColouredGraph& g, const Colouring& col, Vertex v) {
    require_vertex_set_capacity(g);
    if (v >= g.vertex_count())
        throw InputError("vertex " + std::to_string(v) + " out of range");
    require_colouring_size(g, col);
    const Colour c = col[v];
    VertexSet comp = VertexSet::single(v);
    std::vector<Vertex> stack{v};
    while (!stack.empty()) {
        Vertex u = stack.back();
        stack.pop_back();
        for (Vertex w : g.neighbours(u))
            if (col[w] == c && !comp.contains(w)) {
                comp.insert(w);
                stack.push_back(w);
            }
    }
    return comp;
}

Colouring apply_move(const ColouredGraph& g, const Colouring& col, const Move& m) {
    validate_move(g, m);
    require_colouring_size(g, col);
    Colouring next = col;
    const Colour old = col[m.vertex];
    if (old == m.colour)
        return next;
    std::vector<Vertex> stack{m.vertex};
    next[m.vertex] = m.colour;
    while (!stack.empty()) {
        Vertex u = stack.back();
        stack.pop_back();
        for (Vertex w : g.neighbours(u))
            if (next[w] == old && col[w] == old) {
                next[w] = m.colour;
                stack.push_back(w);
            }
    }
    return next;
}

bool is_monochromatic(const Colouring& col) {
    return std::adjacent_find(col.begin(), col.end(), std::not_equal_to<>{}) == col.end();
}

std::size_t label_components(const ColouredGraph& g, const Colouring& col, std::vector<std::uint32_t>& labels) {
    constexpr auto kUnset = static_cast<std::uint32_t>(-1);
    const std::size_t n = g.vertex_count();
    labels.assign(n, kUnset);
    std::vector<Vertex> stack;
    std::uint32_t next = 0;
    for (Vertex s = 0; s < n; ++s) {
        if (labels[s] != kUnset)
            continue;
        labels[s] = next;
        stack.push_back(s);
        while (!stack.empty()) {
            Vertex u = stack.back();
            stack.pop_back();
            for (Vertex w : g.neighbours(u))
                if (labels[w] == kUnset && col[w] == col[s]) {
                    labels[w] = next;
                    stack.push_back(w);
                }
        }
        ++next;
    }
    return next;
}

Contraction contract_monochromatic(const ColouredGraph& g) {
    const std::size_t n = g.vertex_count();
    DisjointSets sets(n);
    for (auto [u, v] : g.edges())
        if (g.colour(u) == g.colour(v))
            sets.unite(u, v);

    Contraction out;
    out.map.assign(n, 0);
    std::vector<std::int64_t> root_to_q(n, -1);
    for (Vertex v = 0; v < n; ++v) {
        const auto r = sets.find(v);
        if (root_to_q[r] < 0) {
            root_to_q[r] = static_cast<std::int64_t>(out.representative.size());
            out.representative.push_back(v);
        }
        out.map[v] = static_cast<Vertex>(root_to_q[r]);
    }

    const std::size_t q = out.representative.size();
    Colouring colours(q);
    for (Vertex i = 0; i < q; ++i)
        colours[i] = g.colour(out.representative[i]);

    std::vector<Edge> edges;
    for (auto [u, v] : g.edges()) {
        Vertex a = out.map[u], b = out.map[v];
        if (a == b)
            continue;
        if (a > b)
            std::swap(a, b);
        edges.emplace_back(a, b);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    out.quotient = ColouredGraph(q, g.colour_count(), std::move(colours), std::move(edges));
    return out;
}

bool is_connected_induced(const ColouredGraph& g, const VertexSet& s) {
    if (s.empty())
        return false;
    const Vertex start = s.min();
    VertexSet seen = VertexSet::single(start);
    std::vector<Vertex> stack{start};
    while (!stack.empty()) {
        Vertex u = stack.back();
        stack.pop_back();
        VertexSet fresh = (g.neighbour_set(u) & s) - seen;
        for (Vertex w : fresh) {
            seen.insert(w);
            stack.push_back(w);
        }
    }
    return seen == s;
}

InducedSubgraph induced_subgraph(const ColouredGraph& g, const VertexSet& s) {
    require_vertex_set_capacity(g);
    if (s.empty())
        throw InputError("induced subgraph of the empty set");
    InducedSubgraph out;
    out.original = s.to_vector();
    if (out.original.back() >= g.vertex_count())
        throw InputError("vertex set exceeds graph order");
    std::vector<Vertex> local(g.vertex_count(), 0);
    for (Vertex i = 0; i < out.original.size(); ++i)
        local[out.original[i]] = i;

    Colouring colours;
    colours.reserve(out.original.size());
    for (Vertex v : out.original)
        colours.push_back(g.colour(v));
    std::vector<Edge> edges;
    for (auto [u, v] : g.edges())
        if (s.contains(u) && s.contains(v))
            edges.emplace_back(local[u], local[v]);
    out.graph = ColouredGraph(out.original.size(), g.colour_count(), std::move(colours), std::move(edges));
    return out;
}

} // namespace floodit
