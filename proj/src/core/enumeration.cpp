#include "core/enumeration.hpp"

#include <algorithm>
#include <string>
#include <unordered_set>

namespace floodit {

namespace {

VertexSet open_neighbourhood(const ColouredGraph& g, const VertexSet& s) {
    VertexSet out;
    for (Vertex v : s)
        out |= g.neighbour_set(v);
    return out - s;
}

void sort_lex(std::vector<VertexSet>& layer) {
    std::sort(layer.begin(), layer.end(), [](const VertexSet& a, const VertexSet& b) { return lex_less(a, b); });
}

void check_order(const ColouredGraph& g, std::size_t max_size) {
    require_vertex_set_capacity(g);
    if (max_size < 1 || max_size > g.vertex_count())
        throw InputError("subgraph order bound " + std::to_string(max_size) + " outside 1.." +
                         std::to_string(g.vertex_count()));
}

// Layered growth shared by the full and rooted enumerations.
std::vector<VertexSet> grow_layers(const ColouredGraph& g, std::vector<VertexSet> layer, std::size_t max_size,
                                   std::size_t cap, std::vector<std::size_t>* offsets) {
    std::vector<VertexSet> all;
    auto push_layer = [&](const std::vector<VertexSet>& l) {
        all.insert(all.end(), l.begin(), l.end());
        if (cap != 0 && all.size() > cap)
            throw ResourceError("connected subgraph count exceeds cap of " + std::to_string(cap));
        if (offsets)
            offsets->push_back(all.size());
    };
    sort_lex(layer);
    push_layer(layer);
    for (std::size_t k = 1; k < max_size && !layer.empty(); ++k) {
        std::unordered_set<VertexSet, VertexSetHash> next;
        for (const VertexSet& s : layer)
            for (Vertex w : open_neighbourhood(g, s)) {
                VertexSet grown = s;
                grown.insert(w);
                next.insert(grown);
            }
        layer.assign(next.begin(), next.end());
        sort_lex(layer);
        push_layer(layer);
    }
    if (offsets)
        while (offsets->size() <= max_size)
            offsets->push_back(all.size());
    return all;
}

} // namespace

std::span<const VertexSet> SubgraphIndex::of_order(std::size_t k) const {
    if (k < 1 || k > max_order())
        return {};
    return std::span<const VertexSet>(sets_).subspan(offsets_[k - 1], offsets_[k] - offsets_[k - 1]);
}

std::optional<SubgraphIndex::Id> SubgraphIndex::find(const VertexSet& s) const {
    auto it = ids_.find(s);
    if (it == ids_.end())
        return std::nullopt;
    return it->second;
}

SubgraphIndex enumerate_connected_subgraphs(const ColouredGraph& g, std::size_t max_size, std::size_t cap) {
    check_order(g, max_size);
    std::vector<VertexSet> singles;
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        singles.push_back(VertexSet::single(v));

    SubgraphIndex index;
    index.offsets_.push_back(0);
    index.sets_ = grow_layers(g, std::move(singles), max_size, cap, &index.offsets_);
    index.ids_.reserve(index.sets_.size());
    index.by_min_.assign(g.vertex_count(), {});
    for (SubgraphIndex::Id id = 0; id < index.sets_.size(); ++id) {
        index.ids_.emplace(index.sets_[id], id);
        index.by_min_[index.sets_[id].min()].push_back(id);
    }
    return index;
}

std::vector<VertexSet> enumerate_rooted_subgraphs(const ColouredGraph& g, Vertex root, std::size_t max_size,
                                                  std::size_t cap) {
    check_order(g, max_size);
    if (root >= g.vertex_count())
        throw InputError("root " + std::to_string(root) + " out of range");
    return grow_layers(g, {VertexSet::single(root)}, max_size, cap, nullptr);
}

std::vector<Split> enumerate_splits(const SubgraphIndex& index, const VertexSet& h) {
    auto id = index.find(h);
    if (!id)
        throw InputError("vertex set is not a connected subgraph in the index");
    if (h.size() < 2)
        throw InputError("a split needs at least two vertices");
    std::vector<Split> out;
    for_each_split(index, *id, [&](SubgraphIndex::Id a, SubgraphIndex::Id b) {
        out.push_back({index.at(a), index.at(b)});
    });
    return out;
}

namespace {

// Deletion/contraction over the edge list: an edge is contracted (kept) when
// it joins two current components, and deleted only if the edges still
// undecided can reconnect the graph.
class SpanningTreeWalker {
public:
    SpanningTreeWalker(const ColouredGraph& g, const std::function<bool(const TreeEdges&)>& visit)
        : n_(g.vertex_count()), edges_(g.edges()), visit_(visit) {}

    void run() {
        std::vector<std::uint32_t> label(n_);
        for (std::uint32_t v = 0; v < n_; ++v)
            label[v] = v;
        if (n_ == 1) {
            visit_(chosen_);
            return;
        }
        walk(0, label, n_);
    }

private:
    bool walk(std::size_t next, std::vector<std::uint32_t>& label, std::size_t components) {
        if (components == 1)
            return visit_(chosen_);
        if (next == edges_.size() || !reconnectable(next, label))
            return true;

        auto [u, v] = edges_[next];
        if (label[u] != label[v]) {
            std::vector<std::uint32_t> merged = label;
            const std::uint32_t from = merged[v], to = merged[u];
            for (auto& l : merged)
                if (l == from)
                    l = to;
            chosen_.push_back(edges_[next]);
            const bool go_on = walk(next + 1, merged, components - 1);
            chosen_.pop_back();
            if (!go_on)
                return false;
        }
        return walk(next + 1, label, components);
    }

    // Can the undecided edges from `next` on join every current component?
    bool reconnectable(std::size_t next, const std::vector<std::uint32_t>& label) const {
        std::vector<std::uint32_t> parent(n_);
        for (std::uint32_t v = 0; v < n_; ++v)
            parent[v] = v;
        auto find = [&](std::uint32_t x) {
            while (parent[x] != x)
                x = parent[x] = parent[parent[x]];
            return x;
        };
        std::size_t groups = 0;
        for (std::uint32_t v = 0; v < n_; ++v)
            if (label[v] == v)
                ++groups;
        for (std::size_t i = next; i < edges_.size() && groups > 1; ++i) {
            auto a = find(label[edges_[i].first]);
            auto b = find(label[edges_[i].second]);
            if (a != b) {
                parent[a] = b;
                --groups;
            }
        }
        return groups == 1;
    }

    std::size_t n_;
    const std::vector<Edge>& edges_;
    const std::function<bool(const TreeEdges&)>& visit_;
    TreeEdges chosen_;
};

} // namespace

void for_each_spanning_tree(const ColouredGraph& g, const std::function<bool(const TreeEdges&)>& visit) {
    require_connected(g);
    SpanningTreeWalker(g, visit).run();
}

std::vector<TreeEdges> enumerate_spanning_trees(const ColouredGraph& g) {
    std::vector<TreeEdges> out;
    for_each_spanning_tree(g, [&](const TreeEdges& t) {
        out.push_back(t);
        return true;
    });
    return out;
}

void for_each_steiner_subtree(const ColouredGraph& g, const VertexSet& terminals, std::size_t max_size,
                              const std::function<bool(const Subtree&)>& visit) {
    require_vertex_set_capacity(g);
    if (terminals.empty())
        throw InputError("terminal set is empty");
    if (terminals.min() >= g.vertex_count() || !terminals.is_subset_of(g.all_vertices()))
        throw InputError("terminal out of range");
    if (max_size < terminals.size())
        return;
    max_size = std::min(max_size, g.vertex_count());

    const auto grown = enumerate_rooted_subgraphs(g, terminals.min(), max_size);
    for (const VertexSet& s : grown) {
        if (!terminals.is_subset_of(s))
            continue;
        const InducedSubgraph sub = induced_subgraph(g, s);
        bool keep_going = true;
        for_each_spanning_tree(sub.graph, [&](const TreeEdges& local) {
            Subtree tree{s, {}};
            tree.edges.reserve(local.size());
            for (auto [a, b] : local)
                tree.edges.emplace_back(sub.original[a], sub.original[b]);
            keep_going = visit(tree);
            return keep_going;
        });
        if (!keep_going)
            return;
    }
}

std::vector<Subtree> enumerate_steiner_subtrees(const ColouredGraph& g, const VertexSet& terminals,
                                                std::size_t max_size) {
    std::vector<Subtree> out;
    for_each_steiner_subtree(g, terminals, max_size, [&](const Subtree& t) {
        out.push_back(t);
        return true;
    });
    return out;
}

} // namespace floodit
