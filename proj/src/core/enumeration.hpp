#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "core/graph.hpp"

namespace floodit {

// Every connected induced subgraph of a graph up to some order, grouped by
// size and sorted lexicographically within each size. Ids are positions in
// that order, so smaller sets always have smaller ids.
class SubgraphIndex {
public:
    using Id = std::uint32_t;

    std::size_t size() const { return sets_.size(); }
    std::size_t max_order() const { return offsets_.size() - 1; }
    const VertexSet& at(Id id) const { return sets_[id]; }
    const std::vector<VertexSet>& sets() const { return sets_; }

    // Sets of exactly k vertices, 1 <= k <= max_order().
    std::span<const VertexSet> of_order(std::size_t k) const;
    Id first_of_order(std::size_t k) const { return static_cast<Id>(offsets_[k - 1]); }

    std::optional<Id> find(const VertexSet& s) const;

    // Ids of the sets whose smallest vertex is v, ascending.
    std::span<const Id> with_min(Vertex v) const { return by_min_[v]; }

private:
    friend SubgraphIndex enumerate_connected_subgraphs(const ColouredGraph&, std::size_t, std::size_t);

    std::vector<VertexSet> sets_;
    std::vector<std::size_t> offsets_; // offsets_[k] = number of sets of order <= k
    std::unordered_map<VertexSet, Id, VertexSetHash> ids_;
    std::vector<std::vector<Id>> by_min_;
};

// Grows order-(k+1) sets from order-k sets by adding one neighbouring vertex.
// `cap` bounds the total number of sets (0 = unbounded); exceeding it raises
// ResourceError.
SubgraphIndex enumerate_connected_subgraphs(const ColouredGraph& g, std::size_t max_size, std::size_t cap = 0);

// Connected sets of order <= max_size that contain root, grouped by size and
// lexicographically ordered within a size.
std::vector<VertexSet> enumerate_rooted_subgraphs(const ColouredGraph& g, Vertex root, std::size_t max_size,
                                                  std::size_t cap = 0);

// Unordered split {A, B} of a connected set; `first` always holds min(h).
struct Split {
    VertexSet first;
    VertexSet second;
};

// Calls visit(id_of_first, id_of_second) once per split of index.at(h).
template <typename Visit>
void for_each_split(const SubgraphIndex& index, SubgraphIndex::Id h, Visit&& visit) {
    const VertexSet& whole = index.at(h);
    const std::size_t order = whole.size();
    for (SubgraphIndex::Id a : index.with_min(whole.min())) {
        const VertexSet& part = index.at(a);
        if (part.size() >= order)
            break;
        if (!part.is_subset_of(whole))
            continue;
        if (auto b = index.find(whole - part))
            visit(a, *b);
    }
}

// All splits of h. Throws InputError if h is not in the index or |h| < 2.
std::vector<Split> enumerate_splits(const SubgraphIndex& index, const VertexSet& h);

// Edge set of a spanning tree, edges as (u, v) with u < v.
using TreeEdges = std::vector<Edge>;

// Streams every spanning tree of g exactly once. Returning false from visit
// stops the enumeration.
void for_each_spanning_tree(const ColouredGraph& g, const std::function<bool(const TreeEdges&)>& visit);
std::vector<TreeEdges> enumerate_spanning_trees(const ColouredGraph& g);

struct Subtree {
    VertexSet vertices;
    TreeEdges edges;
};

// Streams every subtree of g with at most max_size vertices that contains all
// terminals.
void for_each_steiner_subtree(const ColouredGraph& g, const VertexSet& terminals, std::size_t max_size,
                              const std::function<bool(const Subtree&)>& visit);
std::vector<Subtree> enumerate_steiner_subtrees(const ColouredGraph& g, const VertexSet& terminals,
                                                std::size_t max_size);

} // namespace floodit
