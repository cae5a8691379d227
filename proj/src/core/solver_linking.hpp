#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <unordered_map>
#include <vector>

#include "core/graph.hpp"

namespace floodit {

// nullopt is infinity: no subtree within the budget contains the terminals.
using LinkValue = std::optional<std::uint32_t>;

// One way to cut a subtree for terminal set W along the edge (x1, x2): the
// side holding x1 covers first = W1 + {x1} with at most first_budget
// vertices, the other side covers second = W2 + {x2} with second_budget.
struct PartitionChoice {
    VertexSet first;
    std::uint32_t first_budget = 0;
    VertexSet second;
    std::uint32_t second_budget = 0;
    Vertex x1 = 0;
    Vertex x2 = 0;
};

// Streams every choice for (W, i): ordered partitions (W1, W2) of W into
// non-empty parts, each edge in both orientations with x1 not in W2 and x2 not
// in W1, and every j1 + j2 = i with j1, j2 >= 1.
void for_each_poss(const ColouredGraph& g, const VertexSet& w, std::uint32_t i,
                   const std::function<void(const PartitionChoice&)>& visit);
std::vector<PartitionChoice> enumerate_poss(const ColouredGraph& g, const VertexSet& w, std::uint32_t i);

// Memoised f(W, d, i) over a properly coloured graph: the cheapest way to
// flood, in colour d, some subtree with at most i vertices containing W.
class LinkDpTable {
public:
    struct Entry {
        std::vector<LinkValue> f;  // per colour
        std::vector<LinkValue> f1; // per colour; all infinite when i == 1
    };

    LinkDpTable(const ColouredGraph& g, std::size_t k_limit);

    // Computes on demand. Throws InputError if |W| is outside 1..k_limit,
    // W is not a vertex subset, or i is outside 1..n.
    const Entry& entry(const VertexSet& w, std::uint32_t i);

    std::size_t size() const { return memo_.size(); }
    void for_each_entry(const std::function<void(const VertexSet&, std::uint32_t, const Entry&)>& visit) const;

private:
    struct Key {
        VertexSet w;
        std::uint32_t i;
        friend bool operator==(const Key&, const Key&) = default;
    };
    struct KeyHash {
        std::size_t operator()(const Key& k) const { return k.w.hash() * 31 + k.i; }
    };

    const Entry& compute(const VertexSet& w, std::uint32_t i);

    ColouredGraph g_;
    std::size_t k_limit_;
    std::unordered_map<Key, Entry, KeyHash> memo_;
};

LinkValue f_value(LinkDpTable& table, const VertexSet& w, Colour d, std::uint32_t i);

struct LinkSolution {
    std::vector<std::uint32_t> per_colour;
    std::uint32_t value = 0; // for the requested target, or the minimum
    std::size_t table_entries = 0;
};

constexpr std::size_t kDefaultLinkLimit = 4;

// Contracts first, then evaluates f(U, d, n) on the quotient. InputError for
// an empty or over-limit terminal set, out-of-range ids, or a disconnected g.
LinkSolution solve_linking(const ColouredGraph& g, const VertexSet& terminals, Target target,
                           std::size_t k_limit = kDefaultLinkLimit);

} // namespace floodit
