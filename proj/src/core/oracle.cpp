#include "core/oracle.hpp"

#include <algorithm>
#include <chrono>
#include <optional>
#include <string>
#include <unordered_map>

#include "core/enumeration.hpp"

namespace floodit {

namespace {

enum class Goal { Flood, FloodFromRoot, Link };

// BFS over colourings of the contracted board. States are stored in discovery
// order, so the state vector doubles as the queue. Successors are generated
// by ascending component-minimum vertex, then ascending colour.
class StateSearch {
public:
    StateSearch(const ColouredGraph& g, Goal goal, Vertex root, const VertexSet& terminals,
                const OracleBudget& budget)
        : contraction_(contract_monochromatic(g)), goal_(goal), budget_(budget) {
        require_connected(g);
        const auto& q = contraction_.quotient;
        if (q.colour_count() > 0xFFFF)
            throw CapacityError("the oracle supports at most 65535 colours");
        if (goal == Goal::FloodFromRoot) {
            if (root >= g.vertex_count())
                throw InputError("root " + std::to_string(root) + " out of range");
            root_ = contraction_.map[root];
        }
        if (goal == Goal::Link) {
            if (terminals.empty())
                throw InputError("terminal set is empty");
            for (Vertex t : terminals) {
                if (t >= g.vertex_count())
                    throw InputError("terminal " + std::to_string(t) + " out of range");
                terminals_.push_back(contraction_.map[t]);
            }
            std::sort(terminals_.begin(), terminals_.end());
            terminals_.erase(std::unique(terminals_.begin(), terminals_.end()), terminals_.end());
        }
    }

    struct Outcome {
        // Per colour: depth and state index of the first goal state reached.
        std::vector<std::optional<std::uint32_t>> depth;
        std::vector<std::uint32_t> state;
        Colour best = 0;
    };

    Outcome run(Target target, bool every_colour) {
        const auto& q = contraction_.quotient;
        const std::size_t colours = q.colour_count();
        if (target && *target >= colours)
            throw InputError("target colour " + std::to_string(*target) + " out of range");

        Outcome out;
        out.depth.assign(colours, std::nullopt);
        out.state.assign(colours, 0);
        std::size_t found = 0;

        const auto start = std::chrono::steady_clock::now();
        std::u16string initial;
        for (Colour c : q.colouring())
            initial.push_back(static_cast<char16_t>(c));
        discover(initial, kNoParent, Move{});

        Colouring current(q.vertex_count());
        std::vector<std::uint32_t> labels;
        std::vector<std::vector<Vertex>> members;
        for (std::size_t head = 0; head < states_.size(); ++head) {
            if (budget_.max_seconds > 0 && (head & 1023) == 0) {
                const std::chrono::duration<double> spent = std::chrono::steady_clock::now() - start;
                if (spent.count() > budget_.max_seconds)
                    throw ResourceError("oracle exceeded its wall-clock budget");
            }
            const std::u16string& encoded = states_[head];
            for (std::size_t v = 0; v < current.size(); ++v)
                current[v] = encoded[v];
            const std::size_t comps = label_components(q, current, labels);

            if (auto colour = goal_colour(current, labels); colour && !out.depth[*colour]) {
                out.depth[*colour] = depth_[head];
                out.state[*colour] = static_cast<std::uint32_t>(head);
                ++found;
                if (!every_colour && (!target || *target == *colour)) {
                    out.best = *colour;
                    return out;
                }
                if (every_colour && found == colours)
                    return out;
            }

            members.assign(comps, {});
            for (Vertex v = 0; v < current.size(); ++v)
                members[labels[v]].push_back(v);
            auto expand = [&](std::uint32_t comp) {
                const Colour own = current[members[comp].front()];
                for (Colour d = 0; d < colours; ++d) {
                    if (d == own)
                        continue;
                    std::u16string next = states_[head];
                    for (Vertex v : members[comp])
                        next[v] = static_cast<char16_t>(d);
                    discover(next, static_cast<std::uint32_t>(head), Move{members[comp].front(), d});
                }
            };
            if (goal_ == Goal::FloodFromRoot)
                expand(labels[root_]);
            else
                for (std::uint32_t comp = 0; comp < comps; ++comp)
                    expand(comp);
        }
        if (!every_colour)
            throw InternalError("oracle search exhausted the state space without reaching the goal");
        return out;
    }

    // Moves from the initial state to `state`, in original vertex ids.
    std::vector<Move> moves_to(std::uint32_t state) const {
        std::vector<Move> path;
        for (std::uint32_t s = state; parent_[s] != kNoParent; s = parent_[s]) {
            Move m = move_[s];
            m.vertex = contraction_.representative[m.vertex];
            path.push_back(m);
        }
        std::reverse(path.begin(), path.end());
        return path;
    }

private:
    static constexpr std::uint32_t kNoParent = static_cast<std::uint32_t>(-1);

    void discover(const std::u16string& s, std::uint32_t parent, Move m) {
        auto [it, inserted] = index_.try_emplace(s, static_cast<std::uint32_t>(states_.size()));
        if (!inserted)
            return;
        if (states_.size() >= budget_.max_states)
            throw ResourceError("oracle visited more than " + std::to_string(budget_.max_states) + " states");
        states_.push_back(s);
        parent_.push_back(parent);
        move_.push_back(m);
        depth_.push_back(parent == kNoParent ? 0 : depth_[parent] + 1);
    }

    std::optional<Colour> goal_colour(const Colouring& col, const std::vector<std::uint32_t>& labels) const {
        if (goal_ == Goal::Link) {
            const auto comp = labels[terminals_.front()];
            for (Vertex t : terminals_)
                if (labels[t] != comp)
                    return std::nullopt;
            return col[terminals_.front()];
        }
        if (is_monochromatic(col))
            return col.front();
        return std::nullopt;
    }

    Contraction contraction_;
    Goal goal_;
    OracleBudget budget_;
    Vertex root_ = 0;
    std::vector<Vertex> terminals_;

    std::vector<std::u16string> states_;
    std::unordered_map<std::u16string, std::uint32_t> index_;
    std::vector<std::uint32_t> parent_;
    std::vector<Move> move_;
    std::vector<std::uint32_t> depth_;
};

std::vector<std::uint32_t> unwrap_all(const StateSearch::Outcome& out) {
    std::vector<std::uint32_t> values;
    values.reserve(out.depth.size());
    for (const auto& d : out.depth) {
        if (!d)
            throw InternalError("oracle search missed a reachable colour");
        values.push_back(*d);
    }
    return values;
}

} // namespace

FreeOracleResult oracle_free(const ColouredGraph& g, Target target, const OracleBudget& budget) {
    StateSearch search(g, Goal::Flood, 0, {}, budget);
    const auto out = search.run(target, false);
    return {*out.depth[out.best], search.moves_to(out.state[out.best])};
}

FixedOracleResult oracle_fixed(const ColouredGraph& g, Vertex root, Target target, const OracleBudget& budget) {
    StateSearch search(g, Goal::FloodFromRoot, root, {}, budget);
    const auto out = search.run(target, false);
    FixedOracleResult result{*out.depth[out.best], {}};
    for (const Move& m : search.moves_to(out.state[out.best]))
        result.witness.push_back(m.colour);
    return result;
}

FreeOracleResult oracle_link(const ColouredGraph& g, const VertexSet& terminals, Target target,
                             const OracleBudget& budget) {
    StateSearch search(g, Goal::Link, 0, terminals, budget);
    const auto out = search.run(target, false);
    return {*out.depth[out.best], search.moves_to(out.state[out.best])};
}

std::vector<std::uint32_t> oracle_free_all(const ColouredGraph& g, const OracleBudget& budget) {
    return unwrap_all(StateSearch(g, Goal::Flood, 0, {}, budget).run(std::nullopt, true));
}

std::vector<std::uint32_t> oracle_fixed_all(const ColouredGraph& g, Vertex root, const OracleBudget& budget) {
    return unwrap_all(StateSearch(g, Goal::FloodFromRoot, root, {}, budget).run(std::nullopt, true));
}

std::vector<std::uint32_t> oracle_link_all(const ColouredGraph& g, const VertexSet& terminals,
                                           const OracleBudget& budget) {
    return unwrap_all(StateSearch(g, Goal::Link, 0, terminals, budget).run(std::nullopt, true));
}

std::uint32_t min_over_spanning_trees(const ColouredGraph& g, Colour target, const OracleBudget& budget) {
    if (target >= g.colour_count())
        throw InputError("target colour " + std::to_string(target) + " out of range");
    std::optional<std::uint32_t> best;
    for_each_spanning_tree(g, [&](const TreeEdges& tree) {
        const auto value = oracle_free(g.with_edges(tree), target, budget).moves;
        if (!best || value < *best)
            best = value;
        return *best > 0;
    });
    return *best;
}

std::vector<std::uint32_t> min_over_spanning_trees_all(const ColouredGraph& g, const OracleBudget& budget) {
    std::vector<std::uint32_t> best;
    for_each_spanning_tree(g, [&](const TreeEdges& tree) {
        const auto values = oracle_free_all(g.with_edges(tree), budget);
        if (best.empty())
            best = values;
        else
            for (std::size_t d = 0; d < values.size(); ++d)
                best[d] = std::min(best[d], values[d]);
        return true;
    });
    return best;
}

} // namespace floodit
