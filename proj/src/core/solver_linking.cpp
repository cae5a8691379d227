#include "core/solver_linking.hpp"

#include <algorithm>
#include <string>

namespace floodit {

namespace {

LinkValue add(LinkValue a, LinkValue b) {
    if (!a || !b)
        return std::nullopt;
    return *a + *b;
}

LinkValue smaller(LinkValue a, LinkValue b) {
    if (!a)
        return b;
    if (!b)
        return a;
    return std::min(*a, *b);
}

} // namespace

void for_each_poss(const ColouredGraph& g, const VertexSet& w, std::uint32_t i,
                   const std::function<void(const PartitionChoice&)>& visit) {
    if (w.size() < 2 || i < 2)
        return;
    const std::vector<Vertex> members = w.to_vector();
    if (members.size() > 20)
        throw InputError("terminal set too large to partition");
    const std::uint32_t full = (1u << members.size()) - 1;
    for (std::uint32_t mask = 1; mask < full; ++mask) {
        VertexSet w1, w2;
        for (std::size_t b = 0; b < members.size(); ++b)
            ((mask >> b) & 1 ? w1 : w2).insert(members[b]);
        for (auto [u, v] : g.edges()) {
            for (auto [x1, x2] : {Edge{u, v}, Edge{v, u}}) {
                if (w2.contains(x1) || w1.contains(x2))
                    continue;
                PartitionChoice choice;
                choice.first = w1;
                choice.first.insert(x1);
                choice.second = w2;
                choice.second.insert(x2);
                choice.x1 = x1;
                choice.x2 = x2;
                for (std::uint32_t j1 = 1; j1 < i; ++j1) {
                    choice.first_budget = j1;
                    choice.second_budget = i - j1;
                    visit(choice);
                }
            }
        }
    }
}

std::vector<PartitionChoice> enumerate_poss(const ColouredGraph& g, const VertexSet& w, std::uint32_t i) {
    std::vector<PartitionChoice> out;
    for_each_poss(g, w, i, [&](const PartitionChoice& p) { out.push_back(p); });
    return out;
}

LinkDpTable::LinkDpTable(const ColouredGraph& g, std::size_t k_limit) : g_(g), k_limit_(k_limit) {
    require_vertex_set_capacity(g);
    for (auto [u, v] : g.edges())
        if (g.colour(u) == g.colour(v))
            throw InputError("linking table needs a properly coloured graph; contract it first");
}

const LinkDpTable::Entry& LinkDpTable::entry(const VertexSet& w, std::uint32_t i) {
    if (w.empty() || w.size() > k_limit_)
        throw InputError("terminal set size " + std::to_string(w.size()) + " outside 1.." + std::to_string(k_limit_));
    if (!w.is_subset_of(g_.all_vertices()))
        throw InputError("terminal out of range");
    if (i < 1 || i > g_.vertex_count())
        throw InputError("subtree budget " + std::to_string(i) + " outside 1.." + std::to_string(g_.vertex_count()));
    return compute(w, i);
}

const LinkDpTable::Entry& LinkDpTable::compute(const VertexSet& w, std::uint32_t i) {
    if (auto it = memo_.find({w, i}); it != memo_.end())
        return it->second;

    const std::size_t c = g_.colour_count();
    Entry e;
    e.f1.assign(c, std::nullopt);
    if (i == 1) {
        e.f.assign(c, std::nullopt);
        if (w.size() == 1)
            for (Colour d = 0; d < c; ++d)
                e.f[d] = g_.colour(w.min()) == d ? 0u : 1u;
        return memo_.emplace(Key{w, i}, std::move(e)).first->second;
    }

    for_each_poss(g_, w, i, [&](const PartitionChoice& p) {
        // Map nodes are stable, so these references survive later inserts.
        const std::vector<LinkValue>& left = compute(p.first, p.first_budget).f;
        const std::vector<LinkValue>& right = compute(p.second, p.second_budget).f;
        for (Colour d = 0; d < c; ++d)
            e.f1[d] = smaller(e.f1[d], add(left[d], right[d]));
    });

    LinkValue best_f1;
    for (Colour d = 0; d < c; ++d)
        best_f1 = smaller(best_f1, e.f1[d]);
    const LinkValue f2 = add(best_f1, 1u);

    const std::vector<LinkValue>& previous = compute(w, i - 1).f;
    e.f.resize(c);
    for (Colour d = 0; d < c; ++d)
        e.f[d] = smaller(smaller(e.f1[d], f2), previous[d]);
    return memo_.emplace(Key{w, i}, std::move(e)).first->second;
}

void LinkDpTable::for_each_entry(
    const std::function<void(const VertexSet&, std::uint32_t, const Entry&)>& visit) const {
    for (const auto& [key, e] : memo_)
        visit(key.w, key.i, e);
}

LinkValue f_value(LinkDpTable& table, const VertexSet& w, Colour d, std::uint32_t i) {
    const auto& e = table.entry(w, i);
    if (d >= e.f.size())
        throw InputError("colour " + std::to_string(d) + " out of range");
    return e.f[d];
}

LinkSolution solve_linking(const ColouredGraph& g, const VertexSet& terminals, Target target, std::size_t k_limit) {
    if (terminals.empty())
        throw InputError("terminal set is empty");
    if (terminals.size() > k_limit)
        throw InputError("terminal set has " + std::to_string(terminals.size()) + " vertices, above the k-limit of " +
                         std::to_string(k_limit));
    require_vertex_set_capacity(g);
    if (!terminals.is_subset_of(g.all_vertices()))
        throw InputError("terminal out of range");
    if (target && *target >= g.colour_count())
        throw InputError("target colour " + std::to_string(*target) + " out of range");
    require_connected(g);

    const Contraction contracted = contract_monochromatic(g);
    VertexSet mapped;
    for (Vertex t : terminals)
        mapped.insert(contracted.map[t]);

    LinkDpTable table(contracted.quotient, k_limit);
    const auto& top = table.entry(mapped, static_cast<std::uint32_t>(contracted.quotient.vertex_count()));

    LinkSolution out;
    out.per_colour.reserve(g.colour_count());
    for (const LinkValue& v : top.f) {
        if (!v)
            throw InternalError("linking value infinite on a connected graph");
        out.per_colour.push_back(*v);
    }
    out.value = target ? out.per_colour[*target] : *std::min_element(out.per_colour.begin(), out.per_colour.end());
    out.table_entries = table.size();
    return out;
}

} // namespace floodit
