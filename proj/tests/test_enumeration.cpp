#include <doctest.h>

#include <algorithm>
#include <set>

#include "core/enumeration.hpp"
#include "core/errors.hpp"
#include "support.hpp"

using namespace floodit;
using support::set_of;

namespace {

// Spanning-tree count by the matrix-tree theorem (Bareiss elimination).
long long kirchhoff(const ColouredGraph& g) {
    const std::size_t n = g.vertex_count();
    if (n == 1)
        return 1;
    std::vector<std::vector<long long>> m(n - 1, std::vector<long long>(n - 1, 0));
    for (auto [u, v] : g.edges()) {
        if (u < n - 1)
            ++m[u][u];
        if (v < n - 1)
            ++m[v][v];
        if (u < n - 1 && v < n - 1) {
            --m[u][v];
            --m[v][u];
        }
    }
    long long prev = 1, sign = 1;
    const std::size_t k = n - 1;
    for (std::size_t i = 0; i < k; ++i) {
        if (m[i][i] == 0) {
            std::size_t r = i + 1;
            while (r < k && m[r][i] == 0)
                ++r;
            if (r == k)
                return 0;
            std::swap(m[i], m[r]);
            sign = -sign;
        }
        for (std::size_t r = i + 1; r < k; ++r)
            for (std::size_t c = i + 1; c < k; ++c)
                m[r][c] = (m[r][c] * m[i][i] - m[r][i] * m[i][c]) / prev;
        prev = m[i][i];
    }
    return sign * m[k - 1][k - 1];
}

std::size_t brute_subgraph_count(const ColouredGraph& g) {
    std::size_t count = 0;
    for (unsigned mask = 1; mask < (1u << g.vertex_count()); ++mask)
        count += support::connected_subset(g, mask);
    return count;
}

bool is_spanning_tree(const ColouredGraph& g, const TreeEdges& t) {
    if (t.size() + 1 != g.vertex_count())
        return false;
    for (auto [u, v] : t)
        if (!g.adjacent(u, v))
            return false;
    return g.with_edges(t).is_connected();
}

// Every subtree of g containing the terminals, by brute force over edge subsets.
std::set<std::vector<Edge>> brute_steiner(const ColouredGraph& g, const VertexSet& terminals) {
    std::set<std::vector<Edge>> out;
    if (terminals.size() == 1)
        out.insert(std::vector<Edge>{});
    const auto& edges = g.edges();
    for (unsigned mask = 1; mask < (1u << edges.size()); ++mask) {
        std::vector<Edge> chosen;
        VertexSet touched;
        for (std::size_t e = 0; e < edges.size(); ++e)
            if ((mask >> e) & 1) {
                chosen.push_back(edges[e]);
                touched.insert(edges[e].first);
                touched.insert(edges[e].second);
            }
        if (chosen.size() + 1 != touched.size() || !terminals.is_subset_of(touched))
            continue;
        const auto sub = induced_subgraph(g, touched);
        std::vector<Vertex> local(g.vertex_count());
        for (Vertex i = 0; i < sub.original.size(); ++i)
            local[sub.original[i]] = i;
        std::vector<Edge> relabelled;
        for (auto [u, v] : chosen)
            relabelled.emplace_back(local[u], local[v]);
        if (sub.graph.with_edges(relabelled).is_connected())
            out.insert(chosen);
    }
    return out;
}

} // namespace

TEST_CASE("connected subgraph examples") {
    const auto p = enumerate_connected_subgraphs(support::path({0, 1, 0}), 3);
    CHECK(p.sets() == std::vector<VertexSet>{set_of({0}), set_of({1}), set_of({2}), set_of({0, 1}), set_of({1, 2}),
                                             set_of({0, 1, 2})});
    CHECK(enumerate_connected_subgraphs(support::cycle({0, 1, 0, 1}), 4).size() == 13);
    const ColouredGraph k4(4, 4, {0, 1, 2, 3}, complete_edges(4));
    CHECK(enumerate_connected_subgraphs(k4, 4).size() == 15);
    CHECK(enumerate_connected_subgraphs(k4, 2).size() == 10);
}

TEST_CASE("connected subgraph counts match brute force") {
    Rng rng(23);
    for (int i = 0; i < 60; ++i) {
        const auto g = support::random_graph(rng, 10, 2);
        const auto index = enumerate_connected_subgraphs(g, g.vertex_count());
        CHECK(index.size() == brute_subgraph_count(g));
        std::set<std::size_t> sizes;
        for (std::size_t k = 1; k <= index.max_order(); ++k)
            for (const auto& s : index.of_order(k)) {
                CHECK(s.size() == k);
                CHECK(is_connected_induced(g, s));
                CHECK(index.find(s).has_value());
            }
        const auto with_root = enumerate_rooted_subgraphs(g, 0, g.vertex_count(), 0);
        std::size_t expected = 0;
        for (const auto& s : index.sets())
            expected += s.contains(0);
        CHECK(with_root.size() == expected);
    }
}

TEST_CASE("subgraph enumeration cap") {
    const ColouredGraph k6(6, 1, Colouring(6, 0), complete_edges(6));
    CHECK_THROWS_AS(enumerate_connected_subgraphs(k6, 6, 20), ResourceError);
}

TEST_CASE("split examples") {
    const auto g = support::path({0, 1, 0});
    const auto index = enumerate_connected_subgraphs(g, 3);
    const auto splits = enumerate_splits(index, set_of({0, 1, 2}));
    REQUIRE(splits.size() == 2);
    std::set<std::pair<std::vector<Vertex>, std::vector<Vertex>>> seen;
    for (const auto& s : splits) {
        auto a = s.first.to_vector(), b = s.second.to_vector();
        if (b < a)
            std::swap(a, b);
        seen.insert({a, b});
    }
    CHECK(seen.count({{0}, {1, 2}}));
    CHECK(seen.count({{0, 1}, {2}}));
    CHECK(enumerate_splits(index, set_of({0, 1})).size() == 1);
    CHECK_THROWS_AS(enumerate_splits(index, set_of({1})), InputError);
    CHECK_THROWS_AS(enumerate_splits(index, set_of({0, 2})), InputError);
}

TEST_CASE("splits match brute force") {
    // Any two of the four cycle edges cut C4 into two arcs: 4 choose 2.
    const auto c4 = support::cycle({0, 1, 0, 1});
    CHECK(enumerate_splits(enumerate_connected_subgraphs(c4, 4), VertexSet::range(4)).size() == 6);

    Rng rng(29);
    for (int i = 0; i < 40; ++i) {
        const auto g = support::random_graph(rng, 7, 2);
        const auto index = enumerate_connected_subgraphs(g, g.vertex_count());
        for (unsigned h = 1; h < (1u << g.vertex_count()); ++h) {
            if (!support::connected_subset(g, h) || std::popcount(h) < 2)
                continue;
            std::size_t expected = 0;
            for (unsigned a = (h - 1) & h; a > 0; a = (a - 1) & h)
                if (support::connected_subset(g, a) && support::connected_subset(g, h & ~a))
                    ++expected;
            const auto splits = enumerate_splits(index, support::from_mask(h));
            CHECK(splits.size() * 2 == expected);
            for (const auto& s : splits) {
                CHECK_FALSE(s.first.intersects(s.second));
                CHECK((s.first | s.second) == support::from_mask(h));
            }
        }
    }
}

TEST_CASE("spanning tree examples") {
    CHECK(enumerate_spanning_trees(support::cycle({0, 1, 0, 1})).size() == 4);
    const auto tree = support::make(2, {0, 1, 0, 1, 0}, {{0, 1}, {1, 2}, {1, 3}, {3, 4}});
    const auto trees = enumerate_spanning_trees(tree);
    REQUIRE(trees.size() == 1);
    CHECK(trees[0] == tree.edges());
    const ColouredGraph k4(4, 1, Colouring(4, 0), complete_edges(4));
    CHECK(enumerate_spanning_trees(k4).size() == 16);
    CHECK(enumerate_spanning_trees(support::path({0})).size() == 1);
    CHECK_THROWS_AS(enumerate_spanning_trees(ColouredGraph(2, 1, {0, 0}, {})), InputError);
}

TEST_CASE("spanning tree counts match the matrix-tree theorem") {
    Rng rng(31);
    for (int i = 0; i < 60; ++i) {
        const auto g = support::random_graph(rng, 8, 2);
        const auto trees = enumerate_spanning_trees(g);
        CHECK(static_cast<long long>(trees.size()) == kirchhoff(g));
        std::set<TreeEdges> distinct;
        for (auto t : trees) {
            CHECK(is_spanning_tree(g, t));
            std::sort(t.begin(), t.end());
            distinct.insert(t);
        }
        CHECK(distinct.size() == trees.size());
    }
}

TEST_CASE("steiner subtree examples") {
    const auto p = support::path({0, 1, 0});
    const auto full = enumerate_steiner_subtrees(p, set_of({0, 2}), 3);
    REQUIRE(full.size() == 1);
    CHECK(full[0].vertices == set_of({0, 1, 2}));
    const auto single = enumerate_steiner_subtrees(p, set_of({1}), 1);
    REQUIRE(single.size() == 1);
    CHECK(single[0].vertices == set_of({1}));
    CHECK(single[0].edges.empty());
    const auto arcs = enumerate_steiner_subtrees(support::cycle({0, 1, 0, 1}), set_of({0, 2}), 3);
    REQUIRE(arcs.size() == 2);
    std::set<VertexSet, decltype([](const VertexSet& a, const VertexSet& b) { return lex_less(a, b); })> vs;
    for (const auto& t : arcs)
        vs.insert(t.vertices);
    CHECK(vs.count(set_of({0, 1, 2})));
    CHECK(vs.count(set_of({0, 2, 3})));
}

TEST_CASE("steiner subtrees match brute force over edge subsets") {
    Rng rng(37);
    for (int i = 0; i < 50; ++i) {
        const auto g = support::random_graph(rng, 6, 2);
        if (g.edge_count() > 12)
            continue;
        VertexSet u;
        const std::size_t k = 1 + uniform_below(rng, std::min<std::size_t>(3, g.vertex_count()));
        while (u.size() < k)
            u.insert(static_cast<Vertex>(uniform_below(rng, g.vertex_count())));
        std::set<std::vector<Edge>> got;
        for (auto t : enumerate_steiner_subtrees(g, u, g.vertex_count())) {
            std::sort(t.edges.begin(), t.edges.end());
            if (t.edges.empty())
                CHECK(t.vertices == u);
            CHECK(got.insert(t.edges).second);
        }
        CHECK(got == brute_steiner(g, u));
    }
}
