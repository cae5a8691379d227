#include <doctest.h>

#include <set>

#include "core/errors.hpp"
#include "support.hpp"

using namespace floodit;
using support::set_of;

TEST_CASE("vertex set operations") {
    VertexSet s = set_of({3, 70, 200});
    CHECK(s.size() == 3);
    CHECK(s.min() == 3);
    CHECK(s.contains(70));
    CHECK_FALSE(s.contains(71));
    s.erase(3);
    CHECK(s.min() == 70);
    CHECK(s.to_vector() == std::vector<Vertex>{70, 200});
    CHECK(VertexSet().min() == VertexSet::kCapacity);
    CHECK(VertexSet::range(130).size() == 130);
    CHECK(set_of({1, 2}).is_subset_of(set_of({0, 1, 2})));
    CHECK_FALSE(set_of({1, 5}).intersects(set_of({0, 2})));
    CHECK((set_of({0, 1, 2}) - set_of({1})) == set_of({0, 2}));
}

TEST_CASE("vertex set agrees with std::set on random operations") {
    Rng rng(11);
    for (int round = 0; round < 200; ++round) {
        VertexSet a, b;
        std::set<Vertex> sa, sb;
        for (int i = 0; i < 40; ++i) {
            Vertex v = static_cast<Vertex>(uniform_below(rng, VertexSet::kCapacity));
            Vertex w = static_cast<Vertex>(uniform_below(rng, VertexSet::kCapacity));
            a.insert(v);
            sa.insert(v);
            b.insert(w);
            sb.insert(w);
        }
        CHECK(a.to_vector() == std::vector<Vertex>(sa.begin(), sa.end()));
        std::set<Vertex> u = sa, i, d;
        u.insert(sb.begin(), sb.end());
        for (auto v : sa)
            (sb.count(v) ? i : d).insert(v);
        CHECK((a | b).to_vector() == std::vector<Vertex>(u.begin(), u.end()));
        CHECK((a & b).to_vector() == std::vector<Vertex>(i.begin(), i.end()));
        CHECK((a - b).to_vector() == std::vector<Vertex>(d.begin(), d.end()));
        CHECK(lex_less(a, b) == std::lexicographical_compare(sa.begin(), sa.end(), sb.begin(), sb.end()));
    }
}

TEST_CASE("graph construction rejects bad input") {
    CHECK_THROWS_AS(ColouredGraph(2, 2, {0, 2}, {{0, 1}}), InputError);
    CHECK_THROWS_AS(ColouredGraph(2, 2, {0, 1}, {{0, 0}}), InputError);
    CHECK_THROWS_AS(ColouredGraph(2, 2, {0, 1}, {{0, 1}, {1, 0}}), InputError);
    CHECK_THROWS_AS(ColouredGraph(2, 2, {0, 1}, {{0, 2}}), InputError);
    CHECK_THROWS_AS(ColouredGraph(3, 2, {0, 1}, {}), InputError);
    const ColouredGraph g(3, 2, {1, 0, 1}, {{2, 1}, {1, 0}});
    CHECK(g.edges() == std::vector<Edge>{{0, 1}, {1, 2}});
    CHECK(g.adjacent(2, 1));
    CHECK_FALSE(g.adjacent(0, 2));
    CHECK(g.is_connected());
    CHECK_FALSE(ColouredGraph(3, 1, {0, 0, 0}, {{0, 1}}).is_connected());
}

TEST_CASE("monochromatic components") {
    const auto p = support::path({1, 0, 1});
    CHECK(monochromatic_component(p, p.colouring(), 1) == set_of({1}));
    const auto mono = support::path({1, 1, 1});
    CHECK(monochromatic_component(mono, mono.colouring(), 0) == set_of({0, 1, 2}));
    const auto c = support::cycle({0, 0, 1, 1});
    CHECK(monochromatic_component(c, c.colouring(), 0) == set_of({0, 1}));
}

TEST_CASE("moves") {
    const auto p = support::path({1, 0, 1});
    CHECK(apply_move(p, p.colouring(), {1, 1}) == Colouring{1, 1, 1});
    const auto c = support::cycle({0, 1, 0, 1});
    CHECK(apply_move(c, c.colouring(), {0, 1}) == Colouring{1, 1, 0, 1});
    CHECK_THROWS_AS(apply_move(p, p.colouring(), {3, 0}), InputError);
    CHECK_THROWS_AS(apply_move(p, p.colouring(), {0, 2}), InputError);

    Rng rng(5);
    for (int i = 0; i < 100; ++i) {
        const auto g = support::random_graph(rng, 8, 3);
        const Vertex v = static_cast<Vertex>(uniform_below(rng, g.vertex_count()));
        CHECK(apply_move(g, g.colouring(), {v, g.colour(v)}) == g.colouring());
        const Colour d = static_cast<Colour>(uniform_below(rng, 3));
        const auto after = apply_move(g, g.colouring(), {v, d});
        const auto before = monochromatic_component(g, g.colouring(), v);
        for (Vertex u = 0; u < g.vertex_count(); ++u)
            CHECK(after[u] == (before.contains(u) ? d : g.colour(u)));
        CHECK(before.is_subset_of(monochromatic_component(g, after, v)));
    }
}

TEST_CASE("contraction") {
    const auto p = support::path({0, 0, 1, 1});
    const auto c = contract_monochromatic(p);
    CHECK(c.quotient.vertex_count() == 2);
    CHECK(c.quotient.colouring() == Colouring{0, 1});
    CHECK(c.quotient.edges() == std::vector<Edge>{{0, 1}});
    CHECK(c.map == std::vector<Vertex>{0, 0, 1, 1});
    CHECK(c.representative == std::vector<Vertex>{0, 2});

    const auto proper = support::cycle({0, 1, 0, 1});
    const auto same = contract_monochromatic(proper);
    CHECK(same.quotient.colouring() == proper.colouring());
    CHECK(same.quotient.edges() == proper.edges());

    CHECK(contract_monochromatic(support::path({2, 2, 2})).quotient.vertex_count() == 1);

    Rng rng(17);
    for (int i = 0; i < 100; ++i) {
        const auto g = support::random_graph(rng, 9, 3);
        const auto k = contract_monochromatic(g);
        for (auto [u, v] : k.quotient.edges())
            CHECK(k.quotient.colour(u) != k.quotient.colour(v));
        std::vector<std::uint32_t> labels;
        CHECK(label_components(g, g.colouring(), labels) == k.quotient.vertex_count());
        for (Vertex v = 0; v < g.vertex_count(); ++v) {
            CHECK(k.quotient.colour(k.map[v]) == g.colour(v));
            CHECK(k.map[k.representative[k.map[v]]] == k.map[v]);
        }
        for (auto [u, v] : g.edges())
            if (k.map[u] != k.map[v])
                CHECK(k.quotient.adjacent(k.map[u], k.map[v]));
    }
}

TEST_CASE("connected induced sets") {
    const auto p = support::path({1, 0, 1});
    CHECK_FALSE(is_connected_induced(p, set_of({0, 2})));
    CHECK(is_connected_induced(p, set_of({0, 1})));
    CHECK_FALSE(is_connected_induced(p, VertexSet()));

    const auto sub = induced_subgraph(support::cycle({0, 1, 2, 1}), set_of({1, 2, 3}));
    CHECK(sub.original == std::vector<Vertex>{1, 2, 3});
    CHECK(sub.graph.colouring() == Colouring{1, 2, 1});
    CHECK(sub.graph.edges() == std::vector<Edge>{{0, 1}, {1, 2}});
}
