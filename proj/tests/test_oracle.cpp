#include <doctest.h>

#include "core/errors.hpp"
#include "core/oracle.hpp"
#include "core/verify.hpp"
#include "support.hpp"

using namespace floodit;
using support::set_of;

TEST_CASE("free oracle") {
    const auto mono = support::path({2, 2, 2}, 3);
    const auto zero = oracle_free(mono, 2);
    CHECK(zero.moves == 0);
    CHECK(zero.witness.empty());

    const ColouredGraph k3(3, 3, {0, 1, 2}, complete_edges(3));
    CHECK(oracle_free(k3, std::nullopt).moves == 2);
    CHECK(oracle_free(support::path({0, 1, 0, 1}), std::nullopt).moves == 2);
    CHECK(oracle_free_all(support::path({1, 0, 1})) == std::vector<std::uint32_t>{2, 1});
    CHECK_THROWS_AS(oracle_free(k3, 3), InputError);
    CHECK_THROWS_AS(oracle_free(ColouredGraph(2, 1, {0, 0}, {}), 0), InputError);
}

TEST_CASE("fixed oracle") {
    const auto p = support::path({1, 0, 1});
    const auto r1 = oracle_fixed(p, 1, std::nullopt);
    CHECK(r1.moves == 1);
    CHECK(r1.witness == std::vector<Colour>{1});
    const auto r0 = oracle_fixed(p, 0, std::nullopt);
    CHECK(r0.moves == 2);
    CHECK(r0.witness == std::vector<Colour>{0, 1});
    CHECK(oracle_fixed(support::path({0, 0}, 2), 1, 0).moves == 0);
    CHECK_THROWS_AS(oracle_fixed(p, 3, std::nullopt), InputError);
}

TEST_CASE("link oracle") {
    const auto p = support::path({1, 0, 1});
    CHECK(oracle_link(p, set_of({0, 2}), 1).moves == 1);
    CHECK(oracle_link(support::path({0, 0, 1}), set_of({0, 1}), 0).moves == 0);
    const auto c4 = support::cycle({0, 1, 0, 1});
    const auto r = oracle_link(c4, set_of({0, 2}), std::nullopt);
    CHECK(r.moves == 1);
    const auto end = verify::replay(c4, r.witness);
    CHECK(monochromatic_component(c4, end, 0).contains(2));
    CHECK_THROWS_AS(oracle_link(p, VertexSet(), 0), InputError);
}

TEST_CASE("spanning tree minimum") {
    const auto tree = support::make(3, {0, 1, 2, 1}, {{0, 1}, {1, 2}, {1, 3}});
    for (Colour d = 0; d < 3; ++d)
        CHECK(min_over_spanning_trees(tree, d) == oracle_free(tree, d).moves);
    CHECK(min_over_spanning_trees(support::cycle({0, 1, 0, 1}), 0) == 2);
    CHECK(min_over_spanning_trees(support::path({1, 1}, 2), 1) == 0);
}

TEST_CASE("budget exhaustion") {
    const ColouredGraph k5(5, 5, {0, 1, 2, 3, 4}, complete_edges(5));
    OracleBudget tiny;
    tiny.max_states = 3;
    CHECK_THROWS_AS(oracle_free(k5, 0, tiny), ResourceError);
    CHECK_THROWS_AS(oracle_free_all(k5, tiny), ResourceError);
}

TEST_CASE("oracle witnesses replay to the reported cost") {
    Rng rng(41);
    for (int i = 0; i < 80; ++i) {
        const auto g = support::random_graph(rng, 6, 3);
        const auto all = oracle_free_all(g);
        for (Colour d = 0; d < 3; ++d) {
            const auto r = oracle_free(g, d);
            CHECK(r.moves == all[d]);
            CHECK(r.witness.size() == r.moves);
            const auto end = verify::replay(g, r.witness);
            CHECK(is_monochromatic(end));
            CHECK(end[0] == d);
        }
        const Vertex root = static_cast<Vertex>(uniform_below(rng, g.vertex_count()));
        const auto fixed = oracle_fixed_all(g, root);
        for (Colour d = 0; d < 3; ++d) {
            // Fixed play is a restriction of free play.
            CHECK(fixed[d] >= all[d]);
            const auto r = oracle_fixed(g, root, d);
            Colouring col = g.colouring();
            for (Colour c : r.witness)
                col = apply_move(g, col, {root, c});
            CHECK(r.witness.size() == fixed[d]);
            CHECK(is_monochromatic(col));
            CHECK(col[root] == d);
        }
        // Linking everything is flooding.
        CHECK(oracle_link_all(g, g.all_vertices()) == all);
    }
}

TEST_CASE("connected graph classes") {
    const std::vector<std::size_t> expected = {1, 1, 2, 6, 21, 112};
    for (std::size_t n = 1; n <= 6; ++n) {
        const auto classes = verify::connected_graph_classes(n);
        CHECK(classes.size() == expected[n - 1]);
        for (const auto& edges : classes)
            CHECK(ColouredGraph(n, 1, Colouring(n, 0), edges).is_connected());
    }
    CHECK_THROWS_AS(verify::connected_graph_classes(7), InputError);
    CHECK_THROWS_AS(verify::run_suite("nonsense", {}), InputError);
}
