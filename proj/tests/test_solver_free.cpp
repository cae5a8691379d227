#include <doctest.h>

#include <algorithm>

#include "core/errors.hpp"
#include "core/oracle.hpp"
#include "core/solver_free.hpp"
#include "support.hpp"

using namespace floodit;
using support::set_of;

TEST_CASE("free solver examples") {
    const auto mono = solve_free(support::path({1, 1, 1}, 3));
    CHECK(mono.per_colour == std::vector<std::uint32_t>{1, 0, 1});
    CHECK(mono.overall == 0);

    const ColouredGraph k4(4, 4, {0, 1, 2, 3}, complete_edges(4));
    CHECK(solve_free(k4).overall == 3);

    const auto c4 = solve_free(support::cycle({0, 1, 0, 1}));
    CHECK(c4.overall == 2);
    CHECK(c4.per_colour == std::vector<std::uint32_t>{2, 2});

    CHECK(solve_free(support::path({0, 1, 0, 1})).subgraph_count == 10);
    CHECK_THROWS_AS(solve_free(ColouredGraph(2, 2, {0, 1}, {})), InputError);
}

TEST_CASE("table base cases and a small entry") {
    const auto p = support::path({1, 0, 1});
    const auto table = FreeDpTable::build(p);
    for (Vertex v = 0; v < 3; ++v)
        for (Colour d = 0; d < 2; ++d)
            CHECK(dp_value(table, set_of({v}), d) == (p.colour(v) == d ? 0u : 1u));
    CHECK(dp_value(table, set_of({0, 1, 2}), 1) == 1);
    CHECK(dp_value(table, set_of({0, 1, 2}), 0) == 2);
    CHECK_THROWS_AS(dp_value(table, set_of({0, 2}), 0), InternalError);
    CHECK_THROWS_AS(FreeDpTable::build(support::path({0, 0, 1})), InputError);
}

TEST_CASE("table entries match the oracle on every connected subgraph") {
    Rng rng(43);
    for (int i = 0; i < 40; ++i) {
        const auto g = contract_monochromatic(support::random_graph(rng, 7, 3)).quotient;
        const auto table = FreeDpTable::build(g);
        for (std::size_t h = 0; h < table.index().size(); ++h) {
            const auto sub = induced_subgraph(g, table.index().at(static_cast<SubgraphIndex::Id>(h))).graph;
            const auto expected = oracle_free_all(sub);
            for (Colour d = 0; d < 3; ++d)
                CHECK(table.at(static_cast<SubgraphIndex::Id>(h), d) == expected[d]);
        }
    }
}

TEST_CASE("complete graphs need one move fewer than their colour count") {
    Rng rng(47);
    for (std::size_t n = 1; n <= 7; ++n)
        for (std::size_t c = 1; c <= n; ++c) {
            Colouring col(n);
            for (std::size_t v = 0; v < n; ++v)
                col[v] = static_cast<Colour>(v < c ? v : uniform_below(rng, c));
            const ColouredGraph k(n, c, col, complete_edges(n));
            CHECK(solve_free(k).overall == c - 1);
        }
}

TEST_CASE("solver properties") {
    Rng rng(53);
    for (int i = 0; i < 60; ++i) {
        const auto g = support::random_graph(rng, 8, 3);
        const auto s = solve_free(g);
        CHECK(s.overall == *std::min_element(s.per_colour.begin(), s.per_colour.end()));
        for (auto v : s.per_colour)
            CHECK(v <= s.overall + 1);
        CHECK(solve_free(contract_monochromatic(g).quotient).per_colour == s.per_colour);
        if (g.vertex_count() <= 6)
            CHECK(s.per_colour == oracle_free_all(g));
    }
}

TEST_CASE("cycle subgraph counts and the subgraph cap") {
    for (std::size_t n = 3; n <= 12; ++n) {
        Colouring col(n);
        for (std::size_t v = 0; v < n; ++v)
            col[v] = static_cast<Colour>(v % 2 == 0 ? 0 : 1 + (v / 2) % 2);
        if (n % 2 == 1)
            col[n - 1] = 1 + (col[n - 2] == 1);
        const ColouredGraph c(n, 3, col, cycle_edges(n));
        REQUIRE(contract_monochromatic(c).quotient.vertex_count() == n);
        CHECK(solve_free(c).subgraph_count == n * (n - 1) + 1);
    }
    const ColouredGraph k6(6, 6, {0, 1, 2, 3, 4, 5}, complete_edges(6));
    CHECK_THROWS_AS(solve_free(k6, 10), ResourceError);
}
