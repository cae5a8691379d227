#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "core/enumeration.hpp"
#include "core/generators.hpp"
#include "core/graph.hpp"
#include "core/oracle.hpp"

namespace floodit::verify {

// One representative edge list per isomorphism class of connected graphs on
// n vertices, ordered by canonical adjacency mask. Supports 1 <= n <= 6.
std::vector<std::vector<Edge>> connected_graph_classes(std::size_t n);

struct Instance {
    std::string id;
    ColouredGraph graph;
};

struct CorpusOptions {
    // Isomorphism classes are taken for n <= min(max_n, 6); random graphs
    // have 2 <= n <= max_n.
    std::size_t max_n = 6;
    std::size_t colours = 3;
    std::uint64_t seed = 0;
    std::size_t colourings_per_graph = 3;
    std::size_t random_instances = 0;
};

// Every class graph under `colourings_per_graph` seeded uniform colourings,
// followed by the seeded random instances.
std::vector<Instance> build_corpus(const CorpusOptions& options);

ColouredGraph random_instance(std::size_t min_n, std::size_t max_n, std::size_t colours, Rng& rng);

struct Report {
    std::string suite;
    std::size_t checks = 0;
    std::size_t failure_count = 0;
    std::vector<std::string> failures; // the first few, for display

    bool passed() const { return failure_count == 0; }
    void check(bool ok, const std::string& what);
    void merge(const Report& other);
    std::string summary() const;
};

// Oracle flood numbers against the minimum over spanning trees, and the DP
// against the same minimum.
Report check_spanning_tree(const std::vector<Instance>& corpus, const OracleBudget& budget = {});

// DP against the oracle per colour; contraction invariance; final-colour
// slack.
Report check_solver_free(const std::vector<Instance>& corpus, const OracleBudget& budget = {});

// Fixed-root solver against the oracle for every root; witness replay for
// both.
Report check_solver_fixed(const std::vector<Instance>& corpus, const OracleBudget& budget = {});

// Every terminal set of size <= max_terminals: linking DP against the oracle
// and against the Steiner-subtree minimum, plus table invariants.
Report check_solver_link(const std::vector<Instance>& corpus, std::size_t max_terminals,
                         const OracleBudget& budget = {});

// `cases` random instances with 4 <= n <= max(4, min(max_n, 6)), each with a
// random terminal set of size `terminal_count`.
Report check_link_random(std::size_t cases, std::size_t terminal_count, const CorpusOptions& options,
                         const OracleBudget& budget = {});

// Tree splitting, both cover decompositions, edge-addition monotonicity,
// subgraph linking bound, Steiner-subtree equality, final-colour slack and
// oracle witness soundness on `configurations` random instances.
Report check_corollaries(std::size_t configurations, const CorpusOptions& options, const OracleBudget& budget = {});

struct SuiteOptions {
    std::size_t max_n = 6;
    std::size_t colours = 3;
    std::uint64_t seed = 0;
    // Colourings per class graph; configuration count for "corollaries".
    std::size_t samples = 3;
    // Extra random instances; size-4 terminal cases for "solver-link".
    std::size_t random = 0;
    OracleBudget budget;
};

// Names: spanning-tree, corollaries, solver-free, solver-fixed, solver-link.
// Throws InputError for an unknown name.
Report run_suite(std::string_view name, const SuiteOptions& options);

// Helpers shared with the tests.
ColouredGraph subtree_graph(const ColouredGraph& g, const Subtree& tree);
Colouring replay(const ColouredGraph& g, const std::vector<Move>& moves);

} // namespace floodit::verify
