#include "core/verify.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_map>

#include "core/solver_fixed.hpp"
#include "core/solver_free.hpp"
#include "core/solver_linking.hpp"

namespace floodit::verify {

namespace {

constexpr std::size_t kShownFailures = 20;
constexpr std::size_t kMaxClassOrder = 6;

std::string show(const std::vector<std::uint32_t>& values) {
    std::ostringstream out;
    out << '[';
    for (std::size_t i = 0; i < values.size(); ++i)
        out << (i ? "," : "") << values[i];
    out << ']';
    return out.str();
}

std::string show(const VertexSet& s) {
    std::ostringstream out;
    out << '{';
    bool first = true;
    for (Vertex v : s) {
        out << (first ? "" : ",") << v;
        first = false;
    }
    out << '}';
    return out.str();
}

std::vector<std::uint32_t> unwrap(const std::vector<std::optional<std::uint32_t>>& values) {
    std::vector<std::uint32_t> out;
    for (const auto& v : values)
        out.push_back(v ? *v : static_cast<std::uint32_t>(-1));
    return out;
}

// Random spanning tree by Kruskal over a shuffled edge list.
std::vector<Edge> random_spanning_tree(const ColouredGraph& g, Rng& rng) {
    std::vector<Edge> edges = g.edges();
    for (std::size_t i = edges.size(); i > 1; --i)
        std::swap(edges[i - 1], edges[uniform_below(rng, i)]);
    std::vector<Vertex> parent(g.vertex_count());
    std::iota(parent.begin(), parent.end(), 0u);
    auto find = [&](Vertex x) {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    };
    std::vector<Edge> tree;
    for (auto [u, v] : edges) {
        auto a = find(u), b = find(v);
        if (a != b) {
            parent[a] = b;
            tree.emplace_back(u, v);
        }
    }
    return tree;
}

std::vector<std::uint32_t> induced_flood(const ColouredGraph& g, const VertexSet& s, const OracleBudget& budget) {
    return oracle_free_all(induced_subgraph(g, s).graph, budget);
}

std::string subtree_key(const Subtree& t) {
    std::ostringstream key;
    key << show(t.vertices);
    for (auto [u, v] : t.edges)
        key << ' ' << u << '-' << v;
    return key.str();
}

// Oracle flood numbers per subtree, shared across terminal sets of one instance.
class SubtreeFloodCache {
public:
    SubtreeFloodCache(const ColouredGraph& g, const OracleBudget& budget) : g_(g), budget_(budget) {}

    std::vector<std::uint32_t> steiner_minimum(const VertexSet& terminals) {
        std::vector<std::uint32_t> best;
        for_each_steiner_subtree(g_, terminals, g_.vertex_count(), [&](const Subtree& t) {
            const auto& values = flood(t);
            if (best.empty())
                best = values;
            else
                for (std::size_t d = 0; d < values.size(); ++d)
                    best[d] = std::min(best[d], values[d]);
            return true;
        });
        return best;
    }

private:
    const std::vector<std::uint32_t>& flood(const Subtree& t) {
        auto key = subtree_key(t);
        auto it = cache_.find(key);
        if (it == cache_.end())
            it = cache_.emplace(std::move(key), oracle_free_all(subtree_graph(g_, t), budget_)).first;
        return it->second;
    }

    const ColouredGraph& g_;
    OracleBudget budget_;
    std::unordered_map<std::string, std::vector<std::uint32_t>> cache_;
};

bool linked_in(const ColouredGraph& g, const Colouring& col, const VertexSet& terminals, Target target) {
    const VertexSet comp = monochromatic_component(g, col, terminals.min());
    return terminals.is_subset_of(comp) && (!target || col[terminals.min()] == *target);
}

void check_table_invariants(Report& report, const std::string& where, const ColouredGraph& g,
                            const VertexSet& terminals, std::size_t k_limit) {
    const Contraction contracted = contract_monochromatic(g);
    VertexSet mapped;
    for (Vertex t : terminals)
        mapped.insert(contracted.map[t]);
    LinkDpTable table(contracted.quotient, k_limit);
    const auto n = static_cast<std::uint32_t>(contracted.quotient.vertex_count());
    for (const auto& v : table.entry(mapped, n).f)
        report.check(v.has_value(), where + ": f(U, d, n) is infinite");

    bool monotone = true, bounded = true;
    table.for_each_entry([&](const VertexSet& w, std::uint32_t i, const LinkDpTable::Entry& e) {
        if (i > 1) {
            // The entry for i - 1 was computed before this one.
            const auto& prev = table.entry(w, i - 1);
            for (std::size_t d = 0; d < e.f.size(); ++d)
                if (prev.f[d] && (!e.f[d] || *e.f[d] > *prev.f[d]))
                    monotone = false;
        }
        for (std::size_t d = 0; d < e.f.size(); ++d)
            for (std::size_t d2 = 0; d2 < e.f1.size(); ++d2)
                if (e.f1[d2] && (!e.f[d] || *e.f[d] > *e.f1[d2] + 1))
                    bounded = false;
    });
    report.check(monotone, where + ": f not non-increasing in the size budget");
    report.check(bounded, where + ": f exceeds 1 + f1 for some colour");
}

} // namespace

std::vector<std::vector<Edge>> connected_graph_classes(std::size_t n) {
    if (n < 1 || n > kMaxClassOrder)
        throw InputError("graph classes are enumerated for 1 <= n <= " + std::to_string(kMaxClassOrder));
    std::vector<Edge> pairs = complete_edges(n);
    const std::size_t m = pairs.size();
    std::vector<std::vector<std::size_t>> pair_index(n, std::vector<std::size_t>(n, 0));
    for (std::size_t e = 0; e < m; ++e) {
        pair_index[pairs[e].first][pairs[e].second] = e;
        pair_index[pairs[e].second][pairs[e].first] = e;
    }

    std::vector<std::vector<std::size_t>> relabel; // per permutation: edge -> edge
    std::vector<Vertex> perm(n);
    std::iota(perm.begin(), perm.end(), 0u);
    do {
        std::vector<std::size_t> map(m);
        for (std::size_t e = 0; e < m; ++e)
            map[e] = pair_index[perm[pairs[e].first]][perm[pairs[e].second]];
        relabel.push_back(std::move(map));
    } while (std::next_permutation(perm.begin(), perm.end()));

    std::set<std::uint32_t> canonical;
    for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
        if (static_cast<std::size_t>(std::popcount(mask)) + 1 < n)
            continue;
        std::vector<Edge> edges;
        for (std::size_t e = 0; e < m; ++e)
            if ((mask >> e) & 1)
                edges.push_back(pairs[e]);
        if (!ColouredGraph(n, 1, Colouring(n, 0), edges).is_connected())
            continue;
        std::uint32_t best = mask;
        for (const auto& map : relabel) {
            std::uint32_t image = 0;
            for (std::size_t e = 0; e < m; ++e)
                if ((mask >> e) & 1)
                    image |= 1u << map[e];
            best = std::min(best, image);
        }
        canonical.insert(best);
    }

    std::vector<std::vector<Edge>> classes;
    for (std::uint32_t mask : canonical) {
        std::vector<Edge> edges;
        for (std::size_t e = 0; e < m; ++e)
            if ((mask >> e) & 1)
                edges.push_back(pairs[e]);
        classes.push_back(std::move(edges));
    }
    return classes;
}

ColouredGraph random_instance(std::size_t min_n, std::size_t max_n, std::size_t colours, Rng& rng) {
    const std::size_t n = min_n + uniform_below(rng, max_n - min_n + 1);
    const double p = 0.2 + 0.6 * uniform_unit(rng);
    auto edges = random_connected_edges(n, p, rng);
    return ColouredGraph(n, colours, random_colouring(n, colours, rng), std::move(edges));
}

std::vector<Instance> build_corpus(const CorpusOptions& options) {
    if (options.colours == 0)
        throw InputError("colour count must be positive");
    std::vector<Instance> corpus;
    const std::size_t class_limit = std::min(options.max_n, kMaxClassOrder);
    for (std::size_t n = 1; n <= class_limit; ++n) {
        const auto classes = connected_graph_classes(n);
        for (std::size_t k = 0; k < classes.size(); ++k)
            for (std::size_t j = 0; j < options.colourings_per_graph; ++j) {
                Rng rng(mix_seed(options.seed, {n, k, j}));
                auto colours = random_colouring(n, options.colours, rng);
                corpus.push_back({"g" + std::to_string(n) + "." + std::to_string(k) + "/c" + std::to_string(j),
                                  ColouredGraph(n, options.colours, std::move(colours), classes[k])});
            }
    }
    for (std::size_t j = 0; j < options.random_instances; ++j) {
        Rng rng(mix_seed(options.seed, {0x72616e64ULL, j}));
        corpus.push_back({"r" + std::to_string(j),
                          random_instance(std::min<std::size_t>(2, options.max_n), std::max<std::size_t>(options.max_n, 1),
                                          options.colours, rng)});
    }
    return corpus;
}

void Report::check(bool ok, const std::string& what) {
    ++checks;
    if (ok)
        return;
    ++failure_count;
    if (failures.size() < kShownFailures)
        failures.push_back(what);
}

void Report::merge(const Report& other) {
    checks += other.checks;
    failure_count += other.failure_count;
    for (const auto& f : other.failures)
        if (failures.size() < kShownFailures)
            failures.push_back(f);
}

std::string Report::summary() const {
    std::ostringstream out;
    out << suite << ": " << checks << " checks, ";
    if (passed()) {
        out << "all checks passed";
    } else {
        out << failure_count << " failed";
        for (const auto& f : failures)
            out << "\n  " << f;
        if (failure_count > failures.size())
            out << "\n  ... " << failure_count - failures.size() << " more";
    }
    return out.str();
}

ColouredGraph subtree_graph(const ColouredGraph& g, const Subtree& tree) {
    const std::vector<Vertex> members = tree.vertices.to_vector();
    std::vector<Vertex> local(g.vertex_count(), 0);
    Colouring colours;
    for (Vertex i = 0; i < members.size(); ++i) {
        local[members[i]] = i;
        colours.push_back(g.colour(members[i]));
    }
    std::vector<Edge> edges;
    for (auto [u, v] : tree.edges)
        edges.emplace_back(local[u], local[v]);
    return ColouredGraph(members.size(), g.colour_count(), std::move(colours), std::move(edges));
}

Colouring replay(const ColouredGraph& g, const std::vector<Move>& moves) {
    Colouring col = g.colouring();
    for (const Move& m : moves)
        col = apply_move(g, col, m);
    return col;
}

Report check_spanning_tree(const std::vector<Instance>& corpus, const OracleBudget& budget) {
    Report report;
    report.suite = "spanning-tree";
    for (const auto& [id, g] : corpus) {
        const auto direct = oracle_free_all(g, budget);
        const auto via_trees = min_over_spanning_trees_all(g, budget);
        report.check(direct == via_trees,
                     id + ": oracle " + show(direct) + " vs spanning-tree minimum " + show(via_trees));
        const auto dp = solve_free(g).per_colour;
        report.check(dp == via_trees, id + ": solver " + show(dp) + " vs spanning-tree minimum " + show(via_trees));
    }
    return report;
}

Report check_solver_free(const std::vector<Instance>& corpus, const OracleBudget& budget) {
    Report report;
    report.suite = "solver-free";
    for (const auto& [id, g] : corpus) {
        const auto expected = oracle_free_all(g, budget);
        const auto solved = solve_free(g);
        report.check(solved.per_colour == expected,
                     id + ": solver " + show(solved.per_colour) + " vs oracle " + show(expected));

        const auto contracted = solve_free(contract_monochromatic(g).quotient);
        report.check(contracted.per_colour == solved.per_colour, id + ": contraction changed the solver result");

        const auto lowest = *std::min_element(solved.per_colour.begin(), solved.per_colour.end());
        report.check(solved.overall == lowest, id + ": overall is not the per-colour minimum");
        report.check(std::all_of(solved.per_colour.begin(), solved.per_colour.end(),
                                 [&](std::uint32_t v) { return v <= solved.overall + 1; }),
                     id + ": some colour costs more than overall + 1");
    }
    return report;
}

Report check_solver_fixed(const std::vector<Instance>& corpus, const OracleBudget& budget) {
    Report report;
    report.suite = "solver-fixed";
    for (const auto& [id, g] : corpus) {
        for (Vertex root = 0; root < g.vertex_count(); ++root) {
            const std::string where = id + " root " + std::to_string(root);
            const auto expected = oracle_fixed_all(g, root, budget);
            const auto solved = solve_fixed(g, root);
            report.check(unwrap(solved.per_colour) == expected,
                         where + ": solver " + show(unwrap(solved.per_colour)) + " vs oracle " + show(expected));

            // Replay the witness at the root and follow the state path.
            bool replay_ok = solved.witness.size() == solved.overall && solved.path.size() == solved.overall + 1;
            Colouring col = g.colouring();
            for (std::size_t t = 0; replay_ok && t < solved.witness.size(); ++t) {
                col = apply_move(g, col, {root, solved.witness[t]});
                const StateNode& node = solved.path[t + 1];
                replay_ok = monochromatic_component(g, col, root) == node.region && col[root] == node.colour;
            }
            replay_ok = replay_ok && is_monochromatic(col) && col[root] == solved.overall_colour;
            report.check(replay_ok, where + ": solver witness does not replay");

            const auto oracle = oracle_fixed(g, root, solved.overall_colour, budget);
            Colouring ocol = g.colouring();
            for (Colour c : oracle.witness)
                ocol = apply_move(g, ocol, {root, c});
            report.check(oracle.witness.size() == oracle.moves && is_monochromatic(ocol) &&
                             ocol[root] == solved.overall_colour,
                         where + ": oracle witness does not replay");
        }
    }
    return report;
}

Report check_solver_link(const std::vector<Instance>& corpus, std::size_t max_terminals, const OracleBudget& budget) {
    Report report;
    report.suite = "solver-link";
    const std::size_t k_limit = std::max(max_terminals, kDefaultLinkLimit);
    for (const auto& [id, g] : corpus) {
        const std::size_t n = g.vertex_count();
        SubtreeFloodCache cache(g, budget);
        for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
            if (static_cast<std::size_t>(std::popcount(mask)) > max_terminals)
                continue;
            VertexSet terminals;
            for (Vertex v = 0; v < n; ++v)
                if ((mask >> v) & 1)
                    terminals.insert(v);
            const std::string where = id + " U=" + show(terminals);

            const auto expected = oracle_link_all(g, terminals, budget);
            const auto solved = solve_linking(g, terminals, std::nullopt, k_limit);
            report.check(solved.per_colour == expected,
                         where + ": solver " + show(solved.per_colour) + " vs oracle " + show(expected));
            const auto steiner = cache.steiner_minimum(terminals);
            report.check(steiner == expected,
                         where + ": Steiner-subtree minimum " + show(steiner) + " vs oracle " + show(expected));

            const auto any = oracle_link(g, terminals, std::nullopt, budget);
            report.check(any.moves == solved.value && any.witness.size() == any.moves &&
                             linked_in(g, replay(g, any.witness), terminals, std::nullopt),
                         where + ": any-colour linking witness or value mismatch");
            check_table_invariants(report, where, g, terminals, k_limit);
        }
    }
    return report;
}

Report check_link_random(std::size_t cases, std::size_t terminal_count, const CorpusOptions& options,
                         const OracleBudget& budget) {
    Report report;
    report.suite = "solver-link-random";
    const std::size_t max_n = std::max(terminal_count, std::min(options.max_n, kMaxClassOrder));
    for (std::size_t j = 0; j < cases; ++j) {
        Rng rng(mix_seed(options.seed, {0x6c696e6bULL, terminal_count, j}));
        const ColouredGraph g = random_instance(terminal_count, max_n, options.colours, rng);
        std::vector<Vertex> order(g.vertex_count());
        std::iota(order.begin(), order.end(), 0u);
        for (std::size_t i = order.size(); i > 1; --i)
            std::swap(order[i - 1], order[uniform_below(rng, i)]);
        VertexSet terminals;
        for (std::size_t i = 0; i < terminal_count; ++i)
            terminals.insert(order[i]);
        const std::string where = "case " + std::to_string(j) + " U=" + show(terminals);

        const auto expected = oracle_link_all(g, terminals, budget);
        const auto solved = solve_linking(g, terminals, std::nullopt, std::max(terminal_count, kDefaultLinkLimit));
        report.check(solved.per_colour == expected,
                     where + ": solver " + show(solved.per_colour) + " vs oracle " + show(expected));
        SubtreeFloodCache cache(g, budget);
        report.check(cache.steiner_minimum(terminals) == expected, where + ": Steiner-subtree minimum mismatch");
    }
    return report;
}

Report check_corollaries(std::size_t configurations, const CorpusOptions& options, const OracleBudget& budget) {
    Report report;
    report.suite = "corollaries";
    for (std::size_t j = 0; j < configurations; ++j) {
        Rng rng(mix_seed(options.seed, {0x636f72ULL, j}));
        const ColouredGraph g =
            random_instance(std::min<std::size_t>(2, options.max_n), std::max<std::size_t>(options.max_n, 1),
                            options.colours, rng);
        const std::string where = "config " + std::to_string(j);
        const std::size_t n = g.vertex_count();
        const VertexSet all = g.all_vertices();
        const auto flood = oracle_free_all(g, budget);
        const auto index = enumerate_connected_subgraphs(g, n);

        auto at_most_sum = [](const std::vector<std::uint32_t>& whole, const std::vector<std::uint32_t>& a,
                              const std::vector<std::uint32_t>& b) {
            for (std::size_t d = 0; d < whole.size(); ++d)
                if (whole[d] > a[d] + b[d])
                    return false;
            return true;
        };

        // Tree splitting: cut one edge of a random spanning tree.
        if (n >= 2) {
            const ColouredGraph tree = g.with_edges(random_spanning_tree(g, rng));
            const Edge cut = tree.edges()[uniform_below(rng, tree.edge_count())];
            std::vector<Edge> rest;
            for (const Edge& e : tree.edges())
                if (e != cut)
                    rest.push_back(e);
            const ColouredGraph forest = tree.with_edges(rest);
            const VertexSet side_a = monochromatic_component(forest.with_colouring(Colouring(n, 0)),
                                                             Colouring(n, 0), cut.first);
            const VertexSet side_b = all - side_a;
            report.check(at_most_sum(oracle_free_all(tree, budget), induced_flood(tree, side_a, budget),
                                     induced_flood(tree, side_b, budget)),
                         where + ": tree splitting inequality violated");
        }

        // Covers V = A u B with both sides connected, disjoint and overlapping.
        std::vector<std::pair<VertexSet, VertexSet>> disjoint, overlapping;
        for (const VertexSet& a : index.sets()) {
            if (a == all)
                continue;
            const VertexSet rest = all - a;
            if (index.find(rest) && a.min() < rest.min())
                disjoint.emplace_back(a, rest);
            for (const VertexSet& b : index.sets())
                if (b != all && rest.is_subset_of(b) && b.intersects(a) && lex_less(a, b))
                    overlapping.emplace_back(a, b);
        }
        for (const auto* covers : {&disjoint, &overlapping}) {
            if (covers->empty())
                continue;
            const auto& [a, b] = (*covers)[uniform_below(rng, covers->size())];
            report.check(at_most_sum(flood, induced_flood(g, a, budget), induced_flood(g, b, budget)),
                         where + ": cover " + show(a) + " + " + show(b) + " exceeds the sum of its parts");
        }

        // Adding an edge never costs moves.
        std::vector<Edge> missing;
        for (const Edge& e : complete_edges(n))
            if (!g.adjacent(e.first, e.second))
                missing.push_back(e);
        if (!missing.empty()) {
            std::vector<Edge> more = g.edges();
            more.push_back(missing[uniform_below(rng, missing.size())]);
            const auto denser = oracle_free_all(g.with_edges(more), budget);
            bool ok = true;
            for (std::size_t d = 0; d < flood.size(); ++d)
                ok = ok && denser[d] <= flood[d];
            report.check(ok, where + ": adding an edge increased a flood number");
        }

        // Linking a connected subgraph costs no more than flooding it alone.
        {
            const VertexSet h = index.at(static_cast<SubgraphIndex::Id>(uniform_below(rng, index.size())));
            const auto link = oracle_link_all(g, h, budget);
            const auto alone = induced_flood(g, h, budget);
            bool ok = true;
            for (std::size_t d = 0; d < link.size(); ++d)
                ok = ok && link[d] <= alone[d];
            report.check(ok, where + ": linking " + show(h) + " costs more than flooding it");
        }

        // Linking equals the Steiner-subtree minimum; the witness replays.
        {
            const std::size_t size = 1 + uniform_below(rng, std::min<std::size_t>(3, n));
            VertexSet u;
            while (u.size() < size)
                u.insert(static_cast<Vertex>(uniform_below(rng, n)));
            const auto link = oracle_link_all(g, u, budget);
            SubtreeFloodCache cache(g, budget);
            report.check(cache.steiner_minimum(u) == link, where + ": Steiner-subtree minimum differs for " + show(u));
            const Colour d = static_cast<Colour>(uniform_below(rng, g.colour_count()));
            const auto witness = oracle_link(g, u, d, budget);
            report.check(witness.moves == link[d] && witness.witness.size() == witness.moves &&
                             linked_in(g, replay(g, witness.witness), u, d),
                         where + ": linking witness does not replay");
        }

        // Final-colour slack and flood witnesses.
        {
            const auto any = oracle_free(g, std::nullopt, budget);
            bool ok = true;
            for (auto v : flood)
                ok = ok && v <= any.moves + 1;
            report.check(ok && any.moves == *std::min_element(flood.begin(), flood.end()),
                         where + ": final-colour slack violated");
            const Colouring end = replay(g, any.witness);
            report.check(any.witness.size() == any.moves && is_monochromatic(end), where + ": witness does not flood");
            const Colour d = static_cast<Colour>(uniform_below(rng, g.colour_count()));
            const auto targeted = oracle_free(g, d, budget);
            const Colouring end_d = replay(g, targeted.witness);
            report.check(targeted.moves == flood[d] && targeted.witness.size() == targeted.moves &&
                             is_monochromatic(end_d) && end_d.front() == d,
                         where + ": targeted witness does not flood in colour " + std::to_string(d));
        }
    }
    return report;
}

Report run_suite(std::string_view name, const SuiteOptions& options) {
    CorpusOptions corpus_options;
    corpus_options.max_n = options.max_n;
    corpus_options.colours = options.colours;
    corpus_options.seed = options.seed;
    corpus_options.colourings_per_graph = options.samples;

    if (options.max_n == 0)
        throw InputError("--max-n must be positive");
    if (name == "corollaries")
        return check_corollaries(options.samples, corpus_options, options.budget);

    if (name == "solver-link") {
        corpus_options.max_n = std::min(options.max_n, kMaxClassOrder);
        Report report = check_solver_link(build_corpus(corpus_options), 3, options.budget);
        if (options.random > 0)
            report.merge(check_link_random(options.random, 4, corpus_options, options.budget));
        return report;
    }

    corpus_options.random_instances = options.random;
    if (name == "spanning-tree")
        return check_spanning_tree(build_corpus(corpus_options), options.budget);
    if (name == "solver-free")
        return check_solver_free(build_corpus(corpus_options), options.budget);
    if (name == "solver-fixed")
        return check_solver_fixed(build_corpus(corpus_options), options.budget);
    throw InputError("unknown verification suite '" + std::string(name) + "'");
}

} // namespace floodit::verify
