#include "core/generators.hpp"

#include <algorithm>
#include <numeric>

namespace floodit {

std::uint64_t mix_seed(std::uint64_t seed, std::initializer_list<std::uint64_t> tags) {
    // splitmix64 finaliser folded over the tags
    auto mix = [](std::uint64_t z) {
        z += 0x9e3779b97f4a7c15ULL;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    };
    std::uint64_t h = mix(seed);
    for (auto t : tags)
        h = mix(h ^ mix(t));
    return h;
}

std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
    if (bound <= 1)
        return 0;
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return x % bound;
}

double uniform_unit(Rng& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

Colouring random_colouring(std::size_t n, std::size_t colour_count, Rng& rng) {
    Colouring col(n);
    for (auto& c : col)
        c = static_cast<Colour>(uniform_below(rng, colour_count));
    return col;
}

std::vector<Edge> path_edges(std::size_t n) {
    std::vector<Edge> edges;
    for (Vertex v = 0; v + 1 < n; ++v)
        edges.emplace_back(v, v + 1);
    return edges;
}

std::vector<Edge> cycle_edges(std::size_t n) {
    if (n < 3)
        throw InputError("a cycle needs at least 3 vertices");
    auto edges = path_edges(n);
    edges.emplace_back(0, static_cast<Vertex>(n - 1));
    return edges;
}

std::vector<Edge> complete_edges(std::size_t n) {
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            edges.emplace_back(u, v);
    return edges;
}

std::vector<Edge> grid_edges(std::size_t rows, std::size_t cols) {
    std::vector<Edge> edges;
    auto id = [cols](std::size_t r, std::size_t c) { return static_cast<Vertex>(r * cols + c); };
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) {
            if (c + 1 < cols)
                edges.emplace_back(id(r, c), id(r, c + 1));
            if (r + 1 < rows)
                edges.emplace_back(id(r, c), id(r + 1, c));
        }
    return edges;
}

std::vector<Edge> random_connected_edges(std::size_t n, double p, Rng& rng) {
    std::vector<Vertex> order(n);
    std::iota(order.begin(), order.end(), 0u);
    for (std::size_t i = n; i > 1; --i)
        std::swap(order[i - 1], order[uniform_below(rng, i)]);

    std::vector<std::vector<char>> present(n, std::vector<char>(n, 0));
    std::vector<Edge> edges;
    auto add = [&](Vertex a, Vertex b) {
        if (a > b)
            std::swap(a, b);
        present[a][b] = 1;
        edges.emplace_back(a, b);
    };
    for (std::size_t i = 1; i < n; ++i)
        add(order[i], order[uniform_below(rng, i)]);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (!present[u][v] && uniform_unit(rng) < p)
                add(u, v);
    std::sort(edges.begin(), edges.end());
    return edges;
}

namespace {

std::vector<Edge> base_edges(const std::string& kind, std::size_t n) {
    if (kind == "path")
        return path_edges(n);
    if (kind == "cycle")
        return cycle_edges(n);
    if (kind == "complete")
        return complete_edges(n);
    throw InputError("unknown subdivision base '" + kind + "' (expected path, cycle or complete)");
}

void require_positive(std::size_t value, const char* name) {
    if (value == 0)
        throw InputError(std::string("generator parameter ") + name + " must be positive");
}

} // namespace

ColouredGraph generate(const GeneratorParams& params) {
    std::size_t n = 0;
    std::vector<Edge> edges;
    Rng rng(mix_seed(params.seed, {0x67656eULL}));

    if (params.kind == "path" || params.kind == "cycle" || params.kind == "complete") {
        require_positive(params.n, "n");
        n = params.n;
        edges = params.kind == "path" ? path_edges(n) : params.kind == "cycle" ? cycle_edges(n) : complete_edges(n);
    } else if (params.kind == "grid") {
        require_positive(params.rows, "rows");
        require_positive(params.cols, "cols");
        n = params.rows * params.cols;
        edges = grid_edges(params.rows, params.cols);
    } else if (params.kind == "subdivision") {
        require_positive(params.base_n, "base_n");
        const auto base = base_edges(params.base, params.base_n);
        std::vector<std::size_t> counts = params.subdivisions.empty() ? std::vector<std::size_t>{1} : params.subdivisions;
        if (counts.size() == 1)
            counts.assign(base.size(), counts.front());
        if (counts.size() != base.size())
            throw InputError("subdivision needs one count or " + std::to_string(base.size()) + " per-edge counts");
        n = params.base_n;
        for (std::size_t e = 0; e < base.size(); ++e) {
            Vertex prev = base[e].first;
            for (std::size_t k = 0; k < counts[e]; ++k) {
                const auto fresh = static_cast<Vertex>(n++);
                edges.emplace_back(prev, fresh);
                prev = fresh;
            }
            edges.emplace_back(prev, base[e].second);
        }
    } else if (params.kind == "random") {
        require_positive(params.n, "n");
        if (params.edge_probability < 0.0 || params.edge_probability > 1.0)
            throw InputError("edge probability must lie in [0, 1]");
        n = params.n;
        edges = random_connected_edges(n, params.edge_probability, rng);
    } else {
        throw InputError("unknown generator kind '" + params.kind + "'");
    }

    std::size_t colour_count = params.colour_count;
    Colouring colours;
    if (!params.colours.empty()) {
        if (params.colours.size() != n)
            throw InputError("explicit colouring has " + std::to_string(params.colours.size()) + " entries for " +
                             std::to_string(n) + " vertices");
        colours = params.colours;
        if (colour_count == 0)
            colour_count = *std::max_element(colours.begin(), colours.end()) + std::size_t{1};
    } else {
        if (colour_count == 0)
            colour_count = 3;
        colours = random_colouring(n, colour_count, rng);
    }
    return ColouredGraph(n, colour_count, std::move(colours), std::move(edges));
}

} // namespace floodit
