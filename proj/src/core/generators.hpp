#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "core/graph.hpp"

namespace floodit {

using Rng = std::mt19937_64;

// Derives an independent stream seed from a base seed and a list of tags.
std::uint64_t mix_seed(std::uint64_t seed, std::initializer_list<std::uint64_t> tags);

// Uniform integer in [0, bound); portable across standard libraries.
std::uint64_t uniform_below(Rng& rng, std::uint64_t bound);
// Uniform double in [0, 1).
double uniform_unit(Rng& rng);

Colouring random_colouring(std::size_t n, std::size_t colour_count, Rng& rng);

std::vector<Edge> path_edges(std::size_t n);
std::vector<Edge> cycle_edges(std::size_t n);
std::vector<Edge> complete_edges(std::size_t n);
std::vector<Edge> grid_edges(std::size_t rows, std::size_t cols);

// Random connected graph: a random recursive tree plus every other pair
// independently with probability p.
std::vector<Edge> random_connected_edges(std::size_t n, double p, Rng& rng);

struct GeneratorParams {
    std::string kind; // path | cycle | complete | grid | subdivision | random
    std::size_t n = 0;
    std::size_t rows = 0;
    std::size_t cols = 0;
    // 0 means: one more than the largest explicit colour, else 3.
    std::size_t colour_count = 0;
    // Explicit colouring; when empty colours are drawn uniformly.
    std::vector<Colour> colours;
    // subdivision: base graph and internal vertices per base edge (one value
    // for every edge, or one per edge in ascending edge order).
    std::string base = "complete";
    std::size_t base_n = 4;
    std::vector<std::size_t> subdivisions;
    // random: extra-edge probability.
    double edge_probability = 0.3;
    std::uint64_t seed = 0;
};

// Deterministic for given params. Throws InputError on malformed params.
ColouredGraph generate(const GeneratorParams& params);

} // namespace floodit
