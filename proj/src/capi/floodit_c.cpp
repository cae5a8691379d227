#include "floodit/floodit.h"

#include <chrono>
#include <cstdlib>
#include <cstring>
#include <new>
#include <string>
#include <utility>

#include "core/enumeration.hpp"
#include "core/generators.hpp"
#include "core/instance_io.hpp"
#include "core/oracle.hpp"
#include "core/records.hpp"
#include "core/solver_fixed.hpp"
#include "core/solver_free.hpp"
#include "core/solver_linking.hpp"
#include "core/verify.hpp"

struct fl_graph {
    floodit::ColouredGraph g;
};

struct fl_result {
    floodit::ResultRecord record;
    // Free and link witnesses keep their vertices; fixed ones play at the root.
    std::vector<floodit::Move> moves;
};

struct fl_report {
    floodit::verify::Report report;
    std::string summary;
};

namespace {

thread_local std::string last_error;

using Clock = std::chrono::steady_clock;

fl_status fail(fl_status status, std::string message) {
    last_error = std::move(message);
    return status;
}

// Runs `body`, translating exceptions into status codes.
template <typename F>
fl_status guarded(F&& body) {
    try {
        last_error.clear();
        body();
        return FL_OK;
    } catch (const floodit::ParseError& e) {
        return fail(FL_ERR_PARSE, e.what());
    } catch (const floodit::InputError& e) {
        return fail(FL_ERR_INPUT, e.what());
    } catch (const floodit::CapacityError& e) {
        return fail(FL_ERR_CAPACITY, e.what());
    } catch (const floodit::ResourceError& e) {
        return fail(FL_ERR_RESOURCE, e.what());
    } catch (const std::bad_alloc&) {
        return fail(FL_ERR_RESOURCE, "out of memory");
    } catch (const std::exception& e) {
        return fail(FL_ERR_INTERNAL, e.what());
    }
}

char* duplicate(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out)
        throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

floodit::Target to_target(const floodit::ColouredGraph& g, std::int64_t target) {
    if (target == FL_TARGET_ANY)
        return std::nullopt;
    if (target < 0 || static_cast<std::uint64_t>(target) >= g.colour_count())
        throw floodit::InputError("target colour " + std::to_string(target) + " out of range");
    return static_cast<floodit::Colour>(target);
}

floodit::VertexSet to_terminals(const floodit::ColouredGraph& g, const std::uint32_t* terminals, std::size_t count) {
    if (count > 0 && !terminals)
        throw floodit::InputError("terminal list is null");
    floodit::VertexSet set;
    for (std::size_t i = 0; i < count; ++i) {
        if (terminals[i] >= g.vertex_count() || terminals[i] >= floodit::VertexSet::kCapacity)
            throw floodit::InputError("terminal " + std::to_string(terminals[i]) + " out of range");
        set.insert(terminals[i]);
    }
    return set;
}

floodit::OracleBudget to_budget(std::size_t max_states) {
    floodit::OracleBudget budget;
    if (max_states > 0)
        budget.max_states = max_states;
    return budget;
}

std::vector<std::optional<std::uint32_t>> wrap(const std::vector<std::uint32_t>& values) {
    return {values.begin(), values.end()};
}

double elapsed_ms(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::uint32_t minimum(const std::vector<std::uint32_t>& values) {
    std::uint32_t best = values.empty() ? 0 : values.front();
    for (auto v : values)
        best = std::min(best, v);
    return best;
}

fl_result* make_result(const char* variant, const char* method) {
    auto* r = new fl_result;
    r->record.variant = variant;
    r->record.method = method;
    return r;
}

} // namespace

extern "C" {

const char* fl_version(void) { return "1.0.0"; }

const char* fl_status_name(fl_status status) {
    switch (status) {
    case FL_OK: return "ok";
    case FL_ERR_INPUT: return "input error";
    case FL_ERR_PARSE: return "parse error";
    case FL_ERR_CAPACITY: return "capacity error";
    case FL_ERR_RESOURCE: return "resource limit";
    case FL_ERR_INTERNAL: return "internal error";
    case FL_ERR_NULL_ARG: return "null argument";
    }
    return "unknown status";
}

const char* fl_last_error(void) { return last_error.c_str(); }

void fl_string_free(char* s) { std::free(s); }

fl_status fl_graph_create(size_t vertex_count, size_t colour_count, const uint32_t* colours, size_t edge_count,
                          const uint32_t* edges, fl_graph** out) {
    if (!out || (vertex_count > 0 && !colours) || (edge_count > 0 && !edges))
        return fail(FL_ERR_NULL_ARG, "null argument");
    return guarded([&] {
        floodit::Colouring colouring(colours, colours + vertex_count);
        std::vector<floodit::Edge> list;
        for (std::size_t i = 0; i < edge_count; ++i)
            list.emplace_back(edges[2 * i], edges[2 * i + 1]);
        *out = new fl_graph{floodit::ColouredGraph(vertex_count, colour_count, std::move(colouring), std::move(list))};
    });
}

fl_status fl_graph_parse(const char* text, fl_graph** out) {
    if (!text || !out)
        return fail(FL_ERR_NULL_ARG, "null argument");
    return guarded([&] { *out = new fl_graph{floodit::parse_instance(text)}; });
}

fl_status fl_graph_load(const char* path, fl_graph** out) {
    if (!path || !out)
        return fail(FL_ERR_NULL_ARG, "null argument");
    return guarded([&] { *out = new fl_graph{floodit::load_instance(path)}; });
}

fl_status fl_graph_write(const fl_graph* g, char** text) {
    if (!g || !text)
        return fail(FL_ERR_NULL_ARG, "null argument");
    return guarded([&] { *text = duplicate(floodit::write_instance(g->g)); });
}

fl_status fl_graph_contract(const fl_graph* g, fl_graph** out) {
    if (!g || !out)
        return fail(FL_ERR_NULL_ARG, "null argument");
    return guarded([&] { *out = new fl_graph{floodit::contract_monochromatic(g->g).quotient}; });
}

void fl_graph_free(fl_graph* g) { delete g; }

size_t fl_graph_vertex_count(const fl_graph* g) { return g ? g->g.vertex_count() : 0; }
size_t fl_graph_colour_count(const fl_graph* g) { return g ? g->g.colour_count() : 0; }
size_t fl_graph_edge_count(const fl_graph* g) { return g ? g->g.edge_count() : 0; }

uint32_t fl_graph_colour(const fl_graph* g, uint32_t v) {
    return g && v < g->g.vertex_count() ? g->g.colour(v) : 0;
}

int fl_graph_is_connected(const fl_graph* g) { return g && g->g.is_connected() ? 1 : 0; }

fl_status fl_graph_count_subgraphs(const fl_graph* g, size_t* count) {
    if (!g || !count)
        return fail(FL_ERR_NULL_ARG, "null argument");
    return guarded([&] { *count = floodit::enumerate_connected_subgraphs(g->g, g->g.vertex_count()).size(); });
}

void fl_gen_params_init(fl_gen_params* params) {
    if (!params)
        return;
    const floodit::GeneratorParams d;
    *params = fl_gen_params{};
    params->kind = "path";
    params->base = "complete";
    params->base_n = d.base_n;
    params->edge_probability = d.edge_probability;
}

fl_status fl_graph_generate(const fl_gen_params* params, fl_graph** out) {
    if (!params || !out || !params->kind || (params->colours_len > 0 && !params->colours) ||
        (params->subdivisions_len > 0 && !params->subdivisions))
        return fail(FL_ERR_NULL_ARG, "null argument");
    return guarded([&] {
        floodit::GeneratorParams p;
        p.kind = params->kind;
        p.n = params->n;
        p.rows = params->rows;
        p.cols = params->cols;
        p.colour_count = params->colour_count;
        p.colours.assign(params->colours, params->colours + params->colours_len);
        if (params->base)
            p.base = params->base;
        p.base_n = params->base_n;
        p.subdivisions.assign(params->subdivisions, params->subdivisions + params->subdivisions_len);
        p.edge_probability = params->edge_probability;
        p.seed = params->seed;
        *out = new fl_graph{floodit::generate(p)};
    });
}

fl_status fl_solve_free(const fl_graph* g, int64_t target, fl_result** out) {
    if (!g || !out)
        return fail(FL_ERR_NULL_ARG, "null argument");
    return guarded([&] {
        const auto t = to_target(g->g, target);
        const auto start = Clock::now();
        const auto solution = floodit::solve_free(g->g);
        auto* r = make_result("free", "dp");
        r->record.target = t;
        r->record.per_colour = wrap(solution.per_colour);
        r->record.overall = solution.overall;
        r->record.value = t ? solution.per_colour[*t] : solution.overall;
        r->record.subgraph_count = solution.subgraph_count;
        r->record.wall_ms = elapsed_ms(start);
        *out = r;
    });
}

fl_status fl_solve_fixed(const fl_graph* g, uint32_t root, int64_t target, fl_result** out) {
    if (!g || !out)
        return fail(FL_ERR_NULL_ARG, "null argument");
    return guarded([&] {
        const auto t = to_target(g->g, target);
        const auto start = Clock::now();
        const auto solution = floodit::solve_fixed(g->g, root, t);
        auto* r = make_result("fixed", "dp");
        r->record.root = root;
        r->record.target = t;
        r->record.per_colour = solution.per_colour;
        r->record.overall = solution.overall;
        r->record.value = static_cast<std::uint32_t>(solution.witness.size());
        r->record.colour_witness = solution.witness;
        for (auto c : solution.witness)
            r->moves.push_back({root, c});
        r->record.state_count = solution.state_count;
        r->record.wall_ms = elapsed_ms(start);
        *out = r;
    });
}

fl_status fl_solve_link(const fl_graph* g, const uint32_t* terminals, size_t terminal_count, int64_t target,
                        size_t k_limit, fl_result** out) {
    if (!g || !out)
        return fail(FL_ERR_NULL_ARG, "null argument");
    return guarded([&] {
        const auto t = to_target(g->g, target);
        const std::size_t limit = k_limit ? k_limit : floodit::kDefaultLinkLimit;
        const auto set = to_terminals(g->g, terminals, terminal_count);
        const auto start = Clock::now();
        const auto solution = floodit::solve_linking(g->g, set, t, limit);
        auto* r = make_result("link", "dp");
        r->record.terminals = set.to_vector();
        r->record.target = t;
        r->record.per_colour = wrap(solution.per_colour);
        r->record.overall = minimum(solution.per_colour);
        r->record.value = solution.value;
        r->record.wall_ms = elapsed_ms(start);
        *out = r;
    });
}

fl_status fl_oracle_free(const fl_graph* g, int64_t target, size_t max_states, fl_result** out) {
    if (!g || !out)
        return fail(FL_ERR_NULL_ARG, "null argument");
    return guarded([&] {
        const auto t = to_target(g->g, target);
        const auto budget = to_budget(max_states);
        const auto start = Clock::now();
        const auto all = floodit::oracle_free_all(g->g, budget);
        const auto best = floodit::oracle_free(g->g, t, budget);
        auto* r = make_result("free", "oracle");
        r->record.target = t;
        r->record.per_colour = wrap(all);
        r->record.overall = minimum(all);
        r->record.value = best.moves;
        r->record.move_witness = best.witness;
        r->moves = best.witness;
        r->record.wall_ms = elapsed_ms(start);
        *out = r;
    });
}

fl_status fl_oracle_fixed(const fl_graph* g, uint32_t root, int64_t target, size_t max_states, fl_result** out) {
    if (!g || !out)
        return fail(FL_ERR_NULL_ARG, "null argument");
    return guarded([&] {
        const auto t = to_target(g->g, target);
        const auto budget = to_budget(max_states);
        const auto start = Clock::now();
        const auto all = floodit::oracle_fixed_all(g->g, root, budget);
        const auto best = floodit::oracle_fixed(g->g, root, t, budget);
        auto* r = make_result("fixed", "oracle");
        r->record.root = root;
        r->record.target = t;
        r->record.per_colour = wrap(all);
        r->record.overall = minimum(all);
        r->record.value = best.moves;
        r->record.colour_witness = best.witness;
        for (auto c : best.witness)
            r->moves.push_back({root, c});
        r->record.wall_ms = elapsed_ms(start);
        *out = r;
    });
}

fl_status fl_oracle_link(const fl_graph* g, const uint32_t* terminals, size_t terminal_count, int64_t target,
                         size_t max_states, fl_result** out) {
    if (!g || !out)
        return fail(FL_ERR_NULL_ARG, "null argument");
    return guarded([&] {
        const auto t = to_target(g->g, target);
        const auto set = to_terminals(g->g, terminals, terminal_count);
        const auto budget = to_budget(max_states);
        const auto start = Clock::now();
        const auto all = floodit::oracle_link_all(g->g, set, budget);
        const auto best = floodit::oracle_link(g->g, set, t, budget);
        auto* r = make_result("link", "oracle");
        r->record.terminals = set.to_vector();
        r->record.target = t;
        r->record.per_colour = wrap(all);
        r->record.overall = minimum(all);
        r->record.value = best.moves;
        r->record.move_witness = best.witness;
        r->moves = best.witness;
        r->record.wall_ms = elapsed_ms(start);
        *out = r;
    });
}

const char* fl_result_variant(const fl_result* r) { return r ? r->record.variant.c_str() : ""; }
const char* fl_result_method(const fl_result* r) { return r ? r->record.method.c_str() : ""; }
size_t fl_result_colour_count(const fl_result* r) { return r ? r->record.per_colour.size() : 0; }

int64_t fl_result_per_colour(const fl_result* r, uint32_t d) {
    if (!r || d >= r->record.per_colour.size() || !r->record.per_colour[d])
        return -1;
    return *r->record.per_colour[d];
}

uint32_t fl_result_overall(const fl_result* r) { return r ? r->record.overall : 0; }
uint32_t fl_result_value(const fl_result* r) { return r ? r->record.value : 0; }
size_t fl_result_witness_length(const fl_result* r) { return r ? r->moves.size() : 0; }

fl_status fl_result_witness_move(const fl_result* r, size_t i, uint32_t* vertex, uint32_t* colour) {
    if (!r || !vertex || !colour)
        return fail(FL_ERR_NULL_ARG, "null argument");
    if (i >= r->moves.size())
        return fail(FL_ERR_INPUT, "witness index out of range");
    *vertex = r->moves[i].vertex;
    *colour = r->moves[i].colour;
    return FL_OK;
}

int64_t fl_result_subgraph_count(const fl_result* r) {
    return r && r->record.subgraph_count ? static_cast<int64_t>(*r->record.subgraph_count) : -1;
}

int64_t fl_result_state_count(const fl_result* r) {
    return r && r->record.state_count ? static_cast<int64_t>(*r->record.state_count) : -1;
}

double fl_result_wall_ms(const fl_result* r) { return r ? r->record.wall_ms : 0.0; }

fl_status fl_result_record(const fl_result* r, const char* instance, char** json) {
    if (!r || !json)
        return fail(FL_ERR_NULL_ARG, "null argument");
    return guarded([&] {
        floodit::ResultRecord record = r->record;
        record.instance = instance ? instance : "";
        *json = duplicate(floodit::to_json_line(record));
    });
}

void fl_result_free(fl_result* r) { delete r; }

void fl_verify_params_init(fl_verify_params* params) {
    if (!params)
        return;
    const floodit::verify::SuiteOptions d;
    *params = fl_verify_params{};
    params->suite = "spanning-tree";
    params->max_n = d.max_n;
    params->colours = d.colours;
    params->seed = d.seed;
}

fl_status fl_verify(const fl_verify_params* params, fl_report** out) {
    if (!params || !params->suite || !out)
        return fail(FL_ERR_NULL_ARG, "null argument");
    return guarded([&] {
        floodit::verify::SuiteOptions options;
        const std::string suite = params->suite;
        options.max_n = params->max_n;
        options.colours = params->colours;
        options.seed = params->seed;
        options.samples = params->samples ? params->samples : (suite == "corollaries" ? 100 : 3);
        options.random = params->random;
        options.budget = to_budget(params->max_states);
        auto report = floodit::verify::run_suite(suite, options);
        auto summary = report.summary();
        *out = new fl_report{std::move(report), std::move(summary)};
    });
}

int fl_report_passed(const fl_report* r) { return r && r->report.passed() ? 1 : 0; }
size_t fl_report_checks(const fl_report* r) { return r ? r->report.checks : 0; }
size_t fl_report_failures(const fl_report* r) { return r ? r->report.failure_count : 0; }
const char* fl_report_summary(const fl_report* r) { return r ? r->summary.c_str() : ""; }
void fl_report_free(fl_report* r) { delete r; }

} // extern "C"
