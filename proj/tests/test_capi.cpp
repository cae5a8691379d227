#include <doctest.h>

#include <json.hpp>

#include <cstring>
#include <string>

#include "floodit/floodit.h"

namespace {

const char* const kP3 = "floodgraph 1\nn 3\nc 2\ncolours 1 0 1\nedges 2\n0 1\n1 2\n";

fl_graph* p3() {
    fl_graph* g = nullptr;
    REQUIRE(fl_graph_parse(kP3, &g) == FL_OK);
    return g;
}

} // namespace

TEST_CASE("graph handles") {
    fl_graph* g = p3();
    CHECK(fl_graph_vertex_count(g) == 3);
    CHECK(fl_graph_colour_count(g) == 2);
    CHECK(fl_graph_edge_count(g) == 2);
    CHECK(fl_graph_colour(g, 0) == 1);
    CHECK(fl_graph_is_connected(g) == 1);
    size_t count = 0;
    CHECK(fl_graph_count_subgraphs(g, &count) == FL_OK);
    CHECK(count == 6);
    char* text = nullptr;
    REQUIRE(fl_graph_write(g, &text) == FL_OK);
    CHECK(std::string(text) == kP3);
    fl_string_free(text);

    const uint32_t colours[] = {0, 0, 1, 1};
    const uint32_t edges[] = {0, 1, 1, 2, 2, 3};
    fl_graph* h = nullptr;
    REQUIRE(fl_graph_create(4, 2, colours, 3, edges, &h) == FL_OK);
    fl_graph* q = nullptr;
    REQUIRE(fl_graph_contract(h, &q) == FL_OK);
    CHECK(fl_graph_vertex_count(q) == 2);
    fl_graph_free(q);
    fl_graph_free(h);
    fl_graph_free(g);
}

TEST_CASE("status codes and messages") {
    fl_graph* g = nullptr;
    CHECK(fl_graph_parse("floodgraph 1\nn 3\nc 2\ncolours 1 0 1\nedges 1\n0 0\n", &g) == FL_ERR_PARSE);
    CHECK(std::string(fl_last_error()).find("line 6") != std::string::npos);
    CHECK(g == nullptr);
    CHECK(fl_graph_parse(nullptr, &g) == FL_ERR_NULL_ARG);
    const uint32_t colours[] = {0, 5};
    CHECK(fl_graph_create(2, 2, colours, 0, nullptr, &g) == FL_ERR_INPUT);
    CHECK(fl_graph_load("/nonexistent/file", &g) == FL_ERR_INPUT);
    CHECK(std::string(fl_status_name(FL_ERR_RESOURCE)) == "resource limit");

    g = p3();
    fl_result* r = nullptr;
    CHECK(fl_solve_free(g, 7, &r) == FL_ERR_INPUT);
    CHECK(fl_solve_fixed(g, 9, FL_TARGET_ANY, &r) == FL_ERR_INPUT);
    const uint32_t nine[] = {0, 1, 2, 0, 1, 2, 0, 1, 2};
    CHECK(fl_solve_link(g, nine, 9, FL_TARGET_ANY, 0, &r) == FL_OK);
    fl_result_free(r);
    r = nullptr;
    CHECK(fl_oracle_free(g, FL_TARGET_ANY, 1, &r) == FL_ERR_RESOURCE);
    CHECK(r == nullptr);
    CHECK(fl_solve_free(g, FL_TARGET_ANY, &r) == FL_OK);
    CHECK(std::string(fl_last_error()).empty());
    fl_result_free(r);
    fl_graph_free(g);

    fl_gen_params p;
    fl_gen_params_init(&p);
    p.kind = "cycle";
    p.n = 10;
    fl_graph* c = nullptr;
    REQUIRE(fl_graph_generate(&p, &c) == FL_OK);
    uint32_t many[] = {0, 1, 2, 3, 4, 5, 6, 7, 8};
    CHECK(fl_solve_link(c, many, 9, FL_TARGET_ANY, 0, &r) == FL_ERR_INPUT);
    CHECK(std::string(fl_last_error()).find("k-limit") != std::string::npos);
    fl_graph_free(c);
}

TEST_CASE("solver results") {
    fl_graph* g = p3();
    fl_result* r = nullptr;
    REQUIRE(fl_solve_free(g, 0, &r) == FL_OK);
    CHECK(std::string(fl_result_variant(r)) == "free");
    CHECK(std::string(fl_result_method(r)) == "dp");
    CHECK(fl_result_colour_count(r) == 2);
    CHECK(fl_result_per_colour(r, 0) == 2);
    CHECK(fl_result_per_colour(r, 1) == 1);
    CHECK(fl_result_per_colour(r, 5) == -1);
    CHECK(fl_result_overall(r) == 1);
    CHECK(fl_result_value(r) == 2);
    CHECK(fl_result_subgraph_count(r) == 6);
    CHECK(fl_result_state_count(r) == -1);
    CHECK(fl_result_wall_ms(r) >= 0.0);
    fl_result_free(r);

    REQUIRE(fl_solve_fixed(g, 0, FL_TARGET_ANY, &r) == FL_OK);
    CHECK(fl_result_overall(r) == 2);
    REQUIRE(fl_result_witness_length(r) == 2);
    uint32_t v = 9, c = 9;
    CHECK(fl_result_witness_move(r, 1, &v, &c) == FL_OK);
    CHECK(v == 0);
    CHECK(c == 1);
    CHECK(fl_result_witness_move(r, 2, &v, &c) == FL_ERR_INPUT);
    char* json = nullptr;
    REQUIRE(fl_result_record(r, "p3", &json) == FL_OK);
    const auto j = nlohmann::json::parse(json);
    fl_string_free(json);
    CHECK(j["instance"] == "p3");
    CHECK(j["variant"] == "fixed");
    CHECK(j["root"] == 0);
    CHECK(j["witness"] == nlohmann::json::array({0, 1}));
    CHECK(j["state_count"] == 6);
    fl_result_free(r);

    const uint32_t ends[] = {0, 2};
    REQUIRE(fl_solve_link(g, ends, 2, 1, 0, &r) == FL_OK);
    CHECK(fl_result_value(r) == 1);
    fl_result_free(r);
    REQUIRE(fl_oracle_link(g, ends, 2, 1, 0, &r) == FL_OK);
    CHECK(fl_result_value(r) == 1);
    REQUIRE(fl_result_witness_length(r) == 1);
    CHECK(fl_result_witness_move(r, 0, &v, &c) == FL_OK);
    CHECK(v == 1);
    CHECK(c == 1);
    fl_result_free(r);
    REQUIRE(fl_oracle_fixed(g, 0, FL_TARGET_ANY, 0, &r) == FL_OK);
    CHECK(fl_result_value(r) == 2);
    fl_result_free(r);
    fl_graph_free(g);
}

TEST_CASE("verification through the C API") {
    fl_verify_params p;
    fl_verify_params_init(&p);
    p.suite = "solver-free";
    p.max_n = 4;
    fl_report* r = nullptr;
    REQUIRE(fl_verify(&p, &r) == FL_OK);
    CHECK(fl_report_passed(r) == 1);
    CHECK(fl_report_checks(r) > 0);
    CHECK(fl_report_failures(r) == 0);
    CHECK(std::string(fl_report_summary(r)).find("all checks passed") != std::string::npos);
    fl_report_free(r);
    p.suite = "nonsense";
    CHECK(fl_verify(&p, &r) == FL_ERR_INPUT);
}
