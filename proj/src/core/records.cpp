#include "core/records.hpp"

#include <json.hpp>

namespace floodit {

namespace {

template <typename T>
nlohmann::ordered_json optional_json(const std::optional<T>& v) {
    return v ? nlohmann::ordered_json(*v) : nlohmann::ordered_json(nullptr);
}

} // namespace

std::string to_json_line(const ResultRecord& r) {
    nlohmann::ordered_json j;
    j["instance"] = r.instance;
    j["variant"] = r.variant;
    j["method"] = r.method;
    j["root"] = optional_json(r.root);
    j["terminals"] = optional_json(r.terminals);
    j["target"] = optional_json(r.target);
    auto per_colour = nlohmann::ordered_json::array();
    for (const auto& v : r.per_colour)
        per_colour.push_back(optional_json(v));
    j["per_colour"] = per_colour;
    j["overall"] = r.overall;
    j["value"] = r.value;
    if (r.move_witness) {
        auto w = nlohmann::ordered_json::array();
        for (const Move& m : *r.move_witness)
            w.push_back({m.vertex, m.colour});
        j["witness"] = w;
    } else {
        j["witness"] = optional_json(r.colour_witness);
    }
    j["subgraph_count"] = optional_json(r.subgraph_count);
    j["state_count"] = optional_json(r.state_count);
    j["wall_ms"] = r.wall_ms;
    return j.dump();
}

} // namespace floodit
