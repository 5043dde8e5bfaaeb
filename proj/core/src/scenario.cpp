#include "flourish/scenario.hpp"

#include <algorithm>

namespace flourish {

const World* ScenarioDocument::find_world(std::string_view id) const {
    for (const auto& w : worlds)
        if (w.id() == id) return &w;
    return nullptr;
}

const Group* ScenarioDocument::find_group(std::string_view id) const {
    for (const auto& g : groups)
        if (g.id == id) return &g;
    return nullptr;
}

bool ScenarioDocument::has_agent(std::string_view id) const {
    for (const auto& a : agents)
        if (a.id == id) return true;
    return false;
}

Tick ScenarioDocument::horizon() const {
    Tick h = 0;
    for (const auto& w : worlds) h = std::max(h, w.horizon());
    return h;
}

std::optional<double> ScenarioDocument::config_number(const std::string& key) const {
    auto it = config.find(key);
    if (it == config.end() || !std::holds_alternative<double>(it->second)) return std::nullopt;
    return std::get<double>(it->second);
}

std::optional<bool> ScenarioDocument::config_flag(const std::string& key) const {
    auto it = config.find(key);
    if (it == config.end() || !std::holds_alternative<bool>(it->second)) return std::nullopt;
    return std::get<bool>(it->second);
}

std::optional<std::string> ScenarioDocument::config_token(const std::string& key) const {
    auto it = config.find(key);
    if (it == config.end() || !std::holds_alternative<std::string>(it->second))
        return std::nullopt;
    return std::get<std::string>(it->second);
}

bool ScenarioDocument::operator==(const ScenarioDocument& o) const {
    return serialize_scenario(*this) == serialize_scenario(o);
}

Theory make_theory(const ScenarioDocument& doc, TheoryConfig config) {
    return Theory(config, doc.desires, doc.objective_items);
}

}  // namespace flourish
