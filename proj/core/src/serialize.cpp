#include <algorithm>
#include <string>
#include <vector>

#include "flourish/scenario.hpp"

namespace flourish {

namespace {

std::string tick_str(Tick t) { return std::to_string(t); }

std::string desire_line(const Desire& d) {
    std::string s = "desire " + d.agent + " wants " + d.target.subject + "." + d.target.key +
                    " @ " + (d.target.time ? tick_str(*d.target.time) : "any") + " = " +
                    format_value(d.target.value) + " weight " + format_number(d.weight) +
                    " mode " +
                    (d.mode == DesireMode::concurrent ? "concurrent" : "achievement");
    return s;
}

std::string objective_line(const ObjectiveItem& item) {
    return "objective " + item.key + " >= " + format_number(item.threshold) + " weight " +
           format_number(item.weight);
}

std::string member_line(const RoleBinding& b) {
    std::string s = "  member " + b.agent + " role " + b.role + " from " +
                    tick_str(b.span.start) + " to " + tick_str(b.span.end);
    if (b.optional_context) s += " optional";
    return s;
}

std::string activity_line(const Activity& a) {
    std::string s = "activity " + a.id + " { agent " + a.agent + " role " + a.role +
                    " group " + a.group;
    if (a.world) s += " world " + *a.world;
    s += " time " + tick_str(a.time);
    s += a.attempted ? " attempted" : " unattempted";
    s += " degree " + format_number(a.realization_degree) + " }";
    return s;
}

template <typename T, typename Render>
std::vector<std::string> rendered_sorted(const std::vector<T>& items, Render render) {
    std::vector<std::string> lines;
    lines.reserve(items.size());
    for (const auto& item : items) lines.push_back(render(item));
    std::sort(lines.begin(), lines.end());
    return lines;
}

}  // namespace

std::string serialize_scenario(const ScenarioDocument& doc) {
    std::string out = "scenario " + doc.name + "\n";

    for (const auto& line : rendered_sorted(doc.activities, activity_line)) out += line + "\n";

    std::vector<std::string> agent_ids;
    for (const auto& a : doc.agents) agent_ids.push_back(a.id);
    std::sort(agent_ids.begin(), agent_ids.end());
    for (const auto& id : agent_ids) out += "agent " + id + "\n";

    for (const auto& [key, value] : doc.config)
        out += "config " + key + " = " + format_value(value) + "\n";

    for (const auto& line : rendered_sorted(doc.desires, desire_line)) out += line + "\n";

    std::vector<const Group*> groups;
    for (const auto& g : doc.groups) groups.push_back(&g);
    std::sort(groups.begin(), groups.end(),
              [](const Group* a, const Group* b) { return a->id < b->id; });
    for (const Group* g : groups) {
        out += "group " + g->id + " {\n";
        out += "  function " + g->function.id + " provenance " + g->function.provenance + "\n";
        if (!g->function.description.empty())
            out += "  description \"" + g->function.description + "\"\n";
        for (const auto& line : rendered_sorted(g->bindings, member_line)) out += line + "\n";
        out += "}\n";
    }

    for (const auto& line : rendered_sorted(doc.objective_items, objective_line))
        out += line + "\n";

    std::vector<const World*> worlds;
    for (const auto& w : doc.worlds) worlds.push_back(&w);
    std::sort(worlds.begin(), worlds.end(),
              [](const World* a, const World* b) { return a->id() < b->id(); });
    for (const World* w : worlds) {
        out += "world " + w->id() + " {\n";
        for (const auto& [k, v] : w->assertions())
            out += "  assert " + k.subject + "." + k.key + " @ " + tick_str(k.time) + " = " +
                   format_value(v) + "\n";
        out += "}\n";
    }

    return out;
}

}  // namespace flourish
