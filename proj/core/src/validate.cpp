#include <set>
#include <string>

#include "flourish/scenario.hpp"

namespace flourish {

namespace {

using Severity = ParseDiagnostic::Severity;

void add(std::vector<ParseDiagnostic>& diags, Severity sev, SourcePos pos, std::string code,
         std::string message) {
    diags.push_back({sev, pos.line, pos.column, std::move(code), std::move(message)});
}

SourcePos pos_or_zero(const std::vector<SourcePos>& v, std::size_t i) {
    return i < v.size() ? v[i] : SourcePos{};
}

}  // namespace

std::vector<ParseDiagnostic> validate_scenario(const ScenarioDocument& doc) {
    std::vector<ParseDiagnostic> diags;

    std::set<std::string> agent_ids, group_ids;
    for (const auto& a : doc.agents) agent_ids.insert(a.id);
    for (const auto& g : doc.groups) group_ids.insert(g.id);
    const Tick horizon = doc.horizon();
    const bool allow_memberless = doc.config_flag("allow_memberless_groups").value_or(true);

    for (std::size_t i = 0; i < doc.groups.size(); ++i) {
        const Group& g = doc.groups[i];
        SourcePos gp = pos_or_zero(doc.group_pos, i);
        for (const auto& reason : validate_function(g))
            add(diags, Severity::error, gp, reason,
                "group " + g.id + " function " + g.function.id + ": " + reason);
        if (g.bindings.empty())
            add(diags, allow_memberless ? Severity::warning : Severity::error, gp,
                "memberless-group", "group " + g.id + " has no role bindings at all");
        for (std::size_t j = 0; j < g.bindings.size(); ++j) {
            const RoleBinding& b = g.bindings[j];
            SourcePos bp = i < doc.binding_pos.size() ? pos_or_zero(doc.binding_pos[i], j)
                                                      : SourcePos{};
            for (const auto& reason : validate_role_binding(b, horizon, agent_ids, group_ids)) {
                Severity sev =
                    reason == "span-beyond-horizon" ? Severity::warning : Severity::error;
                add(diags, sev, bp, reason,
                    "binding of " + b.agent + " as " + b.role + " in " + b.group + " [" +
                        std::to_string(b.span.start) + "," + std::to_string(b.span.end) +
                        "]: " + reason);
            }
        }
    }

    for (std::size_t i = 0; i < doc.activities.size(); ++i) {
        const Activity& a = doc.activities[i];
        SourcePos ap = pos_or_zero(doc.activity_pos, i);
        const Group* g = doc.find_group(a.group);
        if (!g) {
            add(diags, Severity::error, ap, "unresolved",
                "activity " + a.id + " names undeclared group " + a.group);
            continue;
        }
        if (!agent_ids.contains(a.agent))
            add(diags, Severity::error, ap, "unknown-agent",
                "activity " + a.id + " names undeclared agent " + a.agent);
        if (covering_binding(*g, a) == nullptr)
            add(diags, Severity::error, ap, "unbound-activity",
                "activity " + a.id + ": no binding of " + a.agent + " as " + a.role + " in " +
                    a.group + " covers tick " + std::to_string(a.time));
        if (a.realization_degree < 0.0 || a.realization_degree > 1.0)
            add(diags, Severity::error, ap, "bad-value",
                "activity " + a.id + " degree " + format_number(a.realization_degree) +
                    " outside [0,1]");
        else if (!a.attempted && a.realization_degree != 0.0)
            add(diags, Severity::error, ap, "bad-value",
                "activity " + a.id + " is unattempted but has nonzero degree");
    }

    auto istart = doc.config_number("interval_start");
    auto iend = doc.config_number("interval_end");
    if (istart && iend &&
        (*istart < 0 || *istart > *iend || *iend > static_cast<double>(horizon)))
        add(diags, Severity::warning, {}, "span-beyond-horizon",
            "config interval " + format_number(*istart) + ".." + format_number(*iend) +
                " does not fit [0, " + std::to_string(horizon) + "]");

    return diags;
}

}  // namespace flourish
