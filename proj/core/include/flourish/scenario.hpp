#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "flourish/group.hpp"
#include "flourish/theory.hpp"
#include "flourish/world.hpp"

namespace flourish {

struct Agent {
    std::string id;

    bool operator==(const Agent&) const = default;
};

struct SourcePos {
    int line = 0;
    int column = 0;
};

struct ScenarioDocument {
    std::string name;
    std::vector<Agent> agents;
    std::vector<World> worlds;
    std::vector<Desire> desires;
    std::vector<ObjectiveItem> objective_items;
    std::vector<Group> groups;
    std::vector<Activity> activities;
    std::map<std::string, Value> config;

    // Where each declaration started, for validation diagnostics. Aligned
    // with groups/activities; binding_pos[i][j] matches groups[i].bindings[j].
    // Not part of document identity.
    std::vector<SourcePos> group_pos;
    std::vector<std::vector<SourcePos>> binding_pos;
    std::vector<SourcePos> activity_pos;

    const World* find_world(std::string_view id) const;
    const Group* find_group(std::string_view id) const;
    bool has_agent(std::string_view id) const;

    // Max horizon over all worlds (0 if none).
    Tick horizon() const;

    std::optional<double> config_number(const std::string& key) const;
    std::optional<bool> config_flag(const std::string& key) const;
    std::optional<std::string> config_token(const std::string& key) const;

    // Documents are equal when their canonical serializations coincide, so
    // declaration order and source positions never matter.
    bool operator==(const ScenarioDocument& o) const;
};

struct ParseDiagnostic {
    enum class Severity { error, warning };

    Severity severity = Severity::error;
    int line = 0;
    int column = 0;
    std::string code;
    std::string message;
};

struct ParseResult {
    std::optional<ScenarioDocument> document;
    std::vector<ParseDiagnostic> diagnostics;

    bool ok() const { return document.has_value(); }
};

// Recursive-descent parse of scenario text. Never throws on malformed
// input: failures come back as positioned diagnostics.
ParseResult parse_scenario(std::string_view source);

// Canonical text: declarations sorted by (kind, id), assertions by
// (subject, key, time); byte-stable, and parse(serialize(d)) == d.
std::string serialize_scenario(const ScenarioDocument& doc);

// Document-level well-formedness beyond grammar: group/binding/activity
// checks plus cross-references. Errors make the scenario unevaluable;
// warnings don't.
std::vector<ParseDiagnostic> validate_scenario(const ScenarioDocument& doc);

inline bool has_errors(const std::vector<ParseDiagnostic>& diags) {
    for (const auto& d : diags)
        if (d.severity == ParseDiagnostic::Severity::error) return true;
    return false;
}

// The document's theory data bound to one evaluator kind.
Theory make_theory(const ScenarioDocument& doc, TheoryConfig config);

}  // namespace flourish
