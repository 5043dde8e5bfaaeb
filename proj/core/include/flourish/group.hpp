#pragma once

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "flourish/world.hpp"

namespace flourish {

// What the group is *for*. Provenance is kept as the raw token so that
// invalid pedigrees (e.g. merely accidental benefit) stay representable and
// get rejected by validation instead of being unconstructible.
struct GroupFunction {
    std::string id;
    std::string description;
    std::string provenance;  // legal: "designed" | "evolved"

    bool operator==(const GroupFunction&) const = default;
};

// An agent occupies a role in a group over a span of ticks. Bindings are
// context-dependent: they begin and end without any physical change to the
// agent, which is why they live apart from world assertions.
struct RoleBinding {
    std::string agent;
    std::string role;
    std::string group;
    TimeSpan span;
    bool optional_context = true;

    bool operator==(const RoleBinding&) const = default;
};

struct Group {
    std::string id;
    GroupFunction function;
    std::vector<RoleBinding> bindings;

    bool operator==(const Group&) const = default;
};

// One dated attempt (or non-attempt) at role-constitutive activity. An
// activity scoped to a world exists only there; unscoped activities exist
// in every world of the scenario.
struct Activity {
    std::string id;
    std::string agent;
    std::string role;
    std::string group;
    std::optional<std::string> world;
    Tick time = 0;
    bool attempted = true;
    double realization_degree = 0.0;

    bool operator==(const Activity&) const = default;
};

// All (agent, role) pairs bound into the group at tick t.
std::set<std::pair<std::string, std::string>> members_at(const Group& g, Tick t);

// Per-object well-formedness checks. Each returns the list of failed
// conditions by name; empty means the object passes.
std::vector<std::string> validate_function(const Group& g);
std::vector<std::string> validate_role_binding(const RoleBinding& b, Tick horizon,
                                               const std::set<std::string>& agents,
                                               const std::set<std::string>& groups);

// The binding (if any) that licenses the activity: same agent, role, and
// group, with a span covering the activity's tick.
const RoleBinding* covering_binding(const Group& g, const Activity& a);

}  // namespace flourish
