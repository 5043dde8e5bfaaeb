#include "flourish/group.hpp"

namespace flourish {

std::set<std::pair<std::string, std::string>> members_at(const Group& g, Tick t) {
    std::set<std::pair<std::string, std::string>> out;
    for (const auto& b : g.bindings)
        if (b.span.contains(t)) out.emplace(b.agent, b.role);
    return out;
}

std::vector<std::string> validate_function(const Group& g) {
    std::vector<std::string> failed;
    if (g.function.id.empty()) failed.push_back("missing-function");
    if (g.function.provenance != "designed" && g.function.provenance != "evolved")
        failed.push_back("illegal-provenance");
    return failed;
}

std::vector<std::string> validate_role_binding(const RoleBinding& b, Tick horizon,
                                               const std::set<std::string>& agents,
                                               const std::set<std::string>& groups) {
    std::vector<std::string> failed;
    if (!agents.contains(b.agent)) failed.push_back("unknown-agent");
    if (!groups.contains(b.group)) failed.push_back("unknown-group");
    if (b.span.start < 0 || b.span.start > b.span.end)
        failed.push_back("malformed-span");
    else if (b.span.end > horizon)
        failed.push_back("span-beyond-horizon");
    if (!b.optional_context) failed.push_back("context-not-optional");
    return failed;
}

const RoleBinding* covering_binding(const Group& g, const Activity& a) {
    for (const auto& b : g.bindings)
        if (b.agent == a.agent && b.role == a.role && b.group == a.group &&
            b.span.contains(a.time))
            return &b;
    return nullptr;
}

}  // namespace flourish
