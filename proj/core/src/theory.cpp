#include "flourish/theory.hpp"

namespace flourish {

std::optional<TheoryKind> parse_theory_kind(std::string_view name) {
    if (name == "hedonic") return TheoryKind::hedonic;
    if (name == "desire") return TheoryKind::desire;
    if (name == "objective") return TheoryKind::objective;
    return std::nullopt;
}

std::string_view theory_kind_name(TheoryKind k) {
    switch (k) {
        case TheoryKind::hedonic: return "hedonic";
        case TheoryKind::desire: return "desire";
        default: return "objective";
    }
}

namespace {

double numeric_or_zero(const std::optional<Value>& v) {
    if (v && std::holds_alternative<double>(*v)) return std::get<double>(*v);
    return 0.0;
}

bool pattern_holds_at(const AssertionPattern& p, Tick t, const World& w) {
    auto v = w.lookup(p.subject, p.key, t);
    return v.has_value() && *v == p.value;
}

bool satisfied(const Desire& d, Tick t, const World& w) {
    if (d.mode == DesireMode::concurrent) {
        if (d.target.time && *d.target.time != t) return false;
        return pattern_holds_at(d.target, t, w);
    }
    // achievement: some tick up to t matches
    if (d.target.time) return *d.target.time <= t && pattern_holds_at(d.target, *d.target.time, w);
    for (Tick u = 0; u <= t; ++u)
        if (pattern_holds_at(d.target, u, w)) return true;
    return false;
}

}  // namespace

bool is_alive(const std::string& agent, Tick t, const World& w) {
    auto at_t = w.lookup(agent, "alive", t);
    if (at_t && std::holds_alternative<bool>(*at_t)) return std::get<bool>(*at_t);
    auto it = w.assertions().lower_bound(AssertionKey{agent, "alive", 0});
    Tick last_true = -1;
    for (; it != w.assertions().end(); ++it) {
        const auto& k = it->first;
        if (k.subject != agent || k.key != "alive" || k.time > t) break;
        if (std::holds_alternative<bool>(it->second) && std::get<bool>(it->second))
            last_true = k.time;
    }
    // Once an alive=true history exists, staying alive requires the
    // assertion to be current; silence forever means alive throughout.
    return last_true == -1 || last_true == t;
}

double wellbeing_hedonic(const std::string& agent, Tick t, const World& w) {
    return numeric_or_zero(w.lookup(agent, "pleasure", t)) -
           numeric_or_zero(w.lookup(agent, "pain", t));
}

double wellbeing_desire(const std::string& agent, Tick t, const World& w,
                        std::span<const Desire> desires, const TheoryConfig& config) {
    if (!config.allow_posthumous && !is_alive(agent, t, w)) return 0.0;
    double total = 0.0;
    for (const auto& d : desires)
        if (d.agent == agent && satisfied(d, t, w)) total += d.weight;
    return total;
}

double wellbeing_objective(const std::string& agent, Tick t, const World& w,
                           std::span<const ObjectiveItem> items) {
    double total = 0.0;
    for (const auto& item : items) {
        auto v = w.lookup(agent, item.key, t);
        if (v && std::holds_alternative<double>(*v) && std::get<double>(*v) >= item.threshold)
            total += item.weight;
    }
    return total;
}

double Theory::operator()(const std::string& agent, Tick t, const World& w) const {
    switch (config_.kind) {
        case TheoryKind::hedonic: return wellbeing_hedonic(agent, t, w);
        case TheoryKind::desire: return wellbeing_desire(agent, t, w, desires_, config_);
        default: return wellbeing_objective(agent, t, w, items_);
    }
}

}  // namespace flourish
