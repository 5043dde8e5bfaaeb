#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "flourish/world.hpp"

namespace flourish {

// What a desire is about: an assertion shape, with the time either pinned
// to a tick or left open (nullopt = "any").
struct AssertionPattern {
    std::string subject;
    std::string key;
    std::optional<Tick> time;
    Value value;

    bool operator==(const AssertionPattern&) const = default;
};

enum class DesireMode { concurrent, achievement };

struct Desire {
    std::string agent;
    AssertionPattern target;
    double weight = 1.0;
    DesireMode mode = DesireMode::concurrent;

    bool operator==(const Desire&) const = default;
};

struct ObjectiveItem {
    std::string key;
    double threshold = 0.0;
    double weight = 1.0;

    bool operator==(const ObjectiveItem&) const = default;
};

enum class TheoryKind { hedonic, desire, objective };

std::optional<TheoryKind> parse_theory_kind(std::string_view name);
std::string_view theory_kind_name(TheoryKind k);

struct TheoryConfig {
    TheoryKind kind = TheoryKind::hedonic;
    bool allow_posthumous = false;
};

// Aliveness under the reserved `alive` key: an explicit `alive = false` at t
// means dead, and once some earlier tick asserted `alive = true` the agent
// must be re-asserted alive at t itself to still count as living. A subject
// with no `alive = true` history (and no false at t) is simply alive.
bool is_alive(const std::string& agent, Tick t, const World& w);

// Balance of pleasure and pain at a tick; absent assertions contribute 0.
double wellbeing_hedonic(const std::string& agent, Tick t, const World& w);

// Sum of weights of the agent's desires satisfied at t. Concurrent desires
// need a matching assertion at t itself; achievement desires at any tick
// up to t. Dead agents score 0 unless config.allow_posthumous.
double wellbeing_desire(const std::string& agent, Tick t, const World& w,
                        std::span<const Desire> desires, const TheoryConfig& config);

// Sum of item weights whose key is asserted numeric and >= threshold
// (inclusive) for the agent at t.
double wellbeing_objective(const std::string& agent, Tick t, const World& w,
                           std::span<const ObjectiveItem> items);

// A theory bound to its scenario data; the single well-being interface the
// calculi evaluate against.
class Theory {
public:
    Theory(TheoryConfig config, std::span<const Desire> desires,
           std::span<const ObjectiveItem> items)
        : config_(config), desires_(desires), items_(items) {}

    double operator()(const std::string& agent, Tick t, const World& w) const;

    TheoryKind kind() const { return config_.kind; }
    std::string_view name() const { return theory_kind_name(config_.kind); }
    const TheoryConfig& config() const { return config_; }

private:
    TheoryConfig config_;
    std::span<const Desire> desires_;
    std::span<const ObjectiveItem> items_;
};

}  // namespace flourish
