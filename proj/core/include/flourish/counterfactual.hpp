#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "flourish/theory.hpp"
#include "flourish/world.hpp"

namespace flourish {

// unique_min resolves similarity ties by lexicographic world id and yields
// a single nearest world; average_over_ties keeps every maximizer and the
// calculi average over them.
enum class NearestPolicy { unique_min, average_over_ties };

std::optional<NearestPolicy> parse_policy(std::string_view name);
std::string_view policy_name(NearestPolicy p);

// Number of assertions two worlds share outright — same subject, key, value,
// and time. More properties in common means greater similarity.
std::size_t similarity(const World& a, const World& b);

// Worlds other than `reference` in which `absent_event` does not occur,
// filtered down to the similarity maximizers under the policy. Sorted by id.
// Throws NoCounterfactualWorld when no candidate exists.
std::vector<const World*> nearest_worlds(std::span<const World> multiverse,
                                         const World& reference, const Event& absent_event,
                                         NearestPolicy policy);

// Same selection with no event predicate: the most similar distinct worlds,
// used for whole-life and group-life comparisons. Throws NoComparisonWorld.
std::vector<const World*> nearest_comparison_worlds(std::span<const World> multiverse,
                                                    const World& reference,
                                                    NearestPolicy policy);

struct EventValue {
    double value = 0.0;
    std::string actual_world;
    std::vector<std::string> comparison_worlds;
    std::string theory;
    // Set when some comparison world has no assertions at all for the agent
    // at the evaluation tick; well-being then reads as the theory's default.
    bool no_counterpart_data = false;
};

// How much better off the agent is at t for the event having happened:
// well-being in w minus mean well-being across the nearest event-free
// worlds. Throws EventNotOccurring when e doesn't occur in w.
EventValue event_value(std::span<const World> multiverse, const World& w, const Event& e,
                       const std::string& agent, Tick t, const Theory& theory,
                       NearestPolicy policy);

}  // namespace flourish
