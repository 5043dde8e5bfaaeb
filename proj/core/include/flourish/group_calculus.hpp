#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "flourish/counterfactual.hpp"
#include "flourish/group.hpp"
#include "flourish/welfare.hpp"
#include "flourish/world.hpp"

namespace flourish {

struct GroupCalcConfig {
    // Attempted activities always count for something: a declared degree of
    // 0 is lifted to this floor rather than reading as neutral.
    double epsilon = 0.01;
    Aggregator sync_aggregator = Aggregator::sum;
    double lambda_group = 1.0;
};

// 0 if unattempted, else max(epsilon, realization_degree). Throws
// UnboundActivity when no role binding of the group licenses the activity.
double activity_value(const Activity& a, const Group& g, const GroupCalcConfig& config);

// Aggregate of activity values for the group's activities at tick t in
// world w (activities without a world clause exist in every world).
double sync_aggregate(const Group& g, Tick t, const World& w,
                      std::span<const Activity> activities, const GroupCalcConfig& config);

// Group well-being at a time simply is the synchronic aggregate; the alias
// is kept so call sites say which notion they mean.
double group_wellbeing_at(const Group& g, Tick t, const World& w,
                          std::span<const Activity> activities,
                          const GroupCalcConfig& config);

std::vector<double> synchronic_series(const Group& g, const World& w, TimeSpan interval,
                                      std::span<const Activity> activities,
                                      const GroupCalcConfig& config);

// Sum of per-tick group well-being across the interval.
double diachronic_aggregate(const Group& g, const World& w, TimeSpan interval,
                            std::span<const Activity> activities,
                            const GroupCalcConfig& config);

// Diachronic aggregate plus lambda_group times the slope of the synchronic
// series — the same shape-sensitive functional used for individual welfare.
double group_welfare(const Group& g, const World& w, TimeSpan interval,
                     std::span<const Activity> activities, const GroupCalcConfig& config);

struct GroupFlourishingReport {
    std::vector<double> synchronic;
    double diachronic = 0.0;
    double welfare = 0.0;
    double life_value = 0.0;
    double comparison_welfare = 0.0;
    std::vector<std::string> comparison_worlds;
};

// Group welfare in w minus mean group welfare across the comparison class
// (explicit baseline world, else most similar distinct worlds). The group's
// counterpart is the same group evaluated against the other world's
// activity set.
GroupFlourishingReport group_life_value(std::span<const World> multiverse, const Group& g,
                                        const World& w, TimeSpan interval,
                                        std::span<const Activity> activities,
                                        const GroupCalcConfig& config, NearestPolicy policy,
                                        const std::optional<std::string>& baseline = std::nullopt);

// bridge_check's group-level twin: families of synchronic traces, diachronic
// aggregate vs group welfare.
BridgeReport diabridge_check(const std::vector<std::vector<double>>& family,
                             const GroupCalcConfig& config);

}  // namespace flourish
