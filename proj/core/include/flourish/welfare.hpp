#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "flourish/counterfactual.hpp"
#include "flourish/theory.hpp"
#include "flourish/world.hpp"

namespace flourish {

enum class Aggregator { sum, mean };

std::optional<Aggregator> parse_aggregator(std::string_view name);
std::string_view aggregator_name(Aggregator a);

struct WelfareConfig {
    double lambda = 1.0;  // weight of the slope (shape) term
    Aggregator aggregator = Aggregator::sum;
};

// Per-tick well-being trace over an inclusive interval. Throws
// IntervalOutOfRange when the interval leaves [0, horizon].
std::vector<double> wellbeing_series(const std::string& agent, const World& w,
                                     TimeSpan interval, const Theory& theory);

double aggregate_wellbeing(const std::string& agent, const World& w, TimeSpan interval,
                           const Theory& theory, Aggregator aggregator = Aggregator::sum);

// Aggregate plus lambda times the least-squares slope of the trace, so two
// lives with equal totals but different shapes come apart.
double welfare(const std::string& agent, const World& w, TimeSpan interval,
               const Theory& theory, const WelfareConfig& config);

struct LifeValue {
    double value = 0.0;
    double subject_welfare = 0.0;
    double comparison_welfare = 0.0;
    std::vector<std::string> comparison_worlds;
};

// Welfare in w minus mean welfare across the comparison class: the explicit
// baseline world when given, else the most similar distinct worlds.
LifeValue life_value(std::span<const World> multiverse, const std::string& agent,
                     const World& w, TimeSpan interval, const Theory& theory,
                     const WelfareConfig& config, NearestPolicy policy,
                     const std::optional<std::string>& baseline = std::nullopt);

struct BridgeReport {
    std::size_t family_size = 0;
    std::size_t equal_slope_pairs = 0;
    bool ordering_preserved = true;
    double rank_correlation = 0.0;
};

// Checks that the welfare functional tracks aggregate well-being across a
// family of lives (given as per-tick traces): exact ordering agreement on
// equal-slope pairs, rank correlation overall. Throws DegenerateFamily for
// families too small or flat to carry a correlation.
BridgeReport bridge_check(const std::vector<std::vector<double>>& family,
                          const WelfareConfig& config);

}  // namespace flourish
