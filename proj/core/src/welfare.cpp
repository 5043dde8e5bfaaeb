#include "flourish/welfare.hpp"

#include <string>

#include "flourish/errors.hpp"
#include "flourish/stats.hpp"

namespace flourish {

std::optional<Aggregator> parse_aggregator(std::string_view name) {
    if (name == "sum") return Aggregator::sum;
    if (name == "mean") return Aggregator::mean;
    return std::nullopt;
}

std::string_view aggregator_name(Aggregator a) {
    return a == Aggregator::sum ? "sum" : "mean";
}

namespace {

void check_interval(TimeSpan interval, Tick horizon) {
    if (interval.start < 0 || interval.start > interval.end || interval.end > horizon)
        throw EvalError(errc::interval_out_of_range,
                        "interval " + std::to_string(interval.start) + ".." +
                            std::to_string(interval.end) + " not within [0, " +
                            std::to_string(horizon) + "]");
}

double apply_aggregator(std::span<const double> series, Aggregator a) {
    double total = 0.0;
    for (double v : series) total += v;
    if (a == Aggregator::mean && !series.empty()) total /= static_cast<double>(series.size());
    return total;
}

}  // namespace

std::vector<double> wellbeing_series(const std::string& agent, const World& w,
                                     TimeSpan interval, const Theory& theory) {
    check_interval(interval, w.horizon());
    std::vector<double> series;
    series.reserve(static_cast<std::size_t>(interval.length()));
    for (Tick t = interval.start; t <= interval.end; ++t) series.push_back(theory(agent, t, w));
    return series;
}

double aggregate_wellbeing(const std::string& agent, const World& w, TimeSpan interval,
                           const Theory& theory, Aggregator aggregator) {
    return apply_aggregator(wellbeing_series(agent, w, interval, theory), aggregator);
}

double welfare(const std::string& agent, const World& w, TimeSpan interval,
               const Theory& theory, const WelfareConfig& config) {
    auto series = wellbeing_series(agent, w, interval, theory);
    return apply_aggregator(series, config.aggregator) + config.lambda * ols_slope(series);
}

LifeValue life_value(std::span<const World> multiverse, const std::string& agent,
                     const World& w, TimeSpan interval, const Theory& theory,
                     const WelfareConfig& config, NearestPolicy policy,
                     const std::optional<std::string>& baseline) {
    std::vector<const World*> comparison;
    if (baseline) {
        const World* b = nullptr;
        for (const World& cand : multiverse)
            if (cand.id() == *baseline) b = &cand;
        if (!b)
            throw EvalError(errc::unknown_world, "baseline world " + *baseline + " not declared");
        comparison.push_back(b);
    } else {
        comparison = nearest_comparison_worlds(multiverse, w, policy);
    }

    LifeValue result;
    result.subject_welfare = welfare(agent, w, interval, theory, config);
    for (const World* c : comparison) {
        result.comparison_welfare += welfare(agent, *c, interval, theory, config);
        result.comparison_worlds.push_back(c->id());
    }
    result.comparison_welfare /= static_cast<double>(comparison.size());
    result.value = result.subject_welfare - result.comparison_welfare;
    return result;
}

BridgeReport bridge_check(const std::vector<std::vector<double>>& family,
                          const WelfareConfig& config) {
    BridgeReport report;
    report.family_size = family.size();

    std::vector<double> aggregates, slopes, welfares;
    for (const auto& series : family) {
        double agg = apply_aggregator(series, config.aggregator);
        double slope = ols_slope(series);
        aggregates.push_back(agg);
        slopes.push_back(slope);
        welfares.push_back(agg + config.lambda * slope);
    }

    bool all_equal = true;
    for (double a : aggregates)
        if (a != aggregates.front()) all_equal = false;
    if (family.size() < 3 || all_equal)
        throw EvalError(errc::degenerate_family,
                        "family of " + std::to_string(family.size()) +
                            " lives has no aggregate variation to correlate");

    for (std::size_t i = 0; i < family.size(); ++i)
        for (std::size_t j = i + 1; j < family.size(); ++j) {
            if (slopes[i] != slopes[j]) continue;
            ++report.equal_slope_pairs;
            double da = aggregates[i] - aggregates[j];
            double dw = welfares[i] - welfares[j];
            if ((da < 0 && dw >= 0) || (da > 0 && dw <= 0) || (da == 0 && dw != 0))
                report.ordering_preserved = false;
        }
    report.rank_correlation = spearman(aggregates, welfares);
    return report;
}

}  // namespace flourish
