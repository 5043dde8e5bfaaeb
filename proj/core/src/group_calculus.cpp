#include "flourish/group_calculus.hpp"

#include <algorithm>
#include <string>

#include "flourish/errors.hpp"
#include "flourish/stats.hpp"

namespace flourish {

double activity_value(const Activity& a, const Group& g, const GroupCalcConfig& config) {
    if (a.group != g.id || covering_binding(g, a) == nullptr)
        throw EvalError(errc::unbound_activity,
                        "activity " + a.id + " (" + a.agent + " as " + a.role + " @ " +
                            std::to_string(a.time) + ") has no covering role binding in " +
                            g.id);
    if (!a.attempted) return 0.0;
    return std::max(config.epsilon, a.realization_degree);
}

namespace {

void check_interval(TimeSpan interval, Tick horizon) {
    if (interval.start < 0 || interval.start > interval.end || interval.end > horizon)
        throw EvalError(errc::interval_out_of_range,
                        "interval " + std::to_string(interval.start) + ".." +
                            std::to_string(interval.end) + " not within [0, " +
                            std::to_string(horizon) + "]");
}

bool present_in(const Activity& a, const World& w) {
    return !a.world || *a.world == w.id();
}

}  // namespace

double sync_aggregate(const Group& g, Tick t, const World& w,
                      std::span<const Activity> activities, const GroupCalcConfig& config) {
    double total = 0.0;
    std::size_t n = 0;
    for (const Activity& a : activities) {
        if (a.group != g.id || a.time != t || !present_in(a, w)) continue;
        total += activity_value(a, g, config);
        ++n;
    }
    if (config.sync_aggregator == Aggregator::mean && n > 0)
        total /= static_cast<double>(n);
    return total;
}

double group_wellbeing_at(const Group& g, Tick t, const World& w,
                          std::span<const Activity> activities,
                          const GroupCalcConfig& config) {
    return sync_aggregate(g, t, w, activities, config);
}

std::vector<double> synchronic_series(const Group& g, const World& w, TimeSpan interval,
                                      std::span<const Activity> activities,
                                      const GroupCalcConfig& config) {
    check_interval(interval, w.horizon());
    std::vector<double> series;
    series.reserve(static_cast<std::size_t>(interval.length()));
    for (Tick t = interval.start; t <= interval.end; ++t)
        series.push_back(group_wellbeing_at(g, t, w, activities, config));
    return series;
}

double diachronic_aggregate(const Group& g, const World& w, TimeSpan interval,
                            std::span<const Activity> activities,
                            const GroupCalcConfig& config) {
    double total = 0.0;
    for (double s : synchronic_series(g, w, interval, activities, config)) total += s;
    return total;
}

double group_welfare(const Group& g, const World& w, TimeSpan interval,
                     std::span<const Activity> activities, const GroupCalcConfig& config) {
    auto series = synchronic_series(g, w, interval, activities, config);
    double total = 0.0;
    for (double s : series) total += s;
    return total + config.lambda_group * ols_slope(series);
}

GroupFlourishingReport group_life_value(std::span<const World> multiverse, const Group& g,
                                        const World& w, TimeSpan interval,
                                        std::span<const Activity> activities,
                                        const GroupCalcConfig& config, NearestPolicy policy,
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

    GroupFlourishingReport report;
    report.synchronic = synchronic_series(g, w, interval, activities, config);
    for (double s : report.synchronic) report.diachronic += s;
    report.welfare = report.diachronic + config.lambda_group * ols_slope(report.synchronic);
    for (const World* c : comparison) {
        report.comparison_welfare += group_welfare(g, *c, interval, activities, config);
        report.comparison_worlds.push_back(c->id());
    }
    report.comparison_welfare /= static_cast<double>(comparison.size());
    report.life_value = report.welfare - report.comparison_welfare;
    return report;
}

BridgeReport diabridge_check(const std::vector<std::vector<double>>& family,
                             const GroupCalcConfig& config) {
    WelfareConfig as_welfare;
    as_welfare.lambda = config.lambda_group;
    as_welfare.aggregator = Aggregator::sum;  // diachronic aggregation is a sum
    return bridge_check(family, as_welfare);
}

}  // namespace flourish
