// Reference implementations that deliberately take different algorithmic
// routes from the library: regression via raw power sums instead of centered
// means, ranking via sorting instead of pairwise counting, nearest-world
// selection via an unfiltered full scan. Agreement between the two routes is
// what the tests assert.
#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <string>
#include <vector>

#include "flourish/counterfactual.hpp"
#include "flourish/world.hpp"

namespace oracles {

inline double slope_sums_form(const std::vector<double>& y) {
    const double n = static_cast<double>(y.size());
    if (y.size() < 2) return 0.0;
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < y.size(); ++i) {
        const double x = static_cast<double>(i);
        sx += x;
        sy += y[i];
        sxx += x * x;
        sxy += x * y[i];
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

inline std::vector<double> ranks_by_sorting(const std::vector<double>& v) {
    std::vector<std::size_t> order(v.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return v[a] < v[b]; });
    std::vector<double> ranks(v.size(), 0.0);
    std::size_t i = 0;
    while (i < order.size()) {
        std::size_t j = i;
        while (j + 1 < order.size() && v[order[j + 1]] == v[order[i]]) ++j;
        const double shared = (static_cast<double>(i + 1) + static_cast<double>(j + 1)) / 2.0;
        for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = shared;
        i = j + 1;
    }
    return ranks;
}

inline double correlation_sums_form(const std::vector<double>& x,
                                    const std::vector<double>& y) {
    const double n = static_cast<double>(x.size());
    double sx = 0, sy = 0, sxx = 0, syy = 0, sxy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sx += x[i];
        sy += y[i];
        sxx += x[i] * x[i];
        syy += y[i] * y[i];
        sxy += x[i] * y[i];
    }
    const double cov = n * sxy - sx * sy;
    const double vx = n * sxx - sx * sx;
    const double vy = n * syy - sy * sy;
    if (vx <= 0.0 || vy <= 0.0) return 0.0;
    return cov / std::sqrt(vx * vy);
}

inline double spearman_by_sorting(const std::vector<double>& x, const std::vector<double>& y) {
    return correlation_sums_form(ranks_by_sorting(x), ranks_by_sorting(y));
}

inline std::size_t shared_assertions(const flourish::World& a, const flourish::World& b) {
    std::size_t shared = 0;
    for (const auto& [ka, va] : a.assertions())
        for (const auto& [kb, vb] : b.assertions())
            if (ka == kb && va == vb) ++shared;
    return shared;
}

// Full-scan maximizer set; empty when no candidate exists. `event == nullptr`
// drops the absence requirement (comparison-class selection).
inline std::vector<std::string> nearest_by_full_scan(const std::vector<flourish::World>& worlds,
                                                     const flourish::World& reference,
                                                     const flourish::Event* event,
                                                     flourish::NearestPolicy policy) {
    std::vector<std::pair<std::string, std::size_t>> candidates;
    for (const auto& w : worlds) {
        if (w.id() == reference.id()) continue;
        if (event && flourish::occurs(w, *event)) continue;
        candidates.push_back({w.id(), shared_assertions(reference, w)});
    }
    if (candidates.empty()) return {};
    std::size_t best = 0;
    for (const auto& [id, sim] : candidates) best = std::max(best, sim);
    std::vector<std::string> out;
    for (const auto& [id, sim] : candidates)
        if (sim == best) out.push_back(id);
    std::sort(out.begin(), out.end());
    if (policy == flourish::NearestPolicy::unique_min) out.resize(1);
    return out;
}

}  // namespace oracles
