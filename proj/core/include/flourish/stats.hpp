#pragma once

#include <span>
#include <vector>

namespace flourish {

// Least-squares slope of ys against ticks 0..n-1. Zero for fewer than two
// points (a single tick carries no trend).
double ols_slope(std::span<const double> ys);

// Fractional ranks (1-based, ties averaged).
std::vector<double> fractional_ranks(std::span<const double> xs);

// Pearson correlation; 0.0 when either side has no variance.
double pearson(std::span<const double> xs, std::span<const double> ys);

// Spearman rank correlation: pearson over fractional ranks.
double spearman(std::span<const double> xs, std::span<const double> ys);

}  // namespace flourish
