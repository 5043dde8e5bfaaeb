#include "flourish/stats.hpp"

#include <cmath>
#include <cstddef>

namespace flourish {

double ols_slope(std::span<const double> ys) {
    const std::size_t n = ys.size();
    if (n < 2) return 0.0;
    double xbar = static_cast<double>(n - 1) / 2.0;
    double ybar = 0.0;
    for (double y : ys) ybar += y;
    ybar /= static_cast<double>(n);
    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double dx = static_cast<double>(i) - xbar;
        num += dx * (ys[i] - ybar);
        den += dx * dx;
    }
    return num / den;
}

std::vector<double> fractional_ranks(std::span<const double> xs) {
    const std::size_t n = xs.size();
    std::vector<double> ranks(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t below = 0, equal = 0;
        for (std::size_t j = 0; j < n; ++j) {
            if (xs[j] < xs[i]) ++below;
            else if (xs[j] == xs[i]) ++equal;
        }
        ranks[i] = static_cast<double>(below) + 0.5 * static_cast<double>(equal - 1) + 1.0;
    }
    return ranks;
}

double pearson(std::span<const double> xs, std::span<const double> ys) {
    const std::size_t n = xs.size();
    if (n == 0 || n != ys.size()) return 0.0;
    double sx = 0, sy = 0, sxx = 0, syy = 0, sxy = 0;
    for (std::size_t i = 0; i < n; ++i) {
        sx += xs[i];
        sy += ys[i];
        sxx += xs[i] * xs[i];
        syy += ys[i] * ys[i];
        sxy += xs[i] * ys[i];
    }
    double nn = static_cast<double>(n);
    double cov = nn * sxy - sx * sy;
    double vx = nn * sxx - sx * sx;
    double vy = nn * syy - sy * sy;
    if (vx <= 0.0 || vy <= 0.0) return 0.0;
    return cov / std::sqrt(vx * vy);
}

double spearman(std::span<const double> xs, std::span<const double> ys) {
    if (xs.size() != ys.size() || xs.empty()) return 0.0;
    auto rx = fractional_ranks(xs);
    auto ry = fractional_ranks(ys);
    return pearson(rx, ry);
}

}  // namespace flourish
