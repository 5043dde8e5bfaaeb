#include <random>
#include <vector>

#include "doctest.h"

#include "flourish/stats.hpp"
#include "oracles.hpp"

using namespace flourish;

TEST_SUITE_BEGIN("stats");

TEST_CASE("slope handles the trivial sizes") {
    CHECK(ols_slope(std::vector<double>{}) == 0.0);
    CHECK(ols_slope(std::vector<double>{5.0}) == 0.0);
    CHECK(ols_slope(std::vector<double>{1.0, 3.0}) == 2.0);
}

TEST_CASE("a constant series has exactly zero slope") {
    std::vector<double> flat(17, 3.7);
    CHECK(ols_slope(flat) == 0.0);
}

TEST_CASE("the rising-recovery series has exactly slope 12/5") {
    std::vector<double> ys = {-3.0, -2.0, 1.0, 4.0};
    CHECK(ols_slope(ys) == 2.4);
    CHECK(oracles::slope_sums_form(ys) == 2.4);
}

TEST_CASE("centered and sums-form regression agree on random series") {
    std::mt19937 rng(20240817);
    std::uniform_real_distribution<double> value(-50.0, 50.0);
    std::uniform_int_distribution<int> length(2, 40);
    for (int trial = 0; trial < 400; ++trial) {
        std::vector<double> ys(static_cast<std::size_t>(length(rng)));
        for (auto& y : ys) y = value(rng);
        const double centered = ols_slope(ys);
        const double sums = oracles::slope_sums_form(ys);
        CHECK(centered == doctest::Approx(sums).epsilon(1e-9));
    }
}

TEST_CASE("fractional ranks average ties") {
    std::vector<double> xs = {3.0, 1.0, 3.0, 2.0};
    std::vector<double> expected = {3.5, 1.0, 3.5, 2.0};
    CHECK(fractional_ranks(xs) == expected);
    CHECK(oracles::ranks_by_sorting(xs) == expected);
}

TEST_CASE("counting ranks and sorting ranks agree on random data") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> value(0, 9);  // coarse values force ties
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<double> xs(1 + rng() % 60);
        for (auto& x : xs) x = static_cast<double>(value(rng));
        CHECK(fractional_ranks(xs) == oracles::ranks_by_sorting(xs));
    }
}

TEST_CASE("pearson is 1 on a perfect line and 0 without variance") {
    std::vector<double> xs = {0.0, 1.0, 2.0, 3.0};
    std::vector<double> up = {2.0, 4.0, 6.0, 8.0};
    std::vector<double> down = {8.0, 6.0, 4.0, 2.0};
    std::vector<double> flat = {5.0, 5.0, 5.0, 5.0};
    CHECK(pearson(xs, up) == doctest::Approx(1.0));
    CHECK(pearson(xs, down) == doctest::Approx(-1.0));
    CHECK(pearson(xs, flat) == 0.0);
}

TEST_CASE("spearman matches the sort-based reference on random data") {
    std::mt19937 rng(99);
    std::uniform_int_distribution<int> value(0, 12);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 3 + rng() % 40;
        std::vector<double> xs(n), ys(n);
        for (std::size_t i = 0; i < n; ++i) {
            xs[i] = static_cast<double>(value(rng));
            ys[i] = static_cast<double>(value(rng));
        }
        const double mine = spearman(xs, ys);
        const double ref = oracles::spearman_by_sorting(xs, ys);
        CHECK(mine == doctest::Approx(ref).epsilon(1e-9));
    }
}

TEST_CASE("spearman is insensitive to monotone rescaling") {
    std::vector<double> xs = {1.0, 5.0, 2.0, 9.0, 4.0};
    std::vector<double> ys = {2.0, 11.0, 3.0, 20.0, 8.0};
    std::vector<double> cubed(ys.size());
    for (std::size_t i = 0; i < ys.size(); ++i) cubed[i] = ys[i] * ys[i] * ys[i];
    CHECK(spearman(xs, ys) == doctest::Approx(1.0));
    CHECK(spearman(xs, cubed) == doctest::Approx(1.0));
}

TEST_SUITE_END();
