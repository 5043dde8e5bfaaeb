#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <benchmark/benchmark.h>

#include "flourish/counterfactual.hpp"
#include "flourish/group_calculus.hpp"
#include "flourish/scenario.hpp"
#include "flourish/welfare.hpp"

using namespace flourish;

namespace {

std::string read_fixture(const std::string& name) {
    std::ifstream in(std::string(FIXTURE_DIR) + "/" + name + ".scn", std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::vector<World> dense_multiverse(std::size_t n_worlds, std::size_t n_assertions) {
    std::mt19937 rng(42);
    std::vector<World> worlds;
    for (std::size_t i = 0; i < n_worlds; ++i) {
        World w("w" + std::to_string(i));
        for (std::size_t j = 0; j < n_assertions; ++j)
            w.insert({"s" + std::to_string(rng() % 8), "k" + std::to_string(rng() % 8),
                      static_cast<Tick>(rng() % 64)},
                     static_cast<double>(rng() % 16));
        worlds.push_back(std::move(w));
    }
    return worlds;
}

void BM_similarity(benchmark::State& state) {
    auto worlds = dense_multiverse(2, static_cast<std::size_t>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(similarity(worlds[0], worlds[1]));
}
BENCHMARK(BM_similarity)->Arg(64)->Arg(512)->Arg(4096);

void BM_nearest_worlds(benchmark::State& state) {
    auto worlds = dense_multiverse(static_cast<std::size_t>(state.range(0)), 256);
    // an event held only by worlds[0], so every other world is a candidate
    worlds[0].insert({"anchor", "k", 0}, 0.0);
    worlds[0].insert({"anchor", "k", 1}, 1.0);
    Event e{"anchor", "k", 1.0, 1};
    for (auto _ : state)
        benchmark::DoNotOptimize(
            nearest_worlds(worlds, worlds[0], e, NearestPolicy::average_over_ties));
}
BENCHMARK(BM_nearest_worlds)->Arg(4)->Arg(16)->Arg(64);

void BM_parse_scenario(benchmark::State& state) {
    const std::string text = read_fixture("jessica");
    for (auto _ : state)
        benchmark::DoNotOptimize(parse_scenario(text));
    state.SetBytesProcessed(static_cast<std::int64_t>(state.iterations() * text.size()));
}
BENCHMARK(BM_parse_scenario);

void BM_serialize_scenario(benchmark::State& state) {
    auto doc = *parse_scenario(read_fixture("jessica")).document;
    for (auto _ : state)
        benchmark::DoNotOptimize(serialize_scenario(doc));
}
BENCHMARK(BM_serialize_scenario);

void BM_life_value(benchmark::State& state) {
    auto doc = *parse_scenario(read_fixture("jessica")).document;
    Theory theory = make_theory(doc, {TheoryKind::hedonic, false});
    const World* actual = doc.find_world("W_ACTUAL");
    WelfareConfig config{1.0, Aggregator::sum};
    for (auto _ : state)
        benchmark::DoNotOptimize(life_value(doc.worlds, "jessica", *actual, {0, 40}, theory,
                                            config, NearestPolicy::unique_min));
}
BENCHMARK(BM_life_value);

void BM_group_pipeline(benchmark::State& state) {
    auto doc = *parse_scenario(read_fixture("jessica")).document;
    const Group* league = doc.find_group("equality-league");
    const World* actual = doc.find_world("W_ACTUAL");
    GroupCalcConfig config;
    for (auto _ : state)
        benchmark::DoNotOptimize(group_life_value(doc.worlds, *league, *actual, {0, 40},
                                                  doc.activities, config,
                                                  NearestPolicy::unique_min));
}
BENCHMARK(BM_group_pipeline);

}  // namespace

BENCHMARK_MAIN();
