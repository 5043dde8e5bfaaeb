#include <vector>

#include "doctest.h"

#include "flourish/theory.hpp"

using namespace flourish;

namespace {

World hedonic_world() {
    World w("w");
    w.insert({"ann", "pleasure", 0}, 3.0);
    w.insert({"ann", "pain", 0}, 1.0);
    w.insert({"ann", "pleasure", 1}, 2.0);
    w.insert({"ann", "pain", 2}, 4.0);
    return w;
}

}  // namespace

TEST_SUITE_BEGIN("theory");

TEST_CASE("hedonic well-being is pleasure minus pain, absent reads as zero") {
    World w = hedonic_world();
    CHECK(wellbeing_hedonic("ann", 0, w) == 2.0);
    CHECK(wellbeing_hedonic("ann", 1, w) == 2.0);
    CHECK(wellbeing_hedonic("ann", 2, w) == -4.0);
    CHECK(wellbeing_hedonic("ann", 9, w) == 0.0);
    CHECK(wellbeing_hedonic("bob", 0, w) == 0.0);
}

TEST_CASE("concurrent desires need the match at the very tick") {
    World w("w");
    w.insert({"home", "warm", 2}, true);
    std::vector<Desire> desires = {{"ann", {"home", "warm", std::nullopt, true}, 2.0,
                                    DesireMode::concurrent}};
    TheoryConfig cfg;
    CHECK(wellbeing_desire("ann", 2, w, desires, cfg) == 2.0);
    CHECK(wellbeing_desire("ann", 3, w, desires, cfg) == 0.0);
    CHECK(wellbeing_desire("ann", 1, w, desires, cfg) == 0.0);
}

TEST_CASE("a concurrent desire pinned to a tick only counts at that tick") {
    World w("w");
    w.insert({"home", "warm", 2}, true);
    w.insert({"home", "warm", 3}, true);
    std::vector<Desire> desires = {{"ann", {"home", "warm", 2, true}, 1.0,
                                    DesireMode::concurrent}};
    TheoryConfig cfg;
    CHECK(wellbeing_desire("ann", 2, w, desires, cfg) == 1.0);
    // the desired state persists, but the desire was about tick 2
    CHECK(wellbeing_desire("ann", 3, w, desires, cfg) == 0.0);
}

TEST_CASE("achievement desires stay satisfied once the match has happened") {
    World w("w");
    w.insert({"ann", "graduated", 4}, true);
    std::vector<Desire> desires = {{"ann", {"ann", "graduated", std::nullopt, true}, 1.5,
                                    DesireMode::achievement}};
    TheoryConfig cfg;
    CHECK(wellbeing_desire("ann", 3, w, desires, cfg) == 0.0);
    CHECK(wellbeing_desire("ann", 4, w, desires, cfg) == 1.5);
    CHECK(wellbeing_desire("ann", 9, w, desires, cfg) == 1.5);
}

TEST_CASE("a pinned achievement desire counts from its tick onward") {
    World w("w");
    w.insert({"town", "fair", 2}, true);
    w.insert({"town", "fair", 6}, true);
    std::vector<Desire> desires = {{"ann", {"town", "fair", 6, true}, 1.0,
                                    DesireMode::achievement}};
    TheoryConfig cfg;
    CHECK(wellbeing_desire("ann", 5, w, desires, cfg) == 0.0);
    CHECK(wellbeing_desire("ann", 6, w, desires, cfg) == 1.0);
    CHECK(wellbeing_desire("ann", 7, w, desires, cfg) == 1.0);
}

TEST_CASE("desire weights add up and other agents' desires never leak in") {
    World w("w");
    w.insert({"home", "warm", 1}, true);
    w.insert({"home", "lit", 1}, true);
    std::vector<Desire> desires = {
        {"ann", {"home", "warm", std::nullopt, true}, 1.0, DesireMode::concurrent},
        {"ann", {"home", "lit", std::nullopt, true}, 0.5, DesireMode::concurrent},
        {"bob", {"home", "warm", std::nullopt, true}, 7.0, DesireMode::concurrent}};
    TheoryConfig cfg;
    CHECK(wellbeing_desire("ann", 1, w, desires, cfg) == 1.5);
    CHECK(wellbeing_desire("bob", 1, w, desires, cfg) == 7.0);
}

TEST_CASE("aliveness follows the reserved alive key") {
    World w("w");
    w.insert({"ann", "alive", 0}, true);
    w.insert({"ann", "alive", 1}, true);
    w.insert({"ann", "alive", 2}, false);
    CHECK(is_alive("ann", 0, w));
    CHECK(is_alive("ann", 1, w));
    CHECK_FALSE(is_alive("ann", 2, w));
    // no re-assertion after a recorded life: still dead
    CHECK_FALSE(is_alive("ann", 5, w));
    // no alive history at all: alive by default
    CHECK(is_alive("bob", 5, w));
}

TEST_CASE("death gates desire satisfaction unless posthumous credit is allowed") {
    World w("w");
    w.insert({"ann", "alive", 0}, true);
    w.insert({"ann", "alive", 1}, false);
    w.insert({"town", "statue", 3}, true);
    std::vector<Desire> desires = {{"ann", {"town", "statue", std::nullopt, true}, 1.0,
                                    DesireMode::achievement}};
    TheoryConfig gated;
    CHECK(wellbeing_desire("ann", 3, w, desires, gated) == 0.0);
    TheoryConfig open{TheoryKind::desire, true};
    CHECK(wellbeing_desire("ann", 3, w, desires, open) == 1.0);
}

TEST_CASE("objective items count at or above their thresholds") {
    World w("w");
    w.insert({"ann", "health", 0}, 0.5);
    w.insert({"ann", "wisdom", 0}, 2.0);
    w.insert({"ann", "health", 1}, 0.49);
    std::vector<ObjectiveItem> items = {{"health", 0.5, 1.0}, {"wisdom", 3.0, 2.0}};
    CHECK(wellbeing_objective("ann", 0, w, items) == 1.0);  // health exactly at threshold
    CHECK(wellbeing_objective("ann", 1, w, items) == 0.0);
    CHECK(wellbeing_objective("ann", 9, w, items) == 0.0);
}

TEST_CASE("objective items ignore non-numeric assertions") {
    World w("w");
    w.insert({"ann", "health", 0}, true);
    std::vector<ObjectiveItem> items = {{"health", 0.0, 1.0}};
    CHECK(wellbeing_objective("ann", 0, w, items) == 0.0);
}

TEST_CASE("the bound theory dispatches by kind") {
    World w = hedonic_world();
    std::vector<Desire> desires;
    std::vector<ObjectiveItem> items = {{"pleasure", 1.0, 2.0}};
    Theory hedonic({TheoryKind::hedonic, false}, desires, items);
    Theory objective({TheoryKind::objective, false}, desires, items);
    CHECK(hedonic("ann", 0, w) == 2.0);
    CHECK(objective("ann", 0, w) == 2.0);
    CHECK(hedonic.name() == "hedonic");
    CHECK(objective.name() == "objective");
}

TEST_CASE("theory names parse both ways") {
    CHECK(parse_theory_kind("hedonic") == TheoryKind::hedonic);
    CHECK(parse_theory_kind("desire") == TheoryKind::desire);
    CHECK(parse_theory_kind("objective") == TheoryKind::objective);
    CHECK_FALSE(parse_theory_kind("perfectionist").has_value());
    CHECK(theory_kind_name(TheoryKind::desire) == "desire");
}

TEST_SUITE_END();
