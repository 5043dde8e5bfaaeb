#include "doctest.h"

#include "flourish/errors.hpp"
#include "flourish/world.hpp"

using namespace flourish;

namespace {

World sample_world() {
    World w("w");
    w.insert({"jack", "pain", 1}, 0.0);
    w.insert({"jack", "pain", 2}, 0.0);
    w.insert({"jack", "pain", 3}, 5.0);
    w.insert({"jack", "mood", 3}, std::string("grim"));
    w.insert({"sky", "clear", 0}, true);
    return w;
}

}  // namespace

TEST_SUITE_BEGIN("world");

TEST_CASE("numbers print with the shortest round-tripping digits") {
    CHECK(format_number(5.0) == "5");
    CHECK(format_number(-5.0) == "-5");
    CHECK(format_number(2.4) == "2.4");
    CHECK(format_number(0.0) == "0");
    CHECK(format_number(0.1) == "0.1");
    CHECK(format_number(1.0 / 3.0) == "0.3333333333333333");
}

TEST_CASE("values print by type") {
    CHECK(format_value(Value{true}) == "true");
    CHECK(format_value(Value{false}) == "false");
    CHECK(format_value(Value{3.5}) == "3.5");
    CHECK(format_value(Value{std::string("give")}) == "give");
}

TEST_CASE("time spans are inclusive on both ends") {
    TimeSpan s{2, 5};
    CHECK(s.contains(2));
    CHECK(s.contains(5));
    CHECK_FALSE(s.contains(1));
    CHECK_FALSE(s.contains(6));
    CHECK(s.length() == 4);
    CHECK(TimeSpan{3, 3}.length() == 1);
}

TEST_CASE("inserting an already-asserted slot is refused") {
    World w("w");
    CHECK(w.insert({"a", "k", 0}, 1.0));
    CHECK_FALSE(w.insert({"a", "k", 0}, 2.0));
    CHECK(w.assertion_count() == 1);
    CHECK(std::get<double>(*w.lookup("a", "k", 0)) == 1.0);
}

TEST_CASE("the horizon is the greatest asserted tick") {
    World w("w");
    CHECK(w.horizon() == 0);
    w.insert({"a", "k", 7}, 1.0);
    w.insert({"a", "k", 3}, 1.0);
    CHECK(w.horizon() == 7);
}

TEST_CASE("lookup misses are absent, not defaulted") {
    World w = sample_world();
    CHECK_FALSE(w.lookup("jack", "pain", 0).has_value());
    CHECK_FALSE(w.lookup("jack", "joy", 1).has_value());
    CHECK(assertion_lookup(w, "jack", "pain", 3).has_value());
}

TEST_CASE("subject data presence is per tick") {
    World w = sample_world();
    CHECK(w.has_subject_data_at("jack", 3));
    CHECK_FALSE(w.has_subject_data_at("jack", 0));
    CHECK_FALSE(w.has_subject_data_at("jill", 3));
}

TEST_CASE("an event occurs only where the value actually changes") {
    World w = sample_world();
    CHECK(occurs(w, {"jack", "pain", 5.0, 3}));
    // same value as the tick before: no change
    CHECK_FALSE(occurs(w, {"jack", "pain", 0.0, 2}));
    // no predecessor assertion
    CHECK_FALSE(occurs(w, {"jack", "mood", Value{std::string("grim")}, 3}));
    // value read at t differs from the event's
    CHECK_FALSE(occurs(w, {"jack", "pain", 4.0, 3}));
    // nothing asserted at t
    CHECK_FALSE(occurs(w, {"jack", "pain", 5.0, 9}));
}

TEST_CASE("tick 0 cannot host an event") {
    World w = sample_world();
    CHECK_THROWS_WITH_AS(occurs(w, {"sky", "clear", true, 0}), doctest::Contains("predecessor"),
                         EvalError);
    try {
        occurs(w, {"sky", "clear", true, -2});
        FAIL("expected a throw");
    } catch (const EvalError& e) {
        CHECK(e.code() == errc::invalid_event);
    }
}

TEST_CASE("derived events are exactly the occurring changes") {
    World w = sample_world();
    auto events = derive_events(w);
    REQUIRE(events.size() == 1);
    CHECK(events[0] == Event{"jack", "pain", 5.0, 3});
    for (const auto& e : events) CHECK(occurs(w, e));
}

TEST_CASE("a gap in assertions breaks the change chain") {
    World w("w");
    w.insert({"a", "k", 0}, 1.0);
    w.insert({"a", "k", 2}, 2.0);  // tick 1 missing
    CHECK(derive_events(w).empty());
    CHECK_FALSE(occurs(w, {"a", "k", 2.0, 2}));
}

TEST_CASE("value comparison is typed") {
    World w("w");
    w.insert({"a", "k", 0}, true);
    w.insert({"a", "k", 1}, 1.0);
    // bool true at t-1, number 1.0 at t: a change, not an equality
    CHECK(occurs(w, {"a", "k", 1.0, 1}));
}

TEST_SUITE_END();
