#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace flourish {

using Tick = std::int64_t;

// Assertion values are typed: booleans, numbers, or bare identifier tokens.
// Compared by exact equality (a bool is never equal to a number).
using Value = std::variant<bool, double, std::string>;

// Renders a double with the shortest digit string that round-trips, so
// integral values print bare ("5", not "5.000000") and output is byte-stable.
std::string format_number(double v);
std::string format_value(const Value& v);

struct TimeSpan {
    Tick start = 0;
    Tick end = 0;

    bool contains(Tick t) const { return t >= start && t <= end; }
    Tick length() const { return end - start + 1; }
    auto operator<=>(const TimeSpan&) const = default;
};

struct AssertionKey {
    std::string subject;
    std::string key;
    Tick time = 0;

    auto operator<=>(const AssertionKey&) const = default;
};

// A property change: at e.time the subject's key reads e.to_value, having
// read something else at e.time - 1. Times below 1 cannot host a change.
struct Event {
    std::string subject;
    std::string key;
    Value to_value;
    Tick time = 0;

    bool operator==(const Event&) const = default;
};

// A finite possible world: timestamped attribute assertions over subjects.
// What is not asserted is absent — no value is ever carried forward. The
// horizon is derived: the maximum tick mentioned by any assertion.
class World {
public:
    World() = default;
    explicit World(std::string id) : id_(std::move(id)) {}

    const std::string& id() const { return id_; }
    Tick horizon() const { return horizon_; }

    // Returns false (and leaves the world unchanged) if the same
    // (subject, key, time) slot is already asserted.
    bool insert(AssertionKey k, Value v);

    std::optional<Value> lookup(const std::string& subject, const std::string& key,
                                Tick time) const;

    bool has_subject_data_at(const std::string& subject, Tick time) const;

    std::size_t assertion_count() const { return assertions_.size(); }
    const std::map<AssertionKey, Value>& assertions() const { return assertions_; }

    bool operator==(const World& o) const {
        return id_ == o.id_ && assertions_ == o.assertions_;
    }

private:
    std::string id_;
    Tick horizon_ = 0;
    std::map<AssertionKey, Value> assertions_;
};

std::optional<Value> assertion_lookup(const World& w, const std::string& subject,
                                      const std::string& key, Tick time);

// True iff the subject's key reads e.to_value at e.time and read a different
// value at e.time - 1 (no predecessor, no event). Throws EvalError with code
// InvalidEvent when e.time < 1.
bool occurs(const World& w, const Event& e);

// Exactly the events that occur in w: one per consecutive assertion pair
// with differing values, in (subject, key, time) order.
std::vector<Event> derive_events(const World& w);

}  // namespace flourish
