#include "flourish/world.hpp"

#include <algorithm>
#include <charconv>
#include <system_error>

#include "flourish/errors.hpp"

namespace flourish {

std::string format_number(double v) {
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
    if (ec != std::errc{}) return "nan";
    return std::string(buf, end);
}

std::string format_value(const Value& v) {
    switch (v.index()) {
        case 0: return std::get<bool>(v) ? "true" : "false";
        case 1: return format_number(std::get<double>(v));
        default: return std::get<std::string>(v);
    }
}

bool World::insert(AssertionKey k, Value v) {
    Tick t = k.time;
    bool fresh = assertions_.emplace(std::move(k), std::move(v)).second;
    if (fresh) horizon_ = std::max(horizon_, t);
    return fresh;
}

std::optional<Value> World::lookup(const std::string& subject, const std::string& key,
                                   Tick time) const {
    auto it = assertions_.find(AssertionKey{subject, key, time});
    if (it == assertions_.end()) return std::nullopt;
    return it->second;
}

bool World::has_subject_data_at(const std::string& subject, Tick time) const {
    // Assertions are ordered by (subject, key, time); scan the subject's span.
    auto it = assertions_.lower_bound(AssertionKey{subject, "", 0});
    for (; it != assertions_.end() && it->first.subject == subject; ++it)
        if (it->first.time == time) return true;
    return false;
}

std::optional<Value> assertion_lookup(const World& w, const std::string& subject,
                                      const std::string& key, Tick time) {
    return w.lookup(subject, key, time);
}

bool occurs(const World& w, const Event& e) {
    if (e.time < 1)
        throw EvalError(errc::invalid_event,
                        "event at tick " + std::to_string(e.time) +
                            " has no predecessor tick; a change needs one");
    auto now = w.lookup(e.subject, e.key, e.time);
    if (!now.has_value() || *now != e.to_value) return false;
    auto before = w.lookup(e.subject, e.key, e.time - 1);
    return before.has_value() && *before != e.to_value;
}

std::vector<Event> derive_events(const World& w) {
    std::vector<Event> out;
    for (const auto& [k, v] : w.assertions()) {
        if (k.time < 1) continue;
        auto before = w.lookup(k.subject, k.key, k.time - 1);
        if (before.has_value() && *before != v)
            out.push_back(Event{k.subject, k.key, v, k.time});
    }
    return out;
}

}  // namespace flourish
