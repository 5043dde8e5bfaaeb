#include "flourish/counterfactual.hpp"

#include <algorithm>

#include "flourish/errors.hpp"

namespace flourish {

std::optional<NearestPolicy> parse_policy(std::string_view name) {
    if (name == "unique") return NearestPolicy::unique_min;
    if (name == "ties") return NearestPolicy::average_over_ties;
    return std::nullopt;
}

std::string_view policy_name(NearestPolicy p) {
    return p == NearestPolicy::unique_min ? "unique" : "ties";
}

std::size_t similarity(const World& a, const World& b) {
    // Both assertion maps are sorted by key; walk them in lockstep.
    std::size_t shared = 0;
    auto ia = a.assertions().begin(), ea = a.assertions().end();
    auto ib = b.assertions().begin(), eb = b.assertions().end();
    while (ia != ea && ib != eb) {
        if (ia->first < ib->first) ++ia;
        else if (ib->first < ia->first) ++ib;
        else {
            if (ia->second == ib->second) ++shared;
            ++ia, ++ib;
        }
    }
    return shared;
}

namespace {

std::vector<const World*> pick_maximizers(std::vector<const World*> candidates,
                                          const World& reference, NearestPolicy policy) {
    std::size_t best = 0;
    std::vector<const World*> out;
    for (const World* c : candidates) {
        std::size_t s = similarity(reference, *c);
        if (out.empty() || s > best) {
            best = s;
            out.assign(1, c);
        } else if (s == best) {
            out.push_back(c);
        }
    }
    std::sort(out.begin(), out.end(),
              [](const World* x, const World* y) { return x->id() < y->id(); });
    if (policy == NearestPolicy::unique_min && out.size() > 1) out.resize(1);
    return out;
}

}  // namespace

std::vector<const World*> nearest_worlds(std::span<const World> multiverse,
                                         const World& reference, const Event& absent_event,
                                         NearestPolicy policy) {
    std::vector<const World*> candidates;
    for (const World& w : multiverse)
        if (w.id() != reference.id() && !occurs(w, absent_event)) candidates.push_back(&w);
    if (candidates.empty())
        throw EvalError(errc::no_counterfactual_world,
                        "no world distinct from " + reference.id() + " lacks the event " +
                            absent_event.subject + "." + absent_event.key + "@" +
                            std::to_string(absent_event.time) + "=" +
                            format_value(absent_event.to_value));
    return pick_maximizers(std::move(candidates), reference, policy);
}

std::vector<const World*> nearest_comparison_worlds(std::span<const World> multiverse,
                                                    const World& reference,
                                                    NearestPolicy policy) {
    std::vector<const World*> candidates;
    for (const World& w : multiverse)
        if (w.id() != reference.id()) candidates.push_back(&w);
    if (candidates.empty())
        throw EvalError(errc::no_comparison_world,
                        "no world distinct from " + reference.id() + " to compare against");
    return pick_maximizers(std::move(candidates), reference, policy);
}

EventValue event_value(std::span<const World> multiverse, const World& w, const Event& e,
                       const std::string& agent, Tick t, const Theory& theory,
                       NearestPolicy policy) {
    if (!occurs(w, e))
        throw EvalError(errc::event_not_occurring,
                        e.subject + "." + e.key + "@" + std::to_string(e.time) + "=" +
                            format_value(e.to_value) + " does not occur in " + w.id());
    auto comparison = nearest_worlds(multiverse, w, e, policy);

    EventValue result;
    result.actual_world = w.id();
    result.theory = theory.name();
    double here = theory(agent, t, w);
    double there = 0.0;
    for (const World* c : comparison) {
        there += theory(agent, t, *c);
        result.comparison_worlds.push_back(c->id());
        if (!c->has_subject_data_at(agent, t)) result.no_counterpart_data = true;
    }
    there /= static_cast<double>(comparison.size());
    result.value = here - there;
    return result;
}

}  // namespace flourish
