#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace flourish {

// Evaluation-time failures. `code` is a stable machine-readable tag; the
// what() string carries the human-readable detail.
class EvalError : public std::runtime_error {
public:
    EvalError(std::string code, const std::string& message)
        : std::runtime_error(message), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

namespace errc {
inline constexpr const char* invalid_event = "InvalidEvent";
inline constexpr const char* event_not_occurring = "EventNotOccurring";
inline constexpr const char* no_counterfactual_world = "NoCounterfactualWorld";
inline constexpr const char* no_comparison_world = "NoComparisonWorld";
inline constexpr const char* interval_out_of_range = "IntervalOutOfRange";
inline constexpr const char* degenerate_family = "DegenerateFamily";
inline constexpr const char* unbound_activity = "UnboundActivity";
inline constexpr const char* unknown_world = "UnknownWorld";
inline constexpr const char* unknown_group = "UnknownGroup";
}  // namespace errc

}  // namespace flourish
