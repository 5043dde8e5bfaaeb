#include <bit>
#include <charconv>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "flourish/counterfactual.hpp"
#include "flourish/errors.hpp"
#include "flourish/group_calculus.hpp"
#include "flourish/scenario.hpp"
#include "flourish/welfare.hpp"

using json = nlohmann::ordered_json;
using namespace flourish;

namespace {

constexpr int kOk = 0;
constexpr int kEvalError = 1;
constexpr int kInputError = 2;

int input_error(const std::string& msg) {
    std::cerr << "error [input]: " << msg << "\n";
    return kInputError;
}

void print_diagnostics(const std::string& path, const std::vector<ParseDiagnostic>& diags) {
    for (const auto& d : diags)
        std::cerr << path << ":" << d.line << ":" << d.column << ": "
                  << (d.severity == ParseDiagnostic::Severity::error ? "error" : "warning")
                  << " [" << d.code << "] " << d.message << "\n";
}

std::optional<std::string> slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return std::nullopt;
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

// Parse + validate; on any error the diagnostics are printed and nullopt
// returned. Warnings are printed and tolerated.
std::optional<ScenarioDocument> load_scenario(const std::string& path) {
    auto text = slurp(path);
    if (!text) {
        std::cerr << path << ":0:0: error [io-error] cannot read file\n";
        return std::nullopt;
    }
    ParseResult parsed = parse_scenario(*text);
    print_diagnostics(path, parsed.diagnostics);
    if (!parsed.ok()) return std::nullopt;
    auto diags = validate_scenario(*parsed.document);
    print_diagnostics(path, diags);
    if (has_errors(diags)) return std::nullopt;
    return std::move(parsed.document);
}

Value parse_value_token(const std::string& s) {
    if (s == "true") return true;
    if (s == "false") return false;
    double d = 0.0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), d);
    if (ec == std::errc{} && p == s.data() + s.size()) return d;
    return s;
}

// subject.key@tick=value
std::optional<Event> parse_event_spec(const std::string& s) {
    auto dot = s.find('.');
    auto at = s.find('@', dot == std::string::npos ? 0 : dot);
    auto eq = s.find('=', at == std::string::npos ? 0 : at);
    if (dot == std::string::npos || at == std::string::npos || eq == std::string::npos ||
        dot == 0 || at <= dot + 1 || eq <= at + 1 || eq + 1 >= s.size())
        return std::nullopt;
    Event e;
    e.subject = s.substr(0, dot);
    e.key = s.substr(dot + 1, at - dot - 1);
    std::string tick = s.substr(at + 1, eq - at - 1);
    auto [p, ec] = std::from_chars(tick.data(), tick.data() + tick.size(), e.time);
    if (ec != std::errc{} || p != tick.data() + tick.size()) return std::nullopt;
    e.to_value = parse_value_token(s.substr(eq + 1));
    return e;
}

std::string event_spec(const Event& e) {
    return e.subject + "." + e.key + "@" + std::to_string(e.time) + "=" +
           format_value(e.to_value);
}

std::optional<TimeSpan> parse_interval_spec(const std::string& s) {
    auto sep = s.find("..");
    if (sep == std::string::npos) return std::nullopt;
    TimeSpan span;
    std::string a = s.substr(0, sep), b = s.substr(sep + 2);
    auto [pa, ea] = std::from_chars(a.data(), a.data() + a.size(), span.start);
    auto [pb, eb] = std::from_chars(b.data(), b.data() + b.size(), span.end);
    if (ea != std::errc{} || pa != a.data() + a.size() || eb != std::errc{} ||
        pb != b.data() + b.size())
        return std::nullopt;
    return span;
}

std::string interval_spec(TimeSpan span) {
    return std::to_string(span.start) + ".." + std::to_string(span.end);
}

// Flag > scenario config > built-in default.
double pick_number(bool passed, double flag_value, const ScenarioDocument& doc,
                   const std::string& key, double fallback) {
    if (passed) return flag_value;
    return doc.config_number(key).value_or(fallback);
}

struct CommonFlags {
    std::string world;
    std::string theory = "hedonic";
    std::string policy;
    bool allow_posthumous = false;
    bool json_out = false;
};

const World* resolve_world(const ScenarioDocument& doc, const std::string& flag) {
    std::string id = flag;
    if (id.empty()) id = doc.config_token("actual_world").value_or("");
    if (id.empty() && doc.worlds.size() == 1) id = doc.worlds.front().id();
    return id.empty() ? nullptr : doc.find_world(id);
}

NearestPolicy resolve_policy(const ScenarioDocument& doc, const std::string& flag) {
    std::string name = flag;
    if (name.empty()) name = doc.config_token("policy").value_or("unique");
    return parse_policy(name).value_or(NearestPolicy::unique_min);
}

Theory resolve_theory(const ScenarioDocument& doc, const CommonFlags& flags) {
    TheoryConfig cfg;
    cfg.kind = parse_theory_kind(flags.theory).value_or(TheoryKind::hedonic);
    cfg.allow_posthumous =
        flags.allow_posthumous || doc.config_flag("allow_posthumous").value_or(false);
    return make_theory(doc, cfg);
}

std::optional<Event> resolve_event(const ScenarioDocument& doc, const std::string& flag) {
    if (!flag.empty()) return parse_event_spec(flag);
    auto subject = doc.config_token("focus_event_subject");
    auto key = doc.config_token("focus_event_key");
    auto time = doc.config_number("focus_event_time");
    auto it = doc.config.find("focus_event_value");
    if (!subject || !key || !time || it == doc.config.end()) return std::nullopt;
    return Event{*subject, *key, it->second, static_cast<Tick>(*time)};
}

std::string resolve_agent(const ScenarioDocument& doc, const std::string& flag) {
    if (!flag.empty()) return flag;
    return doc.config_token("focus_agent").value_or("");
}

std::string resolve_group_id(const ScenarioDocument& doc, const std::string& flag) {
    if (!flag.empty()) return flag;
    return doc.config_token("focus_group").value_or("");
}

TimeSpan resolve_interval(const ScenarioDocument& doc, const std::string& flag, bool& bad) {
    if (!flag.empty()) {
        auto span = parse_interval_spec(flag);
        if (!span) {
            bad = true;
            return {};
        }
        return *span;
    }
    auto a = doc.config_number("interval_start");
    auto b = doc.config_number("interval_end");
    if (a && b) return {static_cast<Tick>(*a), static_cast<Tick>(*b)};
    return {0, doc.horizon()};
}

void emit(const json& j, const std::vector<std::pair<std::string, std::string>>& text,
          bool json_out) {
    if (json_out) {
        std::cout << j.dump(2) << "\n";
        return;
    }
    for (const auto& [k, v] : text) std::cout << k << ": " << v << "\n";
}

std::string join(const std::vector<std::string>& items) {
    std::string out;
    for (const auto& s : items) {
        if (!out.empty()) out += " ";
        out += s;
    }
    return out;
}

std::string join_numbers(const std::vector<double>& items) {
    std::string out;
    for (double v : items) {
        if (!out.empty()) out += " ";
        out += format_number(v);
    }
    return out;
}

int run_eval_event(const std::string& path, const CommonFlags& flags,
                   const std::string& event_flag, const std::string& agent_flag,
                   bool time_passed, Tick time_flag) {
    auto doc = load_scenario(path);
    if (!doc) return kInputError;
    const World* w = resolve_world(*doc, flags.world);
    if (!w) return input_error("no world resolvable; pass --world or set config actual_world");
    auto event = resolve_event(*doc, event_flag);
    if (!event) return input_error("no event given; pass --event subject.key@tick=value");
    std::string agent = resolve_agent(*doc, agent_flag);
    if (agent.empty()) return input_error("no agent given; pass --agent");
    if (!doc->has_agent(agent)) return input_error("agent " + agent + " not declared");
    Tick t = time_passed ? time_flag : event->time;
    Theory theory = resolve_theory(*doc, flags);
    NearestPolicy policy = resolve_policy(*doc, flags.policy);

    EventValue ev = event_value(doc->worlds, *w, *event, agent, t, theory, policy);

    json j{{"scenario", doc->name},         {"command", "eval event"},
           {"world", w->id()},              {"event", event_spec(*event)},
           {"agent", agent},                {"time", t},
           {"theory", std::string(theory.name())}, {"policy", std::string(policy_name(policy))},
           {"comparison_worlds", ev.comparison_worlds},
           {"no_counterpart_data", ev.no_counterpart_data},
           {"value", ev.value}};
    emit(j,
         {{"scenario", doc->name},
          {"command", "eval event"},
          {"world", w->id()},
          {"event", event_spec(*event)},
          {"agent", agent},
          {"time", std::to_string(t)},
          {"theory", std::string(theory.name())},
          {"policy", std::string(policy_name(policy))},
          {"comparison_worlds", join(ev.comparison_worlds)},
          {"no_counterpart_data", ev.no_counterpart_data ? "true" : "false"},
          {"value", format_number(ev.value)}},
         flags.json_out);
    return kOk;
}

int run_eval_life(const std::string& path, const CommonFlags& flags,
                  const std::string& agent_flag, const std::string& interval_flag,
                  bool lambda_passed, double lambda_flag, const std::string& aggregator_flag,
                  const std::string& baseline) {
    auto doc = load_scenario(path);
    if (!doc) return kInputError;
    const World* w = resolve_world(*doc, flags.world);
    if (!w) return input_error("no world resolvable; pass --world or set config actual_world");
    std::string agent = resolve_agent(*doc, agent_flag);
    if (agent.empty()) return input_error("no agent given; pass --agent");
    if (!doc->has_agent(agent)) return input_error("agent " + agent + " not declared");
    bool bad_interval = false;
    TimeSpan interval = resolve_interval(*doc, interval_flag, bad_interval);
    if (bad_interval) return input_error("bad interval; expected A..B");
    if (!baseline.empty() && !doc->find_world(baseline))
        return input_error("baseline world " + baseline + " not declared");

    WelfareConfig config;
    config.lambda = pick_number(lambda_passed, lambda_flag, *doc, "lambda", 1.0);
    std::string agg = aggregator_flag.empty()
                          ? doc->config_token("aggregator").value_or("sum")
                          : aggregator_flag;
    config.aggregator = parse_aggregator(agg).value_or(Aggregator::sum);
    Theory theory = resolve_theory(*doc, flags);
    NearestPolicy policy = resolve_policy(*doc, flags.policy);
    std::optional<std::string> base;
    if (!baseline.empty()) base = baseline;

    LifeValue lv = life_value(doc->worlds, agent, *w, interval, theory, config, policy, base);

    json j{{"scenario", doc->name},
           {"command", "eval life"},
           {"world", w->id()},
           {"agent", agent},
           {"interval", interval_spec(interval)},
           {"theory", std::string(theory.name())},
           {"policy", std::string(policy_name(policy))},
           {"lambda", config.lambda},
           {"aggregator", std::string(aggregator_name(config.aggregator))},
           {"comparison_worlds", lv.comparison_worlds},
           {"subject_welfare", lv.subject_welfare},
           {"comparison_welfare", lv.comparison_welfare},
           {"value", lv.value}};
    emit(j,
         {{"scenario", doc->name},
          {"command", "eval life"},
          {"world", w->id()},
          {"agent", agent},
          {"interval", interval_spec(interval)},
          {"theory", std::string(theory.name())},
          {"policy", std::string(policy_name(policy))},
          {"lambda", format_number(config.lambda)},
          {"aggregator", std::string(aggregator_name(config.aggregator))},
          {"comparison_worlds", join(lv.comparison_worlds)},
          {"subject_welfare", format_number(lv.subject_welfare)},
          {"comparison_welfare", format_number(lv.comparison_welfare)},
          {"value", format_number(lv.value)}},
         flags.json_out);
    return kOk;
}

int run_eval_group(const std::string& path, const CommonFlags& flags,
                   const std::string& group_flag, const std::string& interval_flag,
                   bool lambda_g_passed, double lambda_g_flag, bool epsilon_passed,
                   double epsilon_flag, const std::string& sync_aggregator_flag,
                   const std::string& baseline) {
    auto doc = load_scenario(path);
    if (!doc) return kInputError;
    const World* w = resolve_world(*doc, flags.world);
    if (!w) return input_error("no world resolvable; pass --world or set config actual_world");
    std::string gid = resolve_group_id(*doc, group_flag);
    if (gid.empty()) return input_error("no group given; pass --group");
    const Group* g = doc->find_group(gid);
    if (!g) return input_error("group " + gid + " not declared");
    bool bad_interval = false;
    TimeSpan interval = resolve_interval(*doc, interval_flag, bad_interval);
    if (bad_interval) return input_error("bad interval; expected A..B");
    if (!baseline.empty() && !doc->find_world(baseline))
        return input_error("baseline world " + baseline + " not declared");

    GroupCalcConfig config;
    config.lambda_group = pick_number(lambda_g_passed, lambda_g_flag, *doc, "lambda_group", 1.0);
    config.epsilon = pick_number(epsilon_passed, epsilon_flag, *doc, "epsilon", 0.01);
    std::string agg = sync_aggregator_flag.empty()
                          ? doc->config_token("sync_aggregator").value_or("sum")
                          : sync_aggregator_flag;
    config.sync_aggregator = parse_aggregator(agg).value_or(Aggregator::sum);
    NearestPolicy policy = resolve_policy(*doc, flags.policy);
    std::optional<std::string> base;
    if (!baseline.empty()) base = baseline;

    GroupFlourishingReport report = group_life_value(doc->worlds, *g, *w, interval,
                                                     doc->activities, config, policy, base);

    json j{{"scenario", doc->name},
           {"command", "eval group"},
           {"world", w->id()},
           {"group", g->id},
           {"interval", interval_spec(interval)},
           {"policy", std::string(policy_name(policy))},
           {"lambda_group", config.lambda_group},
           {"epsilon", config.epsilon},
           {"sync_aggregator", std::string(aggregator_name(config.sync_aggregator))},
           {"comparison_worlds", report.comparison_worlds},
           {"synchronic", report.synchronic},
           {"diachronic", report.diachronic},
           {"welfare", report.welfare},
           {"comparison_welfare", report.comparison_welfare},
           {"value", report.life_value}};
    emit(j,
         {{"scenario", doc->name},
          {"command", "eval group"},
          {"world", w->id()},
          {"group", g->id},
          {"interval", interval_spec(interval)},
          {"policy", std::string(policy_name(policy))},
          {"lambda_group", format_number(config.lambda_group)},
          {"epsilon", format_number(config.epsilon)},
          {"sync_aggregator", std::string(aggregator_name(config.sync_aggregator))},
          {"comparison_worlds", join(report.comparison_worlds)},
          {"synchronic", join_numbers(report.synchronic)},
          {"diachronic", format_number(report.diachronic)},
          {"welfare", format_number(report.welfare)},
          {"comparison_welfare", format_number(report.comparison_welfare)},
          {"value", format_number(report.life_value)}},
         flags.json_out);
    return kOk;
}

int sign_of(double v) { return v > 0 ? 1 : v < 0 ? -1 : 0; }

int expected_sign(const std::string& token) {
    if (token == "positive") return 1;
    if (token == "negative") return -1;
    return 0;
}

bool bits_equal(const std::vector<double>& values) {
    for (double v : values)
        if (std::bit_cast<std::uint64_t>(v) != std::bit_cast<std::uint64_t>(values.front()))
            return false;
    return true;
}

int run_neutrality(const std::string& path, bool json_out) {
    auto doc = load_scenario(path);
    if (!doc) return kInputError;
    const World* w = resolve_world(*doc, "");
    if (!w) return input_error("no world resolvable; set config actual_world");
    bool bad_interval = false;
    TimeSpan interval = resolve_interval(*doc, "", bad_interval);
    NearestPolicy policy = resolve_policy(*doc, "");
    WelfareConfig wconfig;
    wconfig.lambda = doc->config_number("lambda").value_or(1.0);
    GroupCalcConfig gconfig;
    gconfig.lambda_group = doc->config_number("lambda_group").value_or(1.0);
    gconfig.epsilon = doc->config_number("epsilon").value_or(0.01);

    auto event = resolve_event(*doc, "");
    std::string agent = resolve_agent(*doc, "");
    std::string gid = resolve_group_id(*doc, "");
    const Group* group = gid.empty() ? nullptr : doc->find_group(gid);
    if (!gid.empty() && !group) return input_error("group " + gid + " not declared");

    const TheoryKind kinds[] = {TheoryKind::hedonic, TheoryKind::desire, TheoryKind::objective};
    std::map<std::string, std::vector<double>> per_theory;  // quantity -> value per theory
    std::vector<std::string> theory_names;

    json jtheories = json::object();
    std::vector<std::pair<std::string, std::string>> text;
    text.push_back({"scenario", doc->name});
    text.push_back({"world", w->id()});
    text.push_back({"interval", interval_spec(interval)});
    if (event) text.push_back({"event", event_spec(*event)});
    if (!agent.empty()) text.push_back({"agent", agent});
    if (group) text.push_back({"group", group->id});

    for (TheoryKind kind : kinds) {
        TheoryConfig tc{kind, doc->config_flag("allow_posthumous").value_or(false)};
        Theory theory = make_theory(*doc, tc);
        theory_names.push_back(std::string(theory.name()));
        json jt = json::object();
        if (event && !agent.empty()) {
            EventValue ev =
                event_value(doc->worlds, *w, *event, agent, event->time, theory, policy);
            per_theory["event_value"].push_back(ev.value);
            jt["event_value"] = ev.value;
        }
        if (!agent.empty()) {
            LifeValue lv =
                life_value(doc->worlds, agent, *w, interval, theory, wconfig, policy);
            per_theory["life_value"].push_back(lv.value);
            jt["life_value"] = lv.value;
        }
        if (group) {
            GroupFlourishingReport gr = group_life_value(doc->worlds, *group, *w, interval,
                                                         doc->activities, gconfig, policy);
            per_theory["group_diachronic"].push_back(gr.diachronic);
            per_theory["group_welfare"].push_back(gr.welfare);
            per_theory["group_life_value"].push_back(gr.life_value);
            for (std::size_t i = 0; i < gr.synchronic.size(); ++i)
                per_theory["group_synchronic_" + std::to_string(i)].push_back(gr.synchronic[i]);
            jt["group_diachronic"] = gr.diachronic;
            jt["group_welfare"] = gr.welfare;
            jt["group_life_value"] = gr.life_value;
        }
        jtheories[std::string(theory.name())] = jt;
    }

    for (const auto& q : {"event_value", "life_value", "group_welfare", "group_life_value"}) {
        auto it = per_theory.find(q);
        if (it == per_theory.end()) continue;
        std::string row;
        for (std::size_t i = 0; i < it->second.size(); ++i) {
            if (!row.empty()) row += " ";
            row += theory_names[i] + "=" + format_number(it->second[i]);
        }
        text.push_back({q, row});
    }

    bool ok = true;
    json jchecks = json::array();
    struct Expectation {
        const char* config_key;
        const char* quantity;
    };
    const Expectation expectations[] = {{"expect_sign_event", "event_value"},
                                        {"expect_sign_life", "life_value"},
                                        {"expect_sign_group_life", "group_life_value"}};
    for (const auto& ex : expectations) {
        auto token = doc->config_token(ex.config_key);
        if (!token) continue;
        auto it = per_theory.find(ex.quantity);
        if (it == per_theory.end())
            return input_error(std::string(ex.config_key) +
                               " declared but its inputs (focus entries) are missing");
        bool all = true;
        for (double v : it->second) all = all && sign_of(v) == expected_sign(*token);
        ok = ok && all;
        std::string row;
        for (std::size_t i = 0; i < it->second.size(); ++i) {
            if (!row.empty()) row += " ";
            row += theory_names[i] + "=" + format_number(it->second[i]);
        }
        text.push_back({std::string("check ") + ex.config_key + "=" + *token,
                        row + (all ? " ok" : " VIOLATED")});
        jchecks.push_back({{"expectation", ex.config_key},
                           {"sign", *token},
                           {"values", it->second},
                           {"ok", all}});
    }

    bool bits_ok = true;
    for (const auto& [quantity, values] : per_theory) {
        if (quantity.rfind("group_", 0) != 0) continue;
        if (!bits_equal(values)) bits_ok = false;
    }
    if (group) text.push_back({"group_bit_identity", bits_ok ? "ok" : "VIOLATED"});
    ok = ok && bits_ok;
    text.push_back({"neutrality", ok ? "ok" : "violated"});

    json j{{"scenario", doc->name},      {"world", w->id()},
           {"interval", interval_spec(interval)}, {"theories", jtheories},
           {"checks", jchecks},          {"group_bit_identity", bits_ok},
           {"neutrality", ok ? "ok" : "violated"}};
    emit(j, text, json_out);
    return ok ? kOk : kEvalError;
}

// Deliberately re-derives similarity by brute force (quadratic scan over
// assertion lists) so the engine's merge-based count is checked by a
// different route.
std::size_t oracle_similarity(const World& a, const World& b) {
    std::size_t shared = 0;
    for (const auto& [ka, va] : a.assertions())
        for (const auto& [kb, vb] : b.assertions())
            if (ka == kb && va == vb) ++shared;
    return shared;
}

int run_oracle(const std::string& path, const std::string& world_flag,
               const std::string& event_flag, bool json_out) {
    auto doc = load_scenario(path);
    if (!doc) return kInputError;
    const World* ref = resolve_world(*doc, world_flag);
    if (!ref) return input_error("no world resolvable; pass --world or set config actual_world");
    auto event = resolve_event(*doc, event_flag);
    if (!event) return input_error("no event given; pass --event subject.key@tick=value");

    struct Row {
        std::string id;
        std::size_t sim;
        bool occurs;
        bool candidate;
    };
    std::vector<Row> rows;
    for (const World& w : doc->worlds) {
        bool occ = occurs(w, *event);
        bool candidate = w.id() != ref->id() && !occ;
        rows.push_back({w.id(), oracle_similarity(*ref, w), occ, candidate});
    }
    std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) { return a.id < b.id; });

    std::size_t best = 0;
    bool any = false;
    for (const Row& r : rows)
        if (r.candidate && (!any || r.sim > best)) {
            best = r.sim;
            any = true;
        }
    std::vector<std::string> maximizers;
    for (const Row& r : rows)
        if (r.candidate && r.sim == best && any) maximizers.push_back(r.id);

    json jrows = json::array();
    std::vector<std::pair<std::string, std::string>> text;
    text.push_back({"scenario", doc->name});
    text.push_back({"reference", ref->id()});
    text.push_back({"event", event_spec(*event)});
    for (const Row& r : rows) {
        std::string line = "similarity=" + std::to_string(r.sim) + " occurs=" +
                           (r.occurs ? "true" : "false");
        if (r.id == ref->id()) line += " reference";
        else line += r.candidate ? " candidate" : " excluded";
        text.push_back({"world " + r.id, line});
        jrows.push_back({{"world", r.id},
                         {"similarity", r.sim},
                         {"occurs", r.occurs},
                         {"reference", r.id == ref->id()},
                         {"candidate", r.candidate}});
    }
    text.push_back({"maximizers", maximizers.empty() ? "(none)" : join(maximizers)});

    json j{{"scenario", doc->name}, {"reference", ref->id()}, {"event", event_spec(*event)},
           {"worlds", jrows},       {"maximizers", maximizers}};
    emit(j, text, json_out);
    if (maximizers.empty()) {
        std::cerr << "error [" << errc::no_counterfactual_world
                  << "]: empty candidate set — the event occurs in every other world\n";
        return kEvalError;
    }
    return kOk;
}

int run_validate(const std::vector<std::string>& paths, bool json_out) {
    bool any_error = false;
    json jfiles = json::array();
    for (const auto& path : paths) {
        std::vector<ParseDiagnostic> all;
        auto text = slurp(path);
        if (!text) {
            all.push_back({ParseDiagnostic::Severity::error, 0, 0, "io-error",
                           "cannot read file"});
        } else {
            ParseResult parsed = parse_scenario(*text);
            all = parsed.diagnostics;
            if (parsed.ok()) {
                auto extra = validate_scenario(*parsed.document);
                all.insert(all.end(), extra.begin(), extra.end());
            }
        }
        print_diagnostics(path, all);
        std::size_t errors = 0, warnings = 0;
        json jdiags = json::array();
        for (const auto& d : all) {
            (d.severity == ParseDiagnostic::Severity::error ? errors : warnings)++;
            jdiags.push_back({{"severity",
                               d.severity == ParseDiagnostic::Severity::error ? "error"
                                                                              : "warning"},
                              {"line", d.line},
                              {"column", d.column},
                              {"code", d.code},
                              {"message", d.message}});
        }
        if (errors > 0) any_error = true;
        if (!json_out)
            std::cout << path << ": " << (errors == 0 ? "ok" : "invalid") << " (" << errors
                      << " errors, " << warnings << " warnings)\n";
        jfiles.push_back({{"path", path},
                          {"ok", errors == 0},
                          {"errors", errors},
                          {"warnings", warnings},
                          {"diagnostics", jdiags}});
    }
    if (json_out) std::cout << jfiles.dump(2) << "\n";
    return any_error ? kInputError : kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"counterfactual well-being, welfare, and group flourishing evaluator"};
    app.require_subcommand(1);

    CommonFlags flags;
    std::string scenario_path, event_flag, agent_flag, group_flag, interval_flag;
    std::string aggregator_flag, sync_aggregator_flag, baseline_flag;
    double lambda_flag = 1.0, lambda_g_flag = 1.0, epsilon_flag = 0.01;
    Tick time_flag = 0;
    std::vector<std::string> validate_paths;

    auto add_common = [&](CLI::App* cmd, bool with_theory = true) {
        cmd->add_option("scenario", scenario_path, "scenario file (.scn)")->required();
        cmd->add_option("--world", flags.world, "world to evaluate in");
        cmd->add_option("--policy", flags.policy, "nearest-world tie policy")
            ->check(CLI::IsMember({"unique", "ties"}));
        cmd->add_flag("--json", flags.json_out, "emit a JSON object instead of text");
        if (with_theory) {
            cmd->add_option("--theory", flags.theory, "well-being theory")
                ->check(CLI::IsMember({"hedonic", "desire", "objective"}));
            cmd->add_flag("--allow-posthumous", flags.allow_posthumous,
                          "let desire satisfaction reach the dead");
        }
    };

    CLI::App* eval = app.add_subcommand("eval", "evaluate an event, a life, or a group");
    eval->require_subcommand(1);

    CLI::App* ev = eval->add_subcommand("event", "counterfactual value of an event");
    add_common(ev);
    ev->add_option("--event", event_flag, "event as subject.key@tick=value");
    ev->add_option("--agent", agent_flag, "whose well-being to read");
    CLI::Option* time_opt = ev->add_option("--time", time_flag, "evaluation tick");

    CLI::App* lf = eval->add_subcommand("life", "life value against the comparison class");
    add_common(lf);
    lf->add_option("--agent", agent_flag, "whose life");
    lf->add_option("--interval", interval_flag, "inclusive tick range A..B");
    CLI::Option* lambda_opt = lf->add_option("--lambda", lambda_flag, "slope weight");
    lf->add_option("--aggregator", aggregator_flag, "per-life aggregation")
        ->check(CLI::IsMember({"sum", "mean"}));
    lf->add_option("--baseline", baseline_flag, "explicit comparison world");

    CLI::App* gr = eval->add_subcommand("group", "group flourishing pipeline");
    add_common(gr, false);
    gr->add_option("--group", group_flag, "group id");
    gr->add_option("--interval", interval_flag, "inclusive tick range A..B");
    CLI::Option* lambda_g_opt = gr->add_option("--lambda-group", lambda_g_flag, "slope weight");
    CLI::Option* epsilon_opt = gr->add_option("--epsilon", epsilon_flag, "attempt floor");
    gr->add_option("--sync-aggregator", sync_aggregator_flag, "within-tick aggregation")
        ->check(CLI::IsMember({"sum", "mean"}));
    gr->add_option("--baseline", baseline_flag, "explicit comparison world");

    CLI::App* neut = app.add_subcommand(
        "neutrality", "run all theories; verify sign expectations and group invariance");
    neut->add_option("scenario", scenario_path, "scenario file (.scn)")->required();
    neut->add_flag("--json", flags.json_out, "emit a JSON object instead of text");

    CLI::App* orc = app.add_subcommand("oracle", "brute-force nearest-world scan");
    orc->add_option("scenario", scenario_path, "scenario file (.scn)")->required();
    orc->add_option("--world", flags.world, "reference world");
    orc->add_option("--event", event_flag, "event as subject.key@tick=value");
    orc->add_flag("--json", flags.json_out, "emit a JSON object instead of text");

    CLI::App* val = app.add_subcommand("validate", "parse and validate scenario files");
    val->add_option("scenarios", validate_paths, "scenario files (.scn)")->required();
    val->add_flag("--json", flags.json_out, "emit a JSON array instead of text");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kInputError;
    }

    try {
        if (ev->parsed())
            return run_eval_event(scenario_path, flags, event_flag, agent_flag,
                                  time_opt->count() > 0, time_flag);
        if (lf->parsed())
            return run_eval_life(scenario_path, flags, agent_flag, interval_flag,
                                 lambda_opt->count() > 0, lambda_flag, aggregator_flag,
                                 baseline_flag);
        if (gr->parsed())
            return run_eval_group(scenario_path, flags, group_flag, interval_flag,
                                  lambda_g_opt->count() > 0, lambda_g_flag,
                                  epsilon_opt->count() > 0, epsilon_flag,
                                  sync_aggregator_flag, baseline_flag);
        if (neut->parsed()) return run_neutrality(scenario_path, flags.json_out);
        if (orc->parsed())
            return run_oracle(scenario_path, flags.world, event_flag, flags.json_out);
        if (val->parsed()) return run_validate(validate_paths, flags.json_out);
    } catch (const EvalError& e) {
        std::cerr << "error [" << e.code() << "]: " << e.what() << "\n";
        return kEvalError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kEvalError;
    }
    return kInputError;
}
