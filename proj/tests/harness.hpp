#pragma once

#include <sys/wait.h>

#include <array>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "flourish/scenario.hpp"

namespace harness {

inline const std::vector<std::string>& fixture_names() {
    static const std::vector<std::string> names = {"jack_hill", "jill_exercise", "jack_paths",
                                                   "jessica",   "jill_gift",     "hiring"};
    return names;
}

inline std::string fixture_path(const std::string& name) {
    return std::string(FIXTURE_DIR) + "/" + name + ".scn";
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

inline flourish::ScenarioDocument load_fixture(const std::string& name) {
    auto result = flourish::parse_scenario(read_file(fixture_path(name)));
    if (!result.ok()) throw std::runtime_error("fixture " + name + " failed to parse");
    return std::move(*result.document);
}

struct CliResult {
    int exit_code = -1;
    std::string output;  // stdout only; stderr goes to the test log
};

inline CliResult run_cli(const std::string& args) {
    const std::string command = std::string(FLOURISH_CLI) + " " + args;
    CliResult result;
    FILE* pipe = popen(command.c_str(), "r");
    if (!pipe) throw std::runtime_error("popen failed for: " + command);
    std::array<char, 4096> chunk{};
    std::size_t got = 0;
    while ((got = fread(chunk.data(), 1, chunk.size(), pipe)) > 0)
        result.output.append(chunk.data(), got);
    const int status = pclose(pipe);
    result.exit_code = (status >= 0 && WIFEXITED(status)) ? WEXITSTATUS(status) : -1;
    return result;
}

// ---- random-document generation --------------------------------------------

inline std::string make_ident(const char* prefix, std::size_t index) {
    return std::string(prefix) + std::to_string(index);
}

inline double random_magnitude(std::mt19937& rng) {
    std::uniform_real_distribution<double> mantissa(-1.0, 1.0);
    std::uniform_int_distribution<int> exponent(-12, 12);
    return std::ldexp(mantissa(rng), exponent(rng));
}

inline flourish::Value random_value(std::mt19937& rng) {
    switch (rng() % 4) {
        case 0: return rng() % 2 == 0;
        case 1: return static_cast<double>(static_cast<int>(rng() % 21) - 10);
        case 2: return random_magnitude(rng);
        default: return std::string("tok") + std::to_string(rng() % 8);
    }
}

// A syntactically valid document drawn from the whole grammar: every
// declaration kind, both desire modes, both provenance tokens, optional
// world scoping and descriptions, reserved-key constraints respected.
inline flourish::ScenarioDocument random_document(std::mt19937& rng) {
    using namespace flourish;
    ScenarioDocument doc;
    doc.name = make_ident("scn", rng() % 1000);

    const std::size_t n_agents = 1 + rng() % 4;
    for (std::size_t i = 0; i < n_agents; ++i) doc.agents.push_back({make_ident("ag", i)});

    const char* keys[] = {"k0", "k1", "k2", "pleasure", "pain", "alive"};
    const std::size_t n_worlds = 1 + rng() % 3;
    for (std::size_t i = 0; i < n_worlds; ++i) {
        World w(make_ident("w", i));
        const std::size_t n_assert = rng() % 13;
        for (std::size_t j = 0; j < n_assert; ++j) {
            std::string subject = rng() % 2 == 0 ? doc.agents[rng() % n_agents].id
                                                 : make_ident("place", rng() % 2);
            std::string key = keys[rng() % 6];
            Tick t = static_cast<Tick>(rng() % 15);
            Value v;
            if (key == "alive")
                v = rng() % 2 == 0;
            else if (key == "pleasure" || key == "pain")
                v = static_cast<double>(rng() % 9);
            else
                v = random_value(rng);
            w.insert({std::move(subject), std::move(key), t}, v);
        }
        doc.worlds.push_back(std::move(w));
    }

    const std::size_t n_desires = rng() % 5;
    for (std::size_t i = 0; i < n_desires; ++i) {
        Desire d;
        d.agent = doc.agents[rng() % n_agents].id;
        d.target.subject = make_ident("place", rng() % 2);
        d.target.key = make_ident("k", rng() % 3);
        if (rng() % 2 == 0) d.target.time = static_cast<Tick>(rng() % 15);
        d.target.value = random_value(rng);
        d.weight = 0.25 + static_cast<double>(rng() % 16) / 4.0;
        d.mode = rng() % 2 == 0 ? DesireMode::concurrent : DesireMode::achievement;
        doc.desires.push_back(std::move(d));
    }

    const std::size_t n_objectives = rng() % 4;
    for (std::size_t i = 0; i < n_objectives; ++i)
        doc.objective_items.push_back({make_ident("k", rng() % 3), random_magnitude(rng),
                                       0.25 + static_cast<double>(rng() % 16) / 4.0});

    const std::size_t n_groups = rng() % 3;
    for (std::size_t i = 0; i < n_groups; ++i) {
        Group g;
        g.id = make_ident("grp", i);
        g.function.id = make_ident("fn", rng() % 4);
        g.function.provenance = rng() % 2 == 0 ? "designed" : "evolved";
        if (rng() % 2 == 0) g.function.description = "purpose " + std::to_string(rng() % 100);
        const std::size_t n_members = rng() % 4;
        for (std::size_t j = 0; j < n_members; ++j) {
            RoleBinding b;
            b.agent = doc.agents[rng() % n_agents].id;
            b.role = make_ident("role", rng() % 3);
            b.group = g.id;
            b.span.start = static_cast<Tick>(rng() % 10);
            b.span.end = b.span.start + static_cast<Tick>(rng() % 10);
            b.optional_context = rng() % 2 == 0;
            g.bindings.push_back(std::move(b));
        }
        doc.groups.push_back(std::move(g));
    }

    if (!doc.groups.empty()) {
        const std::size_t n_activities = rng() % 5;
        for (std::size_t i = 0; i < n_activities; ++i) {
            Activity a;
            a.id = make_ident("act", i);
            a.agent = doc.agents[rng() % n_agents].id;
            a.role = make_ident("role", rng() % 3);
            a.group = doc.groups[rng() % doc.groups.size()].id;
            if (rng() % 2 == 0) a.world = doc.worlds[rng() % n_worlds].id();
            a.time = static_cast<Tick>(rng() % 15);
            a.attempted = rng() % 4 != 0;
            a.realization_degree =
                a.attempted ? static_cast<double>(rng() % 101) / 100.0 : 0.0;
            doc.activities.push_back(std::move(a));
        }
    }

    const std::size_t n_config = rng() % 5;
    for (std::size_t i = 0; i < n_config; ++i)
        doc.config["opt" + std::to_string(i)] = random_value(rng);

    return doc;
}

// ---- fuzz corpus ------------------------------------------------------------

inline std::string random_bytes(std::mt19937& rng) {
    std::uniform_int_distribution<int> len(0, 400);
    std::uniform_int_distribution<int> byte(0, 255);
    std::string s;
    const int n = len(rng);
    s.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) s.push_back(static_cast<char>(byte(rng)));
    return s;
}

inline std::string token_soup(std::mt19937& rng) {
    static const std::vector<std::string> vocab = {
        "scenario", "world",   "assert",     "agent",    "desire",   "wants",
        "weight",   "mode",    "concurrent", "achievement", "objective", ">=",
        "group",    "function", "provenance", "designed", "evolved",  "member",
        "role",     "from",    "to",         "optional", "activity", "time",
        "attempted", "unattempted", "degree", "config",   "{",        "}",
        "@",        "=",       ".",          "true",     "false",    "-3.5",
        "1e999",    "0.0",     "#note",      "\"open",   "x-9",      "any"};
    std::uniform_int_distribution<int> len(0, 120);
    std::string s;
    const int n = len(rng);
    for (int i = 0; i < n; ++i) {
        s += vocab[rng() % vocab.size()];
        s += rng() % 8 == 0 ? "\n" : " ";
    }
    return s;
}

inline std::string mutate_text(std::string s, std::mt19937& rng) {
    if (s.empty()) return s;
    const int edits = 1 + static_cast<int>(rng() % 8);
    for (int i = 0; i < edits; ++i) {
        const std::size_t at = rng() % s.size();
        switch (rng() % 4) {
            case 0: s[at] = static_cast<char>(rng() % 256); break;
            case 1: s.erase(at, rng() % 24); break;
            case 2: s.insert(at, std::string(1 + rng() % 6, static_cast<char>(rng() % 128))); break;
            default: s.insert(at, s.substr(rng() % s.size(), rng() % 40)); break;
        }
        if (s.empty()) break;
    }
    return s;
}

}  // namespace harness
