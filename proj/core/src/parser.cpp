#include <charconv>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "flourish/scenario.hpp"

namespace flourish {

namespace {

enum class TokKind { ident, number, string, punct, bad, eof };

struct Token {
    TokKind kind = TokKind::eof;
    std::string text;
    int line = 1;
    int column = 1;
    double num = 0.0;
    bool integral = false;
    std::int64_t int_val = 0;
};

bool ident_start(char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_';
}

bool ident_char(char c) {
    return ident_start(c) || (c >= '0' && c <= '9') || c == '-';
}

bool digit(char c) { return c >= '0' && c <= '9'; }

class Lexer {
public:
    explicit Lexer(std::string_view src) : src_(src) {}

    Token next() {
        skip_trivia();
        Token t;
        t.line = line_;
        t.column = column_;
        if (pos_ >= src_.size()) return t;

        char c = src_[pos_];
        if (ident_start(c)) {
            std::size_t start = pos_;
            while (pos_ < src_.size() && ident_char(src_[pos_])) advance();
            t.kind = TokKind::ident;
            t.text = std::string(src_.substr(start, pos_ - start));
            return t;
        }
        if (digit(c) || (c == '-' && pos_ + 1 < src_.size() && digit(src_[pos_ + 1]))) {
            std::size_t start = pos_;
            if (c == '-') advance();
            while (pos_ < src_.size() && digit(src_[pos_])) advance();
            bool fractional = false;
            if (pos_ + 1 < src_.size() && src_[pos_] == '.' && digit(src_[pos_ + 1])) {
                fractional = true;
                advance();
                while (pos_ < src_.size() && digit(src_[pos_])) advance();
            }
            if (pos_ < src_.size() && (src_[pos_] == 'e' || src_[pos_] == 'E')) {
                std::size_t mark = pos_;
                advance();
                if (pos_ < src_.size() && (src_[pos_] == '+' || src_[pos_] == '-')) advance();
                if (pos_ < src_.size() && digit(src_[pos_])) {
                    fractional = true;
                    while (pos_ < src_.size() && digit(src_[pos_])) advance();
                } else {
                    rewind_to(mark);
                }
            }
            t.text = std::string(src_.substr(start, pos_ - start));
            const char* b = t.text.data();
            const char* e = b + t.text.size();
            auto [p, ec] = std::from_chars(b, e, t.num);
            if (ec != std::errc{} || p != e) {
                t.kind = TokKind::bad;
                return t;
            }
            t.kind = TokKind::number;
            if (!fractional) {
                auto [pi, eci] = std::from_chars(b, e, t.int_val);
                t.integral = (eci == std::errc{} && pi == e);
            }
            return t;
        }
        if (c == '"') {
            advance();
            std::size_t start = pos_;
            while (pos_ < src_.size() && src_[pos_] != '"' && src_[pos_] != '\n') advance();
            if (pos_ >= src_.size() || src_[pos_] != '"') {
                t.kind = TokKind::bad;
                t.text = "unterminated string";
                return t;
            }
            t.kind = TokKind::string;
            t.text = std::string(src_.substr(start, pos_ - start));
            advance();
            return t;
        }
        if (c == '>' && pos_ + 1 < src_.size() && src_[pos_ + 1] == '=') {
            advance();
            advance();
            t.kind = TokKind::punct;
            t.text = ">=";
            return t;
        }
        if (c == '{' || c == '}' || c == '.' || c == '@' || c == '=') {
            advance();
            t.kind = TokKind::punct;
            t.text = std::string(1, c);
            return t;
        }
        advance();
        t.kind = TokKind::bad;
        t.text = std::string(1, c);
        return t;
    }

private:
    void advance() {
        if (pos_ < src_.size()) {
            if (src_[pos_] == '\n') {
                ++line_;
                column_ = 1;
            } else {
                ++column_;
            }
            ++pos_;
        }
    }

    void rewind_to(std::size_t mark) {
        // Only used within a single line (exponent backtrack).
        column_ -= static_cast<int>(pos_ - mark);
        pos_ = mark;
    }

    void skip_trivia() {
        while (pos_ < src_.size()) {
            char c = src_[pos_];
            if (c == '#') {
                while (pos_ < src_.size() && src_[pos_] != '\n') advance();
            } else if (c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\f' ||
                       c == '\v') {
                advance();
            } else {
                break;
            }
        }
    }

    std::string_view src_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int column_ = 1;
};

const std::set<std::string, std::less<>> kTopKeywords = {
    "world", "agent", "desire", "objective", "group", "activity", "config"};

class Parser {
public:
    explicit Parser(std::string_view src) : lexer_(src) { shift(); }

    ParseResult run() {
        parse_scenario_header();
        while (tok_.kind != TokKind::eof) parse_block();
        finish();

        ParseResult result;
        result.diagnostics = std::move(diagnostics_);
        if (!has_errors(result.diagnostics)) result.document = std::move(doc_);
        return result;
    }

private:
    void shift() { tok_ = lexer_.next(); }

    void error_at(const Token& t, std::string code, std::string message) {
        diagnostics_.push_back({ParseDiagnostic::Severity::error, t.line, t.column,
                                std::move(code), std::move(message)});
    }

    void syntax(const std::string& expected) {
        std::string got = tok_.kind == TokKind::eof ? "end of input"
                          : tok_.text.empty()       ? "token"
                                                    : "'" + tok_.text + "'";
        error_at(tok_, "syntax", "expected " + expected + ", got " + got);
    }

    // Panic-mode recovery: drop tokens until a plausible declaration start.
    void recover_to_top() {
        int depth = 0;
        while (tok_.kind != TokKind::eof) {
            if (tok_.kind == TokKind::punct && tok_.text == "{") ++depth;
            if (tok_.kind == TokKind::punct && tok_.text == "}") {
                shift();
                if (depth <= 1) return;
                --depth;
                continue;
            }
            if (depth == 0 && tok_.kind == TokKind::ident && kTopKeywords.contains(tok_.text))
                return;
            shift();
        }
    }

    bool expect_keyword(const char* kw) {
        if (tok_.kind == TokKind::ident && tok_.text == kw) {
            shift();
            return true;
        }
        syntax(std::string("'") + kw + "'");
        return false;
    }

    bool expect_punct(const char* p) {
        if (tok_.kind == TokKind::punct && tok_.text == p) {
            shift();
            return true;
        }
        syntax(std::string("'") + p + "'");
        return false;
    }

    bool expect_ident(std::string& out, const char* what) {
        if (tok_.kind == TokKind::ident) {
            out = tok_.text;
            shift();
            return true;
        }
        syntax(what);
        return false;
    }

    bool expect_int(Tick& out, const char* what) {
        if (tok_.kind == TokKind::number && tok_.integral) {
            out = tok_.int_val;
            shift();
            return true;
        }
        syntax(what);
        return false;
    }

    bool expect_number(double& out, const char* what) {
        if (tok_.kind == TokKind::number) {
            out = tok_.num;
            shift();
            return true;
        }
        syntax(what);
        return false;
    }

    bool expect_value(Value& out) {
        if (tok_.kind == TokKind::number) {
            out = tok_.num;
            shift();
            return true;
        }
        if (tok_.kind == TokKind::ident) {
            if (tok_.text == "true") out = true;
            else if (tok_.text == "false") out = false;
            else out = tok_.text;
            shift();
            return true;
        }
        syntax("a value (number, identifier, true, or false)");
        return false;
    }

    void parse_scenario_header() {
        if (!expect_keyword("scenario") || !expect_ident(doc_.name, "scenario name"))
            recover_to_top();
    }

    void parse_block() {
        if (tok_.kind != TokKind::ident) {
            syntax("a declaration keyword");
            recover_to_top();
            return;
        }
        const std::string kw = tok_.text;
        if (kw == "world") parse_world();
        else if (kw == "agent") parse_agent();
        else if (kw == "desire") parse_desire();
        else if (kw == "objective") parse_objective();
        else if (kw == "group") parse_group();
        else if (kw == "activity") parse_activity();
        else if (kw == "config") parse_config();
        else {
            syntax("a declaration keyword");
            recover_to_top();
        }
    }

    void check_reserved(const Token& at, const AssertionKey& key, const Value& v) {
        if (key.key == "pleasure" || key.key == "pain") {
            if (!std::holds_alternative<double>(v) || std::get<double>(v) < 0.0)
                error_at(at, "bad-value",
                         key.key + " must carry a non-negative number, got " + format_value(v));
        } else if (key.key == "alive") {
            if (!std::holds_alternative<bool>(v))
                error_at(at, "bad-value", "alive must carry a boolean, got " + format_value(v));
        }
    }

    void parse_world() {
        shift();
        World w;
        std::string id;
        if (!expect_ident(id, "world id") || !expect_punct("{")) {
            recover_to_top();
            return;
        }
        w = World(id);
        std::map<AssertionKey, int> first_line;
        while (!(tok_.kind == TokKind::punct && tok_.text == "}")) {
            if (tok_.kind == TokKind::eof) {
                syntax("'}' closing world " + id);
                return;
            }
            Token at = tok_;
            if (!(tok_.kind == TokKind::ident && tok_.text == "assert")) {
                syntax("'assert' or '}'");
                recover_to_top();
                return;
            }
            shift();
            AssertionKey key;
            Value v;
            if (!expect_ident(key.subject, "assertion subject") || !expect_punct(".") ||
                !expect_ident(key.key, "assertion key") || !expect_punct("@") ||
                !expect_int(key.time, "tick") || !expect_punct("=") || !expect_value(v)) {
                recover_to_top();
                return;
            }
            if (key.time < 0) {
                error_at(at, "bad-value", "negative tick " + std::to_string(key.time));
                continue;
            }
            check_reserved(at, key, v);
            auto [it, fresh] = first_line.emplace(key, at.line);
            if (!w.insert(key, v) || !fresh)
                error_at(at, "dup-assert",
                         key.subject + "." + key.key + "@" + std::to_string(key.time) +
                             " already asserted at line " + std::to_string(it->second));
        }
        shift();
        doc_.worlds.push_back(std::move(w));
    }

    void parse_agent() {
        shift();
        Agent a;
        if (!expect_ident(a.id, "agent id")) {
            recover_to_top();
            return;
        }
        doc_.agents.push_back(std::move(a));
    }

    void parse_desire() {
        Token at = tok_;
        shift();
        Desire d;
        if (!expect_ident(d.agent, "desiring agent") || !expect_keyword("wants") ||
            !expect_ident(d.target.subject, "target subject") || !expect_punct(".") ||
            !expect_ident(d.target.key, "target key") || !expect_punct("@")) {
            recover_to_top();
            return;
        }
        if (tok_.kind == TokKind::ident && tok_.text == "any") {
            shift();
        } else {
            Tick t = 0;
            if (!expect_int(t, "tick or 'any'")) {
                recover_to_top();
                return;
            }
            d.target.time = t;
        }
        if (!expect_punct("=") || !expect_value(d.target.value) || !expect_keyword("weight") ||
            !expect_number(d.weight, "desire weight")) {
            recover_to_top();
            return;
        }
        if (tok_.kind == TokKind::ident && tok_.text == "mode") {
            shift();
            if (tok_.kind == TokKind::ident && tok_.text == "concurrent") {
                d.mode = DesireMode::concurrent;
                shift();
            } else if (tok_.kind == TokKind::ident && tok_.text == "achievement") {
                d.mode = DesireMode::achievement;
                shift();
            } else {
                syntax("'concurrent' or 'achievement'");
                recover_to_top();
                return;
            }
        }
        if (!(d.weight > 0.0))
            error_at(at, "bad-value", "desire weight must be positive, got " +
                                          format_number(d.weight));
        doc_.desires.push_back(std::move(d));
    }

    void parse_objective() {
        Token at = tok_;
        shift();
        ObjectiveItem item;
        if (!expect_ident(item.key, "objective key") || !expect_punct(">=") ||
            !expect_number(item.threshold, "threshold") || !expect_keyword("weight") ||
            !expect_number(item.weight, "objective weight")) {
            recover_to_top();
            return;
        }
        if (!(item.weight > 0.0))
            error_at(at, "bad-value", "objective weight must be positive, got " +
                                          format_number(item.weight));
        doc_.objective_items.push_back(std::move(item));
    }

    void parse_group() {
        Token at = tok_;
        shift();
        Group g;
        std::vector<SourcePos> member_pos;
        if (!expect_ident(g.id, "group id") || !expect_punct("{")) {
            recover_to_top();
            return;
        }
        if (!expect_keyword("function") || !expect_ident(g.function.id, "function id") ||
            !expect_keyword("provenance")) {
            recover_to_top();
            return;
        }
        Token prov = tok_;
        if (!expect_ident(g.function.provenance, "'designed' or 'evolved'")) {
            recover_to_top();
            return;
        }
        if (g.function.provenance != "designed" && g.function.provenance != "evolved")
            error_at(prov, "bad-value",
                     "provenance must be designed or evolved, got " + g.function.provenance);
        if (tok_.kind == TokKind::ident && tok_.text == "description") {
            shift();
            if (tok_.kind != TokKind::string) {
                syntax("a quoted description");
                recover_to_top();
                return;
            }
            g.function.description = tok_.text;
            shift();
        }
        while (tok_.kind == TokKind::ident && tok_.text == "member") {
            Token mat = tok_;
            shift();
            RoleBinding b;
            b.group = g.id;
            if (!expect_ident(b.agent, "member agent") || !expect_keyword("role") ||
                !expect_ident(b.role, "role id") || !expect_keyword("from") ||
                !expect_int(b.span.start, "span start") || !expect_keyword("to") ||
                !expect_int(b.span.end, "span end")) {
                recover_to_top();
                return;
            }
            b.optional_context = false;
            if (tok_.kind == TokKind::ident && tok_.text == "optional") {
                b.optional_context = true;
                shift();
            }
            g.bindings.push_back(std::move(b));
            member_pos.push_back({mat.line, mat.column});
        }
        if (!expect_punct("}")) {
            recover_to_top();
            return;
        }
        doc_.groups.push_back(std::move(g));
        doc_.group_pos.push_back({at.line, at.column});
        doc_.binding_pos.push_back(std::move(member_pos));
    }

    void parse_activity() {
        Token at = tok_;
        shift();
        Activity a;
        if (!expect_ident(a.id, "activity id") || !expect_punct("{") ||
            !expect_keyword("agent") || !expect_ident(a.agent, "agent id") ||
            !expect_keyword("role") || !expect_ident(a.role, "role id") ||
            !expect_keyword("group") || !expect_ident(a.group, "group id")) {
            recover_to_top();
            return;
        }
        if (tok_.kind == TokKind::ident && tok_.text == "world") {
            shift();
            std::string wid;
            if (!expect_ident(wid, "world id")) {
                recover_to_top();
                return;
            }
            a.world = wid;
        }
        if (!expect_keyword("time") || !expect_int(a.time, "tick")) {
            recover_to_top();
            return;
        }
        if (tok_.kind == TokKind::ident && (tok_.text == "attempted" || tok_.text == "unattempted")) {
            a.attempted = tok_.text == "attempted";
            shift();
        } else {
            syntax("'attempted' or 'unattempted'");
            recover_to_top();
            return;
        }
        if (!expect_keyword("degree") || !expect_number(a.realization_degree, "degree") ||
            !expect_punct("}")) {
            recover_to_top();
            return;
        }
        if (a.realization_degree < 0.0 || a.realization_degree > 1.0)
            error_at(at, "bad-value", "realization degree must lie in [0,1], got " +
                                          format_number(a.realization_degree));
        else if (!a.attempted && a.realization_degree != 0.0)
            error_at(at, "bad-value", "unattempted activity must have degree 0, got " +
                                          format_number(a.realization_degree));
        doc_.activities.push_back(std::move(a));
        doc_.activity_pos.push_back({at.line, at.column});
    }

    void parse_config() {
        Token at = tok_;
        shift();
        std::string key;
        Value v;
        if (!expect_ident(key, "config key") || !expect_punct("=") || !expect_value(v)) {
            recover_to_top();
            return;
        }
        if (!doc_.config.emplace(key, std::move(v)).second)
            error_at(at, "dup-decl", "config " + key + " declared twice");
    }

    template <typename Range, typename IdOf>
    void check_unique(const Range& range, IdOf id_of, const char* kind) {
        std::set<std::string> seen;
        for (const auto& item : range)
            if (!seen.insert(id_of(item)).second)
                diagnostics_.push_back({ParseDiagnostic::Severity::error, 0, 0, "dup-decl",
                                        std::string(kind) + " " + id_of(item) +
                                            " declared more than once"});
    }

    void unresolved(const std::string& what) {
        diagnostics_.push_back(
            {ParseDiagnostic::Severity::error, 0, 0, "unresolved", what});
    }

    void finish() {
        if (doc_.worlds.empty() && !has_errors(diagnostics_))
            diagnostics_.push_back({ParseDiagnostic::Severity::error, 1, 1, "syntax",
                                    "scenario declares no world"});

        check_unique(doc_.worlds, [](const World& w) { return w.id(); }, "world");
        check_unique(doc_.agents, [](const Agent& a) { return a.id; }, "agent");
        check_unique(doc_.groups, [](const Group& g) { return g.id; }, "group");
        check_unique(doc_.activities, [](const Activity& a) { return a.id; }, "activity");

        std::set<std::string> agent_ids, group_ids, world_ids;
        for (const auto& a : doc_.agents) agent_ids.insert(a.id);
        for (const auto& g : doc_.groups) group_ids.insert(g.id);
        for (const auto& w : doc_.worlds) world_ids.insert(w.id());

        for (const auto& d : doc_.desires)
            if (!agent_ids.contains(d.agent))
                unresolved("desire names undeclared agent " + d.agent);
        for (const auto& g : doc_.groups)
            for (const auto& b : g.bindings)
                if (!agent_ids.contains(b.agent))
                    unresolved("member " + b.agent + " of " + g.id + " is not a declared agent");
        for (const auto& a : doc_.activities) {
            if (!agent_ids.contains(a.agent))
                unresolved("activity " + a.id + " names undeclared agent " + a.agent);
            if (!group_ids.contains(a.group))
                unresolved("activity " + a.id + " names undeclared group " + a.group);
            if (a.world && !world_ids.contains(*a.world))
                unresolved("activity " + a.id + " names undeclared world " + *a.world);
        }
    }

    Lexer lexer_;
    Token tok_;
    ScenarioDocument doc_;
    std::vector<ParseDiagnostic> diagnostics_;
};

}  // namespace

ParseResult parse_scenario(std::string_view source) {
    return Parser(source).run();
}

}  // namespace flourish
