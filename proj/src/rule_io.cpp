#include "uper/rule_io.hpp"

#include <charconv>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>

namespace uper {

namespace {

std::string format_set(const std::vector<EventId>& events) {
    std::string out = "{";
    for (std::size_t i = 0; i < events.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(events[i]);
    }
    return out + "}";
}

template <class T>
bool parse_number(std::string_view text, T& value) {
    auto [p, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    return ec == std::errc{} && p == text.data() + text.size();
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

std::vector<EventId> parse_set(std::string_view text, std::size_t line) {
    text = trim(text);
    if (text.size() < 2 || text.front() != '{' || text.back() != '}') throw ParseError(line, "expected {ids}");
    text = text.substr(1, text.size() - 2);
    std::vector<EventId> out;
    while (!text.empty()) {
        const auto comma = text.find(',');
        EventId e = 0;
        if (!parse_number(trim(text.substr(0, comma)), e)) throw ParseError(line, "bad event id");
        out.push_back(e);
        if (comma == std::string_view::npos) break;
        text.remove_prefix(comma + 1);
    }
    if (out.empty()) throw ParseError(line, "empty event set");
    return out;
}

// "0.666667" -> 666667
std::int64_t parse_micros(std::string_view text, std::size_t line) {
    const auto dot = text.find('.');
    std::int64_t whole = 0, frac = 0;
    if (!parse_number(text.substr(0, dot), whole)) throw ParseError(line, "bad confidence");
    if (dot != std::string_view::npos) {
        auto digits = text.substr(dot + 1);
        if (digits.empty() || digits.size() > 6 || !parse_number(digits, frac)) throw ParseError(line, "bad confidence");
        for (auto i = digits.size(); i < 6; ++i) frac *= 10;
    }
    return whole * 1'000'000 + frac;
}

Utility parse_fixed(std::string_view text, int& decimals, std::size_t line) {
    const auto dot = text.find('.');
    std::int64_t whole = 0, frac = 0;
    if (!parse_number(text.substr(0, dot), whole)) throw ParseError(line, "bad utility");
    decimals = 0;
    if (dot != std::string_view::npos) {
        auto digits = text.substr(dot + 1);
        if (digits.empty() || !parse_number(digits, frac)) throw ParseError(line, "bad utility");
        decimals = static_cast<int>(digits.size());
    }
    for (int i = 0; i < decimals; ++i) whole *= 10;
    return whole + frac;
}

std::string_view field_after(std::string_view line, std::string_view tag, std::size_t lineno) {
    const auto at = line.find(tag);
    if (at == std::string_view::npos) throw ParseError(lineno, "missing " + std::string(tag));
    auto rest = line.substr(at + tag.size());
    const auto next = rest.find('#');
    return trim(rest.substr(0, next));
}

}  // namespace

std::int64_t confidence_micros(std::int64_t rule_support, std::int64_t antecedent_support) {
    if (antecedent_support <= 0) return 0;
    const WideInt n = static_cast<WideInt>(rule_support) * 2'000'000 + antecedent_support;
    return static_cast<std::int64_t>(n / (2 * static_cast<WideInt>(antecedent_support)));
}

RuleRecord to_record(const Huer& r, int decimals) {
    return {r.antecedent, r.consequent, r.support, confidence_micros(r.support, r.antecedent_support), r.utility,
            decimals};
}

std::string format_record(const RuleRecord& r) {
    char conf[32];
    std::snprintf(conf, sizeof conf, "%lld.%06lld", static_cast<long long>(r.confidence_micros / 1'000'000),
                  static_cast<long long>(r.confidence_micros % 1'000'000));
    return format_set(r.antecedent) + " -> " + format_set(r.consequent) + " #SUP: " + std::to_string(r.support) +
           " #CONF: " + conf + " #UTIL: " + format_utility(r.utility, r.decimals);
}

std::string format_rule(const Huer& r, int decimals) { return format_record(to_record(r, decimals)); }

void write_rules(std::ostream& out, const std::vector<Huer>& rules, int decimals) {
    out << "# antecedent -> consequent #SUP #CONF #UTIL; rules: " << rules.size() << "\n";
    for (const auto& r : rules) out << format_rule(r, decimals) << '\n';
}

std::vector<RuleRecord> read_rules(std::istream& in) {
    std::vector<RuleRecord> out;
    std::string raw;
    std::size_t lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        const auto line = trim(raw);
        if (line.empty() || line.front() == '#') continue;
        const auto arrow = line.find("->");
        const auto hash = line.find('#');
        if (arrow == std::string_view::npos || hash == std::string_view::npos || hash < arrow)
            throw ParseError(lineno, "expected '{X} -> {Y} #SUP: ...'");
        RuleRecord r;
        r.antecedent = parse_set(line.substr(0, arrow), lineno);
        r.consequent = parse_set(line.substr(arrow + 2, hash - arrow - 2), lineno);
        if (!parse_number(field_after(line, "#SUP:", lineno), r.support)) throw ParseError(lineno, "bad support");
        r.confidence_micros = parse_micros(field_after(line, "#CONF:", lineno), lineno);
        r.utility = parse_fixed(field_after(line, "#UTIL:", lineno), r.decimals, lineno);
        out.push_back(std::move(r));
    }
    return out;
}

StatsRow to_stats_row(const VariantConfig& v, const MiningStats& s) {
    return {v.name(),
            s.candidates,
            s.pruned_reucsp,
            s.pruned_reeup,
            s.removed_resp,
            s.removed_weup,
            s.huers,
            std::chrono::duration<double, std::milli>(s.elapsed).count(),
            s.peak_memory_bytes};
}

std::string format_stats_row(const StatsRow& r) {
    char ms[64];
    std::snprintf(ms, sizeof ms, "%.3f", r.elapsed_ms);
    std::ostringstream out;
    out << r.variant << ',' << r.candidates << ',' << r.pruned_reucsp << ',' << r.pruned_reeup << ','
        << r.removed_resp << ',' << r.removed_weup << ',' << r.huers << ',' << ms << ',' << r.peak_mem_bytes;
    return out.str();
}

void write_stats(std::ostream& out, const std::vector<StatsRow>& rows) {
    out << kStatsHeader << '\n';
    for (const auto& r : rows) out << format_stats_row(r) << '\n';
}

std::vector<StatsRow> read_stats(std::istream& in) {
    std::vector<StatsRow> rows;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (lineno == 1) {
            if (line != kStatsHeader) throw ParseError(lineno, "unexpected stats header");
            continue;
        }
        std::vector<std::string> f;
        std::stringstream ss(line);
        for (std::string cell; std::getline(ss, cell, ',');) f.push_back(cell);
        if (f.size() != 9) throw ParseError(lineno, "expected 9 fields");
        StatsRow r;
        r.variant = f[0];
        std::int64_t* ints[] = {&r.candidates, &r.pruned_reucsp, &r.pruned_reeup, &r.removed_resp, &r.removed_weup,
                                &r.huers};
        for (int i = 0; i < 6; ++i)
            if (!parse_number(f[1 + i], *ints[i])) throw ParseError(lineno, "bad integer field");
        try {
            std::size_t used = 0;
            r.elapsed_ms = std::stod(f[7], &used);
            if (used != f[7].size()) throw ParseError(lineno, "bad elapsed_ms");
        } catch (const std::logic_error&) {
            throw ParseError(lineno, "bad elapsed_ms");
        }
        if (!parse_number(f[8], r.peak_mem_bytes)) throw ParseError(lineno, "bad peak_mem_bytes");
        rows.push_back(std::move(r));
    }
    return rows;
}

void write_reucs(std::ostream& out, const Reucs& table, int decimals) {
    out << "a,b,value\n";
    for (const auto& c : table.cells()) out << c.a << ',' << c.b << ',' << format_utility(c.value, decimals) << '\n';
}

}  // namespace uper
