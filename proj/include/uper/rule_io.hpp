#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "uper/bounds.hpp"
#include "uper/miner.hpp"

namespace uper {

// One line per rule:
//   {1,2} -> {3} #SUP: 2 #CONF: 0.666667 #UTIL: 21
// Confidence is rounded half up to six places; utility is printed with the
// sequence's decimals.
std::string format_rule(const Huer& r, int decimals);

// A '#' comment line first, then one line per rule.
void write_rules(std::ostream& out, const std::vector<Huer>& rules, int decimals);

// What a rule line carries; confidence is in millionths.
struct RuleRecord {
    std::vector<EventId> antecedent;
    std::vector<EventId> consequent;
    std::int64_t support = 0;
    std::int64_t confidence_micros = 0;
    Utility utility = 0;
    int decimals = 0;

    friend bool operator==(const RuleRecord&, const RuleRecord&) = default;
};

RuleRecord to_record(const Huer& r, int decimals);
std::string format_record(const RuleRecord& r);

// Skips comment and blank lines. Throws ParseError on malformed lines.
std::vector<RuleRecord> read_rules(std::istream& in);

std::int64_t confidence_micros(std::int64_t rule_support, std::int64_t antecedent_support);

struct StatsRow {
    std::string variant;
    std::int64_t candidates = 0;
    std::int64_t pruned_reucsp = 0;
    std::int64_t pruned_reeup = 0;
    std::int64_t removed_resp = 0;
    std::int64_t removed_weup = 0;
    std::int64_t huers = 0;
    double elapsed_ms = 0;
    std::int64_t peak_mem_bytes = 0;
};

StatsRow to_stats_row(const VariantConfig& v, const MiningStats& s);

inline constexpr const char* kStatsHeader =
    "variant,candidates,pruned_reucsp,pruned_reeup,removed_resp,removed_weup,huers,elapsed_ms,peak_mem_bytes";

std::string format_stats_row(const StatsRow& r);
void write_stats(std::ostream& out, const std::vector<StatsRow>& rows);
std::vector<StatsRow> read_stats(std::istream& in);

// "a,b,value" rows ordered by (a, b).
void write_reucs(std::ostream& out, const Reucs& table, int decimals);

}  // namespace uper
