#pragma once

#include <chrono>
#include <cstdint>
#include <string>
#include <vector>

#include "uper/bounds.hpp"
#include "uper/occurrence.hpp"
#include "uper/sequence.hpp"

namespace uper {

// RESP and WEUP are always on; the two switches select UPER1..UPER4.
struct VariantConfig {
    bool use_reucsp = true;
    bool use_reeup = true;

    static VariantConfig uper(int n);  // 1..4
    int number() const { return 1 + (use_reucsp ? 1 : 0) + (use_reeup ? 2 : 0); }
    std::string name() const { return "UPER" + std::to_string(number()); }

    friend bool operator==(const VariantConfig&, const VariantConfig&) = default;
};

struct MinerOptions {
    VariantConfig variant;
    // Require sup(r) >= minsup for output. When false, rules are output on
    // utility and confidence alone.
    bool require_rule_minsup = true;
    // Allow an event id in both X and Y.
    bool allow_shared_events = true;
    // Check REEU anti-monotonicity and search-interval nesting on every
    // expansion; violations are counted in MiningStats.
    bool check_invariants = false;
    unsigned threads = 1;
};

struct EventSetEntry {
    std::vector<EventId> events;  // strictly ascending
    SetNoList occurrences;
    std::int64_t support = 0;
};

struct Huer {
    std::vector<EventId> antecedent;
    std::vector<EventId> consequent;
    std::int64_t support = 0;
    std::int64_t antecedent_support = 0;
    Utility utility = 0;

    Ratio confidence() const;

    friend bool operator==(const Huer&, const Huer&) = default;
};

// Orders by antecedent, then consequent, lexicographically by event id.
bool canonical_less(const Huer& a, const Huer& b);
void canonical_sort(std::vector<Huer>& rules);

struct MiningStats {
    std::int64_t candidates = 0;
    std::int64_t pruned_reucsp = 0;
    std::int64_t pruned_reeup = 0;
    std::int64_t removed_resp = 0;
    std::int64_t removed_weup = 0;
    std::int64_t xset_size = 0;
    std::int64_t invariant_violations = 0;
    std::int64_t huers = 0;
    std::chrono::nanoseconds elapsed{0};
    std::int64_t peak_memory_bytes = 0;

    MiningStats& operator+=(const MiningStats& o);
};

struct PreprocessResult {
    ComplexEventSequence sequence;
    std::vector<EventId> removed_by_resp;
    std::vector<EventId> removed_by_weup;
};

// Drops every event with sup(e) < minsup (RESP) or WEU(e) < minutil (WEUP).
PreprocessResult preprocess(const ComplexEventSequence& s, const ResolvedThresholds& t, const SpanConstraints& c);

// Every event set with non-overlapping support >= minsup, with its NoList.
// Sorted lexicographically by events.
std::vector<EventSetEntry> mining_xset(const ComplexEventSequence& s, int xspan, std::int64_t minsup);

// Optional per-rule trace, used by tests to observe pruning decisions.
struct CandidateTrace {
    std::vector<EventId> antecedent;
    std::vector<EventId> consequent;
    Utility reeu = 0;
    bool pruned_by_reeup = false;
    bool output = false;
};

// Rule mining over the antecedents in `xset`. `sy` is the preprocessed
// sequence that occurrences are drawn from; REEU sums slot utilities of the
// original `s`. `reucs` is read when the variant enables REUCSP.
std::vector<Huer> mining_huers(const ComplexEventSequence& s, const ComplexEventSequence& sy,
                               const std::vector<EventSetEntry>& xset,
                               const ResolvedThresholds& t, const SpanConstraints& c, const Reucs& reucs,
                               const MinerOptions& options, MiningStats& stats,
                               std::vector<CandidateTrace>* trace = nullptr);

struct MiningResult {
    std::vector<Huer> huers;
    MiningStats stats;
};

// preprocess -> mining_xset -> mining_huers. Result sorted canonically.
MiningResult mine(const ComplexEventSequence& s, const MiningThresholds& thresholds, const SpanConstraints& c,
                  const MinerOptions& options = {}, std::vector<CandidateTrace>* trace = nullptr);

// Occurrences of X -> {e} seeded from every antecedent occurrence; keyed by e.
// Exposed for tests and bound inspection.
RuleNoList seed_rule(const ComplexEventSequence& s, const SetNoList& antecedent, EventId e,
                     const SpanConstraints& c);

// Occurrences of X -> Y built directly by seeding and expansion along Y's
// ascending order. Empty when Y is empty.
RuleNoList rule_occurrences(const ComplexEventSequence& s, const std::vector<EventId>& antecedent,
                            const std::vector<EventId>& consequent, const SpanConstraints& c);

// NoList of an event set within `xspan`, by repeated extension.
SetNoList event_set_occurrences(const ComplexEventSequence& s, const std::vector<EventId>& events, int xspan);

}  // namespace uper
