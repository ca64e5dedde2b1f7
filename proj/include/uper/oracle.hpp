#pragma once

#include <stdexcept>
#include <vector>

#include "uper/miner.hpp"
#include "uper/sequence.hpp"

namespace uper {

// Brute-force reference miner. Evaluates the definitions directly by trying
// every assignment of positions to events; shares no code with the miner's
// occurrence lists, grouping or bounds.

struct OracleCaps {
    std::size_t max_slots = 12;
    std::size_t max_alphabet = 5;
    std::size_t max_set_size = 3;  // per side
};

class CapsExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct OracleRule {
    std::vector<EventId> antecedent;
    std::vector<EventId> consequent;
    std::int64_t support = 0;
    std::int64_t antecedent_support = 0;
    Utility utility = 0;
    Utility reeu = 0;  // over valid occurrences
};

// Every rule with at least one valid occurrence, sorted canonically.
std::vector<OracleRule> enumerate_all_rules(const ComplexEventSequence& s, const SpanConstraints& c,
                                            const OracleCaps& caps = {}, bool allow_shared_events = true);

std::vector<Huer> oracle_mine(const ComplexEventSequence& s, const MiningThresholds& thresholds,
                              const SpanConstraints& c, const OracleCaps& caps = {},
                              bool allow_shared_events = true);

}  // namespace uper
