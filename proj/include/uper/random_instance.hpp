#pragma once

#include <cstdint>

#include "uper/sequence.hpp"

namespace uper {

// Small random mining problems for differential testing and `--seed` runs.
struct RandomInstanceOptions {
    int max_slots = 12;
    int max_events = 5;
    int max_utility = 10;
    int max_span = 4;
    int min_xyspan = 2;
    std::int64_t max_minsup = 3;
};

struct RandomInstance {
    ComplexEventSequence sequence;
    SpanConstraints spans;
    MiningThresholds thresholds;
};

// Deterministic for a given seed and options.
RandomInstance random_instance(std::uint64_t seed, const RandomInstanceOptions& options = {});

}  // namespace uper

namespace uper {

// Transaction-style sequence with skewed item popularity, one slot per time
// point: `slots` slots over `items` distinct events with about `mean_length`
// events each; utilities are quantity * unit price.
ComplexEventSequence synthetic_transactions(std::uint64_t seed, int slots, int items, double mean_length);

}  // namespace uper
