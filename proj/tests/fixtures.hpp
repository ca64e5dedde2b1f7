#pragma once

#include <string>
#include <vector>

#include "uper/miner.hpp"
#include "uper/sequence.hpp"

namespace fixtures {

inline constexpr uper::EventId A = 1, B = 2, C = 3, D = 4, E = 5, F = 6;

// The six-event running example: slot totals 4, 7, 10, 7, 12 at T1..T4 and
// T6, nothing at T5.
uper::ComplexEventSequence running_example();

uper::MiningThresholds absolute(std::int64_t minsup, uper::Ratio minconf, std::int64_t minutil);

std::string describe(const std::vector<uper::Huer>& rules);

// First mismatching rule, or "" when both lists are equal.
std::string first_difference(const std::vector<uper::Huer>& expected, const std::vector<uper::Huer>& actual);

}  // namespace fixtures
