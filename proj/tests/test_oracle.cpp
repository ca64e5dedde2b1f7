#include <doctest.h>

#include <map>

#include "fixtures.hpp"
#include "uper/oracle.hpp"
#include "uper/random_instance.hpp"

using namespace uper;
using namespace fixtures;

namespace {

const OracleCaps kSix{12, 6, 3};

const OracleRule* find(const std::vector<OracleRule>& rules, std::vector<EventId> x, std::vector<EventId> y) {
    for (const auto& r : rules)
        if (r.antecedent == x && r.consequent == y) return &r;
    return nullptr;
}

// Renames events by a permutation and keeps everything else.
ComplexEventSequence relabel(const ComplexEventSequence& s, const std::map<EventId, EventId>& to) {
    std::vector<TimeSlot> slots;
    for (const auto& slot : s.slots()) {
        TimeSlot t{slot.timestamp, {}};
        for (const auto& e : slot.entries) t.entries.push_back({to.at(e.event), e.utility});
        slots.push_back(std::move(t));
    }
    return ComplexEventSequence(std::move(slots), s.decimals());
}

std::vector<EventId> mapped(const std::vector<EventId>& v, const std::map<EventId, EventId>& to) {
    std::vector<EventId> out;
    for (auto e : v) out.push_back(to.at(e));
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

TEST_CASE("oracle refuses inputs beyond its caps") {
    std::vector<TimeSlot> slots;
    for (Timestamp t = 1; t <= 13; ++t) slots.push_back({t, {{1, 1}}});
    CHECK_THROWS_AS(enumerate_all_rules(ComplexEventSequence(slots), {1, 1, 2}), CapsExceeded);
    CHECK_THROWS_AS(enumerate_all_rules(running_example(), {1, 1, 2}), CapsExceeded);  // six events
    CHECK_NOTHROW(enumerate_all_rules(running_example(), {1, 1, 2}, kSix));
}

TEST_CASE("a single time point has no rules") {
    const auto s = ComplexEventSequence({{4, {{1, 3}, {2, 4}, {3, 5}}}});
    CHECK(enumerate_all_rules(s, {4, 4, 4}).empty());
    CHECK(enumerate_all_rules(ComplexEventSequence{}, {4, 4, 4}).empty());
}

TEST_CASE("oracle reproduces the running example") {
    const auto s = running_example();
    const auto narrow = enumerate_all_rules(s, {1, 1, 3}, kSix);
    const auto* bc = find(narrow, {B}, {C});
    REQUIRE(bc);
    CHECK(bc->support == 2);
    CHECK(bc->antecedent_support == 3);
    CHECK(bc->utility == 12);
    CHECK(find(narrow, {B}, {C, E})->utility == 21);

    const auto wide = enumerate_all_rules(s, {3, 3, 3}, kSix);
    // Over valid occurrences only: 26 + REEU at [T4,T6].
    CHECK(find(wide, {B}, {C})->reeu == 43);

    const auto mined = oracle_mine(s, absolute(2, {3, 5}, 20), {1, 1, 3}, kSix);
    std::vector<Huer> withB;
    for (const auto& r : mined)
        if (r.antecedent == std::vector<EventId>{B}) withB.push_back(r);
    REQUIRE(withB.size() == 1);
    CHECK(withB[0].consequent == std::vector<EventId>{C, E});
}

TEST_CASE("simultaneous consequent events respect YSpan") {
    // X at 1, Y events at 2 and 4: needs YSpan >= 3.
    const auto s = ComplexEventSequence({{1, {{1, 1}}}, {2, {{2, 1}}}, {4, {{3, 1}}}});
    CHECK_FALSE(find(enumerate_all_rules(s, {1, 2, 3}), {1}, {2, 3}));
    CHECK(find(enumerate_all_rules(s, {1, 3, 3}), {1}, {2, 3}));
    // And the first consequent event must come within XYSpan of X.
    CHECK_FALSE(find(enumerate_all_rules(s, {1, 3, 1}), {1}, {2, 3}));
}

TEST_CASE("disjoint mode forbids shared events") {
    const auto s = ComplexEventSequence({{1, {{1, 2}}}, {2, {{1, 3}}}});
    CHECK(find(enumerate_all_rules(s, {1, 1, 2}), {1}, {1}));
    CHECK(enumerate_all_rules(s, {1, 1, 2}, {}, false).empty());
}

TEST_CASE("property: relabeling events relabels the rules") {
    for (std::uint64_t seed = 1; seed <= 150; ++seed) {
        const auto inst = random_instance(seed);
        const auto& alphabet = inst.sequence.alphabet();
        std::map<EventId, EventId> to;
        for (std::size_t i = 0; i < alphabet.size(); ++i) to[alphabet[i]] = alphabet[alphabet.size() - 1 - i] + 10;
        const auto a = oracle_mine(inst.sequence, inst.thresholds, inst.spans);
        const auto b = oracle_mine(relabel(inst.sequence, to), inst.thresholds, inst.spans);
        REQUIRE(a.size() == b.size());
        std::vector<Huer> renamed;
        for (auto r : a) {
            r.antecedent = mapped(r.antecedent, to);
            r.consequent = mapped(r.consequent, to);
            renamed.push_back(r);
        }
        canonical_sort(renamed);
        REQUIRE(renamed == b);
    }
}

TEST_CASE("property: shifting time changes nothing") {
    for (std::uint64_t seed = 1; seed <= 150; ++seed) {
        const auto inst = random_instance(seed);
        std::vector<TimeSlot> shifted;
        for (const auto& slot : inst.sequence.slots()) shifted.push_back({slot.timestamp + 7, slot.entries});
        REQUIRE(oracle_mine(inst.sequence, inst.thresholds, inst.spans) ==
                oracle_mine(ComplexEventSequence(shifted), inst.thresholds, inst.spans));
    }
}
