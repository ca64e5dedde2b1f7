#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace uper {

using EventId = std::uint32_t;
using Timestamp = std::int64_t;

// Utilities are fixed-point: an integer count of 10^-decimals units, where
// `decimals` belongs to the owning sequence. Integral datasets use decimals = 0.
using Utility = std::int64_t;

__extension__ typedef __int128 WideInt;

struct Entry {
    EventId event = 0;
    Utility utility = 0;

    friend bool operator==(const Entry&, const Entry&) = default;
};

// Events that occur together at one time point. Entries are kept sorted by
// event id and never repeat an id.
struct TimeSlot {
    Timestamp timestamp = 0;
    std::vector<Entry> entries;

    Utility total() const;
    const Entry* find(EventId e) const;

    friend bool operator==(const TimeSlot&, const TimeSlot&) = default;
};

class SequenceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what);
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

// A single complex event sequence. Immutable after construction.
class ComplexEventSequence {
public:
    ComplexEventSequence() = default;

    // Throws SequenceError when timestamps are not strictly increasing and
    // positive, a slot is empty, an id repeats inside a slot or a utility is
    // negative. Entries are sorted by id on the way in.
    explicit ComplexEventSequence(std::vector<TimeSlot> slots, int decimals = 0);

    std::span<const TimeSlot> slots() const { return slots_; }
    const std::vector<EventId>& alphabet() const { return alphabet_; }
    int decimals() const { return decimals_; }
    bool empty() const { return slots_.empty(); }
    std::size_t size() const { return slots_.size(); }

    Timestamp first_timestamp() const;
    Timestamp last_timestamp() const;

    Utility total_utility() const { return prefix_.empty() ? 0 : prefix_.back(); }

    // 0 for gaps and positions outside the sequence.
    Utility slot_utility(Timestamp t) const;

    // Sum of slot utilities over [lo, hi]; 0 when lo > hi.
    Utility window_utility(Timestamp lo, Timestamp hi) const;

    // Slots whose timestamp lies in [lo, hi].
    std::span<const TimeSlot> slots_in(Timestamp lo, Timestamp hi) const;

    const TimeSlot* find(Timestamp t) const;

    // Copy keeping only the events for which keep(e) is true; slots left
    // empty are dropped.
    template <class Pred>
    ComplexEventSequence filtered(Pred keep) const {
        std::vector<TimeSlot> out;
        out.reserve(slots_.size());
        for (const auto& slot : slots_) {
            TimeSlot s{slot.timestamp, {}};
            for (const auto& entry : slot.entries)
                if (keep(entry.event)) s.entries.push_back(entry);
            if (!s.entries.empty()) out.push_back(std::move(s));
        }
        return ComplexEventSequence(std::move(out), decimals_);
    }

    friend bool operator==(const ComplexEventSequence& a, const ComplexEventSequence& b) {
        return a.decimals_ == b.decimals_ && a.slots_ == b.slots_;
    }

private:
    std::size_t lower_index(Timestamp t) const;

    std::vector<TimeSlot> slots_;
    std::vector<Utility> prefix_;  // prefix_[i] = sum of totals of slots_[0..i]
    std::vector<EventId> alphabet_;
    int decimals_ = 0;
};

// Time-duration constraints of a rule. winspan() bounds Y.end - X.start.
struct SpanConstraints {
    int xspan = 1;
    int yspan = 1;
    int xyspan = 1;

    int winspan() const { return xspan + yspan + xyspan - 3; }
    void validate() const;
};

inline int win_span(const SpanConstraints& c) { return c.winspan(); }

// Exact non-negative rational, used for minconf, delta and absolute minutil.
struct Ratio {
    std::int64_t num = 0;
    std::int64_t den = 1;

    // Accepts "3", "0.004", "2/3".
    static Ratio parse(std::string_view text);
    double value() const { return static_cast<double>(num) / static_cast<double>(den); }
    std::string to_string() const;
};

struct MiningThresholds {
    std::int64_t minsup = 1;
    Ratio minconf{0, 1};
    std::optional<Ratio> minutil;  // absolute, in utility units
    std::optional<Ratio> delta;    // fraction of u(S)
};

// minutil held as a rational over the sequence's fixed-point units.
struct UtilityThreshold {
    WideInt num = 0;
    std::int64_t den = 1;

    bool reached_by(Utility u) const { return static_cast<WideInt>(u) * den >= num; }
    double value() const { return static_cast<double>(num) / static_cast<double>(den); }
};

struct ResolvedThresholds {
    std::int64_t minsup = 1;
    Ratio minconf{0, 1};
    UtilityThreshold minutil;

    bool utility_reached(Utility u) const { return minutil.reached_by(u); }
    // rule_support / antecedent_support >= minconf, exactly.
    bool confidence_reached(std::int64_t rule_support, std::int64_t antecedent_support) const {
        return static_cast<WideInt>(rule_support) * minconf.den >=
               static_cast<WideInt>(minconf.num) * antecedent_support;
    }
};

// Validates and converts minutil/delta into fixed-point units of `s`.
ResolvedThresholds resolve(const MiningThresholds& t, const ComplexEventSequence& s);

struct ParseWarning {
    std::size_t line;
    std::string message;
};

// SPMF utility format, one slot per line: "ids:total:utilities", with an
// optional "timestamp|" prefix. Lines starting with '#', '%' or '@' and blank
// lines are skipped. Slot total mismatches are reported through `warnings`.
ComplexEventSequence parse_sequence(std::string_view text,
                                    std::vector<ParseWarning>* warnings = nullptr);
ComplexEventSequence load_sequence(const std::string& path,
                                   std::vector<ParseWarning>* warnings = nullptr);

// Inverse of parse_sequence. Timestamp prefixes are written only when the
// timestamps are not exactly 1..n.
std::string serialize_sequence(const ComplexEventSequence& s);

std::string format_utility(Utility u, int decimals);

}  // namespace uper
