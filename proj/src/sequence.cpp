#include "uper/sequence.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <limits>
#include <numeric>
#include <sstream>

namespace uper {

namespace {

constexpr int kMaxDecimals = 6;

std::int64_t pow10(int d) {
    std::int64_t p = 1;
    while (d-- > 0) p *= 10;
    return p;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

std::vector<std::string_view> split_ws(std::string_view s) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
        std::size_t j = i;
        while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
        if (j > i) out.push_back(s.substr(i, j - i));
        i = j;
    }
    return out;
}

// A non-negative decimal literal split into integer and fraction digits.
struct DecimalToken {
    std::string_view whole;
    std::string_view frac;
};

std::optional<DecimalToken> split_decimal(std::string_view tok) {
    if (tok.empty()) return std::nullopt;
    auto dot = tok.find('.');
    DecimalToken d{tok.substr(0, dot), dot == std::string_view::npos ? std::string_view{} : tok.substr(dot + 1)};
    auto digits = [](std::string_view s) {
        return std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
    };
    if (d.whole.empty() && d.frac.empty()) return std::nullopt;
    if (!digits(d.whole) || !digits(d.frac)) return std::nullopt;
    return d;
}

std::optional<std::int64_t> to_fixed(const DecimalToken& d, int decimals) {
    std::int64_t whole = 0;
    if (!d.whole.empty()) {
        auto [p, ec] = std::from_chars(d.whole.data(), d.whole.data() + d.whole.size(), whole);
        if (ec != std::errc{}) return std::nullopt;
    }
    std::int64_t frac = 0;
    for (int i = 0; i < decimals; ++i) {
        frac = frac * 10 + (i < static_cast<int>(d.frac.size()) ? d.frac[i] - '0' : 0);
    }
    const std::int64_t scale = pow10(decimals);
    if (whole > (std::numeric_limits<std::int64_t>::max() - frac) / scale) return std::nullopt;
    return whole * scale + frac;
}

struct RawLine {
    std::size_t line;
    std::optional<Timestamp> timestamp;
    std::vector<std::string_view> ids;
    std::string_view total;
    std::vector<std::string_view> utilities;
};

}  // namespace

Utility TimeSlot::total() const {
    Utility sum = 0;
    for (const auto& e : entries) sum += e.utility;
    return sum;
}

const Entry* TimeSlot::find(EventId e) const {
    auto it = std::lower_bound(entries.begin(), entries.end(), e,
                               [](const Entry& a, EventId id) { return a.event < id; });
    return it != entries.end() && it->event == e ? &*it : nullptr;
}

ParseError::ParseError(std::size_t line, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

ComplexEventSequence::ComplexEventSequence(std::vector<TimeSlot> slots, int decimals)
    : slots_(std::move(slots)), decimals_(decimals) {
    if (decimals < 0 || decimals > kMaxDecimals) throw SequenceError("unsupported decimal scale");
    prefix_.reserve(slots_.size());
    Utility running = 0;
    for (std::size_t i = 0; i < slots_.size(); ++i) {
        auto& slot = slots_[i];
        if (slot.timestamp < 1) throw SequenceError("timestamps must be positive");
        if (i > 0 && slot.timestamp <= slots_[i - 1].timestamp)
            throw SequenceError("timestamps must be strictly increasing");
        if (slot.entries.empty()) throw SequenceError("empty time slot at " + std::to_string(slot.timestamp));
        std::sort(slot.entries.begin(), slot.entries.end(),
                  [](const Entry& a, const Entry& b) { return a.event < b.event; });
        for (std::size_t k = 0; k < slot.entries.size(); ++k) {
            if (slot.entries[k].utility < 0) throw SequenceError("negative utility");
            if (k > 0 && slot.entries[k].event == slot.entries[k - 1].event)
                throw SequenceError("event " + std::to_string(slot.entries[k].event) + " repeated at " +
                                    std::to_string(slot.timestamp));
            alphabet_.push_back(slot.entries[k].event);
        }
        running += slot.total();
        prefix_.push_back(running);
    }
    std::sort(alphabet_.begin(), alphabet_.end());
    alphabet_.erase(std::unique(alphabet_.begin(), alphabet_.end()), alphabet_.end());
}

Timestamp ComplexEventSequence::first_timestamp() const {
    return slots_.empty() ? 0 : slots_.front().timestamp;
}

Timestamp ComplexEventSequence::last_timestamp() const {
    return slots_.empty() ? 0 : slots_.back().timestamp;
}

std::size_t ComplexEventSequence::lower_index(Timestamp t) const {
    auto it = std::lower_bound(slots_.begin(), slots_.end(), t,
                               [](const TimeSlot& s, Timestamp v) { return s.timestamp < v; });
    return static_cast<std::size_t>(it - slots_.begin());
}

const TimeSlot* ComplexEventSequence::find(Timestamp t) const {
    auto i = lower_index(t);
    return i < slots_.size() && slots_[i].timestamp == t ? &slots_[i] : nullptr;
}

Utility ComplexEventSequence::slot_utility(Timestamp t) const {
    const auto* slot = find(t);
    return slot ? slot->total() : 0;
}

Utility ComplexEventSequence::window_utility(Timestamp lo, Timestamp hi) const {
    if (lo > hi) return 0;
    auto a = lower_index(lo);
    auto b = lower_index(hi + 1);
    if (a >= b) return 0;
    return prefix_[b - 1] - (a == 0 ? 0 : prefix_[a - 1]);
}

std::span<const TimeSlot> ComplexEventSequence::slots_in(Timestamp lo, Timestamp hi) const {
    if (lo > hi) return {};
    auto a = lower_index(lo);
    auto b = lower_index(hi + 1);
    if (a >= b) return {};
    return std::span<const TimeSlot>(slots_).subspan(a, b - a);
}

void SpanConstraints::validate() const {
    if (xspan < 1 || yspan < 1 || xyspan < 1)
        throw std::invalid_argument("xspan, yspan and xyspan must all be >= 1");
}

Ratio Ratio::parse(std::string_view text) {
    text = trim(text);
    auto fail = [&]() -> Ratio { throw std::invalid_argument("not a non-negative number: '" + std::string(text) + "'"); };
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        Ratio r;
        auto n = text.substr(0, slash), d = text.substr(slash + 1);
        if (std::from_chars(n.data(), n.data() + n.size(), r.num).ec != std::errc{}) return fail();
        if (std::from_chars(d.data(), d.data() + d.size(), r.den).ec != std::errc{}) return fail();
        if (r.num < 0 || r.den <= 0) return fail();
        return r;
    }
    auto d = split_decimal(text);
    if (!d || d->frac.size() > 12) return fail();
    const int decimals = static_cast<int>(d->frac.size());
    auto v = to_fixed(*d, decimals);
    if (!v) return fail();
    std::int64_t den = pow10(decimals);
    std::int64_t g = std::gcd(*v, den);
    return Ratio{*v / g, den / g};
}

std::string Ratio::to_string() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
}

ResolvedThresholds resolve(const MiningThresholds& t, const ComplexEventSequence& s) {
    if (t.minsup < 1) throw std::invalid_argument("minsup must be >= 1");
    if (t.minconf.den <= 0 || t.minconf.num < 0 || t.minconf.num > t.minconf.den)
        throw std::invalid_argument("minconf must lie in [0, 1]");
    if (t.minutil.has_value() == t.delta.has_value())
        throw std::invalid_argument("exactly one of minutil and delta must be given");
    ResolvedThresholds r;
    r.minsup = t.minsup;
    r.minconf = t.minconf;
    if (t.minutil) {
        if (t.minutil->num < 0 || t.minutil->den <= 0) throw std::invalid_argument("minutil must be >= 0");
        r.minutil.num = static_cast<WideInt>(t.minutil->num) * pow10(s.decimals());
        r.minutil.den = t.minutil->den;
    } else {
        if (t.delta->den <= 0 || t.delta->num < 0 || t.delta->num > t.delta->den)
            throw std::invalid_argument("delta must lie in [0, 1]");
        r.minutil.num = static_cast<WideInt>(t.delta->num) * s.total_utility();
        r.minutil.den = t.delta->den;
    }
    return r;
}

ComplexEventSequence parse_sequence(std::string_view text, std::vector<ParseWarning>* warnings) {
    std::vector<RawLine> lines;
    int decimals = 0;
    std::size_t lineno = 0;
    std::size_t pos = 0;
    auto note_decimals = [&](std::string_view tok, std::size_t ln, const char* what) {
        auto d = split_decimal(tok);
        if (!d) throw ParseError(ln, std::string("invalid ") + what + " '" + std::string(tok) + "'" +
                                         (!tok.empty() && tok.front() == '-' ? " (negative utility)" : ""));
        if (static_cast<int>(d->frac.size()) > kMaxDecimals)
            throw ParseError(ln, "more than 6 decimal places in '" + std::string(tok) + "'");
        decimals = std::max(decimals, static_cast<int>(d->frac.size()));
    };

    while (pos <= text.size()) {
        auto nl = text.find('\n', pos);
        auto raw = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
        pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        ++lineno;
        auto line = trim(raw);
        if (line.empty() || line.front() == '#' || line.front() == '%' || line.front() == '@') continue;

        RawLine rl{lineno, std::nullopt, {}, {}, {}};
        if (auto bar = line.find('|'); bar != std::string_view::npos) {
            auto ts = trim(line.substr(0, bar));
            Timestamp t = 0;
            auto [end, ec] = std::from_chars(ts.data(), ts.data() + ts.size(), t);
            if (ec != std::errc{} || end != ts.data() + ts.size() || t < 1)
                throw ParseError(lineno, "invalid timestamp prefix '" + std::string(ts) + "'");
            rl.timestamp = t;
            line = trim(line.substr(bar + 1));
        }
        auto c1 = line.find(':');
        auto c2 = c1 == std::string_view::npos ? c1 : line.find(':', c1 + 1);
        if (c2 == std::string_view::npos || line.find(':', c2 + 1) != std::string_view::npos)
            throw ParseError(lineno, "expected '<ids>:<total>:<utilities>'");
        rl.ids = split_ws(line.substr(0, c1));
        rl.total = trim(line.substr(c1 + 1, c2 - c1 - 1));
        rl.utilities = split_ws(line.substr(c2 + 1));
        if (rl.ids.empty()) throw ParseError(lineno, "no events");
        if (rl.ids.size() != rl.utilities.size())
            throw ParseError(lineno, std::to_string(rl.ids.size()) + " events but " +
                                         std::to_string(rl.utilities.size()) + " utilities");
        for (auto u : rl.utilities) note_decimals(u, lineno, "utility");
        if (!rl.total.empty()) note_decimals(rl.total, lineno, "slot total");
        lines.push_back(std::move(rl));
    }

    std::vector<TimeSlot> slots;
    slots.reserve(lines.size());
    Timestamp previous = 0;
    for (const auto& rl : lines) {
        TimeSlot slot;
        slot.timestamp = rl.timestamp.value_or(previous + 1);
        if (slot.timestamp <= previous)
            throw ParseError(rl.line, "timestamp " + std::to_string(slot.timestamp) + " not after " +
                                          std::to_string(previous));
        previous = slot.timestamp;
        for (std::size_t k = 0; k < rl.ids.size(); ++k) {
            EventId id = 0;
            auto tok = rl.ids[k];
            auto [end, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), id);
            if (ec != std::errc{} || end != tok.data() + tok.size())
                throw ParseError(rl.line, "invalid event id '" + std::string(tok) + "'");
            auto u = to_fixed(*split_decimal(rl.utilities[k]), decimals);
            if (!u) throw ParseError(rl.line, "utility out of range");
            slot.entries.push_back({id, *u});
        }
        std::sort(slot.entries.begin(), slot.entries.end(),
                  [](const Entry& a, const Entry& b) { return a.event < b.event; });
        for (std::size_t k = 1; k < slot.entries.size(); ++k)
            if (slot.entries[k].event == slot.entries[k - 1].event)
                throw ParseError(rl.line, "event " + std::to_string(slot.entries[k].event) + " listed twice");
        if (warnings && !rl.total.empty()) {
            auto declared = to_fixed(*split_decimal(rl.total), decimals);
            if (!declared || *declared != slot.total())
                warnings->push_back({rl.line, "slot total " + std::string(rl.total) + " differs from sum " +
                                                  format_utility(slot.total(), decimals)});
        }
        slots.push_back(std::move(slot));
    }
    return ComplexEventSequence(std::move(slots), decimals);
}

ComplexEventSequence load_sequence(const std::string& path, std::vector<ParseWarning>* warnings) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_sequence(buf.str(), warnings);
}

std::string serialize_sequence(const ComplexEventSequence& s) {
    bool implicit = true;
    for (std::size_t i = 0; i < s.size(); ++i)
        if (s.slots()[i].timestamp != static_cast<Timestamp>(i + 1)) implicit = false;
    std::string out;
    for (const auto& slot : s.slots()) {
        if (!implicit) out += std::to_string(slot.timestamp) + "|";
        for (std::size_t k = 0; k < slot.entries.size(); ++k) {
            if (k) out += ' ';
            out += std::to_string(slot.entries[k].event);
        }
        out += ':' + format_utility(slot.total(), s.decimals()) + ':';
        for (std::size_t k = 0; k < slot.entries.size(); ++k) {
            if (k) out += ' ';
            out += format_utility(slot.entries[k].utility, s.decimals());
        }
        out += '\n';
    }
    return out;
}

std::string format_utility(Utility u, int decimals) {
    if (decimals == 0) return std::to_string(u);
    const std::int64_t scale = pow10(decimals);
    std::string frac = std::to_string(u % scale);
    frac.insert(0, static_cast<std::size_t>(decimals) - frac.size(), '0');
    return std::to_string(u / scale) + "." + frac;
}

}  // namespace uper
