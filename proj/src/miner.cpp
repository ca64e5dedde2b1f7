#include "uper/miner.hpp"

#include <atomic>
#include <deque>
#include <map>
#include <thread>
#include <unordered_map>
#include <unordered_set>

namespace uper {

namespace {

std::vector<SetOccurrence> single_occurrences(const ComplexEventSequence& s, EventId e) {
    std::vector<SetOccurrence> out;
    for (const auto& slot : s.slots())
        if (const auto* entry = slot.find(e)) out.push_back({slot.timestamp, slot.timestamp, entry->utility});
    return out;
}

// Widens every occurrence by one event found within XSpan of it.
template <class Sink>
void extend_set(const ComplexEventSequence& s, const SetNoList& list, int xspan, Sink&& sink) {
    for (const auto& o : list) {
        for (const auto& slot : s.slots_in(o.end - xspan + 1, o.start + xspan - 1)) {
            for (const auto& entry : slot.entries) {
                sink(entry, SetOccurrence{std::min(o.start, slot.timestamp), std::max(o.end, slot.timestamp),
                                          o.utility + entry.utility});
            }
        }
    }
}

// Single-event consequents after every antecedent occurrence, up to the
// furthest position a completed consequent may reach.
template <class Sink>
void seed_rules(const ComplexEventSequence& s, const SetNoList& antecedent, const SpanConstraints& c, Sink&& sink) {
    for (const auto& x : antecedent) {
        for (const auto& slot : s.slots_in(x.end + 1, x.end + c.xyspan + c.yspan - 2)) {
            for (const auto& entry : slot.entries) {
                sink(entry, RuleOccurrence{x.start, x.end, slot.timestamp, slot.timestamp, x.utility,
                                           x.utility + entry.utility, slot.timestamp - x.end < c.xyspan});
            }
        }
    }
}

// One more consequent event per occurrence, anywhere in its search interval.
template <class Sink>
void expand_rule(const ComplexEventSequence& s, const RuleNoList& rule, const SpanConstraints& c, Sink&& sink) {
    for (const auto& o : rule) {
        auto si = search_interval(o, c);
        for (const auto& slot : s.slots_in(si.start, si.end)) {
            const Timestamp ys = std::min(o.y_start, slot.timestamp);
            for (const auto& entry : slot.entries) {
                sink(entry, o,
                     RuleOccurrence{o.x_start, o.x_end, ys, std::max(o.y_end, slot.timestamp), o.x_utility,
                                    o.utility + entry.utility, ys - o.x_end < c.xyspan});
            }
        }
    }
}

bool contains(const std::vector<EventId>& sorted, EventId e) {
    return std::binary_search(sorted.begin(), sorted.end(), e);
}

struct Candidate {
    std::vector<EventId> consequent;
    RuleNoList occurrences;
    Utility reeu = 0;
};

class AntecedentMiner {
public:
    AntecedentMiner(const ComplexEventSequence& s, const ComplexEventSequence& windows, const ResolvedThresholds& t,
                    const SpanConstraints& c,
                    const Reucs& reucs, const MinerOptions& options, const EventSetEntry& x,
                    const std::unordered_set<EventId>& consequentBlocked, MiningStats& stats,
                    std::vector<CandidateTrace>* trace)
        : s_(s), windows_(windows), t_(t), c_(c), reucs_(reucs), options_(options), x_(x), blocked_(consequentBlocked),
          stats_(stats), trace_(trace) {}

    void run(std::vector<Huer>& out) {
        std::map<EventId, std::vector<RuleOccurrence>> seeds;
        std::vector<EventId> rejected;
        seed_rules(s_, x_.occurrences, c_, [&](const Entry& entry, const RuleOccurrence& o) {
            if (!admissible(entry.event, rejected)) return;
            seeds[entry.event].push_back(o);
        });
        count_rejected(rejected);
        for (auto& [e, occ] : seeds) consider({e}, std::move(occ), nullptr, out);

        // Depth first: the frontier of a wide level does not fit in memory on
        // retail-sized data. Order does not affect results or counts.
        while (!pending_.empty()) {
            Candidate parent = std::move(pending_.back());
            pending_.pop_back();
            expand(parent, out);
        }
    }

private:
    bool admissible(EventId e, std::vector<EventId>& rejected) {
        if (!blocked_.empty() && blocked_.count(e)) return false;
        if (!options_.allow_shared_events && contains(x_.events, e)) return false;
        if (!options_.variant.use_reucsp) return true;
        auto [it, fresh] = gate_.try_emplace(e, true);
        if (fresh) {
            for (EventId a : x_.events) {
                if (!t_.utility_reached(reucs_.at(a, e))) {
                    it->second = false;
                    break;
                }
            }
        }
        if (!it->second) rejected.push_back(e);
        return it->second;
    }

    void count_rejected(std::vector<EventId>& rejected) {
        std::sort(rejected.begin(), rejected.end());
        stats_.pruned_reucsp +=
            static_cast<std::int64_t>(std::unique(rejected.begin(), rejected.end()) - rejected.begin());
    }

    void expand(const Candidate& parent, std::vector<Huer>& out) {
        std::map<EventId, std::vector<RuleOccurrence>> children;
        std::vector<EventId> rejected;
        const EventId last = parent.consequent.back();
        expand_rule(s_, parent.occurrences, c_,
                    [&](const Entry& entry, const RuleOccurrence& from, const RuleOccurrence& to) {
                        if (entry.event <= last || !admissible(entry.event, rejected)) return;
                        if (options_.check_invariants) check_nesting(from, to);
                        children[entry.event].push_back(to);
                    });
        count_rejected(rejected);
        for (auto& [e, occ] : children) {
            auto y = parent.consequent;
            y.push_back(e);
            consider(std::move(y), std::move(occ), &parent, out);
        }
    }

    void check_nesting(const RuleOccurrence& from, const RuleOccurrence& to) {
        auto before = search_interval(from, c_);
        auto after = search_interval(to, c_);
        if (after.start < before.start || after.end > before.end) ++stats_.invariant_violations;
    }

    void consider(std::vector<EventId> consequent, std::vector<RuleOccurrence> occ, const Candidate* parent,
                  std::vector<Huer>& out) {
        Candidate cand{std::move(consequent), RuleNoList(std::move(occ)), 0};
        ++stats_.candidates;
        const bool needReeu = options_.variant.use_reeup || options_.check_invariants || trace_;
        if (needReeu) cand.reeu = reeu_rule(windows_, cand.occurrences, c_);
        if (options_.check_invariants && parent && cand.reeu > parent->reeu) ++stats_.invariant_violations;

        CandidateTrace* tr = nullptr;
        if (trace_) {
            trace_->push_back({x_.events, cand.consequent, cand.reeu, false, false});
            tr = &trace_->back();
        }
        if (options_.variant.use_reeup && !t_.utility_reached(cand.reeu)) {
            ++stats_.pruned_reeup;
            if (tr) tr->pruned_by_reeup = true;
            return;
        }

        auto intervals = measured_intervals(cand.occurrences);
        const auto sup = static_cast<std::int64_t>(group_non_overlapping(intervals).size());
        if (sup > 0 && (!options_.require_rule_minsup || sup >= t_.minsup) &&
            t_.confidence_reached(sup, x_.support)) {
            const Utility u = max_weight_non_overlapping(intervals);
            if (t_.utility_reached(u)) {
                out.push_back({x_.events, cand.consequent, sup, x_.support, u});
                if (tr) tr->output = true;
            }
        }
        pending_.push_back(std::move(cand));
    }

    const ComplexEventSequence& s_;
    const ComplexEventSequence& windows_;  // slot utilities for REEU
    const ResolvedThresholds& t_;
    const SpanConstraints& c_;
    const Reucs& reucs_;
    const MinerOptions& options_;
    const EventSetEntry& x_;
    const std::unordered_set<EventId>& blocked_;
    MiningStats& stats_;
    std::vector<CandidateTrace>* trace_;
    std::unordered_map<EventId, bool> gate_;
    std::vector<Candidate> pending_;
};

}  // namespace

VariantConfig VariantConfig::uper(int n) {
    if (n < 1 || n > 4) throw std::invalid_argument("variant must be 1, 2, 3 or 4");
    return {n == 2 || n == 4, n >= 3};
}

Ratio Huer::confidence() const { return uper::confidence(support, antecedent_support); }

bool canonical_less(const Huer& a, const Huer& b) {
    if (a.antecedent != b.antecedent) return a.antecedent < b.antecedent;
    return a.consequent < b.consequent;
}

void canonical_sort(std::vector<Huer>& rules) { std::sort(rules.begin(), rules.end(), canonical_less); }

MiningStats& MiningStats::operator+=(const MiningStats& o) {
    candidates += o.candidates;
    pruned_reucsp += o.pruned_reucsp;
    pruned_reeup += o.pruned_reeup;
    removed_resp += o.removed_resp;
    removed_weup += o.removed_weup;
    xset_size += o.xset_size;
    invariant_violations += o.invariant_violations;
    huers += o.huers;
    elapsed += o.elapsed;
    peak_memory_bytes = std::max(peak_memory_bytes, o.peak_memory_bytes);
    return *this;
}

PreprocessResult preprocess(const ComplexEventSequence& s, const ResolvedThresholds& t, const SpanConstraints& c) {
    std::unordered_map<EventId, std::int64_t> sup;
    for (const auto& slot : s.slots())
        for (const auto& entry : slot.entries) ++sup[entry.event];
    auto weu = weu_all(s, c);

    PreprocessResult r;
    std::unordered_map<EventId, bool> keep;
    for (EventId e : s.alphabet()) {
        if (sup[e] < t.minsup) {
            r.removed_by_resp.push_back(e);
            keep[e] = false;
        } else if (!t.utility_reached(weu[e])) {
            r.removed_by_weup.push_back(e);
            keep[e] = false;
        } else {
            keep[e] = true;
        }
    }
    r.sequence = s.filtered([&](EventId e) { return keep[e]; });
    return r;
}

SetNoList event_set_occurrences(const ComplexEventSequence& s, const std::vector<EventId>& events, int xspan) {
    if (events.empty()) return {};
    SetNoList list(single_occurrences(s, events.front()));
    for (std::size_t i = 1; i < events.size(); ++i) {
        std::vector<SetOccurrence> next;
        extend_set(s, list, xspan, [&](const Entry& entry, const SetOccurrence& o) {
            if (entry.event == events[i]) next.push_back(o);
        });
        list = SetNoList(std::move(next));
    }
    return list;
}

std::vector<EventSetEntry> mining_xset(const ComplexEventSequence& s, int xspan, std::int64_t minsup) {
    std::vector<EventSetEntry> xset;
    std::deque<std::size_t> pending;
    for (EventId e : s.alphabet()) {
        SetNoList list(single_occurrences(s, e));
        auto sup = support(list);
        if (sup < minsup) continue;
        xset.push_back({{e}, std::move(list), sup});
        pending.push_back(xset.size() - 1);
    }
    while (!pending.empty()) {
        const std::size_t idx = pending.front();
        pending.pop_front();
        const EventId last = xset[idx].events.back();
        std::map<EventId, std::vector<SetOccurrence>> grown;
        extend_set(s, xset[idx].occurrences, xspan, [&](const Entry& entry, const SetOccurrence& o) {
            if (entry.event > last) grown[entry.event].push_back(o);
        });
        for (auto& [e, occ] : grown) {
            SetNoList list(std::move(occ));
            auto sup = support(list);
            if (sup < minsup) continue;
            auto events = xset[idx].events;
            events.push_back(e);
            xset.push_back({std::move(events), std::move(list), sup});
            pending.push_back(xset.size() - 1);
        }
    }
    std::sort(xset.begin(), xset.end(),
              [](const EventSetEntry& a, const EventSetEntry& b) { return a.events < b.events; });
    return xset;
}

RuleNoList seed_rule(const ComplexEventSequence& s, const SetNoList& antecedent, EventId e,
                     const SpanConstraints& c) {
    std::vector<RuleOccurrence> occ;
    seed_rules(s, antecedent, c, [&](const Entry& entry, const RuleOccurrence& o) {
        if (entry.event == e) occ.push_back(o);
    });
    return RuleNoList(std::move(occ));
}

RuleNoList rule_occurrences(const ComplexEventSequence& s, const std::vector<EventId>& antecedent,
                            const std::vector<EventId>& consequent, const SpanConstraints& c) {
    if (antecedent.empty() || consequent.empty()) return {};
    auto list = seed_rule(s, event_set_occurrences(s, antecedent, c.xspan), consequent.front(), c);
    for (std::size_t i = 1; i < consequent.size(); ++i) {
        std::vector<RuleOccurrence> next;
        expand_rule(s, list, c, [&](const Entry& entry, const RuleOccurrence&, const RuleOccurrence& o) {
            if (entry.event == consequent[i]) next.push_back(o);
        });
        list = RuleNoList(std::move(next));
    }
    return list;
}

std::vector<Huer> mining_huers(const ComplexEventSequence& s, const ComplexEventSequence& sy,
                               const std::vector<EventSetEntry>& xset,
                               const ResolvedThresholds& t, const SpanConstraints& c, const Reucs& reucs,
                               const MinerOptions& options, MiningStats& stats,
                               std::vector<CandidateTrace>* trace) {
    // Y.start - X.end < XYSpan has no solution.
    if (c.xyspan < 2 || xset.empty()) return {};

    // Consequent-side RESP: events with support below minsup * minconf.
    std::unordered_set<EventId> blocked;
    {
        std::unordered_map<EventId, std::int64_t> sup;
        for (const auto& slot : sy.slots())
            for (const auto& entry : slot.entries) ++sup[entry.event];
        for (const auto& [e, n] : sup)
            if (static_cast<WideInt>(n) * t.minconf.den < static_cast<WideInt>(t.minsup) * t.minconf.num)
                blocked.insert(e);
    }

    std::vector<std::vector<Huer>> perX(xset.size());
    std::vector<std::vector<CandidateTrace>> traces(trace ? xset.size() : 0);
    const unsigned workers = std::max(1u, std::min<unsigned>(options.threads, static_cast<unsigned>(xset.size())));

    if (workers == 1) {
        for (std::size_t i = 0; i < xset.size(); ++i)
            AntecedentMiner(sy, s, t, c, reucs, options, xset[i], blocked, stats, trace ? &traces[i] : nullptr)
                .run(perX[i]);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<MiningStats> local(workers);
        {
            std::vector<std::jthread> pool;
            for (unsigned w = 0; w < workers; ++w) {
                pool.emplace_back([&, w] {
                    for (std::size_t i = next++; i < xset.size(); i = next++)
                        AntecedentMiner(sy, s, t, c, reucs, options, xset[i], blocked, local[w],
                                        trace ? &traces[i] : nullptr)
                            .run(perX[i]);
                });
            }
        }
        for (const auto& l : local) stats += l;
    }

    std::vector<Huer> out;
    for (auto& v : perX) out.insert(out.end(), std::make_move_iterator(v.begin()), std::make_move_iterator(v.end()));
    if (trace)
        for (auto& v : traces) trace->insert(trace->end(), v.begin(), v.end());
    return out;
}

MiningResult mine(const ComplexEventSequence& s, const MiningThresholds& thresholds, const SpanConstraints& c,
                  const MinerOptions& options, std::vector<CandidateTrace>* trace) {
    const auto started = std::chrono::steady_clock::now();
    c.validate();
    const auto t = resolve(thresholds, s);

    MiningResult result;
    auto pre = preprocess(s, t, c);
    result.stats.removed_resp = static_cast<std::int64_t>(pre.removed_by_resp.size());
    result.stats.removed_weup = static_cast<std::int64_t>(pre.removed_by_weup.size());

    const Reucs reucs = options.variant.use_reucsp ? build_reucs(s, c) : Reucs{};
    const auto xset = mining_xset(pre.sequence, c.xspan, t.minsup);
    result.stats.xset_size = static_cast<std::int64_t>(xset.size());

    result.huers = mining_huers(s, pre.sequence, xset, t, c, reucs, options, result.stats, trace);
    canonical_sort(result.huers);
    result.stats.huers = static_cast<std::int64_t>(result.huers.size());
    result.stats.elapsed = std::chrono::steady_clock::now() - started;
    return result;
}

}  // namespace uper
