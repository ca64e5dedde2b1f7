#include "uper/random_instance.hpp"

#include <algorithm>
#include <random>

namespace uper {

namespace {

class Draw {
public:
    explicit Draw(std::uint64_t seed) : rng_(seed) {}

    // Uniform in [lo, hi].
    std::int64_t between(std::int64_t lo, std::int64_t hi) {
        return lo + static_cast<std::int64_t>(rng_() % static_cast<std::uint64_t>(hi - lo + 1));
    }
    bool chance(int percent) { return between(1, 100) <= percent; }

private:
    std::mt19937_64 rng_;
};

}  // namespace

RandomInstance random_instance(std::uint64_t seed, const RandomInstanceOptions& options) {
    Draw draw(seed);
    const auto slots = draw.between(1, options.max_slots);
    const auto events = draw.between(1, options.max_events);
    const auto density = static_cast<int>(draw.between(25, 75));

    std::vector<TimeSlot> out;
    Timestamp t = 0;
    for (std::int64_t i = 0; i < slots; ++i) {
        t += draw.chance(15) ? 2 : 1;
        TimeSlot slot{t, {}};
        for (std::int64_t e = 1; e <= events; ++e)
            if (draw.chance(density))
                slot.entries.push_back({static_cast<EventId>(e), draw.between(1, options.max_utility)});
        if (slot.entries.empty())
            slot.entries.push_back({static_cast<EventId>(draw.between(1, events)), draw.between(1, options.max_utility)});
        out.push_back(std::move(slot));
    }

    RandomInstance inst;
    inst.sequence = ComplexEventSequence(std::move(out));
    inst.spans.xspan = static_cast<int>(draw.between(1, options.max_span));
    inst.spans.yspan = static_cast<int>(draw.between(1, options.max_span));
    inst.spans.xyspan = static_cast<int>(draw.between(options.min_xyspan, options.max_span));

    static constexpr Ratio kConfidences[] = {{0, 1}, {1, 4}, {1, 3}, {1, 2}, {2, 3}, {1, 1}};
    inst.thresholds.minsup = draw.between(1, options.max_minsup);
    inst.thresholds.minconf = kConfidences[draw.between(0, 5)];
    const Utility total = inst.sequence.total_utility();
    if (draw.chance(20)) {
        inst.thresholds.delta = Ratio{draw.between(0, 40), 100};
    } else {
        inst.thresholds.minutil = Ratio{draw.between(0, std::max<Utility>(1, total / 2)), 1};
    }
    return inst;
}

}  // namespace uper

namespace uper {

ComplexEventSequence synthetic_transactions(std::uint64_t seed, int slots, int items, double mean_length) {
    std::mt19937_64 rng(seed);
    std::vector<double> weights(static_cast<std::size_t>(items));
    for (int i = 0; i < items; ++i) weights[static_cast<std::size_t>(i)] = 1.0 / (i + 10.0);
    std::discrete_distribution<int> pick(weights.begin(), weights.end());
    std::poisson_distribution<int> length(mean_length - 1);
    std::uniform_int_distribution<int> quantity(1, 5), price(1, 20);

    std::vector<int> unit(static_cast<std::size_t>(items));
    for (auto& p : unit) p = price(rng);

    std::vector<TimeSlot> out;
    out.reserve(static_cast<std::size_t>(slots));
    for (int t = 1; t <= slots; ++t) {
        TimeSlot slot{t, {}};
        const int n = std::min(items, 1 + length(rng));
        while (static_cast<int>(slot.entries.size()) < n) {
            const auto e = static_cast<EventId>(pick(rng) + 1);
            if (slot.find(e)) continue;
            slot.entries.push_back({e, static_cast<Utility>(quantity(rng)) * unit[e - 1]});
            std::sort(slot.entries.begin(), slot.entries.end(),
                      [](const Entry& a, const Entry& b) { return a.event < b.event; });
        }
        out.push_back(std::move(slot));
    }
    return ComplexEventSequence(std::move(out));
}

}  // namespace uper
