// Desk-scale run on the Foodmart retail dataset (4,141 time points) with
// minsup 2, minconf 0.3 and spans 2/4/4. All four variants run a delta sweep
// high enough for UPER1 and UPER2 to finish; UPER3 and UPER4 also run at low
// delta, where rules actually appear.
//
//   acceptance_dataset             real dataset, from $UPER_FOODMART or
//                                  $UPER_DATA_DIR/foodmart.txt
//   acceptance_dataset --synthetic a generated sequence of the same shape
//
// Asserts completion under 10 minutes per variant, identical output across
// the variants run and candidate-count monotonicity, with UPER3 below UPER1.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <string>
#include <vector>

#include "uper/memory.hpp"
#include "uper/miner.hpp"
#include "uper/random_instance.hpp"

using namespace uper;

namespace {

constexpr double kLimitSeconds = 600;

std::string dataset_path() {
    if (const char* p = std::getenv("UPER_FOODMART")) return p;
    if (const char* d = std::getenv("UPER_DATA_DIR")) return std::string(d) + "/foodmart.txt";
    return "data/foodmart.txt";
}

int sweep(const ComplexEventSequence& s, const std::string& label) {
    std::printf("%s: %zu time points, %zu events, total utility %lld\n", label.c_str(), s.size(),
                s.alphabet().size(), static_cast<long long>(s.total_utility()));
    const SpanConstraints spans{2, 4, 4};
    int failures = 0;
    auto fail = [&](const std::string& what) {
        std::printf("  FAIL: %s\n", what.c_str());
        ++failures;
    };
    auto run = [&](const char* delta, const std::vector<int>& variants) {
        MiningThresholds t;
        t.minsup = 2;
        t.minconf = Ratio{3, 10};
        t.delta = Ratio::parse(delta);
        std::vector<Huer> first;
        std::int64_t cand[5] = {};
        for (int v : variants) {
            MinerOptions o;
            o.variant = VariantConfig::uper(v);
            reset_peak_memory();
            const auto res = mine(s, t, spans, o);
            const double secs = std::chrono::duration<double>(res.stats.elapsed).count();
            cand[v] = res.stats.candidates;
            std::printf("  delta %-7s UPER%d  %8.2fs  candidates %11lld  huers %5lld  peak %lld MiB\n", delta, v,
                        secs, static_cast<long long>(res.stats.candidates), static_cast<long long>(res.stats.huers),
                        static_cast<long long>(peak_memory_bytes() >> 20));
            std::fflush(stdout);
            if (secs > kLimitSeconds) fail("UPER" + std::to_string(v) + " exceeded the time limit");
            if (v == variants.front()) first = res.huers;
            else if (res.huers != first) fail("UPER" + std::to_string(v) + " output differs");
        }
        if (variants.size() == 4 &&
            !(cand[2] <= cand[1] && cand[3] < cand[1] && cand[4] <= std::min(cand[2], cand[3])))
            fail("candidate counts not monotone");
        if (variants.size() == 2 && cand[4] > cand[3]) fail("UPER4 generated more candidates than UPER3");
    };
    for (const char* delta : {"0.5", "0.2", "0.1"}) run(delta, {1, 2, 3, 4});
    for (const char* delta : {"0.005", "0.003"}) run(delta, {3, 4});
    return failures;
}

}  // namespace

int main(int argc, char** argv) {
    const bool synthetic = argc > 1 && std::string(argv[1]) == "--synthetic";
    int failures = 0;
    if (synthetic) {
        failures = sweep(synthetic_transactions(7, 4141, 1559, 4.4), "synthetic retail-shaped sequence");
        std::printf("dataset-scale synthetic run: %s\n", failures ? "FAIL" : "PASS");
        return failures;
    }
    const auto path = dataset_path();
    if (!std::filesystem::exists(path)) {
        std::printf("criterion 6: FAIL  Foodmart dataset not found at %s (set UPER_FOODMART)\n", path.c_str());
        return 1;
    }
    failures = sweep(load_sequence(path), "foodmart");
    std::printf("criterion 6: %s  Foodmart delta sweep, all four variants\n", failures ? "FAIL" : "PASS");
    return failures;
}
