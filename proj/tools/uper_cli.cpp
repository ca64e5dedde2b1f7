#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "uper/bounds.hpp"
#include "uper/memory.hpp"
#include "uper/miner.hpp"
#include "uper/oracle.hpp"
#include "uper/random_instance.hpp"
#include "uper/rule_io.hpp"
#include "uper/sequence.hpp"

namespace {

struct RunConfig {
    std::string mode = "mine";
    std::string input;
    std::optional<std::uint64_t> seed;
    std::int64_t minsup = 1;
    std::string minconf = "0";
    std::string minutil;
    std::string delta;
    uper::SpanConstraints spans;
    int variant = 4;
    std::string reucsp;  // "on" | "off" | ""
    std::string reeup;
    std::string output;
    std::string stats;
    unsigned threads = 1;
    bool disjoint = false;
    bool no_rule_minsup = false;
    bool check_invariants = false;

    uper::MiningThresholds thresholds;
    uper::MinerOptions options;
};

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Everything that can be checked without touching the data.
void validate(RunConfig& cfg) {
    if (cfg.input.empty() && !cfg.seed) throw UsageError("one of --input or --seed is required");
    if (!cfg.input.empty() && cfg.seed) throw UsageError("--input and --seed are mutually exclusive");
    try {
        cfg.spans.validate();
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    if (cfg.mode != "dump-reucs") {
        if (cfg.minutil.empty() == cfg.delta.empty()) throw UsageError("exactly one of --minutil and --delta is required");
        try {
            cfg.thresholds.minsup = cfg.minsup;
            cfg.thresholds.minconf = uper::Ratio::parse(cfg.minconf);
            if (!cfg.minutil.empty()) cfg.thresholds.minutil = uper::Ratio::parse(cfg.minutil);
            if (!cfg.delta.empty()) cfg.thresholds.delta = uper::Ratio::parse(cfg.delta);
            (void)uper::resolve(cfg.thresholds, uper::ComplexEventSequence{});
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
    }
    cfg.options.variant = uper::VariantConfig::uper(cfg.variant);
    if (!cfg.reucsp.empty()) cfg.options.variant.use_reucsp = cfg.reucsp == "on";
    if (!cfg.reeup.empty()) cfg.options.variant.use_reeup = cfg.reeup == "on";
    cfg.options.threads = cfg.threads;
    cfg.options.allow_shared_events = !cfg.disjoint;
    cfg.options.require_rule_minsup = !cfg.no_rule_minsup;
    cfg.options.check_invariants = cfg.check_invariants;
    if (cfg.mode == "oracle" && cfg.no_rule_minsup)
        throw UsageError("--no-rule-minsup has no effect in oracle mode");
}

uper::ComplexEventSequence load(const RunConfig& cfg) {
    if (cfg.seed) return uper::random_instance(*cfg.seed).sequence;
    std::vector<uper::ParseWarning> warnings;
    auto s = uper::load_sequence(cfg.input, &warnings);
    for (const auto& w : warnings) std::cerr << cfg.input << ":" << w.line << ": warning: " << w.message << '\n';
    return s;
}

// Writes to `path`, or stdout when empty.
template <class F>
void emit(const std::string& path, F write) {
    if (path.empty()) {
        write(std::cout);
        std::cout.flush();
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
    write(out);
    if (!out) throw std::runtime_error("write to '" + path + "' failed");
}

uper::StatsRow run_variant(const uper::ComplexEventSequence& s, const RunConfig& cfg, const uper::VariantConfig& v,
                           std::vector<uper::Huer>* rules) {
    auto options = cfg.options;
    options.variant = v;
    uper::reset_peak_memory();
    auto result = uper::mine(s, cfg.thresholds, cfg.spans, options);
    result.stats.peak_memory_bytes = uper::peak_memory_bytes();
    if (cfg.check_invariants && result.stats.invariant_violations)
        std::cerr << v.name() << ": " << result.stats.invariant_violations << " invariant violations\n";
    if (rules) *rules = std::move(result.huers);
    return uper::to_stats_row(v, result.stats);
}

int run(RunConfig& cfg) {
    const auto s = load(cfg);
    if (cfg.mode == "mine") {
        std::vector<uper::Huer> rules;
        const auto row = run_variant(s, cfg, cfg.options.variant, &rules);
        emit(cfg.output, [&](std::ostream& out) { uper::write_rules(out, rules, s.decimals()); });
        if (!cfg.stats.empty()) emit(cfg.stats, [&](std::ostream& out) { uper::write_stats(out, {row}); });
    } else if (cfg.mode == "bench") {
        std::vector<uper::StatsRow> rows;
        std::vector<uper::Huer> first, rules;
        for (int n = 1; n <= 4; ++n) {
            rows.push_back(run_variant(s, cfg, uper::VariantConfig::uper(n), &rules));
            if (n == 1) first = rules;
            else if (rules != first) std::cerr << "warning: UPER" << n << " output differs from UPER1\n";
        }
        emit(cfg.stats, [&](std::ostream& out) { uper::write_stats(out, rows); });
        if (!cfg.output.empty())
            emit(cfg.output, [&](std::ostream& out) { uper::write_rules(out, rules, s.decimals()); });
    } else if (cfg.mode == "oracle") {
        const auto rules = uper::oracle_mine(s, cfg.thresholds, cfg.spans, {}, cfg.options.allow_shared_events);
        emit(cfg.output, [&](std::ostream& out) { uper::write_rules(out, rules, s.decimals()); });
    } else {
        const auto table = uper::build_reucs(s, cfg.spans);
        emit(cfg.output, [&](std::ostream& out) { uper::write_reucs(out, table, s.decimals()); });
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Mine high-utility partially-ordered episode rules from a complex event sequence."};
    RunConfig cfg;
    app.add_option("--mode", cfg.mode, "mine | bench | oracle | dump-reucs")
        ->check(CLI::IsMember({"mine", "bench", "oracle", "dump-reucs"}));
    app.add_option("-i,--input", cfg.input, "sequence file (SPMF utility format)");
    app.add_option("--seed", cfg.seed, "use a random small sequence instead of --input");
    app.add_option("--minsup", cfg.minsup, "minimum support")->check(CLI::PositiveNumber);
    app.add_option("--minconf", cfg.minconf, "minimum confidence, e.g. 0.6 or 2/3");
    app.add_option("--minutil", cfg.minutil, "absolute minimum utility");
    app.add_option("--delta", cfg.delta, "minimum utility as a fraction of the total utility");
    app.add_option("--xspan", cfg.spans.xspan, "maximum antecedent extent")->required();
    app.add_option("--yspan", cfg.spans.yspan, "maximum consequent extent")->required();
    app.add_option("--xyspan", cfg.spans.xyspan, "maximum gap from antecedent end to consequent start")->required();
    app.add_option("--variant", cfg.variant, "1 | 2 | 3 | 4")->check(CLI::Range(1, 4));
    app.add_option("--reucsp", cfg.reucsp, "override REUCS pruning")->check(CLI::IsMember({"on", "off"}));
    app.add_option("--reeup", cfg.reeup, "override REEU pruning")->check(CLI::IsMember({"on", "off"}));
    app.add_option("-o,--output", cfg.output, "rule file (default stdout)");
    app.add_option("--stats", cfg.stats, "statistics CSV (bench: default stdout)");
    app.add_option("--threads", cfg.threads, "worker threads over antecedents")->check(CLI::Range(1u, 1024u));
    app.add_flag("--disjoint", cfg.disjoint, "forbid an event id in both antecedent and consequent");
    app.add_flag("--no-rule-minsup", cfg.no_rule_minsup,
                 "output rules on utility and confidence alone, without the rule support test");
    app.add_flag("--check-invariants", cfg.check_invariants, "count bound invariant violations during mining");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        validate(cfg);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n\n" << app.help();
        return 2;
    }

    try {
        return run(cfg);
    } catch (const uper::ParseError& e) {
        std::cerr << (cfg.input.empty() ? "input" : cfg.input) << ": " << e.what() << '\n';
    } catch (const uper::CapsExceeded& e) {
        std::cerr << "error: " << e.what() << '\n';
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
    }
    return 1;
}
