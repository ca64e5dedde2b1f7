#include "fixtures.hpp"

#include <sstream>

#include "uper/rule_io.hpp"

namespace fixtures {

uper::ComplexEventSequence running_example() {
    return uper::ComplexEventSequence({
        {1, {{B, 2}, {C, 2}}},
        {2, {{A, 3}, {C, 2}, {D, 2}}},
        {3, {{B, 4}, {C, 0}, {E, 6}}},
        {4, {{B, 5}, {F, 2}}},
        {6, {{A, 4}, {C, 3}, {E, 5}}},
    });
}

uper::MiningThresholds absolute(std::int64_t minsup, uper::Ratio minconf, std::int64_t minutil) {
    uper::MiningThresholds t;
    t.minsup = minsup;
    t.minconf = minconf;
    t.minutil = uper::Ratio{minutil, 1};
    return t;
}

std::string describe(const std::vector<uper::Huer>& rules) {
    std::ostringstream out;
    for (const auto& r : rules)
        out << uper::format_rule(r, 0) << " (antecedent sup " << r.antecedent_support << ")\n";
    return out.str();
}

std::string first_difference(const std::vector<uper::Huer>& expected, const std::vector<uper::Huer>& actual) {
    std::size_t i = 0;
    for (; i < expected.size() && i < actual.size(); ++i)
        if (!(expected[i] == actual[i]))
            return "expected " + describe({expected[i]}) + "got      " + describe({actual[i]});
    if (i < expected.size()) return "missing " + describe({expected[i]});
    if (i < actual.size()) return "unexpected " + describe({actual[i]});
    return "";
}

}  // namespace fixtures
