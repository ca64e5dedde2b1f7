#include <doctest.h>

#include "fixtures.hpp"
#include "uper/random_instance.hpp"
#include "uper/sequence.hpp"

using namespace uper;

TEST_CASE("parse: one slot per line, timestamps follow line order") {
    const auto s = parse_sequence("1 2:5:2 3\n3:4:4\n");
    REQUIRE(s.size() == 2);
    CHECK(s.slots()[0].timestamp == 1);
    CHECK(s.slots()[1].timestamp == 2);
    CHECK(s.slots()[0].entries == std::vector<Entry>{{1, 2}, {2, 3}});
    CHECK(s.total_utility() == 9);
    CHECK(s.alphabet() == std::vector<EventId>{1, 2, 3});
}

TEST_CASE("parse: comments, blank lines and explicit timestamps") {
    const auto text = "# header\n% meta\n@CONVERTED\n\n1|2 3:4:2 2\n2|1 3 4:7:3 2 2\n3|2 3 5:10:4 0 6\n"
                      "4|2 6:7:5 2\n6|1 3 5:12:4 3 5\n";
    const auto s = parse_sequence(text);
    CHECK(s == fixtures::running_example());
    CHECK(s.slot_utility(5) == 0);
    CHECK(s.find(5) == nullptr);
    CHECK(s.total_utility() == 40);
}

TEST_CASE("parse: unprefixed line after a gap continues from the previous timestamp") {
    const auto s = parse_sequence("5|1:1:1\n2:2:2\n");
    CHECK(s.slots()[1].timestamp == 6);
}

TEST_CASE("parse: entries are sorted by event id") {
    const auto s = parse_sequence("9 3 5:6:1 2 3\n");
    CHECK(s.slots()[0].entries == std::vector<Entry>{{3, 2}, {5, 3}, {9, 1}});
}

TEST_CASE("parse: decimal utilities become fixed point at the largest scale seen") {
    const auto s = parse_sequence("1 2:1.5:0.25 1.25\n3:2:2\n");
    CHECK(s.decimals() == 2);
    CHECK(s.slots()[0].entries[0].utility == 25);
    CHECK(s.slots()[1].entries[0].utility == 200);
    CHECK(format_utility(s.total_utility(), s.decimals()) == "3.50");
}

TEST_CASE("parse errors carry the line number") {
    auto line_of = [](const char* text) -> std::size_t {
        try {
            parse_sequence(text);
        } catch (const ParseError& e) {
            return e.line();
        }
        return 0;
    };
    CHECK(line_of("1:1:1\n1 2:3:1\n") == 2);          // utility count mismatch
    CHECK(line_of("1:1:1\n\n2:-1:-1\n") == 3);        // negative utility
    CHECK(line_of("1 1:2:1 1\n") == 1);               // repeated event
    CHECK(line_of("a:1:1\n") == 1);                   // bad id
    CHECK(line_of("1:1\n") == 1);                     // missing field
    CHECK(line_of("3|1:1:1\n2|1:1:1\n") == 2);        // timestamps must increase
    CHECK(line_of("x|1:1:1\n") == 1);                 // bad prefix
}

TEST_CASE("parse: slot total mismatch is a warning") {
    std::vector<ParseWarning> warnings;
    const auto s = parse_sequence("1 2:9:2 3\n", &warnings);
    REQUIRE(warnings.size() == 1);
    CHECK(warnings[0].line == 1);
    CHECK(s.total_utility() == 5);
}

TEST_CASE("load_sequence reports a missing file") {
    CHECK_THROWS_AS(load_sequence("/nonexistent/sequence.txt"), std::runtime_error);
}

TEST_CASE("window utility over the running example") {
    const auto s = fixtures::running_example();
    CHECK(s.window_utility(0, 4) == 28);
    CHECK(s.window_utility(4, 8) == 19);
    CHECK(s.window_utility(5, 5) == 0);
    CHECK(s.window_utility(4, 2) == 0);
    CHECK(s.window_utility(-10, 100) == 40);
}

TEST_CASE("property: window utility equals a direct sum") {
    for (std::uint64_t seed = 1; seed <= 200; ++seed) {
        const auto s = random_instance(seed).sequence;
        for (Timestamp lo = -1; lo <= 15; ++lo)
            for (Timestamp hi = lo - 1; hi <= 16; ++hi) {
                Utility direct = 0;
                for (const auto& slot : s.slots())
                    if (slot.timestamp >= lo && slot.timestamp <= hi) direct += slot.total();
                REQUIRE(s.window_utility(lo, hi) == direct);
            }
    }
}

TEST_CASE("property: serialize and parse round trip") {
    for (std::uint64_t seed = 1; seed <= 200; ++seed) {
        const auto s = random_instance(seed).sequence;
        REQUIRE(parse_sequence(serialize_sequence(s)) == s);
    }
    const auto dec = parse_sequence("2|1 2:1.5:0.25 1.25\n4|3:2:2\n");
    CHECK(parse_sequence(serialize_sequence(dec)) == dec);
}

TEST_CASE("filtered drops events and emptied slots") {
    const auto s = fixtures::running_example().filtered([](EventId e) { return e == fixtures::F || e == fixtures::D; });
    REQUIRE(s.size() == 2);
    CHECK(s.slots()[0].timestamp == 2);
    CHECK(s.slots()[1].timestamp == 4);
    CHECK(s.total_utility() == 4);
}

TEST_CASE("invalid sequences are rejected") {
    using Slots = std::vector<TimeSlot>;
    CHECK_THROWS_AS(ComplexEventSequence(Slots{{1, {}}}), SequenceError);
    CHECK_THROWS_AS(ComplexEventSequence(Slots{{2, {{1, 1}}}, {2, {{1, 1}}}}), SequenceError);
    CHECK_THROWS_AS(ComplexEventSequence(Slots{{1, {{1, -1}}}}), SequenceError);
    CHECK_THROWS_AS(ComplexEventSequence(Slots{{0, {{1, 1}}}}), SequenceError);
    CHECK_THROWS_AS(ComplexEventSequence(Slots{{1, {{1, 1}, {1, 2}}}}), SequenceError);
}

TEST_CASE("win_span closed form") {
    for (int x = 1; x <= 10; ++x)
        for (int y = 1; y <= 10; ++y)
            for (int xy = 1; xy <= 10; ++xy) {
                // Largest Y.end - X.start over all placements satisfying the three spans.
                int widest = 0;
                for (int xlen = 0; xlen < x; ++xlen)
                    for (int gap = 1; gap < xy; ++gap)
                        for (int ylen = 0; ylen < y; ++ylen) widest = std::max(widest, xlen + gap + ylen);
                const SpanConstraints c{x, y, xy};
                if (xy >= 2) REQUIRE(win_span(c) == widest);
                CHECK(win_span(c) == x + y + xy - 3);
            }
}

TEST_CASE("span and threshold validation") {
    CHECK_THROWS_AS((SpanConstraints{0, 1, 1}.validate()), std::invalid_argument);
    const auto s = fixtures::running_example();
    MiningThresholds t;
    CHECK_THROWS_AS(resolve(t, s), std::invalid_argument);  // neither minutil nor delta
    t.minutil = Ratio{20, 1};
    t.delta = Ratio{1, 2};
    CHECK_THROWS_AS(resolve(t, s), std::invalid_argument);  // both
    t.delta.reset();
    t.minsup = 0;
    CHECK_THROWS_AS(resolve(t, s), std::invalid_argument);
    t.minsup = 1;
    t.minconf = Ratio{3, 2};
    CHECK_THROWS_AS(resolve(t, s), std::invalid_argument);
}

TEST_CASE("thresholds compare exactly") {
    const auto s = fixtures::running_example();
    MiningThresholds t;
    t.delta = Ratio::parse("0.5");
    const auto r = resolve(t, s);
    CHECK(r.utility_reached(20));
    CHECK_FALSE(r.utility_reached(19));

    t.delta.reset();
    t.minutil = Ratio::parse("2/3");
    CHECK(resolve(t, s).utility_reached(1));
    CHECK_FALSE(resolve(t, s).utility_reached(0));

    t.minconf = Ratio::parse("2/3");
    const auto c = resolve(t, s);
    CHECK(c.confidence_reached(2, 3));
    CHECK_FALSE(c.confidence_reached(1, 2));
    t.minconf = Ratio::parse("0.67");
    CHECK_FALSE(resolve(t, s).confidence_reached(2, 3));
}

TEST_CASE("Ratio parsing") {
    CHECK(Ratio::parse("3").num == 3);
    const auto r = Ratio::parse("0.004");
    CHECK(r.num == 1);
    CHECK(r.den == 250);
    CHECK(Ratio::parse("2/3").to_string() == "2/3");
    CHECK_THROWS(Ratio::parse("-1"));
    CHECK_THROWS(Ratio::parse("abc"));
    CHECK_THROWS(Ratio::parse("1/0"));
}

TEST_CASE("thresholds scale with the sequence's decimals") {
    const auto s = parse_sequence("1:1.5:1.5\n2:2.5:2.5\n");
    MiningThresholds t;
    t.minutil = Ratio::parse("4");
    const auto r = resolve(t, s);
    CHECK(r.utility_reached(40));
    CHECK_FALSE(r.utility_reached(39));
}
