#include <doctest.h>

#include <stdexcept>

#include "wordrep/reduction.hpp"

using namespace wordrep;

namespace {

// All 123-avoiding words of length <= max_len whose alphabet is {1..m} for
// some m <= alpha.
std::vector<Word> avoiding_words(int alpha, int max_len) {
    std::vector<Word> out;
    std::vector<Letter> current;
    for (int len = 1; len <= max_len; ++len) {
        current.assign(static_cast<std::size_t>(len), 1);
        for (;;) {
            Word w(current);
            if (w.alphabet_is_contiguous() && avoids(w, Pattern::p123())) out.push_back(w);
            int i = len - 1;
            while (i >= 0 && current[static_cast<std::size_t>(i)] == alpha) {
                current[static_cast<std::size_t>(i)] = 1;
                --i;
            }
            if (i < 0) break;
            ++current[static_cast<std::size_t>(i)];
        }
    }
    return out;
}

bool has_heavy_letter(const Word& w) {
    for (Letter x = 1; x <= w.max_letter(); ++x)
        if (w.count(x) >= 3) return true;
    return false;
}

}  // namespace

TEST_CASE("swap_adjacent exchanges an ascending factor") {
    const Word w = Word::parse("21312");
    const Word s = swap_adjacent(w, 2);  // factor 13 -> 31
    CHECK(s == Word::parse("23112"));
    CHECK(avoids(s, Pattern::p123()));
    CHECK_THROWS_AS(swap_adjacent(w, 1), std::invalid_argument);  // 21 descends
    CHECK_THROWS_AS(swap_adjacent(w, 5), std::invalid_argument);  // out of range
}

TEST_CASE("swapping an ascent never breaks 123-avoidance") {
    for (const Word& w : avoiding_words(3, 6))
        for (std::size_t i = 1; i < w.size(); ++i)
            if (w[i - 1] < w[i]) CHECK(avoids(swap_adjacent(w, i), Pattern::p123()));
}

TEST_CASE("reduce_letter handles the isolated-vertex case") {
    // 111: one isolated vertex, letter 1 three times
    const ReductionResult r = reduce_letter(Word::parse("111"), 1);
    CHECK(r.word == Word::parse("11"));
    CHECK(r.rule == "isolated-vertex");
    // 2212211: letter 2 isolated (broken against 1), degree 0
    const Word w = Word::parse("2212211");
    REQUIRE_FALSE(word_to_graph(w).has_edge(1, 2));
    const ReductionResult s = reduce_letter(w, 2);
    CHECK(word_to_graph(s.word) == relabel(word_to_graph(w), s.relabeling));
    CHECK(s.word.count(s.relabeling(2)) == 2);
    CHECK(avoids(s.word, Pattern::p123()));
}

TEST_CASE("reduce_letter handles the isolated-edge case") {
    // 121212 is K2 with both letters three times
    const ReductionResult r = reduce_letter(Word::parse("121212"), 1);
    CHECK(r.rule == "isolated-edge");
    CHECK(word_to_graph(r.word) == complete_graph(2));
    CHECK(is_k_uniform(r.word, 2));
}

TEST_CASE("reduce_letter handles the pendant subcases") {
    // 213212: letter 2 is pendant on 1, occurs three times, w3 nonempty
    const ReductionResult r = reduce_letter(Word::parse("213212"), 2);
    CHECK(r.word == Word::parse("13212"));
    CHECK(r.rule == "pendant-subcase-1");
    CHECK(word_to_graph(r.word) == relabel(word_to_graph(Word::parse("213212")), r.relabeling));

    // mirror shape: region between the second x and second a occupied instead
    const Word m = Word::parse("232132");
    REQUIRE(word_to_graph(m).degree(2) == 1);
    REQUIRE(m.count(2) == 3);
    const ReductionResult s = reduce_letter(m, 2);
    CHECK(s.rule == "pendant-subcase-2");
    CHECK(avoids(s.word, Pattern::p123()));
    CHECK(word_to_graph(s.word) == relabel(word_to_graph(m), s.relabeling));
}

TEST_CASE("reduce_letter rejects ineligible letters") {
    CHECK_THROWS_AS(reduce_letter(Word::parse("1212"), 1), std::invalid_argument);   // only twice
    CHECK_THROWS_AS(reduce_letter(Word::parse("213212"), 9), std::invalid_argument); // absent
    // degree-2 letter occurring three times cannot happen in a 123-avoiding
    // word (Theorem 3.1), and malformed requests must not be "repaired":
    CHECK_THROWS_AS(reduce_letter(Word::parse("123123"), 1), std::invalid_argument); // contains 123
}

TEST_CASE("normalize caps every letter at two occurrences") {
    const NormalizeResult r = normalize(Word::parse("213212"));
    CHECK(r.word == Word::parse("13212"));
    REQUIRE(r.trace.steps.size() == 1);
    CHECK(r.trace.steps[0].rule == "pendant-subcase-1");
    CHECK(r.trace.steps[0].before == Word::parse("213212"));
    CHECK(r.trace.steps[0].after == Word::parse("13212"));

    // already reduced: nothing to do
    const NormalizeResult id = normalize(Word::parse("2121"));
    CHECK(id.word == Word::parse("2121"));
    CHECK(id.trace.steps.empty());
    CHECK(id.relabeling == Relabeling::identity(2));
}

TEST_CASE("normalize sweeps every small 123-avoiding word with a heavy letter") {
    int processed = 0;
    for (const Word& w : avoiding_words(3, 8)) {
        if (!has_heavy_letter(w)) continue;
        ++processed;
        const NormalizeResult r = normalize(w);
        CHECK(avoids(r.word, Pattern::p123()));
        for (Letter x = 1; x <= r.word.max_letter(); ++x) CHECK(r.word.count(x) <= 2);
        CHECK(word_to_graph(r.word) == relabel(word_to_graph(w), r.relabeling));
        for (const ReductionStep& step : r.trace.steps) {
            CHECK(avoids(step.after, Pattern::p123()));
            CHECK(word_to_graph(step.after) ==
                  relabel(word_to_graph(step.before), step.relabeling));
        }
    }
    CHECK(processed > 500);
}

TEST_CASE("normalize rejects words containing 123") {
    CHECK_THROWS_AS(normalize(Word::parse("123123123")), std::invalid_argument);
}
