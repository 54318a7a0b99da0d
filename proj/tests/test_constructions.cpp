#include <doctest.h>

#include <stdexcept>

#include "wordrep/constructions.hpp"
#include "wordrep/word.hpp"

using namespace wordrep;

TEST_CASE("complete graph words") {
    CHECK(complete_word_123(1) == Word::parse("1"));
    CHECK(complete_word_123(3) == Word::parse("321"));
    CHECK(complete_word_123_2uniform(4) == Word::parse("43214321"));
    for (int n = 1; n <= 8; ++n) {
        const Word once = complete_word_123(n);
        CHECK(avoids(once, Pattern::p123()));
        CHECK(word_to_graph(once) == complete_graph(n));
        const Word twice = complete_word_123_2uniform(n);
        CHECK(avoids(twice, Pattern::p123()));
        CHECK(is_k_uniform(twice, 2));
        CHECK(word_to_graph(twice) == complete_graph(n));
    }
}

TEST_CASE("path and cycle words with their printed suffixes") {
    CHECK(path_word_123(4) == Word::parse("43423121"));
    CHECK(cycle_word_123(5) == Word::parse("45342312"));
    for (int n = 2; n <= 8; ++n) {
        const Word w = path_word_123(n);
        CHECK(avoids(w, Pattern::p123()));
        CHECK(is_k_uniform(w, 2));
        CHECK(word_to_graph(w) == path_graph(n));
        const std::string c = w.compact();
        if (n >= 3) CHECK(c.substr(c.size() - 5) == "23121");
    }
    for (int n = 3; n <= 8; ++n) {
        const Word w = cycle_word_123(n);
        CHECK(avoids(w, Pattern::p123()));
        CHECK(word_to_graph(w) == cycle_graph(n));
        const std::string c = w.compact();
        CHECK(c.substr(c.size() - 4) == "2312");
    }
    CHECK_THROWS_AS(path_word_123(1), std::invalid_argument);
    CHECK_THROWS_AS(cycle_word_123(2), std::invalid_argument);
}

TEST_CASE("tree words are 2-uniform, 132-avoiding and exact") {
    SUBCASE("fixed shapes") {
        // path as a tree, star, and a caterpillar
        for (const Graph& tree :
             {path_graph(6), star_graph(5),
              Graph::from_edges(7, {{1, 2}, {2, 3}, {2, 4}, {4, 5}, {4, 6}, {6, 7}})}) {
            const TreeWord tw = tree_word_132_2uniform(tree);
            CHECK(is_k_uniform(tw.word, 2));
            CHECK(avoids(tw.word, Pattern::p132()));
            CHECK(word_to_graph(tw.word) == relabel(tree, tw.relabeling));
        }
    }
    SUBCASE("single vertex") {
        const TreeWord tw = tree_word_132_2uniform(Graph(1));
        CHECK(tw.word == Word::parse("11"));
    }
    SUBCASE("root choice changes the labelling, not correctness") {
        const Graph tree = random_tree(9, 5);
        for (int root = 1; root <= 9; ++root) {
            const TreeWord tw = tree_word_132_2uniform(tree, root);
            CHECK(avoids(tw.word, Pattern::p132()));
            CHECK(word_to_graph(tw.word) == relabel(tree, tw.relabeling));
        }
    }
    SUBCASE("non-trees are rejected") {
        CHECK_THROWS_AS(tree_word_132_2uniform(cycle_graph(4)), std::invalid_argument);
        CHECK_THROWS_AS(tree_word_132_2uniform(Graph(3)), std::invalid_argument);  // forest
    }
}

TEST_CASE("disjoint composition stacks blocks highest-first") {
    SUBCASE("two 2-uniform parts") {
        const ComposedWord c = compose_disjoint(
            {{Word::parse("2121"), complete_graph(2)}, {Word::parse("2121"), complete_graph(2)}},
            Pattern::p123());
        CHECK(c.word == Word::parse("43432121"));
        CHECK(avoids(c.word, Pattern::p123()));
        CHECK(word_to_graph(c.word) ==
              relabel(disjoint_union({complete_graph(2), complete_graph(2)}), c.relabeling));
    }
    SUBCASE("one non-uniform part is allowed") {
        const ComposedWord c = compose_disjoint(
            {{Word::parse("321"), complete_graph(3)}, {Word::parse("2121"), complete_graph(2)}},
            Pattern::p123());
        CHECK(avoids(c.word, Pattern::p123()));
        CHECK(word_to_graph(c.word) ==
              relabel(disjoint_union({complete_graph(3), complete_graph(2)}), c.relabeling));
    }
    SUBCASE("two non-uniform parts are rejected") {
        CHECK_THROWS_AS(
            compose_disjoint({{Word::parse("321"), complete_graph(3)},
                              {Word::parse("21"), complete_graph(2)}},
                             Pattern::p123()),
            std::invalid_argument);
    }
    SUBCASE("mismatched word/graph pairs are rejected") {
        CHECK_THROWS_AS(
            compose_disjoint({{Word::parse("2121"), Graph(2)}}, Pattern::p123()),
            std::invalid_argument);
    }
    SUBCASE("words must avoid the pattern") {
        // 123123 represents K3 but contains 123
        CHECK_THROWS_AS(
            compose_disjoint({{Word::parse("123123"), complete_graph(3)}}, Pattern::p123()),
            std::invalid_argument);
    }
    SUBCASE("only the two studied patterns are supported") {
        CHECK_THROWS_AS(
            compose_disjoint({{Word::parse("2121"), complete_graph(2)}}, Pattern::parse("213")),
            std::invalid_argument);
    }
}
