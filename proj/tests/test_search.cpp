#include <doctest.h>

#include <stdexcept>

#include <algorithm>
#include <functional>
#include <optional>

#include "wordrep/constructions.hpp"
#include "wordrep/search.hpp"

using namespace wordrep;

namespace {

// Generate-and-test reference: every word over {1..n} with per-letter counts
// <= bounds, visited in the engine's order (letters ascending, prefix before
// extension), filtered to candidates.  Used to cross-check both regimes.
struct BruteResult {
    std::uint64_t candidates = 0;   // all-letters-present (or exact-k) words
    std::uint64_t avoiding = 0;     // of those, pattern-avoiding
    std::optional<Word> first_hit;  // lexicographically first accepted word
};

BruteResult brute_search(const Graph& g, const std::optional<Pattern>& p,
                         const std::vector<int>& bounds, std::optional<int> uniformity,
                         bool up_to_iso) {
    const int n = g.vertex_count();
    int total = 0;
    for (int v = 0; v < n; ++v) total += uniformity ? *uniformity : bounds[static_cast<std::size_t>(v)];
    BruteResult res;
    std::vector<Letter> current;
    std::vector<int> counts(static_cast<std::size_t>(n) + 1, 0);
    std::function<void()> rec = [&]() {
        const bool candidate =
            uniformity ? static_cast<int>(current.size()) == total
                       : std::all_of(counts.begin() + 1, counts.end(), [](int c) { return c > 0; });
        if (candidate && !current.empty()) {
            ++res.candidates;
            const Word w(current);
            if (!p || avoids(w, *p)) {
                ++res.avoiding;
                if (!res.first_hit) {
                    const Graph wg = word_to_graph(w);
                    const bool hit = up_to_iso ? is_isomorphic(wg, g) : wg == g;
                    if (hit) res.first_hit = w;
                }
            }
        }
        if (static_cast<int>(current.size()) == total) return;
        for (Letter c = 1; c <= n; ++c) {
            const int cap = uniformity ? *uniformity : bounds[static_cast<std::size_t>(c) - 1];
            if (counts[static_cast<std::size_t>(c)] >= cap) continue;
            ++counts[static_cast<std::size_t>(c)];
            current.push_back(c);
            rec();
            current.pop_back();
            --counts[static_cast<std::size_t>(c)];
        }
    };
    rec();
    return res;
}

SearchOptions avoidance_only() {
    SearchOptions opts;
    opts.prunes.degree_feasibility = false;
    opts.prunes.forced_edges = false;
    return opts;
}

}  // namespace

TEST_CASE("multiplicity bounds follow the theorem ladder") {
    const Graph star = star_graph(6);  // center 7, leaves 1..6
    SUBCASE("degree at least k gives k") {
        const auto j = multiplicity_bound(star, 7, Pattern::p132());
        CHECK(j.bound == 2);
        CHECK(j.tag == BoundTag::Theorem31Degree);
    }
    SUBCASE("132 leaf falls back to the neighbour corollary") {
        const auto j = multiplicity_bound(star, 1, Pattern::p132());
        CHECK(j.bound == 3);
        CHECK(j.tag == BoundTag::Corollary32Neighbor);
    }
    SUBCASE("123 always has the global bound of two") {
        const auto j = multiplicity_bound(star, 1, Pattern::p123());
        CHECK(j.bound == 2);
        CHECK(j.tag == BoundTag::Theorem34Global2);
    }
    SUBCASE("nothing applies: the cap, flagged incomplete") {
        const Graph isolated(2);
        const auto j = multiplicity_bound(isolated, 1, Pattern::p132());
        CHECK(j.bound == 3);
        CHECK(j.tag == BoundTag::HeuristicCap);
        const SearchBounds b = SearchBounds::from_pattern(isolated, Pattern::p132());
        CHECK_FALSE(b.complete());
        CHECK(b.justification() == BoundTag::HeuristicCap);
    }
    SUBCASE("longer patterns raise the degree threshold") {
        const auto j = multiplicity_bound(complete_graph(4), 1, Pattern::parse("1234"));
        CHECK(j.bound == 3);  // degree 3 >= k = 3
        CHECK(j.tag == BoundTag::Theorem31Degree);
    }
}

TEST_CASE("bounds factories") {
    const Graph star = star_graph(6);
    const SearchBounds b = SearchBounds::from_pattern(star, Pattern::p123());
    REQUIRE(b.max_occurrences.size() == 7);
    CHECK(b.max_occurrences == std::vector<int>{2, 2, 2, 2, 2, 2, 2});
    CHECK(b.tags[6] == BoundTag::Theorem31Degree);
    CHECK(b.tags[0] == BoundTag::Theorem34Global2);
    CHECK(b.complete());
    CHECK(b.justification() == BoundTag::Theorem34Global2);

    const SearchBounds u = SearchBounds::uniform(complete_graph(4), 2);
    CHECK(u.max_occurrences == std::vector<int>{2, 2, 2, 2});
    CHECK(u.complete());
    CHECK(u.justification() == BoundTag::TwoUniformByDefinition);
}

TEST_CASE("witnesses are lexicographically smallest and re-verified") {
    const Graph k3 = complete_graph(3);
    const Certificate c =
        find_representant(k3, Pattern::p123(), SearchBounds::from_pattern(k3, Pattern::p123()));
    REQUIRE(c.kind == Certificate::Kind::Witness);
    CHECK(c.witness->word == Word::parse("132"));
    CHECK(c.witness->relabeling == Relabeling::identity(3));
    CHECK(c.witness->transcript.size() >= 2);
    CHECK(c.complete);
}

TEST_CASE("K4 has no 2-uniform 132-avoiding representant") {
    const Graph k4 = complete_graph(4);
    const Certificate c =
        find_representant(k4, Pattern::p132(), SearchBounds::uniform(k4, 2), 2, avoidance_only());
    REQUIRE(c.kind == Certificate::Kind::Exhausted);
    CHECK(c.complete);
    CHECK(c.justification == BoundTag::TwoUniformByDefinition);
    CHECK(c.exhausted->enumerated == 352);  // 132-avoiding arrangements out of 2520
    CHECK(c.exhausted->survived_avoidance == 352);

    SearchOptions none = avoidance_only();
    none.prunes.avoidance = false;
    const Certificate full =
        find_representant(k4, Pattern::p132(), SearchBounds::uniform(k4, 2), 2, none);
    REQUIRE(full.kind == Certificate::Kind::Exhausted);
    CHECK(full.exhausted->enumerated == 2520);  // every 2-uniform arrangement on 4 letters
    CHECK(full.exhausted->survived_avoidance == 352);
}

TEST_CASE("the disjoint union of two K4s is not 132-representable") {
    const Graph g = disjoint_union({complete_graph(4), complete_graph(4)});
    const SearchBounds b = SearchBounds::from_pattern(g, Pattern::p132());
    CHECK(b.complete());  // every degree is 3 >= 2
    CHECK(b.justification() == BoundTag::Theorem31Degree);
    const Certificate c = find_representant(g, Pattern::p132(), b);
    REQUIRE(c.kind == Certificate::Kind::Exhausted);
    CHECK(c.complete);
}

TEST_CASE("engine agrees with generate-and-test on every small instance") {
    std::vector<Graph> graphs;
    for (int n = 1; n <= 4; ++n) {
        const int pairs = n * (n - 1) / 2;
        for (int mask = 0; mask < (1 << pairs); ++mask) {
            Graph g(n);
            int bit = 0;
            for (int u = 1; u <= n; ++u)
                for (int v = u + 1; v <= n; ++v, ++bit)
                    if (mask & (1 << bit)) g.add_edge(u, v);
            graphs.push_back(g);
        }
    }
    for (std::size_t gi = 0; gi < graphs.size(); ++gi) {
        const Graph& g = graphs[gi];
        for (const Pattern& p : {Pattern::p123(), Pattern::p132()}) {
            const std::string instance =
                "graph " + std::to_string(gi) + " pattern " + p.str();
            CAPTURE(instance);
            std::vector<int> caps(static_cast<std::size_t>(g.vertex_count()), 2);
            SearchBounds bounds;
            bounds.max_occurrences = caps;
            bounds.tags.assign(caps.size(), BoundTag::HeuristicCap);

            // free regime
            const BruteResult brute = brute_search(g, p, caps, std::nullopt, true);
            const Certificate c = find_representant(g, p, bounds, std::nullopt, avoidance_only());
            if (brute.first_hit) {
                REQUIRE(c.kind == Certificate::Kind::Witness);
                CHECK(c.witness->word == *brute.first_hit);
            } else {
                REQUIRE(c.kind == Certificate::Kind::Exhausted);
                CHECK(c.exhausted->enumerated == brute.avoiding);
                CHECK(c.exhausted->survived_avoidance == brute.avoiding);
            }

            // 2-uniform regime
            const BruteResult ubrute = brute_search(g, p, caps, 2, true);
            const Certificate uc = find_representant(g, p, bounds, 2, avoidance_only());
            if (ubrute.first_hit) {
                REQUIRE(uc.kind == Certificate::Kind::Witness);
                CHECK(uc.witness->word == *ubrute.first_hit);
            } else {
                REQUIRE(uc.kind == Certificate::Kind::Exhausted);
                CHECK(uc.exhausted->enumerated == ubrute.avoiding);
            }

            // default prunes must agree on the kind and the witness
            const Certificate pruned = find_representant(g, p, bounds);
            CHECK(pruned.kind == c.kind);
            if (c.kind == Certificate::Kind::Witness)
                CHECK(pruned.witness->word == c.witness->word);

            // fixed labelling (no relabeling quantifier)
            const BruteResult fbrute = brute_search(g, p, caps, std::nullopt, false);
            const Certificate fc = find_representant_fixed(g, p, bounds);
            if (fbrute.first_hit) {
                REQUIRE(fc.kind == Certificate::Kind::Witness);
                CHECK(fc.witness->word == *fbrute.first_hit);
            } else {
                CHECK(fc.kind == Certificate::Kind::Exhausted);
            }
        }
    }
}

TEST_CASE("fixed-labelling search agrees with generate-and-test") {
    const std::vector<Graph> graphs = {path_graph(4), cycle_graph(4), complete_graph(4),
                                       star_graph(3, 1), Graph(2),
                                       disjoint_union({complete_graph(2), Graph(1)})};
    for (std::size_t gi = 0; gi < graphs.size(); ++gi) {
        const Graph& g = graphs[gi];
        for (const Pattern& p : {Pattern::p123(), Pattern::p132()}) {
            const std::string instance =
                "graph " + std::to_string(gi) + " pattern " + p.str();
            CAPTURE(instance);
            std::vector<int> caps(static_cast<std::size_t>(g.vertex_count()), 2);
            SearchBounds bounds;
            bounds.max_occurrences = caps;
            bounds.tags.assign(caps.size(), BoundTag::HeuristicCap);
            const BruteResult brute = brute_search(g, p, caps, std::nullopt, false);
            const Certificate c = find_representant_fixed(g, p, bounds);
            if (brute.first_hit) {
                REQUIRE(c.kind == Certificate::Kind::Witness);
                CHECK(c.witness->word == *brute.first_hit);
                CHECK(c.witness->relabeling == Relabeling::identity(g.vertex_count()));
            } else {
                CHECK(c.kind == Certificate::Kind::Exhausted);
            }
        }
    }
}

TEST_CASE("results are independent of worker count and split depth") {
    const Graph star4 = star_graph(4);
    const Graph k4 = complete_graph(4);
    const Certificate ref = find_representant(
        star4, Pattern::p123(), SearchBounds::from_pattern(star4, Pattern::p123()));
    REQUIRE(ref.kind == Certificate::Kind::Witness);
    for (int jobs : {1, 2, 3, 8}) {
        for (int depth : {0, 1, 2, 5}) {
            CAPTURE(jobs);
            CAPTURE(depth);
            SearchOptions opts;
            opts.jobs = jobs;
            opts.split_depth = depth;

            const Certificate w = find_representant(
                star4, Pattern::p123(), SearchBounds::from_pattern(star4, Pattern::p123()),
                std::nullopt, opts);
            REQUIRE(w.kind == Certificate::Kind::Witness);
            CHECK(w.witness->word == ref.witness->word);
            CHECK(w.witness->relabeling == ref.witness->relabeling);

            SearchOptions ao = avoidance_only();
            ao.jobs = jobs;
            ao.split_depth = depth;
            const Certificate e =
                find_representant(k4, Pattern::p132(), SearchBounds::uniform(k4, 2), 2, ao);
            REQUIRE(e.kind == Certificate::Kind::Exhausted);
            CHECK(e.exhausted->enumerated == 352);
            CHECK(e.exhausted->survived_avoidance == 352);
        }
    }
}

TEST_CASE("opposite-order rule") {
    // a ... b ... x ... a ... b with ab a non-edge: same order on both sides
    CHECK_FALSE(opposite_order_prune(Word::parse("12312"), 3, 1, 2));
    // opposite orders: feasible
    CHECK(opposite_order_prune(Word::parse("12321"), 3, 1, 2));
    // b missing on the right: no judgment yet
    CHECK(opposite_order_prune(Word::parse("1231"), 3, 1, 2));
    // x not placed at all
    CHECK(opposite_order_prune(Word::parse("12"), 3, 1, 2));
    CHECK_THROWS_AS(opposite_order_prune(Word::parse("121"), 1, 1, 2), std::invalid_argument);
}

TEST_CASE("search input validation") {
    const Graph k3 = complete_graph(3);
    SearchBounds b = SearchBounds::from_pattern(k3, Pattern::p123());
    SearchOptions bad;
    bad.jobs = 0;
    CHECK_THROWS_AS(find_representant(k3, Pattern::p123(), b, std::nullopt, bad),
                    std::invalid_argument);
    SearchBounds short_bounds;
    short_bounds.max_occurrences = {2, 2};
    short_bounds.tags = {BoundTag::HeuristicCap, BoundTag::HeuristicCap};
    CHECK_THROWS_AS(find_representant(k3, Pattern::p123(), short_bounds), std::invalid_argument);
    CHECK_THROWS_AS(find_representant(k3, Pattern::p123(), b, 3), std::invalid_argument);
    CHECK_THROWS_AS(find_representant(complete_graph(13), Pattern::p123(),
                                      SearchBounds::uniform(complete_graph(13), 2)),
                    std::invalid_argument);
}

TEST_CASE("atlas enumeration hits the known counts") {
    const int expected[] = {0, 1, 2, 4, 11, 34, 156};
    for (int n = 1; n <= 6; ++n) {
        const auto graphs = all_graphs_up_to_iso(n);
        CHECK(static_cast<int>(graphs.size()) == expected[n]);
        // canonical, deduplicated, sorted
        for (std::size_t i = 0; i < graphs.size(); ++i) {
            CHECK(graphs[i] == canonical_form(graphs[i]));
            if (i > 0) CHECK(to_graph6(graphs[i - 1]) < to_graph6(graphs[i]));
        }
    }
}

TEST_CASE("small atlases classify completely") {
    const auto a123 = classify_atlas(4, Pattern::p123());
    CHECK(a123.size() == 18);
    for (const AtlasEntry& e : a123) {
        CHECK(e.status == AtlasStatus::Representable);
        CHECK(e.certificate.kind == Certificate::Kind::Witness);
    }
    const auto a132 = classify_atlas(3, Pattern::p132());
    CHECK(a132.size() == 7);
    for (const AtlasEntry& e : a132) CHECK(e.status == AtlasStatus::Representable);
}

TEST_CASE("disjoint-union decision on the paper instances") {
    SUBCASE("single K2") {
        const DisjointDecision d = decide_disjoint_132_123({complete_graph(2)}, Pattern::p123());
        REQUIRE(d.overall.kind == Certificate::Kind::Witness);
        CHECK(d.overall.witness->word == Word::parse("1212"));
        CHECK(d.offending.empty());
    }
    SUBCASE("two K4s under 132 fail via the two-uniform regime") {
        const DisjointDecision d =
            decide_disjoint_132_123({complete_graph(4), complete_graph(4)}, Pattern::p132());
        REQUIRE(d.overall.kind == Certificate::Kind::Exhausted);
        CHECK(d.overall.complete);
        CHECK(d.offending == std::vector<std::size_t>{0, 1});
        REQUIRE(d.two_uniform.size() == 2);
        CHECK(d.two_uniform[0].kind == Certificate::Kind::Exhausted);
        CHECK(d.two_uniform[1].kind == Certificate::Kind::Exhausted);
        CHECK_FALSE(d.general[0].has_value());  // theorem settles it without general runs
    }
    SUBCASE("K3 plus K2 under 123 compose a verified witness") {
        const DisjointDecision d =
            decide_disjoint_132_123({complete_graph(3), complete_graph(2)}, Pattern::p123());
        REQUIRE(d.overall.kind == Certificate::Kind::Witness);
        CHECK(word_to_graph(d.overall.witness->word) ==
              relabel(disjoint_union({complete_graph(3), complete_graph(2)}),
                      d.overall.witness->relabeling));
        CHECK(d.overall.uniformity == 2);
    }
    SUBCASE("disconnected component lists are rejected") {
        CHECK_THROWS_AS(decide_disjoint_132_123({Graph(2)}, Pattern::p123()),
                        std::invalid_argument);
        CHECK_THROWS_AS(
            decide_disjoint_132_123({complete_graph(2)}, Pattern::parse("213")),
            std::invalid_argument);
    }
}
