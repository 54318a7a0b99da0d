// Bounded exhaustive search for pattern-avoiding representants, over all
// relabelings (witnesses carry the relabeling) or for a fixed labelling.
// Searches emit certificates: a verified witness, or an exhaustion record
// whose completeness is justified by the multiplicity-bound theorems.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wordrep/graph.hpp"
#include "wordrep/word.hpp"

namespace wordrep {

enum class BoundTag {
    Theorem31Degree,         // degree >= k forces <= k occurrences
    Corollary32Neighbor,     // a neighbour of degree >= k forces <= k+1
    Theorem34Global2,        // 123 only: a <=2-copy representant exists if any does
    TwoUniformByDefinition,  // the 2-uniform regime is exhaustive by definition
    HeuristicCap,            // no theorem applies; completeness flag false
};

std::string_view bound_tag_name(BoundTag tag);  // "theorem-3.1-degree", ...

struct BoundJustification {
    int bound;
    BoundTag tag;
};

// Tightest applicable occurrence bound for letter v in a p-avoiding
// representant of g, with k = p.length() - 1: degree(v) >= k gives k; for
// the pattern 123 the global two-copy normalization gives 2 regardless; a
// neighbour of degree >= k gives k+1; otherwise the caller's heuristic cap
// (flagged incomplete).
BoundJustification multiplicity_bound(const Graph& g, int v, const Pattern& p,
                                      int heuristic_cap = 3);

struct SearchBounds {
    std::vector<int> max_occurrences;  // [v-1], each >= 1
    std::vector<BoundTag> tags;        // [v-1]

    static SearchBounds from_pattern(const Graph& g, const Pattern& p, int heuristic_cap = 3);
    static SearchBounds uniform(const Graph& g, int k);

    bool complete() const;         // no heuristic-cap entry
    BoundTag justification() const;  // the weakest tag in use (summary)
    bool operator==(const SearchBounds&) const = default;
};

struct WitnessInfo {
    Relabeling relabeling;  // relabel(graph, relabeling) == word_to_graph(word)
    Word word;
    std::vector<std::string> transcript;  // re-verification log (oracle path)
};

struct ExhaustionInfo {
    std::uint64_t enumerated = 0;           // candidate words tested
    std::uint64_t survived_avoidance = 0;   // of those, pattern-avoiding
    double seconds = 0.0;
};

struct Certificate {
    enum class Kind { Witness, Exhausted };
    Kind kind = Kind::Exhausted;
    std::optional<Pattern> pattern;  // nullopt: no pattern constraint
    Graph graph;
    SearchBounds bounds;
    std::optional<int> uniformity;
    bool complete = false;  // exhaustion is a non-representability proof
    BoundTag justification = BoundTag::HeuristicCap;
    std::optional<WitnessInfo> witness;
    std::optional<ExhaustionInfo> exhausted;
};

struct PruneToggles {
    bool avoidance = true;           // incremental pattern-avoidance pruning
    bool degree_feasibility = true;  // sorted possible-degree domination
    bool forced_edges = true;        // finalized alternating pairs (Lemma 3.6 flavour)
};

struct SearchOptions {
    PruneToggles prunes{};
    int jobs = 1;
    int split_depth = 0;  // 0 = automatic; subtree tasks start at this depth
    bool progress = false;  // line-based counter on stderr
};

// Does some word with letter i occurring 1..bounds(i) times (exactly
// `uniformity` times if given) avoid p and represent a graph isomorphic to
// g?  Enumeration is depth-first, positions left to right, candidate letters
// in increasing order, and each word is tested before its extensions, so the
// first hit is the lexicographically smallest witness — independent of
// worker count.  Preconditions: g.vertex_count() <= 12, bounds cover every
// vertex.
Certificate find_representant(const Graph& g, const Pattern& p, const SearchBounds& bounds,
                              std::optional<int> uniformity = std::nullopt,
                              const SearchOptions& opts = {});

// Fixed-labelling variant: the word's graph must equal g exactly (no
// relabeling quantifier), and the pattern constraint is optional.  The
// pattern-free 2-uniform case is the circle-graph decision procedure.
Certificate find_representant_fixed(const Graph& g, const std::optional<Pattern>& p,
                                    const SearchBounds& bounds,
                                    std::optional<int> uniformity = std::nullopt,
                                    const SearchOptions& opts = {});

// The opposite-order rule: with x's occurrences splitting `partial` into a
// left and right side and ab a target non-edge (caller's precondition), a
// and b appearing in the same order on both sides forces an alternation —
// infeasible.  Returns true whenever it cannot judge (letters not on both
// sides).  Intended for words with at most two copies per letter.
bool opposite_order_prune(const Word& partial, Letter x, Letter a, Letter b);

struct DisjointDecision {
    Certificate overall;  // for the disjoint union, in input block order
    std::vector<Certificate> two_uniform;           // per component
    std::vector<std::optional<Certificate>> general;  // per component, when run
    std::vector<std::size_t> offending;  // 0-based indices cited on failure
};

// Theorem 4.1 decision: representable iff every component is representable
// and at most one lacks a 2-uniform representant.  Two components already
// failing the (always complete) 2-uniform regime settle the question, so
// general-regime searches run only while the answer is still open.  On
// success the witness is assembled with compose_disjoint and re-verified.
// Components must be connected; p must be 123 or 132.
DisjointDecision decide_disjoint_132_123(const std::vector<Graph>& components,
                                         const Pattern& p, const SearchOptions& opts = {});

enum class AtlasStatus { Representable, NotRepresentable, Unknown };

std::string_view atlas_status_name(AtlasStatus status);

struct AtlasEntry {
    int n = 0;
    Graph graph;  // canonical representative
    std::string graph6;
    AtlasStatus status = AtlasStatus::Unknown;
    Certificate certificate;
};

// Classify every graph on 1..max_n vertices up to isomorphism (max_n <= 7).
// Entries are ordered by vertex count, then canonical graph6 key.
std::vector<AtlasEntry> classify_atlas(int max_n, const Pattern& p, int heuristic_cap = 3,
                                       const SearchOptions& opts = {});

// All non-isomorphic graphs on exactly n vertices (canonical forms,
// deterministic order).  n <= 7.
std::vector<Graph> all_graphs_up_to_iso(int n);

}  // namespace wordrep
