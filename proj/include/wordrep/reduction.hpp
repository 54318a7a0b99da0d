// Normalization of 123-avoiding representants down to at most two copies of
// every letter, via the adjacent-swap lemma and the three-way case analysis
// on letters of degree <= 1 (isolated vertex, isolated edge, pendant).

#pragma once

#include <string>
#include <vector>

#include "wordrep/graph.hpp"
#include "wordrep/word.hpp"

namespace wordrep {

struct ReductionStep {
    std::string rule;  // isolated-vertex | isolated-edge | pendant-subcase-1
                       // | pendant-subcase-2 | swap
    Letter letter;     // the letter acted on, in the labelling before this step
    Word before;
    Word after;
    Relabeling relabeling;  // applied by this step (identity for the pendant subcases)
};

// Invariants (enforced at construction time of every step): each `after`
// avoids 123 and word_to_graph(after) == relabel(word_to_graph(before),
// step.relabeling).
struct ReductionTrace {
    std::vector<ReductionStep> steps;
};

// Exchange positions i, i+1 (1-based) holding an ascending factor ab, a < b.
// Avoidance is preserved (any 123 occurrence in the result would need both
// swapped letters, but they descend).  Graph preservation is the caller's
// concern: it holds only when ab is a non-edge and the pair no longer
// alternates afterwards.  Rejects non-ascending factors and 123-containing
// input.
Word swap_adjacent(const Word& w, std::size_t i);

struct ReductionResult {
    Word word;
    Relabeling relabeling;
    std::string rule;
};

// Rewrite w so that x (currently occurring >= 3 times, degree <= 1 in
// word_to_graph(w)) occurs exactly twice, preserving the represented graph
// up to the returned relabeling and never increasing another letter's count.
// Cases: degree 0 -> delete x, prepend x'x' with x' relabelled to the top;
// isolated edge xa -> delete both, prepend x'a'x'a'; pendant -> x occurs
// exactly 3 times and one x is deleted while another slides next to its
// neighbour's occurrence (the two subcases of the proof).  The result is
// re-verified (avoidance + relabelled graph equality) before returning.
// Errors: x occurs <= 2 times, w contains 123, or degree(x) >= 2 with >= 3
// occurrences (impossible for well-formed input).
ReductionResult reduce_letter(const Word& w, Letter x);

struct NormalizeResult {
    Word word;
    Relabeling relabeling;  // composed over all steps: original -> final labels
    ReductionTrace trace;
};

// Repeatedly apply reduce_letter until every letter occurs at most twice.
// Letters are processed in decreasing occurrence count, ties broken towards
// the smaller letter, which fixes a deterministic trace.
NormalizeResult normalize(const Word& w);

}  // namespace wordrep
