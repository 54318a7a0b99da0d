#include "wordrep/reduction.hpp"

#include <algorithm>
#include <stdexcept>

namespace wordrep {

Word swap_adjacent(const Word& w, std::size_t i) {
    if (i < 1 || i >= w.size()) throw std::invalid_argument("swap_adjacent: position out of range");
    if (contains_pattern(w, Pattern::p123()))
        throw std::invalid_argument("swap_adjacent: word must avoid 123");
    std::vector<Letter> letters(w.begin(), w.end());
    if (letters[i - 1] >= letters[i])
        throw std::invalid_argument("swap_adjacent: factor must be ascending");
    std::swap(letters[i - 1], letters[i]);
    return Word(std::move(letters));
}

namespace {

std::vector<std::size_t> positions_of(const Word& w, Letter x) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < w.size(); ++i)
        if (w[i] == x) out.push_back(i);
    return out;
}

// Send the letters of `top` (in the given order) to the largest labels and
// compact everything else to the bottom, preserving relative order.  E.g.
// top = {a, x} over n letters maps a -> n-1, x -> n.
Relabeling compact_with_top(int n, const std::vector<Letter>& top) {
    std::vector<int> image(static_cast<std::size_t>(n), 0);
    int next_top = n - static_cast<int>(top.size()) + 1;
    for (Letter t : top) image[static_cast<std::size_t>(t) - 1] = next_top++;
    int next = 1;
    for (int v = 1; v <= n; ++v)
        if (image[static_cast<std::size_t>(v) - 1] == 0) image[static_cast<std::size_t>(v) - 1] = next++;
    return Relabeling(std::move(image));
}

ReductionResult checked(const Word& before, ReductionResult result) {
    if (contains_pattern(result.word, Pattern::p123()))
        throw std::logic_error("reduce_letter: produced a 123-containing word");
    if (!(word_to_graph(result.word) == relabel(word_to_graph(before), result.relabeling)))
        throw std::logic_error("reduce_letter: produced a word for a different graph");
    return result;
}

}  // namespace

ReductionResult reduce_letter(const Word& w, Letter x) {
    if (contains_pattern(w, Pattern::p123()))
        throw std::invalid_argument("reduce_letter: word must avoid 123");
    const int n = w.max_letter();
    if (x < 1 || x > n || !w.alphabet_is_contiguous())
        throw std::invalid_argument("reduce_letter: bad letter or non-contiguous alphabet");
    const auto xs = positions_of(w, x);
    if (xs.size() <= 2) throw std::invalid_argument("reduce_letter: letter already occurs <= 2 times");

    const Graph g = word_to_graph(w);
    const int dx = g.degree(x);
    if (dx >= 2)
        throw std::invalid_argument(
            "reduce_letter: letter of degree >= 2 occurring >= 3 times — input cannot be a "
            "valid 123-avoiding representant");

    if (dx == 0) {
        // Delete every x, relabel x to the top, prepend x'x'.  The doubled
        // maximum at the front can join no ascent and alternates with
        // nothing.
        Relabeling r = compact_with_top(n, {x});
        std::vector<Letter> rest;
        for (Letter c : w)
            if (c != x) rest.push_back(r(c));
        std::vector<Letter> letters{n, n};
        letters.insert(letters.end(), rest.begin(), rest.end());
        return checked(w, {Word(std::move(letters)), std::move(r), "isolated-vertex"});
    }

    const Letter a = g.neighbours(x)[0];
    if (g.degree(a) == 1) {
        // Isolated edge xa: delete both letters, prepend x'a'x'a' with
        // x' > a' above everything else.
        Relabeling r = compact_with_top(n, {a, x});
        std::vector<Letter> rest;
        for (Letter c : w)
            if (c != x && c != a) rest.push_back(r(c));
        std::vector<Letter> letters{n, n - 1, n, n - 1};
        letters.insert(letters.end(), rest.begin(), rest.end());
        return checked(w, {Word(std::move(letters)), std::move(r), "isolated-edge"});
    }

    // Pendant case: a has degree >= 2, so x occurs at most 3 times (its
    // neighbour bound) — exactly 3 here — and a occurs exactly twice, with
    // the {x,a}-restriction reading x a x a x.
    if (xs.size() != 3)
        throw std::logic_error("reduce_letter: pendant letter occurring > 3 times");
    const auto as = positions_of(w, a);
    if (as.size() != 2 || !(xs[0] < as[0] && as[0] < xs[1] && xs[1] < as[1] && as[1] < xs[2]))
        throw std::logic_error("reduce_letter: pendant restriction is not x a x a x");

    const bool w3_nonempty = as[0] + 1 < xs[1];  // letters strictly between a1 and x2
    const bool w4_nonempty = xs[1] + 1 < as[1];  // letters strictly between x2 and a2
    if (w3_nonempty && w4_nonempty)
        throw std::logic_error("reduce_letter: regions w3 and w4 both nonempty");
    if (!w3_nonempty && !w4_nonempty)
        throw std::logic_error("reduce_letter: pendant with no neighbour candidate region");

    std::vector<Letter> letters(w.begin(), w.end());
    if (w3_nonempty) {
        // Subcase 1: delete x1 and reinsert x3 directly after a2; x's copies
        // end up as ... x2 a2 x3 ... with only a between them.
        letters.erase(letters.begin() + static_cast<std::ptrdiff_t>(xs[2]));
        letters.erase(letters.begin() + static_cast<std::ptrdiff_t>(xs[0]));
        auto a2 = std::find(letters.begin() + static_cast<std::ptrdiff_t>(xs[1]), letters.end(), a);
        letters.insert(a2 + 1, x);
        return checked(w, {Word(std::move(letters)), Relabeling::identity(n), "pendant-subcase-1"});
    }
    // Subcase 2: delete x3 and reinsert x1 directly before a1, giving
    // ... x1 a1 x2 ... with only a between the copies.
    letters.erase(letters.begin() + static_cast<std::ptrdiff_t>(xs[2]));
    letters.erase(letters.begin() + static_cast<std::ptrdiff_t>(xs[0]));
    auto a1 = std::find(letters.begin(), letters.end(), a);
    letters.insert(a1, x);
    return checked(w, {Word(std::move(letters)), Relabeling::identity(n), "pendant-subcase-2"});
}

NormalizeResult normalize(const Word& w) {
    if (contains_pattern(w, Pattern::p123()))
        throw std::invalid_argument("normalize: word must avoid 123");
    if (!w.alphabet_is_contiguous())
        throw std::invalid_argument("normalize: alphabet must be {1..n}");

    NormalizeResult result{w, Relabeling::identity(w.max_letter()), {}};
    for (;;) {
        // Most frequent letter first, ties to the smaller letter.
        Letter pick = 0;
        std::size_t pick_count = 2;
        for (Letter c = 1; c <= result.word.max_letter(); ++c) {
            std::size_t count = result.word.count(c);
            if (count > pick_count) {
                pick = c;
                pick_count = count;
            }
        }
        if (pick == 0) return result;
        ReductionResult step = reduce_letter(result.word, pick);
        result.trace.steps.push_back(
            {step.rule, pick, result.word, step.word, step.relabeling});
        result.relabeling = step.relabeling.compose_after(result.relabeling);
        result.word = std::move(step.word);
    }
}

}  // namespace wordrep
