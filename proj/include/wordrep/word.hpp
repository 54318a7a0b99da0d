// Words over positive-integer alphabets, permutation patterns, and the
// alternation machinery that turns words into graphs.
//
// Conventions used throughout the library:
//   * letters are 1-based positive ints; a word over n letters uses exactly
//     the alphabet {1, ..., n} (every letter occurs at least once),
//   * patterns are permutations of {1, ..., k} and containment is classical:
//     a subsequence order-isomorphic to the pattern (values are distinct and
//     strictly ordered, so e.g. 11 contains no length-2 pattern),
//   * x and y alternate in w iff the restriction of w to {x, y} has no two
//     equal adjacent letters.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace wordrep {

class Graph;

using Letter = int;

// A finite non-empty sequence of positive letters.
class Word {
public:
    Word() = default;
    explicit Word(std::vector<Letter> letters);

    // Accepts "3 1 2 1", "3,1,2,1" or — when every letter is a single
    // digit — the compact form "3121".  Throws std::invalid_argument on
    // malformed input (empty, non-numeric, letter < 1).
    static Word parse(std::string_view text);

    std::size_t size() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }
    Letter operator[](std::size_t i) const { return letters_[i]; }

    auto begin() const { return letters_.begin(); }
    auto end() const { return letters_.end(); }
    const std::vector<Letter>& letters() const { return letters_; }

    // Largest letter occurring in the word (0 for the empty word).
    Letter max_letter() const;
    // Sorted list of distinct letters.
    std::vector<Letter> alphabet() const;
    // True iff the alphabet is exactly {1, ..., max_letter()}.
    bool alphabet_is_contiguous() const;
    std::size_t count(Letter x) const;

    // Subword of w consisting of the occurrences of x and y, in order.
    Word restrict_to(Letter x, Letter y) const;

    // Space-separated letters ("3 1 2 1").
    std::string str() const;
    // Compact digits when max_letter() <= 9, otherwise same as str().
    std::string compact() const;

    bool operator==(const Word&) const = default;

private:
    std::vector<Letter> letters_;
};

// A permutation pattern: a bijection {1..k} -> {1..k}, k >= 1.
class Pattern {
public:
    explicit Pattern(std::vector<int> values);
    static Pattern parse(std::string_view text);

    static const Pattern& p123();
    static const Pattern& p132();

    std::size_t length() const { return values_.size(); }
    int operator[](std::size_t i) const { return values_[i]; }
    const std::vector<int>& values() const { return values_; }
    std::string str() const;

    bool operator==(const Pattern&) const = default;

private:
    std::vector<int> values_;
};

// Every letter of w occurs exactly k times.  Preconditions: k >= 1 and w
// non-empty with contiguous alphabet.
bool is_k_uniform(const Word& w, int k);

// Do x and y alternate in w?  Single left-to-right pass.  Preconditions:
// x != y and both letters occur in w (violations throw).
bool alternates(const Word& w, Letter x, Letter y);

// The literal definition — build the {x,y}-restriction, scan for equal
// adjacent letters.  Kept separate from alternates() so the two can be
// cross-checked; tests and witness verification rely on this one.
bool naive_alternation_oracle(const Word& w, Letter x, Letter y);

// Classical pattern containment: is there a subsequence of w order-isomorphic
// to p?  Backtracking over index positions with prefix pruning; words at the
// scale this library targets (<= ~64 letters) are well inside its comfort
// zone.
bool contains_pattern(const Word& w, const Pattern& p);
bool avoids(const Word& w, const Pattern& p);

// The graph of a word: vertices 1..max_letter(w), edge xy iff x and y
// alternate in w.  Precondition: contiguous alphabet (else throws).
Graph word_to_graph(const Word& w);

namespace detail {

// Incremental avoidance state for the two length-3 patterns the search loops
// care about, O(1) resp. O(n) per appended letter.  would_violate(c) reports
// whether appending c completes a forbidden occurrence; push(c) commits the
// letter (callers only push letters that keep the word avoiding).
//
// 123: track m1 = min letter so far and m2 = min second element over
// ascents; c completes an occurrence iff c > m2.
struct Avoider123 {
    int m1 = 0;  // 0 = "+infinity" sentinels (no letters / no ascent yet)
    int m2 = 0;
    bool would_violate(Letter c) const { return m2 != 0 && c > m2; }
    void push(Letter c) {
        if (m1 != 0 && c > m1 && (m2 == 0 || c < m2)) m2 = c;
        if (m1 == 0 || c < m1) m1 = c;
    }
};

// 132: for each letter value b, min_first[b] = the smallest a over ascents
// (a, b) with a < b seen so far (0 = none); c completes an occurrence iff
// some b > c has 0 < min_first[b] < c.
struct Avoider132 {
    explicit Avoider132(int max_letter)
        : m1(0), min_first(static_cast<std::size_t>(max_letter) + 1, 0) {}
    int m1;  // min letter so far, 0 = none
    std::vector<int> min_first;
    bool would_violate(Letter c) const {
        for (std::size_t b = static_cast<std::size_t>(c) + 1; b < min_first.size(); ++b)
            if (min_first[b] != 0 && min_first[b] < c) return true;
        return false;
    }
    void push(Letter c) {
        if (m1 != 0 && m1 < c) {
            int& slot = min_first[static_cast<std::size_t>(c)];
            if (slot == 0 || m1 < slot) slot = m1;
        }
        if (m1 == 0 || c < m1) m1 = c;
    }
};

}  // namespace detail

}  // namespace wordrep
