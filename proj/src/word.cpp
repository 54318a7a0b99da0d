#include "wordrep/word.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>
#include <stdexcept>

#include "wordrep/graph.hpp"

namespace wordrep {

Word::Word(std::vector<Letter> letters) : letters_(std::move(letters)) {
    if (letters_.empty()) throw std::invalid_argument("word: must be non-empty");
    for (Letter x : letters_)
        if (x < 1) throw std::invalid_argument("word: letters must be >= 1");
}

Word Word::parse(std::string_view text) {
    std::vector<Letter> letters;
    bool has_separator = text.find_first_of(" ,\t\n") != std::string_view::npos;
    if (has_separator) {
        std::string buf(text);
        for (char& c : buf)
            if (c == ',') c = ' ';
        std::istringstream in(buf);
        std::string tok;
        while (in >> tok) {
            int value = 0;
            auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
            if (ec != std::errc() || ptr != tok.data() + tok.size())
                throw std::invalid_argument("word: bad token '" + tok + "'");
            letters.push_back(value);
        }
    } else {
        // compact digit form
        for (char c : text) {
            if (!std::isdigit(static_cast<unsigned char>(c)))
                throw std::invalid_argument(std::string("word: bad character '") + c + "'");
            letters.push_back(c - '0');
        }
    }
    return Word(std::move(letters));  // Word() re-validates (non-empty, >= 1)
}

Letter Word::max_letter() const {
    Letter m = 0;
    for (Letter x : letters_) m = std::max(m, x);
    return m;
}

std::vector<Letter> Word::alphabet() const {
    std::vector<Letter> a(letters_);
    std::sort(a.begin(), a.end());
    a.erase(std::unique(a.begin(), a.end()), a.end());
    return a;
}

bool Word::alphabet_is_contiguous() const {
    auto a = alphabet();
    return !a.empty() && a.front() == 1 && a.back() == static_cast<Letter>(a.size());
}

std::size_t Word::count(Letter x) const {
    return static_cast<std::size_t>(std::count(letters_.begin(), letters_.end(), x));
}

Word Word::restrict_to(Letter x, Letter y) const {
    std::vector<Letter> out;
    for (Letter c : letters_)
        if (c == x || c == y) out.push_back(c);
    if (out.empty()) throw std::invalid_argument("restrict_to: neither letter occurs");
    return Word(std::move(out));
}

std::string Word::str() const {
    std::string out;
    for (std::size_t i = 0; i < letters_.size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(letters_[i]);
    }
    return out;
}

std::string Word::compact() const {
    if (max_letter() > 9) return str();
    std::string out;
    for (Letter x : letters_) out += static_cast<char>('0' + x);
    return out;
}

Pattern::Pattern(std::vector<int> values) : values_(std::move(values)) {
    if (values_.empty()) throw std::invalid_argument("pattern: must be non-empty");
    std::vector<bool> seen(values_.size() + 1, false);
    for (int v : values_) {
        if (v < 1 || v > static_cast<int>(values_.size()) || seen[static_cast<std::size_t>(v)])
            throw std::invalid_argument("pattern: not a permutation of 1..k");
        seen[static_cast<std::size_t>(v)] = true;
    }
}

Pattern Pattern::parse(std::string_view text) {
    Word w = Word::parse(text);
    return Pattern(w.letters());
}

const Pattern& Pattern::p123() {
    static const Pattern p({1, 2, 3});
    return p;
}

const Pattern& Pattern::p132() {
    static const Pattern p({1, 3, 2});
    return p;
}

std::string Pattern::str() const {
    return Word(values_).compact();
}

bool is_k_uniform(const Word& w, int k) {
    if (k < 1) throw std::invalid_argument("is_k_uniform: k must be >= 1");
    if (!w.alphabet_is_contiguous())
        throw std::invalid_argument("is_k_uniform: alphabet must be {1..n}");
    for (Letter x = 1; x <= w.max_letter(); ++x)
        if (w.count(x) != static_cast<std::size_t>(k)) return false;
    return true;
}

bool alternates(const Word& w, Letter x, Letter y) {
    if (x == y) throw std::invalid_argument("alternates: letters must differ");
    Letter last = 0;
    bool seen_x = false, seen_y = false, alternating = true;
    for (Letter c : w) {
        if (c != x && c != y) continue;
        (c == x ? seen_x : seen_y) = true;
        if (c == last) alternating = false;  // verdict waits: presence is validated first
        last = c;
    }
    if (!seen_x || !seen_y)
        throw std::invalid_argument("alternates: both letters must occur in the word");
    return alternating;
}

bool naive_alternation_oracle(const Word& w, Letter x, Letter y) {
    if (x == y) throw std::invalid_argument("alternates: letters must differ");
    Word r = w.restrict_to(x, y);  // throws if neither occurs
    if (r.count(x) == 0 || r.count(y) == 0)
        throw std::invalid_argument("alternates: both letters must occur in the word");
    for (std::size_t i = 0; i + 1 < r.size(); ++i)
        if (r[i] == r[i + 1]) return false;
    return true;
}

namespace {

// Backtracking over index positions: chosen[t] holds the word values picked
// for pattern positions 0..t-1; a new value must sit in exactly the same
// strict order relative to each chosen value as p demands (distinct values
// only, per classical containment).
bool contains_from(const Word& w, const Pattern& p, std::size_t start,
                   std::vector<Letter>& chosen) {
    std::size_t t = chosen.size();
    if (t == p.length()) return true;
    for (std::size_t i = start; i + (p.length() - t) <= w.size(); ++i) {
        Letter c = w[i];
        bool ok = true;
        for (std::size_t s = 0; s < t && ok; ++s) {
            if (p[s] < p[t])
                ok = chosen[s] < c;
            else
                ok = chosen[s] > c;
        }
        if (!ok) continue;
        chosen.push_back(c);
        if (contains_from(w, p, i + 1, chosen)) return true;
        chosen.pop_back();
    }
    return false;
}

}  // namespace

bool contains_pattern(const Word& w, const Pattern& p) {
    if (p.length() > w.size()) return false;
    std::vector<Letter> chosen;
    chosen.reserve(p.length());
    return contains_from(w, p, 0, chosen);
}

bool avoids(const Word& w, const Pattern& p) {
    return !contains_pattern(w, p);
}

Graph word_to_graph(const Word& w) {
    if (!w.alphabet_is_contiguous())
        throw std::invalid_argument("word_to_graph: alphabet must be {1..n}");
    int n = w.max_letter();
    Graph g(n);
    for (int x = 1; x <= n; ++x)
        for (int y = x + 1; y <= n; ++y)
            if (alternates(w, x, y)) g.add_edge(x, y);
    return g;
}

}  // namespace wordrep
