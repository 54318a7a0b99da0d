#include "wordrep/constructions.hpp"

#include <algorithm>
#include <stdexcept>

namespace wordrep {

Word complete_word_123(int n) {
    if (n < 1) throw std::invalid_argument("complete_word_123: n must be >= 1");
    std::vector<Letter> letters;
    for (int x = n; x >= 1; --x) letters.push_back(x);
    return Word(std::move(letters));
}

Word path_word_123(int n) {
    if (n < 2) throw std::invalid_argument("path_word_123: n must be >= 2");
    std::vector<Letter> letters{n, n - 1, n};
    // descending pairs (i, i+1): every letter gets its second copy next to
    // its successor's, so consecutive letters alternate and others do not.
    for (int i = n - 2; i >= 1; --i) {
        letters.push_back(i);
        letters.push_back(i + 1);
    }
    letters.push_back(1);
    return Word(std::move(letters));
}

Word cycle_word_123(int n) {
    if (n < 3) throw std::invalid_argument("cycle_word_123: n must be >= 3");
    const Word path = path_word_123(n);
    std::vector<Letter> letters(path.begin() + 1, path.end() - 1);
    return Word(std::move(letters));
}

Word complete_word_123_2uniform(int n) {
    if (n < 1) throw std::invalid_argument("complete_word_123_2uniform: n must be >= 1");
    std::vector<Letter> letters;
    for (int pass = 0; pass < 2; ++pass)
        for (int x = n; x >= 1; --x) letters.push_back(x);
    return Word(std::move(letters));
}

namespace {

struct TreeBuilder {
    const Graph& tree;
    std::vector<int> new_label;  // 0 = unassigned
    std::vector<Letter> out;

    // Assign labels block-wise: v gets the first label of [lo, hi], children
    // (ascending original label) get consecutive sub-blocks sized by subtree.
    void assign(int v, int parent, int lo, int hi) {
        new_label[static_cast<std::size_t>(v) - 1] = lo;
        int next = lo + 1;
        for (int c : tree.neighbours(v)) {
            if (c == parent) continue;
            int sz = subtree_size(c, v);
            assign(c, v, next, next + sz - 1);
            next += sz;
        }
        if (next != hi + 1) throw std::logic_error("tree labelling: block size mismatch");
    }

    int subtree_size(int v, int parent) const {
        int total = 1;
        for (int c : tree.neighbours(v))
            if (c != parent) total += subtree_size(c, v);
        return total;
    }

    // Children ordered by new label ascending are emitted subtree-last-first:
    // w(T_r) ... w(T_1) v n_1 ... n_r.
    void emit(int v, int parent) {
        std::vector<int> children;
        for (int c : tree.neighbours(v))
            if (c != parent) children.push_back(c);
        std::sort(children.begin(), children.end(), [&](int a, int b) {
            return new_label[static_cast<std::size_t>(a) - 1] <
                   new_label[static_cast<std::size_t>(b) - 1];
        });
        for (auto it = children.rbegin(); it != children.rend(); ++it) emit(*it, v);
        out.push_back(new_label[static_cast<std::size_t>(v) - 1]);
        for (int c : children) out.push_back(new_label[static_cast<std::size_t>(c) - 1]);
    }
};

}  // namespace

TreeWord tree_word_132_2uniform(const Graph& tree, int root) {
    int n = tree.vertex_count();
    if (n < 1) throw std::invalid_argument("tree_word_132_2uniform: empty graph");
    if (root < 1 || root > n) throw std::invalid_argument("tree_word_132_2uniform: bad root");
    if (tree.edge_count() != n - 1 || components(tree).size() != 1)
        throw std::invalid_argument("tree_word_132_2uniform: input is not a tree");

    TreeBuilder builder{tree, std::vector<int>(static_cast<std::size_t>(n), 0), {}};
    builder.assign(root, 0, 1, n);
    builder.emit(root, 0);
    builder.out.push_back(builder.new_label[static_cast<std::size_t>(root) - 1]);
    return TreeWord{Relabeling(std::move(builder.new_label)), Word(std::move(builder.out))};
}

ComposedWord compose_disjoint(const std::vector<std::pair<Word, Graph>>& parts,
                              const Pattern& p) {
    if (parts.empty()) throw std::invalid_argument("compose_disjoint: no components");
    if (!(p == Pattern::p123() || p == Pattern::p132()))
        throw std::invalid_argument("compose_disjoint: pattern must be 123 or 132");

    int non_uniform = 0;
    for (const auto& [w, g] : parts) {
        if (!avoids(w, p))
            throw std::invalid_argument("compose_disjoint: input word contains the pattern");
        if (!(word_to_graph(w) == g))
            throw std::invalid_argument("compose_disjoint: word does not represent its graph");
        if (!is_k_uniform(w, 2)) ++non_uniform;
    }
    if (non_uniform >= 2)
        throw std::invalid_argument(
            "compose_disjoint: more than one non-2-uniform component (the composition "
            "cannot represent the union)");

    std::vector<int> offsets;
    int total = 0;
    for (const auto& [w, g] : parts) {
        offsets.push_back(total);
        total += g.vertex_count();
    }

    // Highest block first: cross-block steps all descend, so no pattern
    // occurrence (123 or 132) can span blocks.
    std::vector<Letter> letters;
    for (auto i = parts.size(); i-- > 0;)
        for (Letter c : parts[i].first) letters.push_back(c + offsets[i]);

    std::vector<int> image(static_cast<std::size_t>(total));
    for (std::size_t i = 0; i < parts.size(); ++i)
        for (int v = 1; v <= parts[i].second.vertex_count(); ++v)
            image[static_cast<std::size_t>(v + offsets[i]) - 1] = v + offsets[i];
    return ComposedWord{Relabeling(std::move(image)), Word(std::move(letters))};
}

}  // namespace wordrep
