// Explicit representant constructions: 123-avoiding words for complete
// graphs, paths and cycles, the 2-uniform variants, the recursive 2-uniform
// 132-avoiding tree word, and disjoint-union composition.

#pragma once

#include <utility>
#include <vector>

#include "wordrep/graph.hpp"
#include "wordrep/word.hpp"

namespace wordrep {

// n (n-1) ... 1: strictly decreasing, avoids every pattern with an ascent,
// represents K_n.  n >= 1.
Word complete_word_123(int n);

// n, n-1, n, then the pairs (i, i+1) for i = n-2 down to 1, then a final 1:
// 2-uniform, avoids 123, represents the path 1-2-...-n.  n >= 2.
Word path_word_123(int n);

// path_word_123(n) with the first and last letter removed; avoids 123,
// represents the cycle 1-2-...-n-1.  n >= 3.
Word cycle_word_123(int n);

// n ... 1 n ... 1: two concatenated descents, 2-uniform, avoids 123,
// represents K_n.  n >= 1.
Word complete_word_123_2uniform(int n);

struct TreeWord {
    Relabeling relabeling;  // original label -> construction label
    Word word;              // represents relabel(tree, relabeling)
};

// Recursive 2-uniform 132-avoiding tree representant.  The construction
// relabels: the root takes the smallest label of its block, children (in
// increasing original-label order) take consecutive sub-blocks; each subtree
// emits  w(T_r) ... w(T_1)  root  n_1 ... n_r,  and the top level appends one
// extra copy of the root.  Rejects non-trees.
TreeWord tree_word_132_2uniform(const Graph& tree, int root = 1);

struct ComposedWord {
    Relabeling relabeling;  // disjoint_union label -> output label (blocks)
    Word word;
};

// Theorem-4.1 composition: component i's word is shifted into the label
// block it receives under disjoint_union input order, and blocks are emitted
// highest first (w_k ... w_1).  Preconditions checked: p in {123, 132}, each
// word avoids p and represents its paired graph, and at most one word is not
// 2-uniform.
ComposedWord compose_disjoint(const std::vector<std::pair<Word, Graph>>& parts,
                              const Pattern& p);

}  // namespace wordrep
