// Simple undirected graphs on vertex set {1, ..., n}, n <= 64, stored as
// bit-mask adjacency rows.  Includes the standard families, relabeling,
// isomorphism testing at the library's working scale (n <= 12 for search,
// larger for the brute canonical form used by the atlas), and text/JSON IO.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace wordrep {

// A permutation of {1..n}; used both as a vertex relabeling and as the
// witness map attached to search certificates.
class Relabeling {
public:
    explicit Relabeling(std::vector<int> image);
    static Relabeling identity(int n);

    int size() const { return static_cast<int>(image_.size()); }
    int operator()(int v) const { return image_[static_cast<std::size_t>(v) - 1]; }
    const std::vector<int>& image() const { return image_; }

    Relabeling inverse() const;
    // (g.compose(f))(v) = g(f(v)).  Both must have the same size.
    Relabeling compose_after(const Relabeling& f) const;

    bool operator==(const Relabeling&) const = default;

private:
    std::vector<int> image_;  // image_[v-1] = image of v
};

class Graph {
public:
    Graph() = default;
    explicit Graph(int n);
    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

    int vertex_count() const { return n_; }
    int edge_count() const;
    bool has_edge(int u, int v) const;
    void add_edge(int u, int v);  // rejects loops and out-of-range vertices
    int degree(int v) const;
    std::uint64_t row(int v) const { return rows_[static_cast<std::size_t>(v) - 1]; }

    // Edge list with u < v, lexicographically sorted.
    std::vector<std::pair<int, int>> edges() const;
    // Degree sequence sorted ascending.
    std::vector<int> degree_multiset() const;
    // Neighbours of v, ascending.
    std::vector<int> neighbours(int v) const;

    bool operator==(const Graph&) const = default;

private:
    void check_vertex(int v) const;
    int n_ = 0;
    std::vector<std::uint64_t> rows_;
};

// ---- families ----------------------------------------------------------

Graph complete_graph(int n);                  // K_n, n >= 1
Graph path_graph(int n);                      // P_n, n >= 1 (edges i,i+1)
Graph cycle_graph(int n);                     // C_n, n >= 3
// Star K_{1,m}: m leaves labelled 1..m plus a center.  center == 0 means
// "use the default label m+1"; otherwise center must lie in {1..m+1} and the
// leaves take the remaining labels in order.
Graph star_graph(int m, int center = 0);
// Uniformly random labelled tree on n vertices (Prüfer sequence from a
// seeded mt19937_64); deterministic for a fixed (n, seed).
Graph random_tree(int n, std::uint64_t seed);

// ---- operations --------------------------------------------------------

// Blocks in input order: vertices of parts[k] are shifted up by the total
// size of the preceding parts.
Graph disjoint_union(const std::vector<Graph>& parts);
Graph relabel(const Graph& g, const Relabeling& r);

// Vertex sets of connected components, each sorted, ordered by smallest
// vertex.
std::vector<std::vector<int>> components(const Graph& g);
// The subgraph induced on verts (sorted ascending), relabelled to 1..k by
// rank; second member maps new label -> original vertex.
std::pair<Graph, std::vector<int>> induced_subgraph(const Graph& g,
                                                    const std::vector<int>& verts);

// Backtracking isomorphism with degree pruning; intended scale n <= 12.
// Returns r such that relabel(a, r) == b.
std::optional<Relabeling> find_isomorphism(const Graph& a, const Graph& b);
bool is_isomorphic(const Graph& a, const Graph& b);

// Canonical form: the lexicographically smallest adjacency encoding over all
// relabelings (branch-and-bound over degree-compatible assignments).  Two
// graphs are isomorphic iff their canonical forms are equal.  Fine for the
// atlas scale (n <= 10ish); not a general-purpose canonizer.
Graph canonical_form(const Graph& g);
// graph6 encoding (printable ASCII, McKay's format) of the canonical form —
// used as the atlas dedup key.
std::string canonical_graph6(const Graph& g);
std::string to_graph6(const Graph& g);

// ---- IO ----------------------------------------------------------------

// Text format: first line "n m", then m lines "u v".  '#' starts a comment.
Graph parse_graph_text(std::string_view text);
std::string format_graph_text(const Graph& g);
// JSON object {"n": int, "edges": [[u, v], ...]}.
Graph parse_graph_json(std::string_view text);
std::string format_graph_json(const Graph& g);
// Reads a file, auto-detecting JSON (first non-space byte '{') vs text.
Graph load_graph_file(const std::string& path);

std::string to_dot(const Graph& g);

}  // namespace wordrep
