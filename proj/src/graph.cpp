#include "wordrep/graph.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace wordrep {

Relabeling::Relabeling(std::vector<int> image) : image_(std::move(image)) {
    std::vector<bool> seen(image_.size() + 1, false);
    for (int v : image_) {
        if (v < 1 || v > static_cast<int>(image_.size()) || seen[static_cast<std::size_t>(v)])
            throw std::invalid_argument("relabeling: not a permutation of 1..n");
        seen[static_cast<std::size_t>(v)] = true;
    }
}

Relabeling Relabeling::identity(int n) {
    std::vector<int> image(static_cast<std::size_t>(n));
    std::iota(image.begin(), image.end(), 1);
    return Relabeling(std::move(image));
}

Relabeling Relabeling::inverse() const {
    std::vector<int> inv(image_.size());
    for (std::size_t i = 0; i < image_.size(); ++i)
        inv[static_cast<std::size_t>(image_[i]) - 1] = static_cast<int>(i) + 1;
    return Relabeling(std::move(inv));
}

Relabeling Relabeling::compose_after(const Relabeling& f) const {
    if (size() != f.size()) throw std::invalid_argument("relabeling: size mismatch");
    std::vector<int> image(image_.size());
    for (int v = 1; v <= size(); ++v)
        image[static_cast<std::size_t>(v) - 1] = (*this)(f(v));
    return Relabeling(std::move(image));
}

Graph::Graph(int n) : n_(n), rows_(static_cast<std::size_t>(n), 0) {
    if (n < 0 || n > 64) throw std::invalid_argument("graph: need 0 <= n <= 64");
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

void Graph::check_vertex(int v) const {
    if (v < 1 || v > n_)
        throw std::invalid_argument("graph: vertex " + std::to_string(v) + " out of range 1.." +
                                    std::to_string(n_));
}

int Graph::edge_count() const {
    int total = 0;
    for (auto r : rows_) total += std::popcount(r);
    return total / 2;
}

bool Graph::has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return (rows_[static_cast<std::size_t>(u) - 1] >> (v - 1)) & 1u;
}

void Graph::add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("graph: loops are not allowed");
    rows_[static_cast<std::size_t>(u) - 1] |= std::uint64_t{1} << (v - 1);
    rows_[static_cast<std::size_t>(v) - 1] |= std::uint64_t{1} << (u - 1);
}

int Graph::degree(int v) const {
    check_vertex(v);
    return std::popcount(rows_[static_cast<std::size_t>(v) - 1]);
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 1; u <= n_; ++u)
        for (int v = u + 1; v <= n_; ++v)
            if ((rows_[static_cast<std::size_t>(u) - 1] >> (v - 1)) & 1u) out.emplace_back(u, v);
    return out;
}

std::vector<int> Graph::degree_multiset() const {
    std::vector<int> d;
    d.reserve(static_cast<std::size_t>(n_));
    for (int v = 1; v <= n_; ++v) d.push_back(degree(v));
    std::sort(d.begin(), d.end());
    return d;
}

std::vector<int> Graph::neighbours(int v) const {
    check_vertex(v);
    std::vector<int> out;
    std::uint64_t r = rows_[static_cast<std::size_t>(v) - 1];
    while (r) {
        int u = std::countr_zero(r);
        out.push_back(u + 1);
        r &= r - 1;
    }
    return out;
}

// ---- families ----------------------------------------------------------

Graph complete_graph(int n) {
    if (n < 1) throw std::invalid_argument("complete_graph: n must be >= 1");
    Graph g(n);
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v) g.add_edge(u, v);
    return g;
}

Graph path_graph(int n) {
    if (n < 1) throw std::invalid_argument("path_graph: n must be >= 1");
    Graph g(n);
    for (int v = 1; v < n; ++v) g.add_edge(v, v + 1);
    return g;
}

Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle_graph: n must be >= 3");
    Graph g = path_graph(n);
    g.add_edge(n, 1);
    return g;
}

Graph star_graph(int m, int center) {
    if (m < 1) throw std::invalid_argument("star_graph: m must be >= 1");
    if (center == 0) center = m + 1;
    if (center < 1 || center > m + 1)
        throw std::invalid_argument("star_graph: center out of range 1..m+1");
    Graph g(m + 1);
    for (int v = 1; v <= m + 1; ++v)
        if (v != center) g.add_edge(center, v);
    return g;
}

Graph random_tree(int n, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("random_tree: n must be >= 1");
    Graph g(n);
    if (n <= 2) {
        if (n == 2) g.add_edge(1, 2);
        return g;
    }
    // Prüfer decoding: uniform over labelled trees.
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> pick(1, n);
    std::vector<int> prufer(static_cast<std::size_t>(n) - 2);
    for (int& p : prufer) p = pick(rng);
    std::vector<int> deg(static_cast<std::size_t>(n) + 1, 1);
    for (int p : prufer) ++deg[static_cast<std::size_t>(p)];
    for (int p : prufer) {
        for (int leaf = 1; leaf <= n; ++leaf) {
            if (deg[static_cast<std::size_t>(leaf)] == 1) {
                g.add_edge(leaf, p);
                --deg[static_cast<std::size_t>(leaf)];
                --deg[static_cast<std::size_t>(p)];
                break;
            }
        }
    }
    int u = 0;
    for (int v = 1; v <= n; ++v)
        if (deg[static_cast<std::size_t>(v)] == 1) {
            if (u == 0)
                u = v;
            else
                g.add_edge(u, v);
        }
    return g;
}

// ---- operations --------------------------------------------------------

Graph disjoint_union(const std::vector<Graph>& parts) {
    int n = 0;
    for (const Graph& p : parts) n += p.vertex_count();
    Graph g(n);
    int offset = 0;
    for (const Graph& p : parts) {
        for (auto [u, v] : p.edges()) g.add_edge(u + offset, v + offset);
        offset += p.vertex_count();
    }
    return g;
}

Graph relabel(const Graph& g, const Relabeling& r) {
    if (r.size() != g.vertex_count()) throw std::invalid_argument("relabel: size mismatch");
    Graph out(g.vertex_count());
    for (auto [u, v] : g.edges()) out.add_edge(r(u), r(v));
    return out;
}

std::vector<std::vector<int>> components(const Graph& g) {
    int n = g.vertex_count();
    std::vector<std::vector<int>> out;
    std::uint64_t unseen = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    while (unseen) {
        int start = std::countr_zero(unseen);
        std::uint64_t comp = std::uint64_t{1} << start;
        // closure under adjacency
        for (;;) {
            std::uint64_t next = comp;
            std::uint64_t scan = comp;
            while (scan) {
                int v = std::countr_zero(scan);
                scan &= scan - 1;
                next |= g.row(v + 1);
            }
            if (next == comp) break;
            comp = next;
        }
        std::vector<int> verts;
        std::uint64_t scan = comp;
        while (scan) {
            verts.push_back(std::countr_zero(scan) + 1);
            scan &= scan - 1;
        }
        out.push_back(std::move(verts));
        unseen &= ~comp;
    }
    return out;
}

std::pair<Graph, std::vector<int>> induced_subgraph(const Graph& g,
                                                    const std::vector<int>& verts) {
    std::vector<int> sorted(verts);
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw std::invalid_argument("induced_subgraph: duplicate vertex");
    Graph out(static_cast<int>(sorted.size()));
    for (std::size_t i = 0; i < sorted.size(); ++i)
        for (std::size_t j = i + 1; j < sorted.size(); ++j)
            if (g.has_edge(sorted[i], sorted[j]))
                out.add_edge(static_cast<int>(i) + 1, static_cast<int>(j) + 1);
    return {out, sorted};
}

// ---- isomorphism -------------------------------------------------------

namespace {

// Assign image[u] for u = 1.. in order; candidate images must match degrees
// and preserve adjacency/non-adjacency against all previously assigned
// vertices.
bool extend_isomorphism(const Graph& a, const Graph& b, std::vector<int>& image,
                        std::uint64_t used, int u) {
    int n = a.vertex_count();
    if (u > n) return true;
    for (int w = 1; w <= n; ++w) {
        if ((used >> (w - 1)) & 1u) continue;
        if (a.degree(u) != b.degree(w)) continue;
        bool ok = true;
        for (int prev = 1; prev < u && ok; ++prev)
            ok = a.has_edge(prev, u) == b.has_edge(image[static_cast<std::size_t>(prev) - 1], w);
        if (!ok) continue;
        image[static_cast<std::size_t>(u) - 1] = w;
        if (extend_isomorphism(a, b, image, used | (std::uint64_t{1} << (w - 1)), u + 1))
            return true;
    }
    return false;
}

}  // namespace

std::optional<Relabeling> find_isomorphism(const Graph& a, const Graph& b) {
    if (a.vertex_count() != b.vertex_count()) return std::nullopt;
    if (a.degree_multiset() != b.degree_multiset()) return std::nullopt;
    std::vector<int> image(static_cast<std::size_t>(a.vertex_count()));
    if (!extend_isomorphism(a, b, image, 0, 1)) return std::nullopt;
    return Relabeling(std::move(image));
}

bool is_isomorphic(const Graph& a, const Graph& b) {
    return find_isomorphism(a, b).has_value();
}

namespace {

// Upper-triangle row-major bit string of g under the partial assignment
// order[0..k): compare against the incumbent best prefix.
struct CanonSearch {
    const Graph& g;
    int n;
    std::vector<int> best;      // best[i] = original vertex placed at position i+1
    std::vector<int> current;
    bool have_best = false;

    explicit CanonSearch(const Graph& graph) : g(graph), n(graph.vertex_count()) {}

    // -1: current prefix is lexicographically smaller than best, 0: equal,
    // +1: larger.  Compares only the bits fully determined by the first k
    // placed vertices (columns pairwise among them).
    int compare_prefix(int k) const {
        if (!have_best) return -1;
        for (int j = 1; j < k; ++j)
            for (int i = 0; i < j; ++i) {
                bool cur = g.has_edge(current[static_cast<std::size_t>(i)],
                                      current[static_cast<std::size_t>(j)]);
                bool bst = g.has_edge(best[static_cast<std::size_t>(i)],
                                      best[static_cast<std::size_t>(j)]);
                if (cur != bst) return cur < bst ? -1 : 1;
            }
        return 0;
    }

    void run(std::uint64_t used, int k) {
        if (k == n) {
            if (!have_best || compare_prefix(n) < 0) {
                best = current;
                have_best = true;
            }
            return;
        }
        for (int v = 1; v <= n; ++v) {
            if ((used >> (v - 1)) & 1u) continue;
            current[static_cast<std::size_t>(k)] = v;
            if (compare_prefix(k + 1) <= 0) run(used | (std::uint64_t{1} << (v - 1)), k + 1);
        }
    }
};

}  // namespace

Graph canonical_form(const Graph& g) {
    int n = g.vertex_count();
    if (n <= 1) return g;
    CanonSearch search(g);
    search.current.resize(static_cast<std::size_t>(n));
    search.run(0, 0);
    // best[i] = original vertex at canonical position i+1, i.e. the inverse
    // of the relabeling we want to apply.
    std::vector<int> inv(search.best);
    Relabeling r = Relabeling(std::move(inv)).inverse();
    return relabel(g, r);
}

std::string to_graph6(const Graph& g) {
    int n = g.vertex_count();
    if (n > 62) throw std::invalid_argument("to_graph6: n must be <= 62");
    std::string out;
    out += static_cast<char>(n + 63);
    int bit = 5;
    char cur = 0;
    for (int v = 2; v <= n; ++v)
        for (int u = 1; u < v; ++u) {
            if (g.has_edge(u, v)) cur |= static_cast<char>(1 << bit);
            if (--bit < 0) {
                out += static_cast<char>(cur + 63);
                bit = 5;
                cur = 0;
            }
        }
    if (bit != 5) out += static_cast<char>(cur + 63);
    return out;
}

std::string canonical_graph6(const Graph& g) {
    return to_graph6(canonical_form(g));
}

// ---- IO ----------------------------------------------------------------

Graph parse_graph_text(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    std::vector<std::string> meaningful;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        meaningful.push_back(line);
    }
    if (meaningful.empty()) throw std::invalid_argument("graph text: empty input");
    std::istringstream header(meaningful[0]);
    int n = 0, m = 0;
    if (!(header >> n >> m)) throw std::invalid_argument("graph text: bad header, want 'n m'");
    std::string extra;
    if (header >> extra) throw std::invalid_argument("graph text: trailing data in header");
    if (static_cast<int>(meaningful.size()) - 1 != m)
        throw std::invalid_argument("graph text: expected " + std::to_string(m) + " edge lines, got " +
                                    std::to_string(meaningful.size() - 1));
    Graph g(n);
    for (int i = 1; i <= m; ++i) {
        std::istringstream edge(meaningful[static_cast<std::size_t>(i)]);
        int u = 0, v = 0;
        if (!(edge >> u >> v) || (edge >> extra))
            throw std::invalid_argument("graph text: bad edge line '" + meaningful[static_cast<std::size_t>(i)] + "'");
        if (g.has_edge(u, v))
            throw std::invalid_argument("graph text: duplicate edge " + std::to_string(u) + " " +
                                        std::to_string(v));
        g.add_edge(u, v);
    }
    return g;
}

std::string format_graph_text(const Graph& g) {
    std::string out = std::to_string(g.vertex_count()) + " " + std::to_string(g.edge_count()) + "\n";
    for (auto [u, v] : g.edges()) out += std::to_string(u) + " " + std::to_string(v) + "\n";
    return out;
}

Graph parse_graph_json(std::string_view text) {
    nlohmann::json j = nlohmann::json::parse(text, nullptr, /*allow_exceptions=*/false);
    if (j.is_discarded()) throw std::invalid_argument("graph json: not valid JSON");
    if (!j.is_object() || !j.contains("n") || !j.contains("edges") ||
        !j.at("n").is_number_integer() || !j.at("edges").is_array())
        throw std::invalid_argument("graph json: want {\"n\": int, \"edges\": [[u,v],...]}");
    Graph g(j.at("n").get<int>());
    for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
            !e[1].is_number_integer())
            throw std::invalid_argument("graph json: each edge must be a pair");
        int u = e[0].get<int>(), v = e[1].get<int>();
        if (g.has_edge(u, v))
            throw std::invalid_argument("graph json: duplicate edge " + std::to_string(u) + " " +
                                        std::to_string(v));
        g.add_edge(u, v);
    }
    return g;
}

std::string format_graph_json(const Graph& g) {
    nlohmann::json j;
    j["n"] = g.vertex_count();
    j["edges"] = nlohmann::json::array();
    for (auto [u, v] : g.edges()) j["edges"].push_back({u, v});
    return j.dump();
}

Graph load_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open graph file: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    std::string text = buf.str();
    auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') return parse_graph_json(text);
    return parse_graph_text(text);
}

std::string to_dot(const Graph& g) {
    std::string out = "graph g {\n";
    for (int v = 1; v <= g.vertex_count(); ++v)
        out += "  " + std::to_string(v) + ";\n";
    for (auto [u, v] : g.edges())
        out += "  " + std::to_string(u) + " -- " + std::to_string(v) + ";\n";
    out += "}\n";
    return out;
}

}  // namespace wordrep
