#include "wordrep/search.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <iostream>
#include <limits>
#include <stdexcept>
#include <thread>
#include <unordered_map>

#include "wordrep/constructions.hpp"

namespace wordrep {

std::string_view bound_tag_name(BoundTag tag) {
    switch (tag) {
        case BoundTag::Theorem31Degree: return "theorem-3.1-degree";
        case BoundTag::Corollary32Neighbor: return "corollary-3.2-neighbor";
        case BoundTag::Theorem34Global2: return "theorem-3.4-global-2";
        case BoundTag::TwoUniformByDefinition: return "two-uniform-by-definition";
        case BoundTag::HeuristicCap: return "heuristic-cap";
    }
    return "?";
}

BoundJustification multiplicity_bound(const Graph& g, int v, const Pattern& p,
                                      int heuristic_cap) {
    if (v < 1 || v > g.vertex_count())
        throw std::invalid_argument("multiplicity_bound: vertex out of range");
    if (p.length() < 2) throw std::invalid_argument("multiplicity_bound: pattern too short");
    if (heuristic_cap < 1) throw std::invalid_argument("multiplicity_bound: cap must be >= 1");
    const int k = static_cast<int>(p.length()) - 1;
    if (g.degree(v) >= k) return {k, BoundTag::Theorem31Degree};
    // The global two-copy normalization exists exactly for 123 and is at
    // least as tight as the neighbour corollary, so it goes next.
    if (p == Pattern::p123()) return {2, BoundTag::Theorem34Global2};
    for (int u : g.neighbours(v))
        if (g.degree(u) >= k) return {k + 1, BoundTag::Corollary32Neighbor};
    return {heuristic_cap, BoundTag::HeuristicCap};
}

SearchBounds SearchBounds::from_pattern(const Graph& g, const Pattern& p, int heuristic_cap) {
    SearchBounds b;
    for (int v = 1; v <= g.vertex_count(); ++v) {
        BoundJustification j = multiplicity_bound(g, v, p, heuristic_cap);
        b.max_occurrences.push_back(j.bound);
        b.tags.push_back(j.tag);
    }
    return b;
}

SearchBounds SearchBounds::uniform(const Graph& g, int k) {
    if (k < 1) throw std::invalid_argument("SearchBounds::uniform: k must be >= 1");
    SearchBounds b;
    b.max_occurrences.assign(static_cast<std::size_t>(g.vertex_count()), k);
    b.tags.assign(static_cast<std::size_t>(g.vertex_count()), BoundTag::TwoUniformByDefinition);
    return b;
}

bool SearchBounds::complete() const {
    return std::none_of(tags.begin(), tags.end(),
                        [](BoundTag t) { return t == BoundTag::HeuristicCap; });
}

BoundTag SearchBounds::justification() const {
    // Report the weakest assumption in play.
    for (BoundTag t : {BoundTag::HeuristicCap, BoundTag::Theorem34Global2,
                       BoundTag::Corollary32Neighbor, BoundTag::Theorem31Degree})
        if (std::find(tags.begin(), tags.end(), t) != tags.end()) return t;
    return BoundTag::TwoUniformByDefinition;
}

// ------------------------------------------------------------------------
// The DFS engine.
//
// Enumeration order: positions left to right, candidate letters ascending,
// each word tested before its extensions — preorder equals lexicographic
// order over candidate words, so the first hit is the smallest witness.
//
// Pair state: for every letter pair, `last` remembers which of the two
// occurred most recently; a pair breaks (permanently) when a letter repeats
// with no partner in between.  At a complete word, edge <=> unbroken pair.
// ------------------------------------------------------------------------

namespace {

constexpr int kMaxN = 12;
constexpr int kMaxLen = 48;

struct EngineConfig {
    int n = 0;
    std::array<std::int8_t, kMaxN + 1> bound{};
    bool uniform = false;  // complete <=> every count at its bound
    bool exact = false;    // leaf test: equality instead of isomorphism
    std::array<std::uint16_t, kMaxN + 1> target_row{};
    std::array<std::int8_t, kMaxN + 1> target_deg{};
    std::array<std::int8_t, kMaxN> target_deg_sorted{};  // ascending, [0..n)
    int pattern_kind = 0;  // 0 none, 1 = 123, 2 = 132, 3 = generic
    const Pattern* generic = nullptr;
    PruneToggles prunes{};
    int max_len = 0;
    bool progress = false;
};

struct NodeState {
    std::array<std::int8_t, kMaxN + 1> count{};
    std::array<std::array<std::int8_t, kMaxN + 1>, kMaxN + 1> last{};  // [min][max]
    std::array<std::uint16_t, kMaxN + 1> broken{};
    std::uint16_t present = 0;
    std::uint16_t finalized = 0;  // letters at their occurrence bound
    std::int8_t num_present = 0;
    bool tainted = false;  // contains the pattern (only with avoidance prune off)
    std::int8_t m1 = 0, m2 = 0;                      // 123 state (0 = +inf)
    std::array<std::int8_t, kMaxN + 1> minfirst{};   // 132 state (0 = none)
    std::int8_t len = 0;
    std::array<std::int8_t, kMaxLen> word{};
};

struct EngineResult {
    std::uint64_t enumerated = 0;
    std::uint64_t survived = 0;
    std::uint64_t nodes = 0;
    bool hit = false;
    bool aborted = false;
    std::vector<Letter> word;
    std::vector<int> image;  // target vertex -> leaf letter
};

Word materialize(const NodeState& s) {
    std::vector<Letter> letters;
    letters.reserve(static_cast<std::size_t>(s.len));
    for (int i = 0; i < s.len; ++i) letters.push_back(s.word[static_cast<std::size_t>(i)]);
    return Word(std::move(letters));
}

// Append letter c, updating avoidance and pair state; false = this subtree
// cannot contain a witness (or, with the avoidance prune, a surviving word).
bool apply_letter(NodeState& s, int c, const EngineConfig& cfg) {
    // pattern-avoidance automaton
    bool violates = false;
    if (cfg.pattern_kind == 1) {
        violates = s.m2 != 0 && c > s.m2;
    } else if (cfg.pattern_kind == 2) {
        for (int b = c + 1; b <= cfg.n && !violates; ++b)
            violates = s.minfirst[static_cast<std::size_t>(b)] != 0 &&
                       s.minfirst[static_cast<std::size_t>(b)] < c;
    }
    if (violates) {
        if (cfg.prunes.avoidance) return false;
        s.tainted = true;
    }
    if (cfg.pattern_kind == 1) {
        if (s.m1 != 0 && c > s.m1 && (s.m2 == 0 || c < s.m2)) s.m2 = static_cast<std::int8_t>(c);
        if (s.m1 == 0 || c < s.m1) s.m1 = static_cast<std::int8_t>(c);
    } else if (cfg.pattern_kind == 2) {
        auto& slot = s.minfirst[static_cast<std::size_t>(c)];
        if (s.m1 != 0 && s.m1 < c && (slot == 0 || s.m1 < slot)) slot = s.m1;
        if (s.m1 == 0 || c < s.m1) s.m1 = static_cast<std::int8_t>(c);
    }

    // pair state: c repeating with no y in between breaks (c, y) for good
    const std::uint16_t cbit = static_cast<std::uint16_t>(1u << (c - 1));
    for (int y = 1; y <= cfg.n; ++y) {
        if (y == c) continue;
        auto& slot = c < y ? s.last[static_cast<std::size_t>(c)][static_cast<std::size_t>(y)]
                           : s.last[static_cast<std::size_t>(y)][static_cast<std::size_t>(c)];
        const std::uint16_t ybit = static_cast<std::uint16_t>(1u << (y - 1));
        if (slot == c) {
            if (!(s.broken[static_cast<std::size_t>(c)] & ybit)) {
                s.broken[static_cast<std::size_t>(c)] |= ybit;
                s.broken[static_cast<std::size_t>(y)] |= cbit;
                // A target edge needs alternation forever after (core check
                // of the fixed-labelling mode, not a toggleable prune).
                if (cfg.exact && (cfg.target_row[static_cast<std::size_t>(c)] & ybit))
                    return false;
            }
        } else {
            slot = static_cast<std::int8_t>(c);
        }
    }

    ++s.count[static_cast<std::size_t>(c)];
    s.word[static_cast<std::size_t>(s.len++)] = static_cast<std::int8_t>(c);
    if (!(s.present & cbit)) {
        s.present |= cbit;
        ++s.num_present;
    }
    const bool newly_final = s.count[static_cast<std::size_t>(c)] == cfg.bound[static_cast<std::size_t>(c)];
    if (newly_final) s.finalized |= cbit;

    if (cfg.pattern_kind == 3) {
        if (contains_pattern(materialize(s), *cfg.generic)) {
            if (cfg.prunes.avoidance) return false;
            s.tainted = true;
        }
    }

    if (cfg.exact) {
        // Both letters at their bounds freeze the pair's restriction: still
        // alternating means the edge is forced at every extension.
        if (newly_final) {
            const std::uint16_t forced =
                s.finalized & static_cast<std::uint16_t>(~s.broken[static_cast<std::size_t>(c)]) &
                static_cast<std::uint16_t>(~cbit);
            if (forced & static_cast<std::uint16_t>(~cfg.target_row[static_cast<std::size_t>(c)]))
                return false;
        }
        return true;
    }

    // Up-to-isomorphism feasibility: per-vertex possible degrees (unbroken
    // pairs) can only shrink and must-degrees (frozen alternating pairs) can
    // only grow, so sorted-domination against the target degree sequence is
    // a sound cut in both directions.
    if (cfg.prunes.degree_feasibility) {
        std::array<std::int8_t, kMaxN> pd;
        for (int x = 1; x <= cfg.n; ++x)
            pd[static_cast<std::size_t>(x - 1)] = static_cast<std::int8_t>(
                cfg.n - 1 - std::popcount(s.broken[static_cast<std::size_t>(x)]));
        std::sort(pd.begin(), pd.begin() + cfg.n);
        for (int i = 0; i < cfg.n; ++i)
            if (pd[static_cast<std::size_t>(i)] < cfg.target_deg_sorted[static_cast<std::size_t>(i)])
                return false;
    }
    if (cfg.prunes.forced_edges) {
        std::array<std::int8_t, kMaxN> md{};
        for (int x = 1; x <= cfg.n; ++x) {
            const std::uint16_t xbit = static_cast<std::uint16_t>(1u << (x - 1));
            const std::uint16_t frozen = static_cast<std::uint16_t>(
                s.finalized & ~s.broken[static_cast<std::size_t>(x)] & ~xbit);
            md[static_cast<std::size_t>(x - 1)] =
                (s.finalized & xbit) ? static_cast<std::int8_t>(std::popcount(frozen))
                                     : std::int8_t{0};
        }
        std::sort(md.begin(), md.begin() + cfg.n);
        for (int i = 0; i < cfg.n; ++i)
            if (md[static_cast<std::size_t>(i)] > cfg.target_deg_sorted[static_cast<std::size_t>(i)])
                return false;
    }
    return true;
}

bool is_candidate(const NodeState& s, const EngineConfig& cfg) {
    return cfg.uniform ? s.len == cfg.max_len : s.num_present == cfg.n;
}

// Backtracking isomorphism on bit-mask rows; image[u] = leaf letter playing
// target vertex u, i.e. relabel(target, image) == leaf graph.
bool extend_leaf_iso(const EngineConfig& cfg, const std::array<std::uint16_t, kMaxN + 1>& leaf_row,
                     const std::array<std::int8_t, kMaxN + 1>& leaf_deg, int u,
                     std::uint16_t used, std::array<int, kMaxN + 1>& image) {
    if (u > cfg.n) return true;
    for (int w = 1; w <= cfg.n; ++w) {
        const std::uint16_t wbit = static_cast<std::uint16_t>(1u << (w - 1));
        if (used & wbit) continue;
        if (cfg.target_deg[static_cast<std::size_t>(u)] != leaf_deg[static_cast<std::size_t>(w)])
            continue;
        bool ok = true;
        for (int prev = 1; prev < u && ok; ++prev) {
            const bool te = cfg.target_row[static_cast<std::size_t>(prev)] &
                            static_cast<std::uint16_t>(1u << (u - 1));
            const bool le = leaf_row[static_cast<std::size_t>(image[static_cast<std::size_t>(prev)])] & wbit;
            ok = te == le;
        }
        if (!ok) continue;
        image[static_cast<std::size_t>(u)] = w;
        if (extend_leaf_iso(cfg, leaf_row, leaf_deg, u + 1,
                            static_cast<std::uint16_t>(used | wbit), image))
            return true;
    }
    return false;
}

// Test a complete word; true = verified hit recorded in res.
bool test_candidate(const NodeState& s, const EngineConfig& cfg, EngineResult& res) {
    ++res.enumerated;
    if (s.tainted) return false;
    ++res.survived;

    std::array<std::uint16_t, kMaxN + 1> rows{};
    std::array<std::int8_t, kMaxN + 1> degs{};
    const std::uint16_t full = static_cast<std::uint16_t>((1u << cfg.n) - 1);
    for (int x = 1; x <= cfg.n; ++x) {
        rows[static_cast<std::size_t>(x)] =
            full & static_cast<std::uint16_t>(~s.broken[static_cast<std::size_t>(x)]) &
            static_cast<std::uint16_t>(~(1u << (x - 1)));
        degs[static_cast<std::size_t>(x)] =
            static_cast<std::int8_t>(std::popcount(rows[static_cast<std::size_t>(x)]));
    }

    std::array<int, kMaxN + 1> image{};
    if (cfg.exact) {
        for (int x = 1; x <= cfg.n; ++x)
            if (rows[static_cast<std::size_t>(x)] != cfg.target_row[static_cast<std::size_t>(x)])
                return false;
        for (int x = 1; x <= cfg.n; ++x) image[static_cast<std::size_t>(x)] = x;
    } else {
        std::array<std::int8_t, kMaxN> sorted;
        for (int x = 1; x <= cfg.n; ++x)
            sorted[static_cast<std::size_t>(x - 1)] = degs[static_cast<std::size_t>(x)];
        std::sort(sorted.begin(), sorted.begin() + cfg.n);
        for (int i = 0; i < cfg.n; ++i)
            if (sorted[static_cast<std::size_t>(i)] != cfg.target_deg_sorted[static_cast<std::size_t>(i)])
                return false;
        if (!extend_leaf_iso(cfg, rows, degs, 1, 0, image)) return false;
    }

    res.hit = true;
    res.word.clear();
    for (int i = 0; i < s.len; ++i) res.word.push_back(s.word[static_cast<std::size_t>(i)]);
    res.image.assign(static_cast<std::size_t>(cfg.n) + 1, 0);
    for (int x = 1; x <= cfg.n; ++x)
        res.image[static_cast<std::size_t>(x)] = image[static_cast<std::size_t>(x)];
    return true;
}

struct CancelToken {
    const std::atomic<std::size_t>* best = nullptr;
    std::size_t my_index = 0;
};

// Full DFS below s (testing s itself first).  Returns true to unwind: a hit,
// or a cancellation (res.aborted distinguishes).
bool dfs(const NodeState& s, const EngineConfig& cfg, EngineResult& res, const CancelToken& tok) {
    if ((++res.nodes & 0xFFFF) == 0 && tok.best &&
        tok.best->load(std::memory_order_relaxed) < tok.my_index) {
        res.aborted = true;
        return true;
    }
    if (cfg.progress && !tok.best && (res.nodes & 0x7FFFFF) == 0)
        std::cerr << "  ... " << res.enumerated << " words tested\n";
    if (is_candidate(s, cfg) && test_candidate(s, cfg, res)) return true;
    for (int c = 1; c <= cfg.n; ++c) {
        if (s.count[static_cast<std::size_t>(c)] >= cfg.bound[static_cast<std::size_t>(c)]) continue;
        if (s.len >= cfg.max_len) break;
        NodeState child = s;
        if (!apply_letter(child, c, cfg)) continue;
        if (dfs(child, cfg, res, tok)) return true;
    }
    return false;
}

// Sequential frontier walk for the parallel mode: everything shallower than
// split_depth is handled (and tested) in preorder; depth-split_depth nodes
// become ordered tasks.  A hit at depth < split_depth stops the walk — all
// already-queued tasks cover lexicographically smaller subtrees, so they
// still take precedence in aggregation.
bool collect_frontier(const NodeState& s, int depth, int split_depth, const EngineConfig& cfg,
                      EngineResult& res, std::vector<NodeState>& tasks) {
    if (depth == split_depth) {
        tasks.push_back(s);
        return false;
    }
    if (is_candidate(s, cfg) && test_candidate(s, cfg, res)) return true;
    for (int c = 1; c <= cfg.n; ++c) {
        if (s.count[static_cast<std::size_t>(c)] >= cfg.bound[static_cast<std::size_t>(c)]) continue;
        if (s.len >= cfg.max_len) break;
        NodeState child = s;
        if (!apply_letter(child, c, cfg)) continue;
        if (collect_frontier(child, depth + 1, split_depth, cfg, res, tasks)) return true;
    }
    return false;
}

struct EngineOutcome {
    bool hit = false;
    std::vector<Letter> word;
    std::vector<int> image;
    std::uint64_t enumerated = 0;
    std::uint64_t survived = 0;
};

EngineOutcome run_engine_search(const EngineConfig& cfg, int jobs, int split_depth) {
    NodeState root{};
    EngineOutcome out;

    if (jobs <= 1) {
        EngineResult res;
        dfs(root, cfg, res, CancelToken{});
        out.hit = res.hit;
        out.word = res.word;
        out.image = res.image;
        out.enumerated = res.enumerated;
        out.survived = res.survived;
        return out;
    }

    if (split_depth <= 0) split_depth = std::min(4, cfg.max_len);
    EngineResult phase1;
    std::vector<NodeState> tasks;
    collect_frontier(root, 0, split_depth, cfg, phase1, tasks);

    std::vector<EngineResult> results(tasks.size());
    std::atomic<std::size_t> next{0};
    std::atomic<std::size_t> best{std::numeric_limits<std::size_t>::max()};
    auto worker = [&]() {
        for (;;) {
            const std::size_t i = next.fetch_add(1, std::memory_order_relaxed);
            if (i >= tasks.size()) return;
            if (i > best.load(std::memory_order_acquire)) continue;
            EngineResult& res = results[i];
            dfs(tasks[i], cfg, res, CancelToken{&best, i});
            if (res.hit && !res.aborted) {
                std::size_t cur = best.load(std::memory_order_acquire);
                while (i < cur && !best.compare_exchange_weak(cur, i, std::memory_order_acq_rel)) {
                }
            }
        }
    };
    std::vector<std::thread> pool;
    const int threads = static_cast<int>(std::min<std::size_t>(
        static_cast<std::size_t>(jobs), std::max<std::size_t>(tasks.size(), 1)));
    pool.reserve(static_cast<std::size_t>(threads));
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();

    // Earliest task's witness wins; the phase-1 candidate (if any) sits
    // lexicographically after every queued subtree, so it is the fallback.
    for (std::size_t i = 0; i < results.size(); ++i) {
        if (results[i].hit && !results[i].aborted) {
            out.hit = true;
            out.word = results[i].word;
            out.image = results[i].image;
            return out;
        }
    }
    if (phase1.hit) {
        out.hit = true;
        out.word = phase1.word;
        out.image = phase1.image;
        return out;
    }
    out.enumerated = phase1.enumerated;
    out.survived = phase1.survived;
    for (const auto& r : results) {
        out.enumerated += r.enumerated;
        out.survived += r.survived;
    }
    return out;
}

int pattern_kind_of(const std::optional<Pattern>& p) {
    if (!p) return 0;
    if (*p == Pattern::p123()) return 1;
    if (*p == Pattern::p132()) return 2;
    return 3;
}

// Build the graph of w through the most literal route — the per-pair
// restriction scan — so witness verification does not share code with the
// engine's incremental state.
Graph graph_via_naive_oracle(const Word& w) {
    const int n = w.max_letter();
    Graph g(n);
    for (int x = 1; x <= n; ++x)
        for (int y = x + 1; y <= n; ++y)
            if (naive_alternation_oracle(w, x, y)) g.add_edge(x, y);
    return g;
}

WitnessInfo verify_witness(const Graph& g, const std::optional<Pattern>& p,
                           std::optional<int> uniformity, Word word, Relabeling r) {
    std::vector<std::string> transcript;
    if (p) {
        if (contains_pattern(word, *p))
            throw std::logic_error("witness verification: word contains the pattern");
        transcript.push_back("avoids(" + p->str() + "): true");
    }
    if (uniformity) {
        if (!is_k_uniform(word, *uniformity))
            throw std::logic_error("witness verification: word is not uniform");
        transcript.push_back("is_k_uniform(word, " + std::to_string(*uniformity) + "): true");
    }
    const Graph wg = graph_via_naive_oracle(word);
    if (!(wg == relabel(g, r)))
        throw std::logic_error("witness verification: graph mismatch");
    transcript.push_back(
        "word_to_graph(word) == relabel(graph, relabeling): true (naive alternation oracle)");
    return WitnessInfo{std::move(r), std::move(word), std::move(transcript)};
}

Certificate run_search(const Graph& g, const std::optional<Pattern>& p,
                       const SearchBounds& bounds, std::optional<int> uniformity,
                       const SearchOptions& opts, bool exact) {
    const int n = g.vertex_count();
    if (n < 1 || n > kMaxN)
        throw std::invalid_argument("search: graph must have between 1 and 12 vertices");
    if (static_cast<int>(bounds.max_occurrences.size()) != n ||
        static_cast<int>(bounds.tags.size()) != n)
        throw std::invalid_argument("search: bounds must cover every vertex");
    for (int b : bounds.max_occurrences)
        if (b < 1) throw std::invalid_argument("search: bounds must be positive");
    if (uniformity && *uniformity < 1)
        throw std::invalid_argument("search: uniformity must be >= 1");
    if (uniformity)
        for (int b : bounds.max_occurrences)
            if (b < *uniformity)
                throw std::invalid_argument("search: uniformity exceeds a vertex bound");
    if (opts.jobs < 1) throw std::invalid_argument("search: jobs must be >= 1");

    EngineConfig cfg;
    cfg.n = n;
    cfg.uniform = uniformity.has_value();
    cfg.exact = exact;
    cfg.prunes = opts.prunes;
    cfg.progress = opts.progress;
    int total = 0;
    for (int v = 1; v <= n; ++v) {
        const int b = uniformity ? *uniformity : bounds.max_occurrences[static_cast<std::size_t>(v) - 1];
        cfg.bound[static_cast<std::size_t>(v)] = static_cast<std::int8_t>(b);
        total += b;
    }
    if (total > kMaxLen) throw std::invalid_argument("search: occurrence bounds exceed engine capacity");
    cfg.max_len = total;
    for (int v = 1; v <= n; ++v) {
        cfg.target_row[static_cast<std::size_t>(v)] = static_cast<std::uint16_t>(g.row(v));
        cfg.target_deg[static_cast<std::size_t>(v)] = static_cast<std::int8_t>(g.degree(v));
        cfg.target_deg_sorted[static_cast<std::size_t>(v - 1)] = static_cast<std::int8_t>(g.degree(v));
    }
    std::sort(cfg.target_deg_sorted.begin(), cfg.target_deg_sorted.begin() + n);
    cfg.pattern_kind = pattern_kind_of(p);
    if (cfg.pattern_kind == 3) cfg.generic = &*p;

    const auto t0 = std::chrono::steady_clock::now();
    EngineOutcome out = run_engine_search(cfg, opts.jobs, opts.split_depth);
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    Certificate cert;
    cert.pattern = p;
    cert.graph = g;
    cert.bounds = bounds;
    cert.uniformity = uniformity;
    // A uniform-regime exhaustion answers the uniform question completely no
    // matter how the bounds were justified.
    cert.complete = uniformity ? true : bounds.complete();
    cert.justification = uniformity ? BoundTag::TwoUniformByDefinition : bounds.justification();
    if (out.hit) {
        cert.kind = Certificate::Kind::Witness;
        std::vector<int> image(out.image.begin() + 1, out.image.end());
        cert.witness = verify_witness(g, p, uniformity, Word(out.word), Relabeling(std::move(image)));
    } else {
        cert.kind = Certificate::Kind::Exhausted;
        cert.exhausted = ExhaustionInfo{out.enumerated, out.survived, seconds};
    }
    return cert;
}

}  // namespace

Certificate find_representant(const Graph& g, const Pattern& p, const SearchBounds& bounds,
                              std::optional<int> uniformity, const SearchOptions& opts) {
    return run_search(g, p, bounds, uniformity, opts, /*exact=*/false);
}

Certificate find_representant_fixed(const Graph& g, const std::optional<Pattern>& p,
                                    const SearchBounds& bounds, std::optional<int> uniformity,
                                    const SearchOptions& opts) {
    return run_search(g, p, bounds, uniformity, opts, /*exact=*/true);
}

bool opposite_order_prune(const Word& partial, Letter x, Letter a, Letter b) {
    if (x == a || x == b || a == b)
        throw std::invalid_argument("opposite_order_prune: letters must be distinct");
    std::size_t first_x = partial.size(), last_x = partial.size();
    for (std::size_t i = 0; i < partial.size(); ++i)
        if (partial[i] == x) {
            if (first_x == partial.size()) first_x = i;
            last_x = i;
        }
    if (first_x == partial.size()) return true;  // no x placed: no judgment

    // first occurrence of the letter strictly inside [begin, end)
    auto find_in = [&](Letter c, std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i)
            if (partial[i] == c) return std::optional<std::size_t>(i);
        return std::optional<std::size_t>();
    };
    const auto a_left = find_in(a, 0, first_x);
    const auto b_left = find_in(b, 0, first_x);
    const auto a_right = find_in(a, last_x + 1, partial.size());
    const auto b_right = find_in(b, last_x + 1, partial.size());
    if (!a_left || !b_left || !a_right || !b_right) return true;  // not on both sides
    const bool a_first_left = *a_left < *b_left;
    const bool a_first_right = *a_right < *b_right;
    // Same order on both sides means a and b alternate — impossible for a
    // non-edge, so the branch is infeasible.
    return a_first_left != a_first_right;
}

// ------------------------------------------------------------------------
// Disjoint-union decision (Theorem 4.1)
// ------------------------------------------------------------------------

namespace {

SearchBounds mergeable_bounds(const std::vector<Graph>& components,
                              const std::vector<SearchBounds>& per_component) {
    SearchBounds merged;
    for (std::size_t i = 0; i < components.size(); ++i) {
        merged.max_occurrences.insert(merged.max_occurrences.end(),
                                      per_component[i].max_occurrences.begin(),
                                      per_component[i].max_occurrences.end());
        merged.tags.insert(merged.tags.end(), per_component[i].tags.begin(),
                           per_component[i].tags.end());
    }
    return merged;
}

}  // namespace

DisjointDecision decide_disjoint_132_123(const std::vector<Graph>& components, const Pattern& p,
                                         const SearchOptions& opts) {
    if (components.empty())
        throw std::invalid_argument("decide_disjoint: need at least one component");
    if (!(p == Pattern::p123() || p == Pattern::p132()))
        throw std::invalid_argument("decide_disjoint: pattern must be 123 or 132");
    for (const Graph& c : components)
        if (wordrep::components(c).size() != 1)
            throw std::invalid_argument("decide_disjoint: every input graph must be connected");

    DisjointDecision decision;
    decision.general.resize(components.size());
    double seconds = 0;
    std::uint64_t enumerated = 0, survived = 0;

    // 2-uniform regime first: always complete, and two failures settle the
    // question without any general-regime work.
    std::vector<std::size_t> lacking;
    for (std::size_t i = 0; i < components.size(); ++i) {
        Certificate c = find_representant(components[i], p, SearchBounds::uniform(components[i], 2),
                                          2, opts);
        if (c.kind == Certificate::Kind::Exhausted) {
            lacking.push_back(i);
            enumerated += c.exhausted->enumerated;
            survived += c.exhausted->survived_avoidance;
            seconds += c.exhausted->seconds;
        }
        decision.two_uniform.push_back(std::move(c));
        if (lacking.size() >= 2) break;  // theorem settles it
    }

    const Graph whole = disjoint_union(components);
    std::vector<SearchBounds> used_bounds;
    for (const Graph& c : components) used_bounds.push_back(SearchBounds::uniform(c, 2));

    if (lacking.size() >= 2) {
        decision.offending = {lacking[0], lacking[1]};
        Certificate overall;
        overall.kind = Certificate::Kind::Exhausted;
        overall.pattern = p;
        overall.graph = whole;
        overall.bounds = mergeable_bounds(components, used_bounds);
        overall.complete = true;  // Theorem 4.1 with two exhausted-complete components
        overall.justification = BoundTag::TwoUniformByDefinition;
        overall.exhausted = ExhaustionInfo{enumerated, survived, seconds};
        decision.overall = std::move(overall);
        return decision;
    }

    if (lacking.size() == 1) {
        const std::size_t j = lacking[0];
        SearchBounds gb = SearchBounds::from_pattern(components[j], p);
        Certificate c = find_representant(components[j], p, gb, std::nullopt, opts);
        used_bounds[j] = gb;
        if (c.kind == Certificate::Kind::Exhausted) {
            enumerated += c.exhausted->enumerated;
            survived += c.exhausted->survived_avoidance;
            seconds += c.exhausted->seconds;
            decision.general[j] = std::move(c);
            decision.offending = {j};
            Certificate overall;
            overall.kind = Certificate::Kind::Exhausted;
            overall.pattern = p;
            overall.graph = whole;
            overall.bounds = mergeable_bounds(components, used_bounds);
            overall.complete = decision.general[j]->complete;
            overall.justification = decision.general[j]->justification;
            overall.exhausted = ExhaustionInfo{enumerated, survived, seconds};
            decision.overall = std::move(overall);
            return decision;
        }
        decision.general[j] = std::move(c);
    }

    // Assemble the composed witness: per-component witness words, blocks in
    // input order, per-component relabelings folded into the overall map.
    std::vector<std::pair<Word, Graph>> parts;
    std::vector<const WitnessInfo*> infos;
    for (std::size_t i = 0; i < components.size(); ++i) {
        const Certificate& chosen = decision.general[i] ? *decision.general[i] : decision.two_uniform[i];
        infos.push_back(&*chosen.witness);
        parts.emplace_back(chosen.witness->word, relabel(components[i], chosen.witness->relabeling));
    }
    ComposedWord composed = compose_disjoint(parts, p);

    std::vector<int> image(static_cast<std::size_t>(whole.vertex_count()));
    int offset = 0;
    for (std::size_t i = 0; i < components.size(); ++i) {
        const int sz = components[i].vertex_count();
        for (int v = 1; v <= sz; ++v)
            image[static_cast<std::size_t>(offset + v) - 1] =
                composed.relabeling(offset + (*infos[i]).relabeling(v));
        offset += sz;
    }

    const bool all_two_uniform = lacking.empty();
    Certificate overall;
    overall.kind = Certificate::Kind::Witness;
    overall.pattern = p;
    overall.graph = whole;
    overall.bounds = mergeable_bounds(components, used_bounds);
    overall.uniformity = all_two_uniform ? std::optional<int>(2) : std::nullopt;
    overall.complete = true;
    overall.justification = all_two_uniform ? BoundTag::TwoUniformByDefinition
                                            : overall.bounds.justification();
    overall.witness = verify_witness(whole, p, overall.uniformity, composed.word,
                                     Relabeling(std::move(image)));
    decision.overall = std::move(overall);
    return decision;
}

// ------------------------------------------------------------------------
// Atlas
// ------------------------------------------------------------------------

std::string_view atlas_status_name(AtlasStatus status) {
    switch (status) {
        case AtlasStatus::Representable: return "representable";
        case AtlasStatus::NotRepresentable: return "not-representable";
        case AtlasStatus::Unknown: return "unknown-under-heuristic-cap";
    }
    return "?";
}

namespace {

// Cheap label-invariant signature (two refinement rounds over degrees) to
// bucket candidate graphs before exact isomorphism tests.
std::uint64_t invariant_signature(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<std::uint64_t> color(static_cast<std::size_t>(n));
    for (int v = 1; v <= n; ++v) color[static_cast<std::size_t>(v) - 1] = static_cast<std::uint64_t>(g.degree(v));
    for (int round = 0; round < 2; ++round) {
        std::vector<std::uint64_t> next(static_cast<std::size_t>(n));
        for (int v = 1; v <= n; ++v) {
            std::vector<std::uint64_t> neigh;
            for (int u : g.neighbours(v)) neigh.push_back(color[static_cast<std::size_t>(u) - 1]);
            std::sort(neigh.begin(), neigh.end());
            std::uint64_t h = color[static_cast<std::size_t>(v) - 1] * 0x9E3779B97F4A7C15ull + 1;
            for (std::uint64_t c : neigh) h = (h ^ c) * 0x100000001B3ull;
            next[static_cast<std::size_t>(v) - 1] = h;
        }
        color = std::move(next);
    }
    std::sort(color.begin(), color.end());
    std::uint64_t h = 0xCBF29CE484222325ull ^ static_cast<std::uint64_t>(n);
    for (std::uint64_t c : color) h = (h ^ c) * 0x100000001B3ull;
    return h;
}

}  // namespace

std::vector<Graph> all_graphs_up_to_iso(int n) {
    if (n < 1 || n > 7) throw std::invalid_argument("all_graphs_up_to_iso: need 1 <= n <= 7");
    std::vector<std::pair<int, int>> slots;
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v) slots.emplace_back(u, v);

    std::unordered_map<std::uint64_t, std::vector<std::size_t>> buckets;
    std::vector<Graph> reps;
    for (std::uint32_t mask = 0; mask < (1u << slots.size()); ++mask) {
        Graph g(n);
        for (std::size_t i = 0; i < slots.size(); ++i)
            if (mask & (1u << i)) g.add_edge(slots[i].first, slots[i].second);
        auto& bucket = buckets[invariant_signature(g)];
        bool known = false;
        for (std::size_t idx : bucket)
            if (is_isomorphic(g, reps[idx])) {
                known = true;
                break;
            }
        if (!known) {
            bucket.push_back(reps.size());
            reps.push_back(std::move(g));
        }
    }

    std::vector<Graph> canon;
    canon.reserve(reps.size());
    for (const Graph& g : reps) canon.push_back(canonical_form(g));
    std::sort(canon.begin(), canon.end(), [](const Graph& a, const Graph& b) {
        return to_graph6(a) < to_graph6(b);
    });
    return canon;
}

std::vector<AtlasEntry> classify_atlas(int max_n, const Pattern& p, int heuristic_cap,
                                       const SearchOptions& opts) {
    if (max_n < 1 || max_n > 7) throw std::invalid_argument("classify_atlas: need 1 <= max_n <= 7");
    std::vector<AtlasEntry> entries;
    for (int n = 1; n <= max_n; ++n) {
        for (const Graph& g : all_graphs_up_to_iso(n)) {
            AtlasEntry entry;
            entry.n = n;
            entry.graph = g;
            entry.graph6 = to_graph6(g);
            entry.certificate = find_representant(
                g, p, SearchBounds::from_pattern(g, p, heuristic_cap), std::nullopt, opts);
            if (entry.certificate.kind == Certificate::Kind::Witness)
                entry.status = AtlasStatus::Representable;
            else if (entry.certificate.complete)
                entry.status = AtlasStatus::NotRepresentable;
            else
                entry.status = AtlasStatus::Unknown;
            entries.push_back(std::move(entry));
        }
    }
    return entries;
}

}  // namespace wordrep
