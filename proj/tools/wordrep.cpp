#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "wordrep/circle.hpp"
#include "wordrep/constructions.hpp"
#include "wordrep/json_io.hpp"
#include "wordrep/reduction.hpp"
#include "wordrep/search.hpp"

namespace {

using namespace wordrep;

constexpr int kExitOk = 0;
constexpr int kExitBadInput = 2;
constexpr int kExitExhaustedComplete = 3;
constexpr int kExitUnknownIncomplete = 4;

struct SearchFlags {
    int cap = 3;
    int jobs = 1;
    int split_depth = 0;
    bool progress = false;

    SearchOptions options() const {
        SearchOptions opts;
        opts.jobs = jobs;
        opts.split_depth = split_depth;
        opts.progress = progress;
        return opts;
    }
};

void add_search_flags(CLI::App* cmd, SearchFlags& flags) {
    cmd->add_option("--cap", flags.cap, "occurrence cap where no theorem applies (default 3)");
    cmd->add_option("--jobs", flags.jobs, "worker threads (default 1)");
    cmd->add_option("--split-depth", flags.split_depth,
                    "DFS depth where subtree tasks split off (0 = auto)");
    cmd->add_flag("--progress", flags.progress, "progress counter on stderr");
}

int cmd_check(const std::string& word_text, const std::string& pattern_text) {
    const Word w = Word::parse(word_text);
    const Pattern p = Pattern::parse(pattern_text);
    ordered_json j;
    j["word"] = w.str();
    j["pattern"] = p.str();
    j["avoids"] = avoids(w, p);
    j["graph"] = graph_json(word_to_graph(w));
    std::cout << j.dump(2) << "\n";
    return kExitOk;
}

int cmd_graph(const std::string& word_text, const std::string& format) {
    const Word w = Word::parse(word_text);
    const Graph g = word_to_graph(w);
    if (format == "edges")
        std::cout << format_graph_text(g);
    else if (format == "json")
        std::cout << graph_json(g).dump(2) << "\n";
    else if (format == "dot")
        std::cout << to_dot(g);
    else
        throw std::invalid_argument("graph: unknown format '" + format + "'");
    return kExitOk;
}

int cmd_construct(const std::string& family, int n, const std::string& pattern_text,
                  const std::string& tree_file, unsigned long long seed) {
    const Pattern p = Pattern::parse(pattern_text);
    Word word;
    Graph target(1);
    Relabeling relabeling = Relabeling::identity(1);
    if (family == "complete" || family == "path" || family == "cycle" || family == "complete2u") {
        if (!(p == Pattern::p123()))
            throw std::invalid_argument("construct: family '" + family + "' builds 123-avoiding words");
        if (family == "complete") {
            word = complete_word_123(n);
            target = complete_graph(n);
        } else if (family == "path") {
            word = path_word_123(n);
            target = path_graph(n);
        } else if (family == "cycle") {
            word = cycle_word_123(n);
            target = cycle_graph(n);
        } else {
            word = complete_word_123_2uniform(n);
            target = complete_graph(n);
        }
        relabeling = Relabeling::identity(n);
    } else if (family == "tree") {
        if (!(p == Pattern::p132()))
            throw std::invalid_argument("construct: family 'tree' builds 132-avoiding words");
        Graph tree(1);
        if (!tree_file.empty())
            tree = load_graph_file(tree_file);
        else
            tree = random_tree(n, seed);
        TreeWord tw = tree_word_132_2uniform(tree);
        word = tw.word;
        relabeling = tw.relabeling;
        target = relabel(tree, relabeling);
    } else {
        throw std::invalid_argument("construct: unknown family '" + family + "'");
    }

    const bool avoidance_ok = avoids(word, p);
    const bool graph_ok = word_to_graph(word) == target;
    ordered_json j;
    j["family"] = family;
    j["word"] = word.str();
    j["relabeling"] = relabeling.image();
    j["graph"] = graph_json(target);
    j["self_check"] = {{"avoids", avoidance_ok}, {"graph_matches", graph_ok},
                       {"verdict", avoidance_ok && graph_ok ? "PASS" : "FAIL"}};
    std::cout << j.dump(2) << "\n";
    return avoidance_ok && graph_ok ? kExitOk : 1;
}

int cmd_reduce(const std::string& word_text) {
    const Word w = Word::parse(word_text);
    std::cout << trace_json(normalize(w)).dump(2) << "\n";
    return kExitOk;
}

int certificate_exit(const Certificate& cert) {
    if (cert.kind == Certificate::Kind::Witness) return kExitOk;
    return cert.complete ? kExitExhaustedComplete : kExitUnknownIncomplete;
}

int cmd_represent(const std::string& graph_file, const std::string& pattern_text,
                  std::optional<int> uniform, const SearchFlags& flags) {
    const Graph g = load_graph_file(graph_file);
    const Pattern p = Pattern::parse(pattern_text);
    const SearchBounds bounds =
        uniform ? SearchBounds::uniform(g, *uniform) : SearchBounds::from_pattern(g, p, flags.cap);
    const Certificate cert = find_representant(g, p, bounds, uniform, flags.options());
    std::cout << certificate_json(cert).dump(2) << "\n";
    return certificate_exit(cert);
}

int cmd_verify_theorem(const std::string& id, const SearchFlags& flags) {
    const SearchOptions opts = flags.options();
    bool pass = false;
    ordered_json detail;

    if (id == "3.7") {
        const Graph star = star_graph(6);
        const Certificate cert = find_representant(
            star, Pattern::p123(), SearchBounds::from_pattern(star, Pattern::p123()), std::nullopt,
            opts);
        pass = cert.kind == Certificate::Kind::Exhausted && cert.complete;
        detail = certificate_json(cert);
    } else if (id == "4.5") {
        const Graph k4 = complete_graph(4);
        const Certificate cert =
            find_representant(k4, Pattern::p132(), SearchBounds::uniform(k4, 2), 2, opts);
        pass = cert.kind == Certificate::Kind::Exhausted && cert.complete;
        detail = certificate_json(cert);
    } else if (id == "5.1") {
        const DisjointDecision decision =
            decide_disjoint_132_123({complete_graph(4), complete_graph(4)}, Pattern::p132(), opts);
        const bool not_rep =
            decision.overall.kind == Certificate::Kind::Exhausted && decision.overall.complete;
        const CircleDecision circle =
            is_circle_graph(disjoint_union({complete_graph(4), complete_graph(4)}), opts);
        const bool is_circle = circle.certificate.kind == Certificate::Kind::Witness;
        pass = not_rep && is_circle;
        detail["decision"] = decision_json(decision);
        detail["circle"] = certificate_json(circle.certificate);
    } else if (id == "constructions") {
        bool all = true;
        for (int n = 1; n <= 12; ++n) {
            const Word kw = complete_word_123(n);
            all = all && avoids(kw, Pattern::p123()) && word_to_graph(kw) == complete_graph(n);
            const Word ku = complete_word_123_2uniform(n);
            all = all && avoids(ku, Pattern::p123()) && is_k_uniform(ku, 2) &&
                  word_to_graph(ku) == complete_graph(n);
            if (n >= 2) {
                const Word pw = path_word_123(n);
                all = all && avoids(pw, Pattern::p123()) && word_to_graph(pw) == path_graph(n);
            }
            if (n >= 3) {
                const Word cw = cycle_word_123(n);
                all = all && avoids(cw, Pattern::p123()) && word_to_graph(cw) == cycle_graph(n);
            }
            const Graph tree = random_tree(n, 7u * static_cast<unsigned>(n) + 1);
            const TreeWord tw = tree_word_132_2uniform(tree);
            all = all && avoids(tw.word, Pattern::p132()) && is_k_uniform(tw.word, 2) &&
                  word_to_graph(tw.word) == relabel(tree, tw.relabeling);
        }
        pass = all;
        detail = {{"families", {"complete", "complete2u", "path", "cycle", "tree"}},
                  {"max_n", 12}};
    } else {
        throw std::invalid_argument("verify-theorem: unknown id '" + id +
                                    "' (expected 3.7, 4.5, 5.1 or constructions)");
    }

    std::cout << (pass ? "PASS" : "FAIL") << " " << id << "\n";
    std::cout << detail.dump(2) << "\n";
    return pass ? kExitOk : 1;
}

int cmd_atlas(int max_n, const std::string& pattern_text, const SearchFlags& flags,
              const std::string& out_file) {
    const Pattern p = Pattern::parse(pattern_text);
    const std::vector<AtlasEntry> entries = classify_atlas(max_n, p, flags.cap, flags.options());
    const ordered_json j = atlas_json(entries);
    if (!out_file.empty()) {
        std::ofstream out(out_file);
        if (!out) throw std::invalid_argument("atlas: cannot write '" + out_file + "'");
        out << j.dump(2) << "\n";
    } else {
        std::cout << j.dump(2) << "\n";
    }

    int representable = 0, not_representable = 0, unknown = 0;
    std::vector<std::string> minimal;
    int minimal_n = 0;
    for (const AtlasEntry& e : entries) {
        if (e.status == AtlasStatus::Representable) ++representable;
        else if (e.status == AtlasStatus::NotRepresentable) {
            ++not_representable;
            if (minimal.empty() || e.n == minimal_n) {
                minimal_n = e.n;
                minimal.push_back(e.graph6);
            }
        } else
            ++unknown;
    }
    std::cerr << "atlas " << pattern_text << " up to n=" << max_n << ": " << representable
              << " representable, " << not_representable << " not, " << unknown << " unknown\n";
    if (!minimal.empty()) {
        std::cerr << "smallest non-representable (n=" << minimal_n << "):";
        for (const std::string& g6 : minimal) std::cerr << " " << g6;
        std::cerr << "\n";
    }
    return kExitOk;
}

int cmd_chords(const std::string& word_text, const std::string& svg_file, bool dot) {
    const Word w = Word::parse(word_text);
    const ChordDiagram d = chords_from_word(w);
    if (dot)
        std::cout << chord_diagram_dot(d);
    else
        std::cout << chord_diagram_json(d) << "\n";
    if (!svg_file.empty()) {
        std::ofstream out(svg_file);
        if (!out) throw std::invalid_argument("chords: cannot write '" + svg_file + "'");
        out << chord_diagram_svg(d);
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"pattern-avoiding word representants of graphs"};
    app.require_subcommand(1);

    std::string word_text, pattern_text, format = "edges", family, tree_file, graph_file;
    std::string theorem_id, out_file, svg_file;
    int n = 0, max_n = 4;
    std::optional<int> uniform;
    unsigned long long seed = 1;
    bool dot = false;
    SearchFlags flags;

    CLI::App* check = app.add_subcommand("check", "avoidance verdict and alternation graph");
    check->add_option("--word", word_text, "word, e.g. 32414 or '3 2 4 1 4'")->required();
    check->add_option("--pattern", pattern_text, "pattern permutation, e.g. 123")->required();

    CLI::App* graph = app.add_subcommand("graph", "graph of a word");
    graph->add_option("--word", word_text)->required();
    graph->add_option("--format", format, "edges | json | dot");

    CLI::App* construct = app.add_subcommand("construct", "known pattern-avoiding constructions");
    construct->add_option("--family", family, "complete | path | cycle | complete2u | tree")
        ->required();
    construct->add_option("--n", n, "vertex count");
    construct->add_option("--pattern", pattern_text)->required();
    construct->add_option("--tree-file", tree_file, "tree as graph file (family tree)");
    construct->add_option("--seed", seed, "random tree seed (family tree without --tree-file)");

    CLI::App* reduce = app.add_subcommand("reduce", "normalize a 123-avoiding word");
    reduce->add_option("--word", word_text)->required();

    CLI::App* represent = app.add_subcommand("represent", "search for a representant");
    represent->add_option("--graph-file", graph_file)->required();
    represent->add_option("--pattern", pattern_text)->required();
    represent->add_option("--uniform", uniform, "require exactly K copies of every letter");
    add_search_flags(represent, flags);

    CLI::App* verify = app.add_subcommand("verify-theorem", "re-run a headline experiment");
    verify->add_option("--id", theorem_id, "3.7 | 4.5 | 5.1 | constructions")->required();
    add_search_flags(verify, flags);

    CLI::App* atlas = app.add_subcommand("atlas", "classify all graphs up to isomorphism");
    atlas->add_option("--max-n", max_n, "largest vertex count (<= 7)")->required();
    atlas->add_option("--pattern", pattern_text)->required();
    atlas->add_option("--out", out_file, "write JSON here instead of stdout");
    add_search_flags(atlas, flags);

    CLI::App* chords = app.add_subcommand("chords", "chord diagram of a 2-uniform word");
    chords->add_option("--word", word_text)->required();
    chords->add_option("--svg", svg_file, "write an SVG rendering here");
    chords->add_flag("--dot", dot, "emit DOT instead of JSON");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return kExitBadInput;
    }

    try {
        if (check->parsed()) return cmd_check(word_text, pattern_text);
        if (graph->parsed()) return cmd_graph(word_text, format);
        if (construct->parsed()) return cmd_construct(family, n, pattern_text, tree_file, seed);
        if (reduce->parsed()) return cmd_reduce(word_text);
        if (represent->parsed()) return cmd_represent(graph_file, pattern_text, uniform, flags);
        if (verify->parsed()) return cmd_verify_theorem(theorem_id, flags);
        if (atlas->parsed()) return cmd_atlas(max_n, pattern_text, flags, out_file);
        if (chords->parsed()) return cmd_chords(word_text, svg_file, dot);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitBadInput;
    }
    return kExitBadInput;
}
