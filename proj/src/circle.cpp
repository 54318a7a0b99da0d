#include "wordrep/circle.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace wordrep {

ChordDiagram::ChordDiagram(int n, std::vector<std::pair<int, int>> endpoints)
    : n_(n), endpoints_(std::move(endpoints)) {
    if (n_ < 1) throw std::invalid_argument("ChordDiagram: need at least one chord");
    if (static_cast<int>(endpoints_.size()) != n_)
        throw std::invalid_argument("ChordDiagram: one endpoint pair per chord required");
    std::vector<bool> used(static_cast<std::size_t>(2 * n_) + 1, false);
    for (auto& [p, q] : endpoints_) {
        if (p > q) std::swap(p, q);
        if (p < 1 || q > 2 * n_ || p == q)
            throw std::invalid_argument("ChordDiagram: endpoint out of range");
        if (used[static_cast<std::size_t>(p)] || used[static_cast<std::size_t>(q)])
            throw std::invalid_argument("ChordDiagram: endpoint position reused");
        used[static_cast<std::size_t>(p)] = used[static_cast<std::size_t>(q)] = true;
    }
}

std::pair<int, int> ChordDiagram::endpoints(int v) const {
    if (v < 1 || v > n_) throw std::invalid_argument("ChordDiagram: chord out of range");
    return endpoints_[static_cast<std::size_t>(v) - 1];
}

bool ChordDiagram::crosses(int u, int v) const {
    const auto [a1, a2] = endpoints(u);
    const auto [b1, b2] = endpoints(v);
    if (u == v) return false;
    const bool b1_inside = a1 < b1 && b1 < a2;
    const bool b2_inside = a1 < b2 && b2 < a2;
    return b1_inside != b2_inside;
}

Graph ChordDiagram::crossing_graph() const {
    Graph g(n_);
    for (int u = 1; u <= n_; ++u)
        for (int v = u + 1; v <= n_; ++v)
            if (crosses(u, v)) g.add_edge(u, v);
    return g;
}

ChordDiagram chords_from_word(const Word& w) {
    if (w.empty()) throw std::invalid_argument("chords_from_word: empty word");
    if (!w.alphabet_is_contiguous())
        throw std::invalid_argument("chords_from_word: alphabet must be 1..n");
    const int n = w.max_letter();
    if (!is_k_uniform(w, 2))
        throw std::invalid_argument("chords_from_word: word must be 2-uniform");
    std::vector<std::pair<int, int>> endpoints(static_cast<std::size_t>(n), {0, 0});
    for (std::size_t i = 0; i < w.size(); ++i) {
        auto& [p, q] = endpoints[static_cast<std::size_t>(w[i]) - 1];
        (p == 0 ? p : q) = static_cast<int>(i) + 1;
    }
    return ChordDiagram(n, std::move(endpoints));
}

SaturationResult saturate_to_2uniform(const Word& w) {
    if (w.empty()) throw std::invalid_argument("saturate_to_2uniform: empty word");
    if (!w.alphabet_is_contiguous())
        throw std::invalid_argument("saturate_to_2uniform: alphabet must be 1..n");
    const int n = w.max_letter();
    for (int x = 1; x <= n; ++x)
        if (w.count(x) > 2)
            throw std::invalid_argument(
                "saturate_to_2uniform: letters must occur at most twice (normalize first)");

    std::vector<Letter> out;
    out.reserve(2 * static_cast<std::size_t>(n));
    for (std::size_t i = 0; i < w.size(); ++i) {
        out.push_back(w[i]);
        if (w.count(w[i]) == 1) out.push_back(w[i]);
    }
    SaturationResult result;
    result.word = Word(std::move(out));

    const Graph before = word_to_graph(w);
    const Graph after = word_to_graph(result.word);
    if (before == after) {
        result.ok = true;
        return result;
    }
    for (int x = 1; x <= n; ++x)
        if (before.row(x) != after.row(x)) result.offending.push_back(x);
    result.ok = false;
    return result;
}

CircleDecision is_circle_graph(const Graph& g, const SearchOptions& opts) {
    if (g.vertex_count() > 10)
        throw std::invalid_argument("is_circle_graph: supported up to 10 vertices");
    CircleDecision decision;
    decision.certificate =
        find_representant_fixed(g, std::nullopt, SearchBounds::uniform(g, 2), 2, opts);
    if (decision.certificate.kind == Certificate::Kind::Witness)
        decision.diagram = chords_from_word(decision.certificate.witness->word);
    return decision;
}

std::string chord_diagram_json(const ChordDiagram& d) {
    nlohmann::ordered_json j;
    j["n"] = d.chord_count();
    nlohmann::ordered_json eps = nlohmann::ordered_json::object();
    for (int v = 1; v <= d.chord_count(); ++v) {
        const auto [p, q] = d.endpoints(v);
        eps[std::to_string(v)] = {p, q};
    }
    j["endpoints"] = std::move(eps);
    return j.dump(2);
}

namespace {

std::pair<double, double> circle_point(int position, int total, double cx, double cy, double r) {
    const double theta = 2.0 * 3.14159265358979323846 * (position - 1) / total -
                         3.14159265358979323846 / 2.0;
    return {cx + r * std::cos(theta), cy + r * std::sin(theta)};
}

}  // namespace

std::string chord_diagram_dot(const ChordDiagram& d) {
    const int total = 2 * d.chord_count();
    std::ostringstream out;
    out << "graph chords {\n  layout=neato;\n  node [shape=point, width=0.08];\n";
    for (int p = 1; p <= total; ++p) {
        const auto [x, y] = circle_point(p, total, 0.0, 0.0, 3.0);
        out << "  p" << p << " [pos=\"" << x << ',' << y << "!\", xlabel=\"" << p << "\"];\n";
    }
    for (int v = 1; v <= d.chord_count(); ++v) {
        const auto [p, q] = d.endpoints(v);
        out << "  p" << p << " -- p" << q << " [label=\"" << v << "\"];\n";
    }
    out << "}\n";
    return out.str();
}

std::string chord_diagram_svg(const ChordDiagram& d) {
    const int total = 2 * d.chord_count();
    const double cx = 250, cy = 250, r = 200;
    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"500\" height=\"500\" "
           "viewBox=\"0 0 500 500\">\n";
    out << "  <circle cx=\"" << cx << "\" cy=\"" << cy << "\" r=\"" << r
        << "\" fill=\"none\" stroke=\"#999\"/>\n";
    for (int v = 1; v <= d.chord_count(); ++v) {
        const auto [p, q] = d.endpoints(v);
        const auto [x1, y1] = circle_point(p, total, cx, cy, r);
        const auto [x2, y2] = circle_point(q, total, cx, cy, r);
        out << "  <line x1=\"" << x1 << "\" y1=\"" << y1 << "\" x2=\"" << x2 << "\" y2=\"" << y2
            << "\" stroke=\"#1f77b4\" stroke-width=\"1.5\"/>\n";
        out << "  <text x=\"" << (x1 + x2) / 2 << "\" y=\"" << (y1 + y2) / 2
            << "\" font-size=\"13\" fill=\"#333\">" << v << "</text>\n";
    }
    for (int p = 1; p <= total; ++p) {
        const auto [x, y] = circle_point(p, total, cx, cy, r);
        out << "  <circle cx=\"" << x << "\" cy=\"" << y << "\" r=\"3\" fill=\"#333\"/>\n";
        const auto [lx, ly] = circle_point(p, total, cx, cy, r + 16);
        out << "  <text x=\"" << lx << "\" y=\"" << ly
            << "\" font-size=\"11\" text-anchor=\"middle\" fill=\"#666\">" << p << "</text>\n";
    }
    out << "</svg>\n";
    return out.str();
}

}  // namespace wordrep
