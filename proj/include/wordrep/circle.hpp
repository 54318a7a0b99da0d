#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wordrep/search.hpp"

namespace wordrep {

// Chords of a circle with 2n marked points; chord v occupies the two
// positions endpoints[v - 1], and every position in 1..2n is used once.
class ChordDiagram {
  public:
    ChordDiagram(int n, std::vector<std::pair<int, int>> endpoints);

    int chord_count() const { return n_; }
    std::pair<int, int> endpoints(int v) const;

    // Two chords cross iff exactly one endpoint of one lies strictly
    // between the endpoints of the other.
    bool crosses(int u, int v) const;
    Graph crossing_graph() const;

  private:
    int n_;
    std::vector<std::pair<int, int>> endpoints_;
};

// Position i on the circle carries letter w_i; chord v joins v's two
// occurrences.  Rejects words that are not 2-uniform.
ChordDiagram chords_from_word(const Word& w);

// Doubling every singleton letter in place (the copy goes immediately after
// the original) only sometimes preserves the graph, so the result is checked
// against the original and failure lists the letters whose relations moved.
struct SaturationResult {
    bool ok = false;
    Word word;
    std::vector<Letter> offending;
};
SaturationResult saturate_to_2uniform(const Word& w);

// Decides circle-graph-ness for n <= 10 by exhausting 2-uniform words with
// no pattern constraint.  Alternation never references the letter order, so
// the identity labeling loses no generality and the fixed-labeling search
// applies; a witness maps straight onto a chord diagram.
struct CircleDecision {
    Certificate certificate;
    std::optional<ChordDiagram> diagram;
};
CircleDecision is_circle_graph(const Graph& g, const SearchOptions& opts = {});

std::string chord_diagram_json(const ChordDiagram& d);
std::string chord_diagram_dot(const ChordDiagram& d);
std::string chord_diagram_svg(const ChordDiagram& d);

}  // namespace wordrep
