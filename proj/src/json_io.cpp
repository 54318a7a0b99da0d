#include "wordrep/json_io.hpp"

namespace wordrep {

ordered_json graph_json(const Graph& g) {
    ordered_json j;
    j["n"] = g.vertex_count();
    ordered_json edges = ordered_json::array();
    for (const auto& [u, v] : g.edges()) edges.push_back({u, v});
    j["edges"] = std::move(edges);
    return j;
}

ordered_json certificate_json(const Certificate& cert) {
    ordered_json j;
    j["kind"] = cert.kind == Certificate::Kind::Witness ? "witness" : "exhausted";
    j["pattern"] = cert.pattern ? ordered_json(cert.pattern->str()) : ordered_json(nullptr);
    j["graph"] = graph_json(cert.graph);
    ordered_json bounds = ordered_json::object();
    for (std::size_t v = 0; v < cert.bounds.max_occurrences.size(); ++v)
        bounds[std::to_string(v + 1)] = cert.bounds.max_occurrences[v];
    j["bounds"] = std::move(bounds);
    j["uniformity"] = cert.uniformity ? ordered_json(*cert.uniformity) : ordered_json(nullptr);
    j["completeness"] = {{"flag", cert.complete},
                         {"tag", std::string(bound_tag_name(cert.justification))}};
    if (cert.kind == Certificate::Kind::Witness) {
        const WitnessInfo& w = *cert.witness;
        ordered_json witness;
        witness["relabeling"] = w.relabeling.image();
        witness["word"] = w.word.str();
        witness["transcript"] = w.transcript;
        j["witness"] = std::move(witness);
    } else {
        const ExhaustionInfo& e = *cert.exhausted;
        j["exhausted"] = {{"enumerated", e.enumerated},
                          {"survived_avoidance", e.survived_avoidance},
                          {"seconds", e.seconds}};
    }
    return j;
}

ordered_json trace_json(const NormalizeResult& result) {
    ordered_json steps = ordered_json::array();
    for (const ReductionStep& s : result.trace.steps) {
        ordered_json step;
        step["rule"] = s.rule;
        step["letter"] = s.letter;
        step["before"] = s.before.str();
        step["after"] = s.after.str();
        step["relabeling"] = s.relabeling.image();
        steps.push_back(std::move(step));
    }
    ordered_json j;
    j["word"] = result.word.str();
    j["relabeling"] = result.relabeling.image();
    j["steps"] = std::move(steps);
    return j;
}

ordered_json decision_json(const DisjointDecision& decision) {
    ordered_json j;
    j["representable"] = decision.overall.kind == Certificate::Kind::Witness;
    j["overall"] = certificate_json(decision.overall);
    ordered_json two_uniform = ordered_json::array();
    for (const Certificate& c : decision.two_uniform) two_uniform.push_back(certificate_json(c));
    j["two_uniform"] = std::move(two_uniform);
    ordered_json general = ordered_json::array();
    for (const auto& c : decision.general)
        general.push_back(c ? certificate_json(*c) : ordered_json(nullptr));
    j["general"] = std::move(general);
    ordered_json offending = ordered_json::array();
    for (std::size_t i : decision.offending) offending.push_back(i + 1);  // 1-based, input order
    j["offending_components"] = std::move(offending);
    return j;
}

ordered_json atlas_json(const std::vector<AtlasEntry>& entries) {
    ordered_json list = ordered_json::array();
    for (const AtlasEntry& e : entries) {
        ordered_json item;
        item["n"] = e.n;
        item["graph6"] = e.graph6;
        item["graph"] = graph_json(e.graph);
        item["status"] = std::string(atlas_status_name(e.status));
        item["certificate"] = certificate_json(e.certificate);
        list.push_back(std::move(item));
    }
    return list;
}

}  // namespace wordrep
