#pragma once

#include <json.hpp>

#include "wordrep/circle.hpp"
#include "wordrep/reduction.hpp"
#include "wordrep/search.hpp"

namespace wordrep {

using ordered_json = nlohmann::ordered_json;

ordered_json graph_json(const Graph& g);
ordered_json certificate_json(const Certificate& cert);
ordered_json trace_json(const NormalizeResult& result);
ordered_json decision_json(const DisjointDecision& decision);
ordered_json atlas_json(const std::vector<AtlasEntry>& entries);

}  // namespace wordrep
