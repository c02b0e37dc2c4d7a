#pragma once

#include <json.hpp>

#include "geodesy/affine_plane.hpp"
#include "geodesy/analysis.hpp"
#include "geodesy/drawing.hpp"
#include "geodesy/graph.hpp"

namespace geodesy {

using nlohmann::json;

// Graph document:
//   {"n": int, "edges": [[u,v],...], "roles": {"<id>": {"kind": ...}},
//    "meta": {...}}
// Edges sorted with u < v, then lexicographically. Plain roles are omitted.
json graph_to_json(const Graph& g);
Graph graph_from_json(const json& doc);

// Drawing document: {"positions": {"<id>": ["p/q", "r/s"]}}.
json drawing_to_json(const Drawing& d);
Drawing drawing_from_json(const json& doc);

// Bundle document carrying both: {"graph": {...}, "drawing": {...}}.
json bundle_to_json(const Graph& g, const Drawing& d);
std::pair<Graph, Drawing> bundle_from_json(const json& doc);

// Analysis report:
//   {"max_meets": int, "philogeodetic": bool, "worst_pairs": [[[ids],[ids]],...],
//    "histogram": {"<meets>": pairs}}
json philo_report_to_json(const PhilogeodeticReport& report);

// Witness document:
//   {"anchors": [u,v], "C_u": [[a,b],[a,b]], "C_v": [...],
//    "paths": [[ids],[ids]], "verified_meets": int}
json witness_to_json(const WitnessPair& witness);

// Geodetic check report: {"geodetic": bool, "diameter": int, "witness": ...}.
json geodetic_report_to_json(const GeodeticReport& report);

// Plane dump: {"order": k, "points": k^2, "lines": [[point ids],...],
//              "classes": [[line ids],...]}.
json plane_to_json(const AffinePlane& plane);

std::string dump_document(const json& doc);

} // namespace geodesy
