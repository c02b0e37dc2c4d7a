#include "geodesy/json_io.hpp"

#include <string>

namespace geodesy {

namespace {

[[noreturn]] void parse_fail(const std::string& what) {
    throw Error(ErrorCode::Parse, "malformed document: " + what);
}

const json& require(const json& doc, const char* key) {
    if (!doc.is_object() || !doc.contains(key)) parse_fail(std::string("missing '") + key + "'");
    return doc.at(key);
}

int require_int(const json& value, const char* what) {
    if (!value.is_number_integer()) parse_fail(std::string(what) + " must be an integer");
    return value.get<int>();
}

json role_to_json(const VertexRole& role) {
    switch (role.kind) {
        case RoleKind::Branch: return {{"kind", "branch"}};
        case RoleKind::Subdivision:
            return {{"kind", "subdivision"},
                    {"edge", {role.parent.a, role.parent.b}},
                    {"position", role.position}};
        case RoleKind::Point: return {{"kind", "point"}};
        case RoleKind::Line: return {{"kind", "line"}, {"class", role.parallel_class}};
        case RoleKind::Plain: return {{"kind", "plain"}};
    }
    parse_fail("unknown role kind");
}

VertexRole role_from_json(const json& doc) {
    const std::string kind = require(doc, "kind").get<std::string>();
    if (kind == "branch") return VertexRole::branch();
    if (kind == "point") return VertexRole::point();
    if (kind == "plain") return VertexRole::plain();
    if (kind == "line") return VertexRole::line(require_int(require(doc, "class"), "class"));
    if (kind == "subdivision") {
        const json& edge = require(doc, "edge");
        if (!edge.is_array() || edge.size() != 2) parse_fail("subdivision edge must be a pair");
        return VertexRole::subdivision(
            Edge(require_int(edge[0], "edge endpoint"), require_int(edge[1], "edge endpoint")),
            require_int(require(doc, "position"), "position"));
    }
    parse_fail("unknown role kind '" + kind + "'");
}

json meta_to_json(const ConstructionMeta& meta) {
    if (meta.family == ConstructionMeta::Family::Kst)
        return {{"family", "kst"}, {"s", meta.s}, {"t", meta.t}};
    json doc{{"family", "gk"}, {"k", meta.k}, {"p", meta.p}, {"m", meta.m}};
    if (!meta.modulus.empty()) doc["modulus"] = meta.modulus;
    return doc;
}

ConstructionMeta meta_from_json(const json& doc) {
    ConstructionMeta meta;
    const std::string family = require(doc, "family").get<std::string>();
    if (family == "kst") {
        meta.family = ConstructionMeta::Family::Kst;
        meta.s = require_int(require(doc, "s"), "s");
        meta.t = require_int(require(doc, "t"), "t");
    } else if (family == "gk") {
        meta.family = ConstructionMeta::Family::Gk;
        meta.k = require_int(require(doc, "k"), "k");
        meta.p = doc.contains("p") ? require_int(doc.at("p"), "p") : 0;
        meta.m = doc.contains("m") ? require_int(doc.at("m"), "m") : 0;
        if (doc.contains("modulus"))
            meta.modulus = doc.at("modulus").get<std::vector<int>>();
    } else {
        parse_fail("unknown family '" + family + "'");
    }
    return meta;
}

json path_to_json(const Path& path) {
    json out = json::array();
    for (VertexId v : path.vertices) out.push_back(v);
    return out;
}

} // namespace

json graph_to_json(const Graph& g) {
    json doc;
    doc["n"] = g.n;
    json edges = json::array();
    for (const Edge& e : g.edges) edges.push_back({e.a, e.b});
    doc["edges"] = std::move(edges);
    json roles = json::object();
    for (VertexId v = 0; v < g.n; ++v)
        if (g.roles[v].kind != RoleKind::Plain)
            roles[std::to_string(v)] = role_to_json(g.roles[v]);
    doc["roles"] = std::move(roles);
    if (g.meta) doc["meta"] = meta_to_json(*g.meta);
    return doc;
}

Graph graph_from_json(const json& doc) {
    const int n = require_int(require(doc, "n"), "n");
    const json& edges_doc = require(doc, "edges");
    if (!edges_doc.is_array()) parse_fail("'edges' must be an array");
    std::vector<Edge> edges;
    for (const json& e : edges_doc) {
        if (!e.is_array() || e.size() != 2) parse_fail("edge must be a pair");
        edges.emplace_back(require_int(e[0], "edge endpoint"), require_int(e[1], "edge endpoint"));
    }
    std::map<VertexId, VertexRole> roles;
    if (doc.contains("roles")) {
        const json& roles_doc = doc.at("roles");
        if (!roles_doc.is_object()) parse_fail("'roles' must be an object");
        for (const auto& [key, value] : roles_doc.items()) {
            try {
                roles[std::stoi(key)] = role_from_json(value);
            } catch (const std::invalid_argument&) {
                parse_fail("role key '" + key + "' is not a vertex id");
            }
        }
    }
    std::optional<ConstructionMeta> meta;
    if (doc.contains("meta") && !doc.at("meta").is_null()) meta = meta_from_json(doc.at("meta"));
    return build_graph(n, edges, roles, meta);
}

json drawing_to_json(const Drawing& d) {
    json positions = json::object();
    for (const auto& [v, pt] : d.positions)
        positions[std::to_string(v)] = {rational_to_string(pt.x), rational_to_string(pt.y)};
    return {{"positions", std::move(positions)}};
}

Drawing drawing_from_json(const json& doc) {
    const json& positions = require(doc, "positions");
    if (!positions.is_object()) parse_fail("'positions' must be an object");
    Drawing d;
    for (const auto& [key, value] : positions.items()) {
        if (!value.is_array() || value.size() != 2) parse_fail("position must be a pair");
        try {
            d.positions[std::stoi(key)] = Point2{rational_from_string(value[0].get<std::string>()),
                                                 rational_from_string(value[1].get<std::string>())};
        } catch (const std::invalid_argument&) {
            parse_fail("position key '" + key + "' is not a vertex id");
        }
    }
    return d;
}

json bundle_to_json(const Graph& g, const Drawing& d) {
    return {{"graph", graph_to_json(g)}, {"drawing", drawing_to_json(d)}};
}

std::pair<Graph, Drawing> bundle_from_json(const json& doc) {
    return {graph_from_json(require(doc, "graph")), drawing_from_json(require(doc, "drawing"))};
}

json philo_report_to_json(const PhilogeodeticReport& report) {
    json histogram = json::object();
    for (const auto& [meets, pairs] : report.histogram)
        histogram[std::to_string(meets)] = pairs;
    json worst = json::array();
    for (const auto& pair : report.worst_pairs)
        worst.push_back({path_to_json(pair[0]), path_to_json(pair[1])});
    return {{"max_meets", report.max_meets},
            {"philogeodetic", report.philogeodetic},
            {"worst_pairs", std::move(worst)},
            {"histogram", std::move(histogram)}};
}

json witness_to_json(const WitnessPair& witness) {
    return {{"anchors", {witness.u, witness.v}},
            {"C_u", {{witness.c_u[0].a, witness.c_u[0].b}, {witness.c_u[1].a, witness.c_u[1].b}}},
            {"C_v", {{witness.c_v[0].a, witness.c_v[0].b}, {witness.c_v[1].a, witness.c_v[1].b}}},
            {"paths", {path_to_json(witness.path_u), path_to_json(witness.path_v)}},
            {"verified_meets", witness.verified_meets}};
}

json geodetic_report_to_json(const GeodeticReport& report) {
    json doc{{"geodetic", report.is_geodetic}, {"diameter", report.diameter}};
    if (report.witness) {
        doc["witness"] = {{"pair", {report.witness->u, report.witness->v}},
                          {"paths", {path_to_json(report.witness->path_a),
                                     path_to_json(report.witness->path_b)}}};
    } else {
        doc["witness"] = nullptr;
    }
    return doc;
}

json plane_to_json(const AffinePlane& plane) {
    json lines = json::array();
    for (const auto& line : plane.lines) lines.push_back(line);
    json classes = json::array();
    for (const auto& cls : plane.classes) classes.push_back(cls);
    return {{"order", plane.order},
            {"points", plane.point_count()},
            {"lines", std::move(lines)},
            {"classes", std::move(classes)}};
}

std::string dump_document(const json& doc) { return doc.dump(2) + "\n"; }

} // namespace geodesy
