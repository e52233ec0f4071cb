#pragma once

#include <json.hpp>

#include "peelmap/half_edge_map.hpp"
#include "peelmap/triangulation.hpp"

namespace peelmap {

using nlohmann::json;

inline json to_json(const HalfEdgeMap& m) {
    json j;
    std::vector<int> sigma(m.dart_count()), alpha(m.dart_count());
    for (int d = 0; d < m.dart_count(); ++d) {
        sigma[d] = m.sigma(d);
        alpha[d] = m.alpha(d);
    }
    j["sigma"] = sigma;
    j["alpha"] = alpha;
    j["root"] = m.root();
    return j;
}

inline HalfEdgeMap map_from_json(const json& j) {
    return HalfEdgeMap(j.at("sigma").get<std::vector<int>>(), j.at("alpha").get<std::vector<int>>(),
                       j.at("root").get<int>());
}

// boundaries are serialized by their distinguished darts, holes by one
// representative dart; face ids are reconstructed on load.
inline json to_json(const TriangulationWithHoles& t) {
    json j = to_json(t.map);
    j["boundaries"] = t.boundary_root_darts;
    std::vector<int> hole_reps;
    for (int f : t.hole_faces) hole_reps.push_back(t.map.face_representatives()[f]);
    j["holes"] = hole_reps;
    return j;
}

inline TriangulationWithHoles tri_from_json(const json& j) {
    TriangulationWithHoles t;
    t.map = map_from_json(j);
    t.boundary_root_darts = j.at("boundaries").get<std::vector<int>>();
    for (int d : t.boundary_root_darts) t.boundary_faces.push_back(t.map.face_of(d));
    for (int d : j.at("holes").get<std::vector<int>>()) t.hole_faces.push_back(t.map.face_of(d));
    return t;
}

}  // namespace peelmap
