#pragma once

#include <algorithm>
#include <vector>

#include "peelmap/half_edge_map.hpp"
#include "peelmap/triangulation.hpp"

namespace peelmap {

// Canonical breadth-first encoding from the root. Two rooted maps have equal
// codes iff they are rooted-isomorphic: the code lists, for each dart in
// first-visit order, the timestamps of its sigma- and alpha-images, which
// reconstructs both permutations on the timestamp labels.
struct RootedCode {
    std::vector<int> code;
    friend bool operator==(const RootedCode& a, const RootedCode& b) { return a.code == b.code; }
    friend bool operator!=(const RootedCode& a, const RootedCode& b) { return !(a == b); }
    friend bool operator<(const RootedCode& a, const RootedCode& b) { return a.code < b.code; }
};

inline RootedCode canonical_code(const HalfEdgeMap& m) {
    RootedCode rc;
    if (m.empty()) return rc;
    auto ts = m.canonical_timestamps();
    std::vector<int> order(m.dart_count());
    for (int d = 0; d < m.dart_count(); ++d) order[ts[d]] = d;
    rc.code.reserve(2 * m.dart_count() + 1);
    rc.code.push_back(m.dart_count());
    for (int d : order) {
        rc.code.push_back(ts[m.sigma(d)]);
        rc.code.push_back(ts[m.alpha(d)]);
    }
    return rc;
}

inline bool is_isomorphic(const HalfEdgeMap& a, const HalfEdgeMap& b) {
    return canonical_code(a) == canonical_code(b);
}

// Decorated code: the map rooted at the first boundary's distinguished dart,
// followed by the timestamps of the remaining boundary roots (order matters)
// and the sorted hole markers. Triangulations of multi-polygons with the same
// code are isomorphic respecting all decorations.
inline RootedCode canonical_code(const TriangulationWithHoles& t) {
    RootedCode rc;
    if (t.map.empty()) return rc;
    int root = t.boundary_root_darts.empty() ? t.map.root() : t.boundary_root_darts[0];
    auto ts = t.map.canonical_timestamps(root);
    std::vector<int> order(t.map.dart_count());
    for (int d = 0; d < t.map.dart_count(); ++d) order[ts[d]] = d;
    rc.code.push_back(t.map.dart_count());
    for (int d : order) {
        rc.code.push_back(ts[t.map.sigma(d)]);
        rc.code.push_back(ts[t.map.alpha(d)]);
    }
    rc.code.push_back(-1);
    for (int d : t.boundary_root_darts) rc.code.push_back(ts[d]);
    rc.code.push_back(-2);
    std::vector<int> hole_marks;
    for (int f : t.hole_faces) {
        int mark = t.map.dart_count();
        for (int d : t.map.face_darts(f)) mark = std::min(mark, ts[d]);
        hole_marks.push_back(mark);
    }
    std::sort(hole_marks.begin(), hole_marks.end());
    for (int x : hole_marks) rc.code.push_back(x);
    return rc;
}

inline bool is_isomorphic(const TriangulationWithHoles& a, const TriangulationWithHoles& b) {
    return canonical_code(a) == canonical_code(b);
}

}  // namespace peelmap
