#pragma once

#include <algorithm>
#include <vector>

#include "peelmap/canonical.hpp"
#include "peelmap/half_edge_map.hpp"
#include "peelmap/triangulation.hpp"

namespace peelmap {

// B_r(t,e): the submap of edges having at least one endpoint at graph
// distance <= r-1 from the origin of e, seen as a rooted map. B_0 is empty.
// The ball need not be a triangulation with holes, so it is returned as a
// plain rooted map.
inline Submap ball(const HalfEdgeMap& m, int root_dart, int r) {
    Submap out;
    if (r <= 0 || m.empty()) {
        out.old_to_new.assign(m.dart_count(), -1);
        return out;
    }
    auto dist = m.vertex_distances(m.vertex_of(root_dart));
    std::vector<bool> keep(m.dart_count(), false);
    for (int d = 0; d < m.dart_count(); ++d)
        if (dist[m.vertex_of(d)] <= r - 1 || dist[m.head_vertex(d)] <= r - 1) keep[d] = true;
    return edge_induced_submap(m, keep, root_dart);
}

inline Submap ball(const HalfEdgeMap& m, int r) { return ball(m, m.root(), r); }

inline RootedCode ball_code(const HalfEdgeMap& m, int root_dart, int r) {
    return canonical_code(ball(m, root_dart, r).map);
}

// B*_r(t,e): all internal faces at dual distance <= r from an internal face
// incident to e, plus the boundaries sharing a vertex with a face already
// included. Always a triangulation with holes contained in t.
struct DualBall {
    TriangulationWithHoles tri;
    std::vector<int> old_to_new;  // dart translation
};

inline DualBall dual_ball(const TriangulationWithHoles& t, int root_dart, int r) {
    const HalfEdgeMap& m = t.map;
    std::vector<bool> internal(m.num_faces(), true);
    for (int f : t.boundary_faces) internal[f] = false;

    std::vector<int> starts;
    for (int d : {root_dart, m.alpha(root_dart)})
        if (internal[m.face_of(d)]) starts.push_back(m.face_of(d));
    auto ddist = m.dual_distances(starts, internal);

    std::vector<bool> keep_face(m.num_faces(), false);
    std::vector<bool> vertex_touched(m.num_vertices(), false);
    for (int f = 0; f < m.num_faces(); ++f) {
        if (internal[f] && ddist[f] >= 0 && ddist[f] <= r) {
            keep_face[f] = true;
            for (int d : m.face_darts(f)) vertex_touched[m.vertex_of(d)] = true;
        }
    }
    for (int f : t.boundary_faces) {
        for (int d : m.face_darts(f)) {
            if (vertex_touched[m.vertex_of(d)]) {
                keep_face[f] = true;
                break;
            }
        }
    }

    std::vector<bool> keep_dart(m.dart_count(), false);
    for (int d = 0; d < m.dart_count(); ++d)
        if (keep_face[m.face_of(d)] || keep_face[m.face_of(m.alpha(d))]) keep_dart[d] = true;

    Submap sub = edge_induced_submap(m, keep_dart, root_dart);
    DualBall out;
    out.old_to_new = sub.old_to_new;
    out.tri.map = std::move(sub.map);

    // classify the faces of the submap
    const HalfEdgeMap& nm = out.tri.map;
    std::vector<int> new_face_role(nm.num_faces(), 2);  // default: freshly exposed hole
    std::vector<int> old_face_of_new(nm.num_faces(), -1);
    for (int f = 0; f < nm.num_faces(); ++f) {
        int od = sub.new_to_old[nm.face_representatives()[f]];
        int of = m.face_of(od);
        if (keep_face[of]) {
            old_face_of_new[f] = of;
            new_face_role[f] = t.is_hole_face(of) ? 2 : (t.is_boundary_face(of) ? 1 : 0);
        }
    }
    for (std::size_t i = 0; i < t.boundary_faces.size(); ++i) {
        if (!keep_face[t.boundary_faces[i]]) continue;
        int nd = sub.old_to_new[t.boundary_root_darts[i]];
        out.tri.boundary_faces.push_back(nm.face_of(nd));
        out.tri.boundary_root_darts.push_back(nd);
    }
    for (int f = 0; f < nm.num_faces(); ++f)
        if (new_face_role[f] == 2) out.tri.hole_faces.push_back(f);
    return out;
}

inline RootedCode dual_ball_code(const TriangulationWithHoles& t, int root_dart, int r) {
    DualBall b = dual_ball(t, root_dart, r);
    TriangulationWithHoles rooted = b.tri;
    // code rooted at the translated root dart, decorations appended
    int nd = b.old_to_new[root_dart];
    RootedCode rc;
    auto ts = rooted.map.canonical_timestamps(nd);
    std::vector<int> order(rooted.map.dart_count());
    for (int d = 0; d < rooted.map.dart_count(); ++d) order[ts[d]] = d;
    rc.code.push_back(rooted.map.dart_count());
    for (int d : order) {
        rc.code.push_back(ts[rooted.map.sigma(d)]);
        rc.code.push_back(ts[rooted.map.alpha(d)]);
    }
    rc.code.push_back(-1);
    for (int d : rooted.boundary_root_darts) rc.code.push_back(ts[d]);
    rc.code.push_back(-2);
    std::vector<int> hole_marks;
    for (int f : rooted.hole_faces) {
        int mark = rooted.map.dart_count();
        for (int d : rooted.map.face_darts(f)) mark = std::min(mark, ts[d]);
        hole_marks.push_back(mark);
    }
    std::sort(hole_marks.begin(), hole_marks.end());
    for (int x : hole_marks) rc.code.push_back(x);
    return rc;
}

// d_loc = (1 + max{r : B_r agree})^{-1}; zero iff all balls agree.
struct LocalDistance {
    long num = 0;
    long den = 1;
    double value() const { return static_cast<double>(num) / static_cast<double>(den); }
    friend bool operator==(const LocalDistance& a, const LocalDistance& b) {
        return a.num * b.den == b.num * a.den;
    }
    friend bool operator<(const LocalDistance& a, const LocalDistance& b) {
        return a.num * b.den < b.num * a.den;
    }
    friend bool operator<=(const LocalDistance& a, const LocalDistance& b) {
        return a.num * b.den <= b.num * a.den;
    }
};

inline LocalDistance local_distance(const HalfEdgeMap& a, const HalfEdgeMap& b) {
    int r_max = 2 + std::max(a.num_vertices(), b.num_vertices());
    for (int r = 1; r <= r_max; ++r) {
        if (!(ball_code(a, a.root(), r) == ball_code(b, b.root(), r)))
            return LocalDistance{1, r};  // first disagreement at radius r
    }
    return LocalDistance{0, 1};
}

inline LocalDistance dual_local_distance(const TriangulationWithHoles& a, int ea,
                                         const TriangulationWithHoles& b, int eb) {
    int r_max = 2 + std::max(a.map.num_faces(), b.map.num_faces());
    for (int r = 0; r <= r_max; ++r) {
        if (!(dual_ball_code(a, ea, r) == dual_ball_code(b, eb, r))) {
            // first disagreement at radius r: largest agreeing radius is r-1
            return LocalDistance{1, std::max(r, 1)};
        }
    }
    return LocalDistance{0, 1};
}

}  // namespace peelmap
