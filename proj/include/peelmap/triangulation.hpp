#pragma once

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "peelmap/half_edge_map.hpp"

namespace peelmap {

// A triangulation with holes: distinguished vertex-simple boundary faces
// (each rooted by a dart having the boundary on its right), edge-simple hole
// faces, all remaining faces triangles. Boundaries are ordered; their
// perimeter tuple is the p of T_p(n,g).
struct TriangulationWithHoles {
    HalfEdgeMap map;
    std::vector<int> boundary_faces;       // ordered
    std::vector<int> boundary_root_darts;  // same order; face_of(dart) == boundary face
    std::vector<int> hole_faces;

    std::vector<int> boundary_perimeters() const {
        std::vector<int> out;
        out.reserve(boundary_faces.size());
        for (int f : boundary_faces) out.push_back(map.face_degree(f));
        return out;
    }
    std::vector<int> hole_perimeters() const {
        std::vector<int> out;
        out.reserve(hole_faces.size());
        for (int f : hole_faces) out.push_back(map.face_degree(f));
        return out;
    }

    bool is_boundary_face(int f) const {
        for (int b : boundary_faces)
            if (b == f) return true;
        return false;
    }
    bool is_hole_face(int f) const {
        for (int h : hole_faces)
            if (h == f) return true;
        return false;
    }

    int internal_face_count() const {
        return map.num_faces() - static_cast<int>(boundary_faces.size());
    }

    // Number of triangles (faces that are neither boundaries nor holes).
    int triangle_count() const {
        return map.num_faces() - static_cast<int>(boundary_faces.size()) -
               static_cast<int>(hole_faces.size());
    }

    // Vertices not incident to any boundary face.
    int internal_vertex_count() const {
        std::vector<bool> on_boundary(map.num_vertices(), false);
        for (int f : boundary_faces)
            for (int d : map.face_darts(f)) on_boundary[map.vertex_of(d)] = true;
        int c = 0;
        for (int v = 0; v < map.num_vertices(); ++v)
            if (!on_boundary[v]) ++c;
        return c;
    }

    // The n of T_p(n,g): #triangles = 2n - sum(p_i - 2), valid for hole-free
    // triangulations of a multi-polygon.
    int size_parameter() const {
        int t = triangle_count();
        int s = 0;
        for (int p : boundary_perimeters()) s += p - 2;
        return (t + s) / 2;
    }
};

struct Diagnostics {
    bool ok = true;
    std::string violation;  // names the first violated clause
    explicit operator bool() const { return ok; }
};

inline Diagnostics fail(std::string what) { return Diagnostics{false, std::move(what)}; }

inline Diagnostics validate_tri_with_holes(const TriangulationWithHoles& t) {
    const HalfEdgeMap& m = t.map;
    if (m.empty()) return fail("EmptyMap: no faces to classify");

    std::vector<int> role(m.num_faces(), 0);  // 0 internal triangle, 1 boundary, 2 hole
    for (int f : t.boundary_faces) {
        if (f < 0 || f >= m.num_faces()) return fail("BadFaceId: boundary face out of range");
        if (role[f] != 0) return fail("FaceReuse: face listed twice");
        role[f] = 1;
    }
    for (int f : t.hole_faces) {
        if (f < 0 || f >= m.num_faces()) return fail("BadFaceId: hole face out of range");
        if (role[f] != 0) return fail("FaceReuse: face listed twice");
        role[f] = 2;
    }

    // boundary roots lie on their boundary (boundary on the right of the dart)
    if (t.boundary_root_darts.size() != t.boundary_faces.size())
        return fail("RootCount: one distinguished dart per boundary required");
    for (std::size_t i = 0; i < t.boundary_faces.size(); ++i) {
        int d = t.boundary_root_darts[i];
        if (d < 0 || d >= m.dart_count() || m.face_of(d) != t.boundary_faces[i])
            return fail("RootPlacement: distinguished dart does not have its boundary on the right");
    }

    // vertex-simple boundaries, pairwise vertex-disjoint
    std::vector<int> boundary_owner(m.num_vertices(), -1);
    for (std::size_t i = 0; i < t.boundary_faces.size(); ++i) {
        std::set<int> seen;
        for (int d : m.face_darts(t.boundary_faces[i])) {
            int v = m.vertex_of(d);
            if (!seen.insert(v).second) return fail("VertexSimple: boundary visits a vertex twice");
            if (boundary_owner[v] >= 0) return fail("VertexDisjoint: two boundaries share a vertex");
        }
        for (int d : m.face_darts(t.boundary_faces[i])) boundary_owner[m.vertex_of(d)] = static_cast<int>(i);
    }

    // edge-simple holes, pairwise edge-disjoint
    std::vector<int> hole_owner(m.num_edges(), -1);
    for (std::size_t i = 0; i < t.hole_faces.size(); ++i) {
        std::set<int> seen;
        for (int d : m.face_darts(t.hole_faces[i])) {
            int e = std::min(d, m.alpha(d));
            if (!seen.insert(e).second) return fail("EdgeSimple: hole traverses an edge twice");
            if (hole_owner[e] >= 0) return fail("EdgeDisjoint: two holes share an edge");
        }
        for (int d : m.face_darts(t.hole_faces[i])) hole_owner[std::min(d, m.alpha(d))] = static_cast<int>(i);
    }

    for (int f = 0; f < m.num_faces(); ++f)
        if (role[f] == 0 && m.face_degree(f) != 3)
            return fail("TriangleDegree: internal face of degree != 3");

    // dual connectivity of internal faces (holes included, boundaries removed)
    std::vector<bool> internal(m.num_faces());
    std::vector<int> starts;
    for (int f = 0; f < m.num_faces(); ++f) {
        internal[f] = role[f] != 1;
        if (internal[f]) starts.push_back(f);
    }
    if (starts.empty()) return fail("NoInternalFace: map has only boundaries");
    auto dist = m.dual_distances({starts[0]}, internal);
    for (int f : starts)
        if (dist[f] < 0) return fail("DualConnected: internal faces disconnect without boundaries");

    return Diagnostics{};
}

}  // namespace peelmap
