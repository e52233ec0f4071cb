#pragma once

#include <map>
#include <stdexcept>
#include <vector>

#include "peelmap/grow.hpp"
#include "peelmap/half_edge_map.hpp"
#include "peelmap/triangulation.hpp"

namespace peelmap {

// Explored region of a peeling exploration: a growing map plus hole
// bookkeeping. Hole ids are assigned sequentially, one fresh id per hole
// created, so they double as peeling-diagram vertex ids.
class PeelState {
  public:
    struct StepHoles {
        int left = -1;   // hole id on the y-side of the peeled dart
        int right = -1;  // hole id on the x-side (or the merged hole)
    };

    // Starts from a single p-gon, its inner face being boundary slot 0 and
    // the outer face the initial hole (id 0). Rooted at root_offset along the
    // inner cycle.
    explicit PeelState(int p, int boundary_count = 1, int root_offset = 0) {
        auto poly = gm_.make_polygon(p);
        boundary_roots_.assign(boundary_count, -1);
        boundary_roots_[0] = poly.inner[root_offset % p];
        root_ = boundary_roots_[0];
        hole_of_.assign(gm_.dart_count(), -1);
        int h = fresh_hole(poly.outer[0], p);
        retag_cycle(h);
    }

    GrowingMap& gm() { return gm_; }
    const GrowingMap& gm() const { return gm_; }
    int root() const { return root_; }
    int hole_count() const { return static_cast<int>(live_holes_.size()); }
    const std::map<int, int>& holes() const { return live_holes_; }  // id -> representative dart
    int hole_of(int dart) const { return hole_of_[dart]; }
    int hole_len(int id) const { return hole_len_.at(id); }
    int hole_rep(int id) const { return live_holes_.at(id); }
    int next_hole_id() const { return next_hole_id_; }
    const std::vector<int>& boundary_roots() const { return boundary_roots_; }

    std::vector<int> hole_darts(int id) const {
        std::vector<int> out;
        int d0 = live_holes_.at(id);
        int d = d0;
        do {
            out.push_back(d);
            d = gm_.phi(d);
        } while (d != d0);
        return out;
    }

    // ---- step appliers ------------------------------------------------------

    // Type II: triangle with a fresh apex; the peeled hole becomes one hole of
    // length l+1. Returns {left=-1, right=new id}.
    StepHoles apply_new_apex(int d, GrowingMap::RevealResult* res = nullptr) {
        int h = hole_of_[d];
        int l = hole_len_[h];
        auto r = gm_.reveal_new_apex(d);
        if (res) *res = r;
        retire_hole(h);
        unhole(d);
        int nh = fresh_hole(r.a_op, l + 1);
        retag_cycle(nh);
        return StepHoles{-1, nh};
    }

    // Type I: the 2-gon hole closes with the degenerate fill.
    void apply_close(int d) {
        int h = hole_of_[d];
        if (hole_len_[h] != 2) throw map_error(MapErrorKind::BadInput, "close on a hole of length != 2");
        unhole(d);
        unhole(gm_.phi(d));
        retire_hole(h);
        gm_.close_two_gon(d);
    }

    // Type IV: apex at origin(w), w on the same hole as d. Left hole gets
    // perimeter (steps from phi(d) to w), right hole the complement.
    StepHoles apply_split(int d, int w, GrowingMap::RevealResult* res = nullptr) {
        int h = hole_of_[d];
        if (hole_of_[w] != h) throw map_error(MapErrorKind::BadInput, "split: w not on the peeled hole");
        int l = hole_len_[h];
        int left_len = arc_length(d, w);  // darts strictly after d up to before w, plus the new edge
        auto r = gm_.reveal_apex_at(d, w);
        if (res) *res = r;
        retire_hole(h);
        unhole(d);
        int hl = fresh_hole(r.a_op, left_len);
        int hr = fresh_hole(r.b_op, l + 1 - left_len);
        retag_cycle(hl);
        retag_cycle(hr);
        return StepHoles{hl, hr};
    }

    // Type V (and the type-III gluing after the polygon is created): apex at
    // origin(w), w on another hole; both merge into one.
    StepHoles apply_merge(int d, int w, GrowingMap::RevealResult* res = nullptr) {
        int h = hole_of_[d];
        int h2 = hole_of_[w];
        if (h2 == h || h2 < 0) throw map_error(MapErrorKind::BadInput, "merge: w must lie on another hole");
        int l = hole_len_[h] + hole_len_[h2] + 1;
        auto r = gm_.reveal_apex_at(d, w);
        if (res) *res = r;
        retire_hole(h);
        retire_hole(h2);
        unhole(d);
        int nh = fresh_hole(r.b_op, l);
        retag_cycle(nh);
        return StepHoles{-1, nh};
    }

    // Type III: reveal the not-yet-seen boundary j (perimeter p) through the
    // triangle at d whose apex is the vertex b steps against the boundary
    // orientation from the boundary's root. Registers the new boundary root.
    StepHoles apply_boundary_glue(int d, int slot_j, int p, int b,
                                  GrowingMap::RevealResult* res = nullptr) {
        if (boundary_roots_[slot_j] >= 0)
            throw map_error(MapErrorKind::BadInput, "boundary slot already revealed");
        auto poly = gm_.make_polygon(p);
        hole_of_.resize(gm_.dart_count(), -1);
        boundary_roots_[slot_j] = poly.inner[0];
        int h2 = fresh_hole(poly.outer[0], p);
        for (int o : poly.outer) tag(o, h2);
        int m = (p - b) % p;  // apex = u_m along the inner cycle
        int w = poly.outer[(m + p - 1) % p];
        return apply_merge(d, w, res);
    }

    // Glues a hole-free triangulation of the k-gon into hole h; the fill's
    // first boundary root glues against `anchor` (reversed orientation).
    void glue_fill(int anchor, const TriangulationWithHoles& fill) {
        int h = hole_of_[anchor];
        int k = hole_len_[h];
        if (!fill.hole_faces.empty())
            throw map_error(MapErrorKind::BadInput, "glue_fill: fill must be hole-free");
        const HalfEdgeMap& fm = fill.map;
        if (fm.face_degree(fill.boundary_faces[0]) != k)
            throw map_error(MapErrorKind::BadInput, "glue_fill: perimeter mismatch");
        if (fm.dart_count() == 2) {  // degenerate 2-gon: identify the hole's edges
            apply_close(anchor);
            return;
        }
        std::vector<int> host(k);  // h_0 = anchor, h_i = phi^i
        {
            int d = anchor;
            for (int i = 0; i < k; ++i) {
                host[i] = d;
                d = gm_.phi(d);
            }
        }
        std::vector<int> bd(k);  // fill boundary cycle from its root dart
        {
            int f0 = fill.boundary_root_darts[0];
            int d = f0;
            for (int i = 0; i < k; ++i) {
                bd[i] = d;
                d = fm.phi(d);
            }
        }
        std::vector<bool> is_bd(fm.dart_count(), false);
        for (int d : bd) is_bd[d] = true;

        // vertex transfer: fill boundary vertex of bd[m] -> host vertex of
        // host[(1-m) mod k]'s origin; interior vertices are fresh
        std::vector<int> vmap(fm.num_vertices(), -1);
        for (int m = 0; m < k; ++m) vmap[fm.vertex_of(bd[m])] = gm_.vertex(host[((1 - m) % k + k) % k]);
        for (int v = 0; v < fm.num_vertices(); ++v)
            if (vmap[v] < 0) vmap[v] = gm_.new_vertex();

        std::vector<int> dmap(fm.dart_count(), -1);
        for (int d = 0; d < fm.dart_count(); ++d)
            if (!is_bd[d]) dmap[d] = gm_.new_dart(vmap[fm.vertex_of(d)]);
        hole_of_.resize(gm_.dart_count(), -1);
        for (int d = 0; d < fm.dart_count(); ++d) {
            if (is_bd[d]) continue;
            gm_.set_phi(dmap[d], dmap[fm.phi(d)]);
            int ad = fm.alpha(d);
            if (!is_bd[ad]) {
                if (ad > d) gm_.link_alpha(dmap[d], dmap[ad]);
            }
        }
        for (int i = 0; i < k; ++i) {
            int f = bd[((k - i) % k)];
            int inner_side = fm.alpha(f);  // never a boundary dart except the 2-gon case
            gm_.link_alpha(gm_.alpha(host[i]), dmap[inner_side]);
            unhole(host[i]);
            gm_.kill(host[i]);
        }
        retire_hole(h);
    }

    // ---- export -------------------------------------------------------------

    TriangulationWithHoles freeze() const {
        TriangulationWithHoles t;
        std::vector<int> old_to_new;
        t.map = gm_.freeze(root_, &old_to_new);
        for (int b : boundary_roots_) {
            if (b < 0) continue;
            t.boundary_root_darts.push_back(old_to_new[b]);
            t.boundary_faces.push_back(t.map.face_of(old_to_new[b]));
        }
        for (const auto& [id, rep] : live_holes_) t.hole_faces.push_back(t.map.face_of(old_to_new[rep]));
        return t;
    }

    // Number of darts from phi(d) up to and including the last one before w,
    // plus one for the new edge: the left-hole perimeter of a split at w.
    int arc_length(int d, int w) const {
        int len = 1;
        for (int x = gm_.phi(d); x != w; x = gm_.phi(x)) ++len;
        return len;  // w == phi(d) gives 1 (left hole is the single new edge)
    }

    void tag(int dart, int hole_id) {
        if (dart >= static_cast<int>(hole_of_.size())) hole_of_.resize(gm_.dart_count(), -1);
        hole_of_[dart] = hole_id;
    }

  private:
    int fresh_hole(int rep, int len) {
        int id = next_hole_id_++;
        live_holes_[id] = rep;
        hole_len_[id] = len;
        tag(rep, id);
        return id;
    }
    void retire_hole(int id) { live_holes_.erase(id); }
    void unhole(int dart) { hole_of_[dart] = -1; }
    void retag_cycle(int id) {
        int d0 = live_holes_.at(id);
        int d = d0;
        do {
            tag(d, id);
            d = gm_.phi(d);
        } while (d != d0);
    }

    GrowingMap gm_;
    std::vector<int> hole_of_;
    std::map<int, int> live_holes_;
    std::map<int, int> hole_len_;
    std::vector<int> boundary_roots_;
    int root_ = -1;
    int next_hole_id_ = 0;
};

}  // namespace peelmap
