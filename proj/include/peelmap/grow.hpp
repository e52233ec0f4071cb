#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "peelmap/half_edge_map.hpp"
#include "peelmap/triangulation.hpp"

namespace peelmap {

// Mutable map under construction, stored as (alpha, phi) with phi the
// face-successor permutation (sigma = phi o alpha is derived on export).
// Peeling surgery is natural in phi: revealing a triangle against a hole dart
// splices the hole cycle around the two new edges.
//
// Orientation of a peel at hole dart d (origin x, head y): the revealed
// triangle is (d, a, b) with a: y->v and b: v->x, where v is the apex. The
// y-side of the hole is the LEFT side (the side of the peeled edge's "root"
// end), the x-side is the RIGHT side. reveal_apex_at splits or merges hole
// cycles accordingly.
class GrowingMap {
  public:
    struct RevealResult {
        int a = -1, b = -1;        // triangle sides y->v, v->x
        int a_op = -1, b_op = -1;  // their hole-side reversals v->y, x->v
    };

    int dart_count() const { return static_cast<int>(alpha_.size()); }
    int alive_darts() const { return alive_count_; }
    bool alive(int d) const { return alive_[d]; }
    int alpha(int d) const { return alpha_[d]; }
    int phi(int d) const { return phi_[d]; }
    int phi_inv(int d) const { return phi_inv_[d]; }
    int vertex(int d) const { return vert_[d]; }
    int head_vertex(int d) const { return vert_[alpha_[d]]; }
    int vertex_count() const { return next_vertex_; }

    int new_vertex() { return next_vertex_++; }

    // A p-gon with fresh vertices: inner face cycle (u_i -> u_{i+1}) and the
    // complementary outer cycle. Returns inner darts in face order.
    struct Polygon {
        std::vector<int> inner;
        std::vector<int> outer;  // outer[i] = alpha(inner[i]), origin u_{i+1}
    };

    Polygon make_polygon(int p) {
        Polygon poly;
        std::vector<int> verts(p);
        for (int i = 0; i < p; ++i) verts[i] = new_vertex();
        for (int i = 0; i < p; ++i) {
            poly.inner.push_back(new_dart(verts[i]));
            poly.outer.push_back(new_dart(verts[(i + 1) % p]));
        }
        for (int i = 0; i < p; ++i) {
            link_alpha(poly.inner[i], poly.outer[i]);
            set_phi(poly.inner[i], poly.inner[(i + 1) % p]);
            set_phi(poly.outer[i], poly.outer[(i - 1 + p) % p]);
        }
        return poly;
    }

    // Triangle against hole dart d with a brand new apex vertex. The hole
    // cycle ... -> d -> ... becomes ... -> b_op -> a_op -> ...
    RevealResult reveal_new_apex(int d) {
        int v = new_vertex();
        return reveal_core(d, v, -1);
    }

    // Triangle against hole dart d with apex at origin(w), where w is a hole
    // dart (same hole or another one). Same hole: the cycle splits into
    //   left  (y-side): phi(d) ... phi_inv(w), then a_op
    //   right (x-side): w ... phi_inv(d), then b_op
    // (w == d gives a right side of length 1; w == phi(d) a left side of
    // length 1). Different holes merge into a single cycle.
    RevealResult reveal_apex_at(int d, int w) {
        return reveal_core(d, vert_[w], w);
    }

    // Identifies the two edges of the 2-cycle hole (d1, d2 = phi(d1)):
    // their explored sides become one edge, the hole face disappears.
    void close_two_gon(int d1) {
        int d2 = phi_[d1];
        if (phi_[d2] != d1) throw map_error(MapErrorKind::BadInput, "close_two_gon: hole is not a 2-cycle");
        int e1 = alpha_[d1], e2 = alpha_[d2];
        link_alpha(e1, e2);
        kill(d1);
        kill(d2);
    }

    // Converts to the immutable representation. Returns the dart index map.
    HalfEdgeMap freeze(int root_dart, std::vector<int>* old_to_new = nullptr) const {
        std::vector<int> idx(dart_count(), -1);
        std::vector<int> live;
        for (int d = 0; d < dart_count(); ++d) {
            if (alive_[d]) {
                idx[d] = static_cast<int>(live.size());
                live.push_back(d);
            }
        }
        std::vector<int> sigma(live.size()), alpha(live.size());
        for (std::size_t nd = 0; nd < live.size(); ++nd) {
            int d = live[nd];
            alpha[nd] = idx[alpha_[d]];
            sigma[nd] = idx[phi_[alpha_[d]]];
        }
        if (old_to_new) *old_to_new = idx;
        return HalfEdgeMap(std::move(sigma), std::move(alpha), idx[root_dart]);
    }

    int new_dart(int origin_vertex) {
        int d = dart_count();
        alpha_.push_back(-1);
        phi_.push_back(-1);
        phi_inv_.push_back(-1);
        vert_.push_back(origin_vertex);
        alive_.push_back(true);
        ++alive_count_;
        return d;
    }

    void link_alpha(int d1, int d2) {
        alpha_[d1] = d2;
        alpha_[d2] = d1;
    }
    void set_phi(int from, int to) {
        phi_[from] = to;
        phi_inv_[to] = from;
    }
    void set_vertex(int d, int v) { vert_[d] = v; }
    void kill(int d) {
        if (alive_[d]) {
            alive_[d] = false;
            --alive_count_;
        }
    }

  private:
    RevealResult reveal_core(int d, int apex, int w) {
        RevealResult r;
        int x = vert_[d];
        int y = vert_[alpha_[d]];
        r.a = new_dart(y);
        r.b = new_dart(apex);
        r.a_op = new_dart(apex);
        r.b_op = new_dart(x);
        link_alpha(r.a, r.a_op);
        link_alpha(r.b, r.b_op);

        int q = phi_[d];
        int p = phi_inv_[d];
        // triangle face
        set_phi(d, r.a);
        set_phi(r.a, r.b);
        set_phi(r.b, d);

        if (w < 0) {
            // new apex: single hole cycle ... p -> b_op -> a_op -> q ...
            if (q == d) {
                // hole of length 1 (a loop): new cycle (b_op, a_op)
                set_phi(r.b_op, r.a_op);
                set_phi(r.a_op, r.b_op);
            } else {
                set_phi(p, r.b_op);
                set_phi(r.b_op, r.a_op);
                set_phi(r.a_op, q);
            }
            return r;
        }

        if (w == d) {
            // apex at x: right side is the loop (b_op), left side (q..p, a_op)
            set_phi(r.b_op, r.b_op);
            if (q == d) {
                set_phi(r.a_op, r.a_op);
            } else {
                set_phi(p, r.a_op);
                set_phi(r.a_op, q);
            }
            return r;
        }
        int rr = phi_inv_[w];
        if (w == q) {
            // apex at y: left side is the loop (a_op), right side (w..p, b_op)
            set_phi(r.a_op, r.a_op);
            set_phi(p, r.b_op);
            set_phi(r.b_op, w);
            return r;
        }
        if (q == d) {
            // the peeled hole was a 1-loop, w lies on another hole:
            // merged cycle (a_op, b_op, w .. rr)
            set_phi(r.a_op, r.b_op);
            set_phi(r.b_op, w);
            set_phi(rr, r.a_op);
            return r;
        }
        // generic: left cycle (q .. rr, a_op), right-or-merged cycle (w .. p, b_op)
        set_phi(rr, r.a_op);
        set_phi(r.a_op, q);
        set_phi(p, r.b_op);
        set_phi(r.b_op, w);
        return r;
    }

    std::vector<int> alpha_;
    std::vector<int> phi_;
    std::vector<int> phi_inv_;
    std::vector<int> vert_;
    std::vector<bool> alive_;
    int alive_count_ = 0;
    int next_vertex_ = 0;
};

}  // namespace peelmap
