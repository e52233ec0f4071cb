#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <queue>
#include <stdexcept>
#include <string>
#include <vector>

namespace peelmap {

// A rooted orientable map stored as two permutations on half-edge (dart)
// indices 0..2E-1: sigma rotates the darts sharing an origin vertex, alpha is
// the fixed-point-free involution pairing the two darts of an edge. Faces are
// the orbits of phi = sigma(alpha(.)); the face of a dart lies on the dart's
// right, its reversal borders the face on the left. This orientation
// convention is fixed here once and used by every module.
//
// The empty map (0 darts) is allowed; it represents the radius-0 ball.
class HalfEdgeMap;

enum class MapErrorKind { NotInvolution, FixedPoint, Disconnected, BadInput };

struct map_error : std::runtime_error {
    MapErrorKind kind;
    map_error(MapErrorKind k, const std::string& msg) : std::runtime_error(msg), kind(k) {}
};

class HalfEdgeMap {
  public:
    HalfEdgeMap() = default;

    // Validates, computes orbits, caches genus. Throws map_error.
    HalfEdgeMap(std::vector<int> sigma, std::vector<int> alpha, int root)
        : sigma_(std::move(sigma)), alpha_(std::move(alpha)), root_(root) {
        check_and_index();
    }

    int dart_count() const { return static_cast<int>(sigma_.size()); }
    bool empty() const { return sigma_.empty(); }
    int root() const { return root_; }

    int sigma(int d) const { return sigma_[d]; }
    int alpha(int d) const { return alpha_[d]; }
    int phi(int d) const { return sigma_[alpha_[d]]; }       // next dart along the face on the right
    int phi_inv(int d) const { return alpha_[sigma_inv_[d]]; }
    int sigma_inv(int d) const { return sigma_inv_[d]; }

    int vertex_of(int d) const { return vertex_of_[d]; }
    int face_of(int d) const { return face_of_[d]; }
    int head_vertex(int d) const { return vertex_of_[alpha_[d]]; }

    int num_vertices() const { return num_vertices_; }
    int num_edges() const { return dart_count() / 2; }
    int num_faces() const { return num_faces_; }
    int genus() const { return genus_; }

    const std::vector<int>& face_representatives() const { return face_rep_; }
    const std::vector<int>& vertex_representatives() const { return vertex_rep_; }

    int face_degree(int f) const { return face_degree_[f]; }
    int vertex_degree(int v) const { return vertex_degree_[v]; }

    // Darts of face f in phi order, starting from the stored representative.
    std::vector<int> face_darts(int f) const {
        std::vector<int> out;
        int d0 = face_rep_[f];
        int d = d0;
        do {
            out.push_back(d);
            d = phi(d);
        } while (d != d0);
        return out;
    }

    std::vector<int> vertex_darts(int v) const {
        std::vector<int> out;
        int d0 = vertex_rep_[v];
        int d = d0;
        do {
            out.push_back(d);
            d = sigma_[d];
        } while (d != d0);
        return out;
    }

    // Graph-distance BFS from a vertex. unreachable = -1 (cannot happen on a
    // connected map, but the submap helpers reuse this on fragments).
    std::vector<int> vertex_distances(int start_vertex) const {
        std::vector<int> dist(num_vertices_, -1);
        if (start_vertex < 0) return dist;
        std::queue<int> q;
        dist[start_vertex] = 0;
        q.push(start_vertex);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int d : vertex_darts(v)) {
                int w = head_vertex(d);
                if (dist[w] < 0) {
                    dist[w] = dist[v] + 1;
                    q.push(w);
                }
            }
        }
        return dist;
    }

    // Dual BFS over faces, restricted to faces for which `internal` is true;
    // adjacency through edges whose two sides are both internal.
    std::vector<int> dual_distances(const std::vector<int>& start_faces,
                                    const std::vector<bool>& internal) const {
        std::vector<int> dist(num_faces_, -1);
        std::queue<int> q;
        for (int f : start_faces) {
            if (f >= 0 && internal[f] && dist[f] < 0) {
                dist[f] = 0;
                q.push(f);
            }
        }
        while (!q.empty()) {
            int f = q.front();
            q.pop();
            for (int d : face_darts(f)) {
                int g = face_of_[alpha_[d]];
                if (internal[g] && dist[g] < 0) {
                    dist[g] = dist[f] + 1;
                    q.push(g);
                }
            }
        }
        return dist;
    }

    // Canonical timestamps: BFS over darts from the root, exploring sigma
    // then alpha. Rooted maps have no nontrivial automorphisms, so the
    // timestamp map is a complete relabeling-invariant.
    std::vector<int> canonical_timestamps() const { return canonical_timestamps(root_); }

    std::vector<int> canonical_timestamps(int from_dart) const {
        std::vector<int> ts(dart_count(), -1);
        if (from_dart < 0 || empty()) return ts;
        std::vector<int> order;
        order.reserve(dart_count());
        ts[from_dart] = 0;
        order.push_back(from_dart);
        for (std::size_t i = 0; i < order.size(); ++i) {
            int d = order[i];
            for (int nb : {sigma_[d], alpha_[d]}) {
                if (ts[nb] < 0) {
                    ts[nb] = static_cast<int>(order.size());
                    order.push_back(nb);
                }
            }
        }
        return ts;
    }

  private:
    void check_and_index() {
        const int n = dart_count();
        if (static_cast<int>(alpha_.size()) != n)
            throw map_error(MapErrorKind::BadInput, "sigma and alpha act on different index sets");
        if (n % 2 != 0) throw map_error(MapErrorKind::BadInput, "odd number of half-edges");
        if (n == 0) {
            root_ = -1;
            num_vertices_ = num_faces_ = genus_ = 0;
            return;
        }
        if (root_ < 0 || root_ >= n) throw map_error(MapErrorKind::BadInput, "root out of range");

        std::vector<bool> seen(n, false);
        for (int d = 0; d < n; ++d) {
            if (sigma_[d] < 0 || sigma_[d] >= n || alpha_[d] < 0 || alpha_[d] >= n)
                throw map_error(MapErrorKind::BadInput, "permutation value out of range");
            seen[sigma_[d]] = true;
        }
        for (int d = 0; d < n; ++d)
            if (!seen[d]) throw map_error(MapErrorKind::BadInput, "sigma is not a permutation");
        for (int d = 0; d < n; ++d) {
            if (alpha_[d] == d) throw map_error(MapErrorKind::FixedPoint, "alpha fixes dart " + std::to_string(d));
            if (alpha_[alpha_[d]] != d)
                throw map_error(MapErrorKind::NotInvolution, "alpha is not an involution at dart " + std::to_string(d));
        }

        sigma_inv_.assign(n, -1);
        for (int d = 0; d < n; ++d) sigma_inv_[sigma_[d]] = d;

        vertex_of_.assign(n, -1);
        for (int d = 0; d < n; ++d) {
            if (vertex_of_[d] >= 0) continue;
            int v = static_cast<int>(vertex_rep_.size());
            vertex_rep_.push_back(d);
            int e = d;
            int deg = 0;
            do {
                vertex_of_[e] = v;
                ++deg;
                e = sigma_[e];
            } while (e != d);
            vertex_degree_.push_back(deg);
        }
        num_vertices_ = static_cast<int>(vertex_rep_.size());

        face_of_.assign(n, -1);
        for (int d = 0; d < n; ++d) {
            if (face_of_[d] >= 0) continue;
            int f = static_cast<int>(face_rep_.size());
            face_rep_.push_back(d);
            int e = d;
            int deg = 0;
            do {
                face_of_[e] = f;
                ++deg;
                e = phi(e);
            } while (e != d);
            face_degree_.push_back(deg);
        }
        num_faces_ = static_cast<int>(face_rep_.size());

        // connectivity: the group generated by sigma and alpha acts transitively
        std::vector<bool> reached(n, false);
        std::queue<int> q;
        reached[0] = true;
        q.push(0);
        int count = 1;
        while (!q.empty()) {
            int d = q.front();
            q.pop();
            for (int nb : {sigma_[d], alpha_[d]}) {
                if (!reached[nb]) {
                    reached[nb] = true;
                    ++count;
                    q.push(nb);
                }
            }
        }
        if (count != n) throw map_error(MapErrorKind::Disconnected, "map is not connected");

        int euler = num_vertices_ - num_edges() + num_faces_;
        if ((2 - euler) % 2 != 0 || euler > 2)
            throw map_error(MapErrorKind::BadInput, "Euler characteristic is not 2-2g");
        genus_ = (2 - euler) / 2;
    }

    std::vector<int> sigma_;
    std::vector<int> alpha_;
    int root_ = -1;

    std::vector<int> sigma_inv_;
    std::vector<int> vertex_of_;
    std::vector<int> face_of_;
    std::vector<int> vertex_rep_;
    std::vector<int> face_rep_;
    std::vector<int> vertex_degree_;
    std::vector<int> face_degree_;
    int num_vertices_ = 0;
    int num_faces_ = 0;
    int genus_ = 0;
};

inline HalfEdgeMap build_map(std::vector<int> sigma, std::vector<int> alpha, int root) {
    return HalfEdgeMap(std::move(sigma), std::move(alpha), root);
}

inline int genus(const HalfEdgeMap& m) { return m.genus(); }

// Submap induced by a set of edges (given as a per-dart flag, equal on the
// two darts of an edge). Both darts of a kept edge survive; the rotation at
// each vertex is the original rotation restricted to surviving darts. Faces
// of the result that were not faces of the input become the exposed regions.
struct Submap {
    HalfEdgeMap map;                // empty if no edge kept
    std::vector<int> old_to_new;    // dart index translation, -1 if dropped
    std::vector<int> new_to_old;
};

inline Submap edge_induced_submap(const HalfEdgeMap& m, const std::vector<bool>& keep_dart,
                                  int new_root_old_dart) {
    Submap out;
    const int n = m.dart_count();
    out.old_to_new.assign(n, -1);
    for (int d = 0; d < n; ++d) {
        if (keep_dart[d]) {
            if (!keep_dart[m.alpha(d)])
                throw map_error(MapErrorKind::BadInput, "keep flags differ across an edge");
            out.old_to_new[d] = static_cast<int>(out.new_to_old.size());
            out.new_to_old.push_back(d);
        }
    }
    if (out.new_to_old.empty()) return out;

    const int k = static_cast<int>(out.new_to_old.size());
    std::vector<int> sigma(k), alpha(k);
    for (int nd = 0; nd < k; ++nd) {
        int d = out.new_to_old[nd];
        alpha[nd] = out.old_to_new[m.alpha(d)];
        int s = m.sigma(d);
        while (!keep_dart[s]) s = m.sigma(s);
        sigma[nd] = out.old_to_new[s];
    }
    int root = (new_root_old_dart >= 0 && keep_dart[new_root_old_dart])
                   ? out.old_to_new[new_root_old_dart]
                   : 0;
    out.map = HalfEdgeMap(std::move(sigma), std::move(alpha), root);
    return out;
}

}  // namespace peelmap
