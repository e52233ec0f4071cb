#pragma once

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <vector>

#include "peelmap/balls.hpp"
#include "peelmap/canonical.hpp"
#include "peelmap/counting.hpp"
#include "peelmap/exact.hpp"
#include "peelmap/peel_state.hpp"
#include "peelmap/triangulation.hpp"

namespace peelmap {

struct cap_exceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct GluingSpec {
    int triangle_count = 0;
    std::vector<int> boundary_perimeters;  // ordered; may be empty
    int genus = 0;
    int cap = 6;  // maximal triangle count the oracle agrees to enumerate
};

using Corpus = std::vector<TriangulationWithHoles>;

namespace detail {

// ---- matching enumerator ----------------------------------------------------
// Fix labeled polygons (boundaries first, then triangles), fix the root side,
// and enumerate perfect matchings of sides with orientation-reversing
// gluings; dedup by canonical code. Exact but exponential: reserved for
// boundaryless instances and small cross-checks.
class MatchingEnumerator {
  public:
    MatchingEnumerator(int triangles, std::vector<int> boundary, int genus)
        : boundary_(std::move(boundary)), genus_(genus) {
        for (int p : boundary_) degrees_.push_back(p);
        for (int i = 0; i < triangles; ++i) degrees_.push_back(3);
        int S = 0;
        for (int d : degrees_) S += d;
        if (S % 2 != 0) throw domain_error("matching oracle: odd number of polygon sides");
        side_poly_.clear();
        for (std::size_t k = 0; k < degrees_.size(); ++k)
            for (int s = 0; s < degrees_[k]; ++s) side_poly_.push_back(static_cast<int>(k));
        total_sides_ = S;
    }

    Corpus run() {
        if (total_sides_ == 0) return {};
        match_.assign(total_sides_, -1);
        recurse();
        Corpus out;
        out.reserve(seen_.size());
        for (auto& [code, tri] : seen_) out.push_back(std::move(tri));
        return out;
    }

  private:
    void recurse() {
        int i = 0;
        while (i < total_sides_ && match_[i] >= 0) ++i;
        if (i == total_sides_) {
            emit();
            return;
        }
        bool i_boundary = side_poly_[i] < static_cast<int>(boundary_.size());
        for (int j = i + 1; j < total_sides_; ++j) {
            if (match_[j] >= 0) continue;
            if (i_boundary && side_poly_[j] < static_cast<int>(boundary_.size())) continue;
            match_[i] = j;
            match_[j] = i;
            recurse();
            match_[i] = -1;
            match_[j] = -1;
        }
    }

    void emit() {
        // darts: two per side-pair; dart of side s points along its polygon.
        // phi is the polygon cycle; alpha is the matching with reversal.
        const int S = total_sides_;
        std::vector<int> phi(S), alpha(S);
        {
            int s = 0;
            for (int deg : degrees_) {
                for (int k = 0; k < deg; ++k) phi[s + k] = s + (k + 1) % deg;
                s += deg;
            }
        }
        for (int s = 0; s < S; ++s) alpha[s] = match_[s];
        // sigma = phi o alpha; quick genus/vertex filter before full validation
        std::vector<int> sigma(S);
        for (int d = 0; d < S; ++d) sigma[d] = phi[alpha[d]];
        int V = 0;
        std::vector<bool> vis(S, false);
        for (int d = 0; d < S; ++d) {
            if (vis[d]) continue;
            ++V;
            for (int e = d; !vis[e]; e = sigma[e]) vis[e] = true;
        }
        int E = S / 2;
        int F = static_cast<int>(degrees_.size());
        int euler = V - E + F;
        if ((2 - euler) % 2 != 0) return;
        int g = (2 - euler) / 2;
        if (g != genus_) return;

        HalfEdgeMap m;
        try {
            m = HalfEdgeMap(sigma, alpha, 0);
        } catch (const map_error&) {
            return;  // disconnected gluing
        }
        TriangulationWithHoles t;
        t.map = std::move(m);
        int s = 0;
        for (std::size_t k = 0; k < boundary_.size(); ++k) {
            t.boundary_faces.push_back(t.map.face_of(s));
            t.boundary_root_darts.push_back(s);
            s += boundary_[k];
        }
        if (!validate_tri_with_holes(t)) return;
        RootedCode code = canonical_code(t);
        seen_.emplace(std::move(code), std::move(t));
    }

    std::vector<int> boundary_;
    int genus_;
    std::vector<int> degrees_;
    std::vector<int> side_poly_;
    std::vector<int> match_;
    int total_sides_ = 0;
    std::map<RootedCode, TriangulationWithHoles> seen_;
};

// ---- peeling-history enumerator ----------------------------------------------
// DFS over peeling histories from the first boundary with a fixed canonical
// algorithm. Histories are in bijection with the triangulations, so no dedup
// is needed; requires at least one boundary.
class PeelEnumerator {
  public:
    PeelEnumerator(int triangles, std::vector<int> boundary, int genus)
        : boundary_(std::move(boundary)), genus_(genus), triangles_(triangles) {
        if (boundary_.empty()) throw domain_error("peel oracle: needs at least one boundary");
        int S = 3 * triangles_;
        for (int p : boundary_) S += p;
        if (S % 2 != 0) throw domain_error("peel oracle: odd number of polygon sides");
        long sum_p = std::accumulate(boundary_.begin(), boundary_.end(), 0L);
        // internal vertices of T_p(n,g): n + 2 - 2g - |p|, n = (T + |p|)/2 - l + 1
        vertex_budget_ = static_cast<int>((triangles_ + sum_p - 2 * static_cast<long>(boundary_.size())) / 2 +
                                          2 - 2 * genus_ - sum_p);
    }

    Corpus run() {
        if (vertex_budget_ < 0) return {};
        PeelState start(boundary_[0], static_cast<int>(boundary_.size()));
        dfs(start, triangles_, vertex_budget_, genus_, static_cast<int>(boundary_.size()) - 1);
        std::vector<std::pair<RootedCode, std::size_t>> order;
        order.reserve(out_.size());
        for (std::size_t i = 0; i < out_.size(); ++i) order.emplace_back(canonical_code(out_[i]), i);
        std::sort(order.begin(), order.end());
        Corpus sorted;
        sorted.reserve(out_.size());
        for (auto& [code, i] : order) sorted.push_back(std::move(out_[i]));
        return sorted;
    }

  private:
    void dfs(const PeelState& st, int tri_rem, int vert_rem, int genus_rem, int bnd_rem) {
        if (st.hole_count() == 0) {
            if (tri_rem == 0 && vert_rem == 0 && genus_rem == 0 && bnd_rem == 0)
                out_.push_back(st.freeze());
            return;
        }
        if (tri_rem < bnd_rem) return;
        if (tri_rem == 0) {
            // only type-I closures remain
            if (vert_rem != 0 || genus_rem != 0 || bnd_rem != 0) return;
            for (const auto& [id, rep] : st.holes())
                if (st.hole_len(id) != 2) return;
            PeelState next = st;
            while (next.hole_count() > 0) {
                int d = next.hole_rep(next.holes().begin()->first);
                next.apply_close(d);
            }
            dfs(next, 0, 0, 0, 0);
            return;
        }
        int hid = st.holes().begin()->first;
        int d = st.hole_rep(hid);

        if (st.hole_len(hid) == 2) {  // type I is one of the filling choices
            PeelState next = st;
            next.apply_close(next.hole_rep(hid));
            dfs(next, tri_rem, vert_rem, genus_rem, bnd_rem);
        }
        if (vert_rem > 0) {  // type II
            PeelState next = st;
            next.apply_new_apex(d);
            dfs(next, tri_rem - 1, vert_rem - 1, genus_rem, bnd_rem);
        }
        {  // type IV: all split positions on the peeled hole
            auto darts = st.hole_darts(hid);
            for (int w : darts) {
                PeelState next = st;
                next.apply_split(d, w);
                dfs(next, tri_rem - 1, vert_rem, genus_rem, bnd_rem);
            }
        }
        if (genus_rem > 0) {  // type V: all positions on every other hole
            for (const auto& [id2, rep2] : st.holes()) {
                if (id2 == hid) continue;
                for (int w : st.hole_darts(id2)) {
                    PeelState next = st;
                    next.apply_merge(d, w);
                    dfs(next, tri_rem - 1, vert_rem, genus_rem - 1, bnd_rem);
                }
            }
        }
        if (bnd_rem > 0) {  // type III: glue an unrevealed boundary
            for (std::size_t j = 1; j < boundary_.size(); ++j) {
                if (st.boundary_roots()[j] >= 0) continue;
                for (int b = 0; b < boundary_[j]; ++b) {
                    PeelState next = st;
                    next.apply_boundary_glue(d, static_cast<int>(j), boundary_[j], b);
                    dfs(next, tri_rem - 1, vert_rem, genus_rem, bnd_rem - 1);
                }
            }
        }
    }

    std::vector<int> boundary_;
    int genus_;
    int triangles_;
    int vertex_budget_ = 0;
    Corpus out_;
};

}  // namespace detail

// One representative per rooted-isomorphism class; |result| = tau_p(n,g).
inline Corpus enumerate_rooted(const GluingSpec& spec) {
    if (spec.triangle_count > spec.cap)
        throw cap_exceeded("oracle: triangle count " + std::to_string(spec.triangle_count) +
                           " exceeds cap " + std::to_string(spec.cap));
    if (spec.genus < 0) throw domain_error("oracle: genus must be >= 0");
    if (spec.boundary_perimeters.empty()) {
        detail::MatchingEnumerator en(spec.triangle_count, {}, spec.genus);
        return en.run();
    }
    detail::PeelEnumerator en(spec.triangle_count, spec.boundary_perimeters, spec.genus);
    return en.run();
}

// Same instance through the matching engine, for cross-validation.
inline Corpus enumerate_by_matchings(const GluingSpec& spec) {
    if (spec.triangle_count > spec.cap) throw cap_exceeded("oracle: cap exceeded");
    detail::MatchingEnumerator en(spec.triangle_count, spec.boundary_perimeters, spec.genus);
    return en.run();
}

// Triangle count of T_p(n,g): 2n - sum(p_i - 2).
inline int triangle_count_of(long n, const std::vector<int>& p) {
    long s = 0;
    for (int x : p) s += x - 2;
    long t = 2 * n - s;
    if (t < 0) throw domain_error("negative triangle count");
    return static_cast<int>(t);
}

inline Corpus enumerate_class(long n, long g, const std::vector<int>& p, int cap = 6) {
    GluingSpec spec;
    spec.triangle_count = triangle_count_of(n, p);
    spec.boundary_perimeters = p;
    spec.genus = static_cast<int>(g);
    spec.cap = cap;
    return enumerate_rooted(spec);
}

// ---- exact laws ---------------------------------------------------------------

struct BoltzmannAtom {
    TriangulationWithHoles tri;
    RootedCode code;
    int internal_vertices = 0;
    double mass = 0.0;  // lambda^{|t_in|} / w_lambda(p)
};

struct BoltzmannLaw {
    std::vector<BoltzmannAtom> atoms;
    double coverage = 0.0;  // total listed mass; tends to 1 as n_max grows
};

// All Boltzmann atoms of the p-gon with at most n_max internal vertices.
// Masses are lambda^{|t_in|}/w(p); the atom list itself is exact.
inline BoltzmannLaw exact_boltzmann_law(int p, double lambda, double w_p, int n_max, int cap = 8) {
    BoltzmannLaw law;
    for (int v = 0; v <= n_max; ++v) {
        long n = v + p - 2;
        if (2 * n - (p - 2) < 0) continue;
        Corpus c = enumerate_class(n, 0, {p}, cap);
        for (auto& t : c) {
            BoltzmannAtom atom;
            atom.internal_vertices = v;
            atom.mass = std::pow(lambda, v) / w_p;
            atom.code = canonical_code(t);
            atom.tri = std::move(t);
            law.coverage += atom.mass;
            law.atoms.push_back(std::move(atom));
        }
    }
    return law;
}

enum class Rooting { UniformEdge, UniformBoundaryEdge };

// Exact law of the ball code B_r (or dual ball) under uniform rooting of the
// uniform triangulation; probabilities are exact rationals.
struct BallLaw {
    std::map<RootedCode, Rat> prob;
    Rat total = 0;
};

inline BallLaw exact_ball_distribution(long n, long g, const std::vector<int>& p, int r,
                                       Rooting rooting, bool dual = false, int cap = 6) {
    Corpus corpus = enumerate_class(n, g, p, cap);
    if (corpus.empty()) throw domain_error("exact_ball_distribution: empty class");
    BallLaw law;
    std::vector<std::pair<RootedCode, Rat>> partial;
    long denom_count = 0;
    std::vector<std::vector<int>> root_sets;
    for (const auto& t : corpus) {
        std::vector<int> roots;
        if (rooting == Rooting::UniformEdge) {
            roots.resize(t.map.dart_count());
            std::iota(roots.begin(), roots.end(), 0);
        } else {
            for (int f : t.boundary_faces)
                for (int d : t.map.face_darts(f)) roots.push_back(d);
        }
        denom_count = static_cast<long>(roots.size());  // same for every t in the class
        root_sets.push_back(std::move(roots));
    }
    Rat unit = Rat(1) / Rat(Int(static_cast<long>(corpus.size())) * Int(denom_count));
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        for (int e : root_sets[i]) {
            RootedCode code = dual ? dual_ball_code(corpus[i], e, r) : ball_code(corpus[i].map, e, r);
            law.prob[code] += unit;
            law.total += unit;
        }
    }
    return law;
}

}  // namespace peelmap
