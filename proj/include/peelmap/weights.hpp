#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

#include "peelmap/params.hpp"
#include "peelmap/rng.hpp"

namespace peelmap {

// w_lambda(p) = sum_n tau_p(n-2+p,0) lambda^n, in closed form:
//   w(1) = 1/2 - (1+2h) / (2 sqrt(1+8h))
//   w(p) = (2+16h)^p (2p-5)!!/p! ((1-4h)p + 6h) / (4 (1+8h)^{3/2}),  p >= 2.
// Stored in logs so that ratios stay finite for large perimeters.
inline double log_w_lambda(long p, const LambdaParams& par) {
    if (p < 1) throw parameter_error("w_lambda: p must be >= 1");
    double h = par.h;
    if (p == 1) return std::log(0.5 - (1.0 + 2.0 * h) / (2.0 * std::sqrt(1.0 + 8.0 * h)));
    double lg = p * std::log(2.0 + 16.0 * h);
    for (long k = 2 * p - 5; k >= 2; k -= 2) lg += std::log(static_cast<double>(k));  // (2p-5)!!
    lg -= std::lgamma(static_cast<double>(p) + 1.0);
    lg += std::log((1.0 - 4.0 * h) * p + 6.0 * h);
    lg -= std::log(4.0) + 1.5 * std::log(1.0 + 8.0 * h);
    return lg;
}

inline double w_lambda(long p, const LambdaParams& par) { return std::exp(log_w_lambda(p, par)); }

// W_lambda(x) = sum_p w_lambda(p) x^p, finite for x <= 1/(4(1+8h)) = 1/beta_sub.
inline double W_lambda(double x, const LambdaParams& par) {
    double h = par.h;
    double disc = 1.0 - 4.0 * (1.0 + 8.0 * h) * x;
    if (disc < -1e-12) throw parameter_error("W_lambda: x outside the disk of convergence");
    if (disc < 0.0) disc = 0.0;
    double lambda = par.lambda;
    return 0.5 * lambda * ((1.0 - (1.0 + 8.0 * h) / h * x) * std::sqrt(disc) - 1.0 + x / lambda);
}

// C_p(lambda) = (1/lambda) (8+1/h)^{p-1} sum_{q=0}^{p-1} binom(2q,q) h^q.
inline double log_C_p(long p, const LambdaParams& par) {
    if (p < 1) throw parameter_error("C_p: p must be >= 1");
    double s = 0.0, term = 1.0;
    for (long q = 0; q <= p - 1; ++q) {
        s += term;
        term *= par.h * (2.0 * (2 * q + 1)) / (q + 1.0);  // binom(2(q+1),q+1)h^{q+1} / (binom(2q,q)h^q)
    }
    return -std::log(par.lambda) + (p - 1) * std::log(8.0 + 1.0 / par.h) + std::log(s);
}

inline double C_p_lambda(long p, const LambdaParams& par) { return std::exp(log_C_p(p, par)); }

// Memoized log-weights for one parameter value.
class WeightTable {
  public:
    explicit WeightTable(LambdaParams par) : par_(par) {}
    const LambdaParams& params() const { return par_; }

    double log_w(long p) const {
        if (log_w_.empty()) log_w_ = {0.0, log_w_lambda(1, par_), log_w_lambda(2, par_)};
        double h = par_.h;
        for (long q = static_cast<long>(log_w_.size()); q <= p; ++q) {
            // w(q)/w(q-1) in closed form, q >= 3
            double ratio = (2.0 + 16.0 * h) * (2.0 * q - 5.0) / q *
                           ((1.0 - 4.0 * h) * q + 6.0 * h) / ((1.0 - 4.0 * h) * (q - 1) + 6.0 * h);
            log_w_.push_back(log_w_.back() + std::log(ratio));
        }
        return log_w_[static_cast<std::size_t>(p)];
    }
    double w(long p) const { return std::exp(log_w(p)); }
    double log_C(long p) const {
        if (log_C_.empty()) {
            log_C_ = {0.0, -std::log(par_.lambda)};
            csum_ = 1.0;
            cterm_ = 1.0;
        }
        for (long q = static_cast<long>(log_C_.size()); q <= p; ++q) {
            cterm_ *= par_.h * (2.0 * (2 * (q - 1) - 1)) / (q - 1.0);  // binom(2m,m)h^m, m=q-1
            csum_ += cterm_;
            log_C_.push_back(-std::log(par_.lambda) + (q - 1) * std::log(8.0 + 1.0 / par_.h) +
                             std::log(csum_));
        }
        return log_C_[static_cast<std::size_t>(p)];
    }
    double C(long p) const { return std::exp(log_C(p)); }

  private:
    LambdaParams par_;
    mutable std::vector<double> log_w_;
    mutable std::vector<double> log_C_;
    mutable double csum_ = 0.0;
    mutable double cterm_ = 0.0;
};

// ---- half-plane peeling law -------------------------------------------------
// P(Case I) = beta*lambda, P(Case II_i) = P(Case III_i) = beta^{-i} w(i+1),
// with beta = 8+1/h for the hyperbolic family and 32h+4 for the subcritical
// one. Case II swallows i edges to the left, Case III to the right.

inline double halfplane_case1_mass(double beta, const LambdaParams& par) {
    return beta * par.lambda;
}
inline double halfplane_swallow_mass(long i, double beta, const WeightTable& wt) {
    return std::exp(-static_cast<double>(i) * std::log(beta) + wt.log_w(i + 1));
}

struct SeriesCheck {
    double defect = 0.0;      // |1 - beta*lambda - 2 * truncated sum|
    double tail_bound = 0.0;  // certified bound on twice the dropped mass
    long terms = 0;
    bool pass(double tol) const { return defect <= tol + tail_bound; }
};

// Certified tail: for p >= 2 the ratio w(p+1)/w(p) is at most
// beta_sub (1 - 3/(2p)), so beyond N the terms t_i = beta^{-i} w(i+1) decay at
// least like (beta_sub/beta)^j (N/i)^{3/2}; both the geometric and the power
// consequence are used, whichever is finite/smaller.
inline double swallow_tail_bound(long N, double beta, const WeightTable& wt) {
    double tN = halfplane_swallow_mass(N, beta, wt);
    double bound = 2.0 * static_cast<double>(N) * tN;  // power route
    double q = wt.params().beta_sub / beta;
    if (q < 1.0) bound = std::min(bound, tN * q / (1.0 - q));  // geometric route
    return bound;
}

// Checks beta*lambda + 2 sum_{i<=N} beta^{-i} w(i+1) = 1 with the tail bound.
inline SeriesCheck halfplane_normalization(double beta, const WeightTable& wt, double target_tail,
                                           long n_max = 400000) {
    SeriesCheck out;
    double sum = 0.0;
    long N = 8;
    for (;;) {
        out.tail_bound = 2.0 * swallow_tail_bound(N, beta, wt);
        if (out.tail_bound <= target_tail || N >= n_max) break;
        N *= 2;
        if (N > n_max) N = n_max;
    }
    for (long i = 0; i <= N; ++i) sum += halfplane_swallow_mass(i, beta, wt);
    out.terms = N;
    out.defect = std::fabs(1.0 - halfplane_case1_mass(beta, wt.params()) - 2.0 * sum);
    return out;
}

struct HarmonicityResidual {
    double residual = 0.0;
    double tail_bound = 0.0;
    double upper() const { return residual + tail_bound; }
};

// One-step harmonicity of a_{p,v} = beta^p lambda^v under the peeling move:
//   a_{p,v} = a_{p+1,v+1} + 2 sum_{m,k>=0} a_{p-k,v+m} tau_{k+1}(k+m-1,0).
// The inner m-sums are the w-series, so the residual factorizes through the
// normalization defect; the tail bound is the one of the w-series.
inline HarmonicityResidual harmonicity_residual(double beta, const LambdaParams& par, long p,
                                                long v, long truncation) {
    WeightTable wt(par);
    double scale = std::pow(beta, static_cast<double>(p)) * std::pow(par.lambda, static_cast<double>(v));
    double sum = 0.0;
    for (long i = 0; i <= truncation; ++i) sum += halfplane_swallow_mass(i, beta, wt);
    HarmonicityResidual out;
    out.residual = scale * std::fabs(1.0 - halfplane_case1_mass(beta, par) - 2.0 * sum);
    out.tail_bound = scale * 2.0 * swallow_tail_bound(truncation, beta, wt);
    return out;
}

// Same residual through Eq. for W: a-route equals
//   beta^p lambda^v |1 - beta*lambda - 2*beta*W(1/beta)|, exact up to rounding.
inline double harmonicity_residual_closed(double beta, const LambdaParams& par, long p, long v) {
    double scale = std::pow(beta, static_cast<double>(p)) * std::pow(par.lambda, static_cast<double>(v));
    double val = beta * par.lambda + 2.0 * beta * W_lambda(1.0 / beta, par);
    return scale * std::fabs(1.0 - val);
}

// ---- free Boltzmann triangulation peeling law -------------------------------
// Peeling an edge of an l-gon hole filled by a Boltzmann triangulation:
//   close (l=2 only, the degenerate 2-gon fill):  1 / w(2)
//   new internal apex:                            lambda w(l+1) / w(l)
//   apex on the hole, split into (j, l+1-j):      w(j) w(l+1-j) / w(l), 1<=j<=l.

struct FbtStep {
    enum Kind { Close, NewVertex, Split } kind = NewVertex;
    long j = 0;  // split position: head-side arc gets perimeter j
};

inline double fbt_law_defect(long l, const WeightTable& wt) {
    double total = (l == 2) ? std::exp(-wt.log_w(2)) : 0.0;
    total += wt.params().lambda * std::exp(wt.log_w(l + 1) - wt.log_w(l));
    for (long j = 1; j <= l; ++j)
        total += std::exp(wt.log_w(j) + wt.log_w(l + 1 - j) - wt.log_w(l));
    return std::fabs(1.0 - total);
}

inline FbtStep sample_fbt_step(long l, const WeightTable& wt, Rng& rng) {
    double u = rng.next_double();
    if (l == 2) {
        u -= std::exp(-wt.log_w(2));
        if (u < 0.0) return FbtStep{FbtStep::Close, 0};
    }
    u -= wt.params().lambda * std::exp(wt.log_w(l + 1) - wt.log_w(l));
    if (u < 0.0) return FbtStep{FbtStep::NewVertex, 0};
    for (long j = 1; j <= l; ++j) {
        u -= std::exp(wt.log_w(j) + wt.log_w(l + 1 - j) - wt.log_w(l));
        if (u < 0.0) return FbtStep{FbtStep::Split, j};
    }
    return FbtStep{FbtStep::Split, l};  // numerical slack lands on the last atom
}

// ---- PSHT peeling law --------------------------------------------------------
// Exploring T_lambda^{(P)} with hole perimeter P:
//   new apex:                    lambda C_{P+1} / C_P
//   swallow k on one side (the finite part being Boltzmann of the (k+1)-gon):
//                                w(k+1) C_{P-k} / C_P, k = 0..P-1, each side.

struct PshtStep {
    enum Kind { NewVertex, SwallowLeft, SwallowRight } kind = NewVertex;
    long k = 0;
};

inline double psht_law_defect(long P, const WeightTable& wt) {
    double total = wt.params().lambda * std::exp(wt.log_C(P + 1) - wt.log_C(P));
    for (long k = 0; k <= P - 1; ++k)
        total += 2.0 * std::exp(wt.log_w(k + 1) + wt.log_C(P - k) - wt.log_C(P));
    return std::fabs(1.0 - total);
}

inline PshtStep sample_psht_step(long P, const WeightTable& wt, Rng& rng) {
    double u = rng.next_double();
    u -= wt.params().lambda * std::exp(wt.log_C(P + 1) - wt.log_C(P));
    if (u < 0.0) return PshtStep{PshtStep::NewVertex, 0};
    for (long k = 0; k <= P - 1; ++k) {
        double m = std::exp(wt.log_w(k + 1) + wt.log_C(P - k) - wt.log_C(P));
        u -= m;
        if (u < 0.0) return PshtStep{PshtStep::SwallowLeft, k};
        u -= m;
        if (u < 0.0) return PshtStep{PshtStep::SwallowRight, k};
    }
    return PshtStep{PshtStep::SwallowRight, P - 1};
}

// Samples the half-plane step case: returns i >= 0 with side, or Case I.
struct HalfplaneStepCase {
    enum Kind { CaseI, SwallowLeft, SwallowRight } kind = CaseI;
    long i = 0;
};

inline HalfplaneStepCase sample_halfplane_case(double beta, const WeightTable& wt, Rng& rng) {
    double u = rng.next_double();
    u -= halfplane_case1_mass(beta, wt.params());
    if (u < 0.0) return HalfplaneStepCase{HalfplaneStepCase::CaseI, 0};
    for (long i = 0;; ++i) {
        double m = halfplane_swallow_mass(i, beta, wt);
        u -= m;
        if (u < 0.0) return HalfplaneStepCase{HalfplaneStepCase::SwallowLeft, i};
        u -= m;
        if (u < 0.0) return HalfplaneStepCase{HalfplaneStepCase::SwallowRight, i};
        if (i > 2000000) throw convergence_error("half-plane case sampling did not terminate");
    }
}

}  // namespace peelmap
