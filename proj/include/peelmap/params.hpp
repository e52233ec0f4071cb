#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

namespace peelmap {

inline constexpr double kLambdaCritical = 0.048112522432468816;  // 1/(12*sqrt(3))

struct convergence_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct parameter_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// lambda = h/(1+8h)^{3/2}, strictly increasing on h in (0, 1/4].
inline double lambda_from_h(double h) { return h / std::pow(1.0 + 8.0 * h, 1.5); }

inline double h_of_lambda(double lambda, double tol = 1e-14) {
    if (!(lambda > 0.0) || lambda > kLambdaCritical * (1.0 + 1e-9))
        throw parameter_error("lambda must lie in (0, lambda_c], got " + std::to_string(lambda));
    if (lambda >= kLambdaCritical) return 0.25;
    double lo = 0.0, hi = 0.25;
    for (int it = 0; it < 200 && hi - lo > tol * 0.25; ++it) {
        double mid = 0.5 * (lo + hi);
        (lambda_from_h(mid) < lambda ? lo : hi) = mid;
    }
    if (hi - lo > 1e-10) throw convergence_error("h_of_lambda bisection did not converge");
    return 0.5 * (lo + hi);
}

// d(lambda) = E[1/deg of the root] in the lambda-PSHT:
//   d = 2h * atanh(x)/x / (1+8h), x = sqrt(1-4h); d(lambda_c) = 1/6.
inline double d_from_h(double h) {
    double x2 = 1.0 - 4.0 * h;
    double ratio;  // atanh(x)/x
    if (x2 < 1e-12) {
        ratio = 1.0 + x2 / 3.0 + x2 * x2 / 5.0;
    } else {
        double x = std::sqrt(x2);
        ratio = std::atanh(x) / x;
    }
    return 2.0 * h * ratio / (1.0 + 8.0 * h);
}

inline double d_of_lambda(double lambda) { return d_from_h(h_of_lambda(lambda)); }

// Inverts d(lambda(theta)) = (1-2*theta)/6 for theta in [0, 1/2).
inline double lambda_of_theta(double theta, double tol = 1e-13) {
    if (theta < 0.0 || theta >= 0.5)
        throw parameter_error("theta must lie in [0, 1/2), got " + std::to_string(theta));
    if (theta == 0.0) return kLambdaCritical;
    double target = (1.0 - 2.0 * theta) / 6.0;
    double lo = 1e-300, hi = 0.25;
    for (int it = 0; it < 200 && hi - lo > tol * 0.25; ++it) {
        double mid = 0.5 * (lo + hi);
        (d_from_h(mid) < target ? lo : hi) = mid;
    }
    double h = 0.5 * (lo + hi);
    if (std::fabs(d_from_h(h) - target) > 1e-10)
        throw convergence_error("lambda_of_theta bisection did not converge");
    return lambda_from_h(h);
}

struct LambdaParams {
    double lambda = kLambdaCritical;
    double h = 0.25;
    double beta_hyp = 12.0;  // 8 + 1/h, the hyperbolic half-plane weight
    double beta_sub = 12.0;  // 32h + 4, the subcritical one; equal at lambda_c

    static LambdaParams from_lambda(double lambda) {
        LambdaParams p;
        p.lambda = lambda;
        p.h = h_of_lambda(lambda);
        p.beta_hyp = 8.0 + 1.0 / p.h;
        p.beta_sub = 32.0 * p.h + 4.0;
        return p;
    }
    static LambdaParams from_h(double h) {
        if (!(h > 0.0) || h > 0.25) throw parameter_error("h must lie in (0, 1/4]");
        LambdaParams p;
        p.h = h;
        p.lambda = lambda_from_h(h);
        p.beta_hyp = 8.0 + 1.0 / h;
        p.beta_sub = 32.0 * h + 4.0;
        return p;
    }
    static LambdaParams from_theta(double theta) { return from_lambda(lambda_of_theta(theta)); }
    static LambdaParams critical() { return from_h(0.25); }

    double d() const { return d_from_h(h); }
};

}  // namespace peelmap
