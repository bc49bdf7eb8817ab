#pragma once

#include <functional>
#include <vector>

namespace fraclab::quad {

struct Rule {
    std::vector<double> nodes;
    std::vector<double> weights;

    double apply(const std::function<double(double)>& f) const {
        double s = 0.0;
        for (std::size_t i = 0; i < nodes.size(); ++i) s += weights[i] * f(nodes[i]);
        return s;
    }
};

/// n-point Gauss-Legendre rule on [-1,1]. Cached per n.
const Rule& gauss_legendre(int n);

/// Gauss-Legendre mapped to [a,b].
Rule gauss_legendre_on(int n, double a, double b);

/// n-point Gauss-Jacobi rule for the weight (1-x)^alpha (1+x)^beta on [-1,1]
/// (alpha, beta > -1). The weight is absorbed into the returned weights.
Rule gauss_jacobi(int n, double alpha, double beta);

/// Interpolatory rule on [a,b] for the weight t^p (p > -1, 0 <= a < b):
/// integrates t^p * q(t) exactly for polynomials q up to degree n-1.
/// Built from exact power moments on scaled Chebyshev nodes.
Rule power_weight_rule(int n, double p, double a, double b);

/// Composite Gauss rule on [a,b], geometrically graded toward one or both
/// endpoints. Handles integrable endpoint singularities f ~ (x-a)^q, q > -1:
/// the truncated slice [a, a + (b-a) 2^-levels] is never sampled at the
/// endpoint itself.
Rule graded_rule(double a, double b, int levels, int points_per_slice,
                 bool grade_left, bool grade_right);

/// Adaptive Gauss quadrature of a smooth integrand (10 vs two 10-point
/// halves, recursive bisection). Deterministic.
double adaptive(const std::function<double(double)>& f, double a, double b,
                double rel_tol = 1e-12, int max_depth = 48);

/// Graded composite Gauss toward the flagged endpoints with geometric tail
/// extrapolation: per-slice contributions near a power-law endpoint decay
/// geometrically, and the truncated tail is summed from the observed ratio.
/// Near machine precision for f ~ (x-a)^q * analytic, q > -1.
double graded_integral(const std::function<double(double)>& f, double a, double b,
                       bool grade_left, bool grade_right, int levels = 52,
                       int points_per_slice = 16);

/// integral over (0,pi) of (sin tau)^w * f(tau) with f bounded or having
/// integrable endpoint behavior; graded composite Gauss at both ends.
double angular_integral(const std::function<double(double)>& f, double w,
                        int levels = 60, int points = 16);

}  // namespace fraclab::quad
