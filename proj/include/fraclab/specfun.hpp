#pragma once

#include "fraclab/numerics.hpp"

namespace fraclab::specfun {

/// Gamma function, Lanczos approximation with reflection for x < 0.5.
double gamma(double x);

/// kappa_s = Gamma(1-s) / (2^{2s-1} Gamma(s)), s in (0,1).
double kappa(double s);

/// Critical trace exponent 2N/(N-2s); requires N > 2s.
double two_star(int N, double s);

/// Terminating Gauss series 2F1(-j, j+1; 1-s; x) (degree-j polynomial).
double hyp2f1_poly(int j, double s, double x);

/// d/dx of the terminating series above.
double hyp2f1_poly_deriv(int j, double s, double x);

/// mu_k = (k+s)(k+N-s).
double eigenvalue_formula(int k, int N, double s);

/// Homogeneity for a given eigenvalue: the positive root of
/// sigma(sigma + N - 2s) = mu.
double sigma_of_mu(double mu, int N, double s);

/// Homogeneous solution of the flat mixed problem (order j):
///   Psi(z) = |z|^{j+s} psi(tau),  psi(tau) = C sin(tau/2)^{2s} 2F1(...),
/// with tau in [0, pi] the meridian angle from the Dirichlet side and the
/// normalization fixed so the weighted angular norm is one.
class HomogeneousProfile {
public:
    HomogeneousProfile(int j, double s, int N = 1);

    int order() const { return j_; }
    double s() const { return s_; }
    int dim_boundary() const { return N_; }
    double homogeneity() const { return sigma_; }
    double normalization() const { return norm_const_; }

    /// Angular part (normalized), tau in [0, pi].
    double psi(double tau) const;
    double psi_deriv(double tau) const;

    /// Full-space evaluation in the meridian half-plane (y = |z| cos tau,
    /// t = |z| sin tau >= 0).
    double value(const Vec2& z) const;
    Vec2 gradient(const Vec2& z) const;

private:
    double psi_raw(double tau) const;
    double psi_raw_deriv(double tau) const;

    int j_;
    double s_;
    int N_;
    double sigma_;
    double norm_const_;  // psi = psi_raw / norm_const
};

}  // namespace fraclab::specfun
