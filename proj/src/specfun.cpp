#include "fraclab/specfun.hpp"

#include <cmath>
#include <stdexcept>

#include "fraclab/quadrature.hpp"

namespace fraclab::specfun {

namespace {

// Lanczos g=7, n=9 coefficients.
const double kLanczos[9] = {0.99999999999980993,  676.5203681218851,   -1259.1392167224028,
                            771.32342877765313,   -176.61502916214059, 12.507343278686905,
                            -0.13857109526572012, 9.9843695780195716e-6,
                            1.5056327351493116e-7};

double gamma_pos(double x) {
    // valid for x >= 0.5
    const double z = x - 1.0;
    double a = kLanczos[0];
    for (int i = 1; i < 9; ++i) a += kLanczos[i] / (z + i);
    const double t = z + 7.5;
    return std::sqrt(2.0 * M_PI) * std::pow(t, z + 0.5) * std::exp(-t) * a;
}

}  // namespace

double gamma(double x) {
    if (x >= 0.5) return gamma_pos(x);
    // reflection: Gamma(x) Gamma(1-x) = pi / sin(pi x)
    return M_PI / (std::sin(M_PI * x) * gamma_pos(1.0 - x));
}

double kappa(double s) {
    if (!(s > 0.0 && s < 1.0)) throw std::invalid_argument("kappa: s must lie in (0,1)");
    return gamma(1.0 - s) / (std::pow(2.0, 2.0 * s - 1.0) * gamma(s));
}

double two_star(int N, double s) {
    if (!(N > 2.0 * s)) throw std::invalid_argument("two_star: requires N > 2s");
    return 2.0 * N / (N - 2.0 * s);
}

double hyp2f1_poly(int j, double s, double x) {
    if (j < 0) throw std::invalid_argument("hyp2f1_poly: j must be a natural number");
    // term_{k+1}/term_k = (-j+k)(j+1+k) / ((1-s+k)(k+1)) * x
    double term = 1.0, sum = 1.0;
    for (int k = 0; k < j; ++k) {
        term *= double(-j + k) * double(j + 1 + k) / ((1.0 - s + k) * (k + 1.0)) * x;
        sum += term;
    }
    return sum;
}

double hyp2f1_poly_deriv(int j, double s, double x) {
    if (j == 0) return 0.0;
    // d/dx 2F1(a,b;c;x) = (ab/c) 2F1(a+1,b+1;c+1;x); with a=-j this
    // terminates at degree j-1.
    const double a = -double(j), b = double(j) + 1.0, c = 1.0 - s;
    double term = 1.0, sum = 1.0;
    for (int k = 0; k < j - 1; ++k) {
        term *= (a + 1.0 + k) * (b + 1.0 + k) / ((c + 1.0 + k) * (k + 1.0)) * x;
        sum += term;
    }
    return (a * b / c) * sum;
}

double eigenvalue_formula(int k, int N, double s) {
    if (k < 0 || N < 1) throw std::invalid_argument("eigenvalue_formula: k >= 0, N >= 1");
    return (k + s) * (k + N - s);
}

double sigma_of_mu(double mu, int N, double s) {
    const double c = N - 2.0 * s;
    return 0.5 * (-c + std::sqrt(c * c + 4.0 * mu));
}

HomogeneousProfile::HomogeneousProfile(int j, double s, int N) : j_(j), s_(s), N_(N) {
    if (!(s > 0.0 && s < 1.0)) throw std::invalid_argument("HomogeneousProfile: s in (0,1)");
    if (j < 0 || N < 1) throw std::invalid_argument("HomogeneousProfile: j >= 0, N >= 1");
    sigma_ = j + s;
    // Meridian weighted norm: int_0^pi (sin tau)^{1-2s} psi_raw^2 dtau.
    const double meridian = quad::angular_integral(
        [&](double tau) {
            const double p = psi_raw(tau);
            return p * p;
        },
        1.0 - 2.0 * s);
    if (!(meridian > 0.0) || !std::isfinite(meridian))
        throw std::runtime_error("HomogeneousProfile: normalization quadrature failed");
    if (N_ == 1) {
        norm_const_ = std::sqrt(meridian);
    } else {
        // Cylindrically symmetric S^N_+ norm factorizes into a Beta-type
        // integral over the axis angle times the meridian integral:
        //   |S^{N-2}| * (1/2) B(sigma + (3-2s)/2, (N-1)/2) * meridian.
        const double surf =
            (N_ == 2) ? 2.0 : 2.0 * std::pow(M_PI, 0.5 * (N_ - 1)) / gamma(0.5 * (N_ - 1));
        const double beta_int = 0.5 * gamma(sigma_ + 1.5 - s_) * gamma(0.5 * (N_ - 1)) /
                                gamma(sigma_ + 1.5 - s_ + 0.5 * (N_ - 1));
        norm_const_ = std::sqrt(surf * beta_int * meridian);
    }
}

double HomogeneousProfile::psi_raw(double tau) const {
    if (tau <= 0.0) return 0.0;
    const double x = 0.5 * (1.0 + std::cos(tau));
    // sin(tau/2)^{2s} in log space to keep small-angle accuracy
    const double f = std::exp(2.0 * s_ * std::log(std::sin(0.5 * tau)));
    return f * hyp2f1_poly(j_, s_, x);
}

double HomogeneousProfile::psi_raw_deriv(double tau) const {
    // d/dtau [ sin(tau/2)^{2s} F((1+cos tau)/2) ]
    const double x = 0.5 * (1.0 + std::cos(tau));
    const double st = std::sin(0.5 * tau), ct = std::cos(0.5 * tau);
    const double F = hyp2f1_poly(j_, s_, x);
    const double dF = hyp2f1_poly_deriv(j_, s_, x);
    // d x / d tau = -sin(tau)/2
    const double pow_part = (tau > 0.0) ? std::exp(2.0 * s_ * std::log(st)) : 0.0;
    const double dpow = (tau > 0.0) ? s_ * ct * std::exp((2.0 * s_ - 1.0) * std::log(st)) : 0.0;
    return dpow * F + pow_part * dF * (-0.5 * std::sin(tau));
}

double HomogeneousProfile::psi(double tau) const { return psi_raw(tau) / norm_const_; }

double HomogeneousProfile::psi_deriv(double tau) const { return psi_raw_deriv(tau) / norm_const_; }

double HomogeneousProfile::value(const Vec2& z) const {
    const double r = z.norm();
    if (r == 0.0) return 0.0;
    const double tau = std::atan2(z.t, z.y);
    return std::pow(r, sigma_) * psi(tau);
}

Vec2 HomogeneousProfile::gradient(const Vec2& z) const {
    const double r = z.norm();
    if (r == 0.0) return {0.0, 0.0};
    const double tau = std::atan2(z.t, z.y);
    const double dr = sigma_ * std::pow(r, sigma_ - 1.0) * psi(tau);
    const double dtau = std::pow(r, sigma_ - 1.0) * psi_deriv(tau);
    const double c = std::cos(tau), s = std::sin(tau);
    return {dr * c - dtau * s, dr * s + dtau * c};
}

}  // namespace fraclab::specfun
