#include <mpfr.h>

#include <cmath>

#include "doctest.h"
#include "fraclab/quadrature.hpp"
#include "fraclab/specfun.hpp"

using namespace fraclab;

namespace {

// arbitrary-precision oracle for kappa_s
double kappa_oracle(double s) {
    mpfr_t g1, g2, p, r;
    mpfr_inits2(256, g1, g2, p, r, (mpfr_ptr)nullptr);
    mpfr_set_d(r, 1.0 - s, MPFR_RNDN);
    mpfr_gamma(g1, r, MPFR_RNDN);
    mpfr_set_d(r, s, MPFR_RNDN);
    mpfr_gamma(g2, r, MPFR_RNDN);
    mpfr_set_d(p, 2.0, MPFR_RNDN);
    mpfr_set_d(r, 2.0 * s - 1.0, MPFR_RNDN);
    mpfr_pow(p, p, r, MPFR_RNDN);
    mpfr_mul(g2, g2, p, MPFR_RNDN);
    mpfr_div(g1, g1, g2, MPFR_RNDN);
    const double out = mpfr_get_d(g1, MPFR_RNDN);
    mpfr_clears(g1, g2, p, r, (mpfr_ptr)nullptr);
    return out;
}

// finite-sum oracle for the terminating hypergeometric series
double hyp_oracle(int j, double s, double x) {
    double sum = 0.0;
    for (int k = 0; k <= j; ++k) {
        double num = 1.0, den = 1.0;
        for (int i = 0; i < k; ++i) {
            num *= (-j + i) * (j + 1 + i);
            den *= (1.0 - s + i) * (i + 1);
        }
        sum += num / den * std::pow(x, k);
    }
    return sum;
}

}  // namespace

TEST_CASE("kappa at s=1/2 is exactly one") {
    CHECK(specfun::kappa(0.5) == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("kappa agrees with the arbitrary-precision oracle") {
    for (double s : {0.25, 0.75, 0.05, 0.95, 0.4}) {
        CHECK(specfun::kappa(s) == doctest::Approx(kappa_oracle(s)).epsilon(1e-12));
        CHECK(specfun::kappa(s) > 0.0);
    }
    CHECK_THROWS_AS(specfun::kappa(1.2), std::invalid_argument);
    CHECK_THROWS_AS(specfun::kappa(0.0), std::invalid_argument);
}

TEST_CASE("terminating 2F1: trivial cases and finite-sum oracle") {
    CHECK(specfun::hyp2f1_poly(0, 0.37, 0.8) == 1.0);
    CHECK(specfun::hyp2f1_poly(5, 0.37, 0.0) == 1.0);
    // j=1: 1 - 2x/(1-s); at s=0.5, x=0.5 -> -1
    CHECK(specfun::hyp2f1_poly(1, 0.5, 0.5) == doctest::Approx(-1.0).epsilon(1e-14));
    for (int j : {1, 2, 3, 5}) {
        for (double x : {0.0, 0.2, 0.5, 1.0}) {
            CHECK(specfun::hyp2f1_poly(j, 0.3, x) ==
                  doctest::Approx(hyp_oracle(j, 0.3, x)).epsilon(1e-12).scale(1.0));
        }
    }
}

TEST_CASE("terminating 2F1 has degree exactly j") {
    // leading coefficient in x: prod (-j+k)(j+1+k)/((1-s+k)(k+1)) != 0
    for (int j : {1, 2, 4}) {
        const double s = 0.44;
        // second difference of order j+1 annihilates degree-j polynomials;
        // order j does not.
        auto f = [&](double x) { return specfun::hyp2f1_poly(j, s, x); };
        const double h = 0.5;
        // forward difference of order j at 0 ~ j! * lead * h^j
        double dj = 0.0;
        for (int i = 0; i <= j; ++i) {
            double binom = 1.0;
            for (int b = 0; b < i; ++b) binom *= double(j - b) / double(b + 1);
            dj += ((j - i) % 2 == 0 ? 1.0 : -1.0) * binom * f(i * h);
        }
        CHECK(std::abs(dj) > 1e-8);
    }
}

TEST_CASE("2F1 derivative matches finite differences") {
    const double h = 1e-6;
    for (int j : {1, 2, 4}) {
        for (double x : {0.1, 0.6}) {
            const double fd =
                (specfun::hyp2f1_poly(j, 0.3, x + h) - specfun::hyp2f1_poly(j, 0.3, x - h)) /
                (2 * h);
            CHECK(specfun::hyp2f1_poly_deriv(j, 0.3, x) == doctest::Approx(fd).epsilon(1e-7));
        }
    }
}

TEST_CASE("eigenvalue law and its inverse homogeneity map") {
    CHECK(specfun::eigenvalue_formula(0, 2, 0.5) == doctest::Approx(0.75));
    CHECK(specfun::eigenvalue_formula(1, 2, 0.5) == doctest::Approx(3.75));
    CHECK(specfun::eigenvalue_formula(0, 1, 0.5) == doctest::Approx(0.25));
    CHECK(specfun::sigma_of_mu(0.25, 1, 0.5) == doctest::Approx(0.5).epsilon(1e-14));
    // algebraic identity sigma(mu_k) = k+s to 1e-12
    for (int k = 0; k <= 5; ++k)
        for (int N : {1, 2, 3})
            for (double s : {0.25, 0.5, 0.75}) {
                const double mu = specfun::eigenvalue_formula(k, N, s);
                CHECK(specfun::sigma_of_mu(mu, N, s) ==
                      doctest::Approx(k + s).epsilon(1e-12));
            }
}

TEST_CASE("homogeneous profile: endpoints, normalization, homogeneity") {
    for (int j : {0, 1, 2}) {
        for (double s : {0.3, 0.5, 0.7}) {
            specfun::HomogeneousProfile prof(j, s);
            CHECK(prof.psi(0.0) == 0.0);
            CHECK(std::abs(prof.psi(M_PI)) > 1e-6);
            CHECK(prof.homogeneity() == doctest::Approx(j + s));
            const double nrm = quad::angular_integral(
                [&](double tau) { return prof.psi(tau) * prof.psi(tau); }, 1.0 - 2.0 * s);
            CHECK(nrm == doctest::Approx(1.0).epsilon(1e-11));
        }
    }
}

TEST_CASE("profile at s=1/2 reduces to the separation-of-variables solution") {
    // psi_j ~ +-sin((j+1/2) tau) normalized in L^2(0,pi) (weight is 1)
    for (int j : {0, 1, 2, 3}) {
        specfun::HomogeneousProfile prof(j, 0.5);
        const double scale = std::sqrt(2.0 / M_PI);  // ||sin((j+1/2)tau)||_{L2(0,pi)}^-1
        // align sign at tau = pi
        const double sgn = (prof.psi(M_PI) * std::sin((j + 0.5) * M_PI) > 0) ? 1.0 : -1.0;
        for (double tau = 0.05; tau < M_PI; tau += 0.13) {
            const double expect = sgn * scale * std::sin((j + 0.5) * tau);
            CHECK(prof.psi(tau) == doctest::Approx(expect).epsilon(1e-10).scale(1.0));
        }
    }
}

TEST_CASE("profile gradient is consistent with finite differences") {
    specfun::HomogeneousProfile prof(1, 0.3);
    const double h = 1e-6;
    for (Vec2 z : {Vec2{0.3, 0.4}, Vec2{-0.5, 0.2}, Vec2{0.1, 0.7}}) {
        const Vec2 g = prof.gradient(z);
        const double fy =
            (prof.value({z.y + h, z.t}) - prof.value({z.y - h, z.t})) / (2 * h);
        const double ft =
            (prof.value({z.y, z.t + h}) - prof.value({z.y, z.t - h})) / (2 * h);
        CHECK(g.y == doctest::Approx(fy).epsilon(1e-6));
        CHECK(g.t == doctest::Approx(ft).epsilon(1e-6));
    }
}

TEST_CASE("meridian Rayleigh quotient reproduces the eigenvalue law (N=1)") {
    for (int j : {0, 1, 2}) {
        for (double s : {0.3, 0.5, 0.7}) {
            specfun::HomogeneousProfile prof(j, s);
            const double num = quad::angular_integral(
                [&](double tau) {
                    const double d = prof.psi_deriv(tau);
                    return d * d;
                },
                1.0 - 2.0 * s, 80, 16);
            const double mu = specfun::eigenvalue_formula(j, 1, s);
            CHECK(num == doctest::Approx(mu).epsilon(1e-8));
        }
    }
}

TEST_CASE("full-sphere Rayleigh quotient reproduces the law for N=2") {
    // cylindrically symmetric lift Y = sin(u)^sigma psi(tau) on S^2_+,
    // metric du^2 + cos^2(u) dom^2 + sin^2(u) dtau^2
    for (int j : {0, 1}) {
        const double s = 0.4;
        const int N = 2;
        specfun::HomogeneousProfile prof(j, s, N);
        const double sigma = prof.homogeneity();
        auto usin = [&](double u) { return std::pow(std::sin(u), sigma); };
        auto dusin = [&](double u) {
            return sigma * std::pow(std::sin(u), sigma - 1.0) * std::cos(u);
        };
        // numerator: |grad Y|^2 = (dY/du)^2 + sin^-2(u) (dY/dtau)^2
        double num = 0.0, den = 0.0;
        auto ur = quad::graded_rule(0.0, M_PI / 2, 60, 14, true, true);
        for (std::size_t i = 0; i < ur.nodes.size(); ++i) {
            const double u = ur.nodes[i], wu = ur.weights[i];
            const double jac = std::sin(u) * std::pow(std::cos(u), double(N - 2));
            const double tnum = quad::angular_integral(
                [&](double tau) {
                    const double a = dusin(u) * prof.psi(tau);
                    const double b = usin(u) * prof.psi_deriv(tau) / std::sin(u);
                    return a * a + b * b;
                },
                1.0 - 2.0 * s, 50, 12);
            const double tden = quad::angular_integral(
                [&](double tau) {
                    const double v = usin(u) * prof.psi(tau);
                    return v * v;
                },
                1.0 - 2.0 * s, 50, 12);
            const double wgt = std::pow(std::sin(u), 1.0 - 2.0 * s);  // theta_{N+1}^{1-2s}
            num += wu * jac * wgt * tnum;
            den += wu * jac * wgt * tden;
        }
        const double mu = specfun::eigenvalue_formula(j, N, s);
        CHECK(num / den == doctest::Approx(mu).epsilon(1e-6));
    }
}
