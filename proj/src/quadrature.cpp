#include "fraclab/quadrature.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

namespace fraclab::quad {

namespace {

Rule make_gauss_legendre(int n) {
    // Newton iteration on P_n, nodes seeded by the Chebyshev approximation.
    Rule r;
    r.nodes.resize(n);
    r.weights.resize(n);
    for (int i = 0; i < n; ++i) {
        double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = x;
            if (n == 1) p1 = x;
            for (int k = 2; k <= n; ++k) {
                double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            double pn = (n == 1) ? x : p1;
            double pm = (n == 1) ? 1.0 : p0;
            pp = n * (x * pn - pm) / (x * x - 1.0);
            double dx = pn / pp;
            x -= dx;
            if (std::abs(dx) < 1e-16) break;
        }
        r.nodes[n - 1 - i] = x;
        r.weights[n - 1 - i] = 2.0 / ((1.0 - x * x) * pp * pp);
    }
    return r;
}

double log_beta(double a, double b) { return std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b); }

}  // namespace

const Rule& gauss_legendre(int n) {
    if (n < 1) throw std::invalid_argument("gauss_legendre: n >= 1 required");
    static std::map<int, Rule> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, make_gauss_legendre(n)).first;
    return it->second;
}

Rule gauss_legendre_on(int n, double a, double b) {
    const Rule& base = gauss_legendre(n);
    Rule r = base;
    const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    for (int i = 0; i < n; ++i) {
        r.nodes[i] = mid + half * base.nodes[i];
        r.weights[i] = half * base.weights[i];
    }
    return r;
}

Rule gauss_jacobi(int n, double alpha, double beta) {
    if (n < 1 || alpha <= -1.0 || beta <= -1.0)
        throw std::invalid_argument("gauss_jacobi: need n>=1, alpha,beta > -1");
    // Golub-Welsch on the monic Jacobi recurrence.
    Eigen::MatrixXd J = Eigen::MatrixXd::Zero(n, n);
    const double ab = alpha + beta;
    for (int k = 0; k < n; ++k) {
        double ak;
        if (k == 0)
            ak = (beta - alpha) / (ab + 2.0);
        else {
            const double den = (2.0 * k + ab) * (2.0 * k + ab + 2.0);
            ak = (beta * beta - alpha * alpha) / den;
        }
        J(k, k) = ak;
        if (k >= 1) {
            double bk;
            if (k == 1)
                bk = 4.0 * (1.0 + alpha) * (1.0 + beta) /
                     ((2.0 + ab) * (2.0 + ab) * (3.0 + ab));
            else {
                const double m = double(k);
                bk = 4.0 * m * (m + alpha) * (m + beta) * (m + ab) /
                     ((2.0 * m + ab) * (2.0 * m + ab) * (2.0 * m + ab + 1.0) *
                      (2.0 * m + ab - 1.0));
            }
            J(k, k - 1) = J(k - 1, k) = std::sqrt(bk);
        }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(J);
    if (es.info() != Eigen::Success) throw std::runtime_error("gauss_jacobi: eigensolve failed");
    const double mu0 = std::exp((ab + 1.0) * std::log(2.0) + log_beta(alpha + 1.0, beta + 1.0));
    Rule r;
    r.nodes.resize(n);
    r.weights.resize(n);
    for (int i = 0; i < n; ++i) {
        r.nodes[i] = es.eigenvalues()(i);
        const double v0 = es.eigenvectors()(0, i);
        r.weights[i] = mu0 * v0 * v0;
    }
    return r;
}

Rule power_weight_rule(int n, double p, double a, double b) {
    if (!(b > a) || a < 0.0 || p <= -1.0)
        throw std::invalid_argument("power_weight_rule: need 0 <= a < b, p > -1");
    if (a == 0.0) {
        // t = (b/2)(1+x) maps Gauss-Jacobi weight (1+x)^p onto t^p on [0,b].
        Rule gj = gauss_jacobi(n, 0.0, p);
        Rule r;
        r.nodes.resize(n);
        r.weights.resize(n);
        const double h = 0.5 * b;
        const double scale = std::pow(h, p + 1.0);
        for (int i = 0; i < n; ++i) {
            r.nodes[i] = h * (1.0 + gj.nodes[i]);
            r.weights[i] = scale * gj.weights[i];
        }
        return r;
    }
    // Interpolatory rule on Chebyshev nodes matched to the exact moments
    // of t^p; long double guards the binomial cancellation.
    const int deg = n;
    std::vector<long double> tm(deg);  // integrals of t^{p+i}
    for (int i = 0; i < deg; ++i) {
        const long double e = p + i + 1.0L;
        tm[i] = (powl((long double)b, e) - powl((long double)a, e)) / e;
    }
    const long double c = 2.0L / (b - a), d = -(a + b) / (long double)(b - a);
    std::vector<long double> mu(deg, 0.0L);  // integrals of t^p u(t)^j
    std::vector<long double> binom(deg, 0.0L);
    for (int j = 0; j < deg; ++j) {
        binom[0] = 1.0L;
        for (int i = 1; i <= j; ++i)
            binom[i] = binom[i - 1] * (long double)(j - i + 1) / (long double)i;
        long double s = 0.0L;
        for (int i = 0; i <= j; ++i) s += binom[i] * powl(c, i) * powl(d, j - i) * tm[i];
        mu[j] = s;
    }
    Eigen::MatrixXd V(deg, deg);
    Eigen::VectorXd m(deg);
    std::vector<double> u(deg);
    for (int i = 0; i < deg; ++i) u[i] = std::cos(M_PI * (2.0 * i + 1.0) / (2.0 * deg));
    for (int j = 0; j < deg; ++j) {
        m(j) = double(mu[j]);
        for (int i = 0; i < deg; ++i) V(j, i) = std::pow(u[i], j);
    }
    Eigen::VectorXd w = V.fullPivLu().solve(m);
    Rule r;
    r.nodes.resize(deg);
    r.weights.resize(deg);
    for (int i = 0; i < deg; ++i) {
        r.nodes[i] = 0.5 * (a + b) + 0.5 * (b - a) * u[i];
        r.weights[i] = w(i);
    }
    return r;
}

Rule graded_rule(double a, double b, int levels, int points_per_slice,
                 bool grade_left, bool grade_right) {
    if (!(b > a)) throw std::invalid_argument("graded_rule: empty interval");
    Rule out;
    auto append_plain = [&](double lo, double hi) {
        if (!(hi > lo)) return;
        Rule g = gauss_legendre_on(points_per_slice, lo, hi);
        out.nodes.insert(out.nodes.end(), g.nodes.begin(), g.nodes.end());
        out.weights.insert(out.weights.end(), g.weights.begin(), g.weights.end());
    };
    auto append_graded_toward = [&](double endpoint, double other) {
        // slices [endpoint + w/2^{k+1}, endpoint + w/2^k] (signed), k = 0..levels-1
        const double w = other - endpoint;
        double hi = other;
        for (int k = 0; k < levels; ++k) {
            double lo = endpoint + (hi - endpoint) * 0.5;
            if (std::abs(hi - lo) < 4.0 * 1e-16 * (std::abs(endpoint) + std::abs(other))) break;
            append_plain(std::min(lo, hi), std::max(lo, hi));
            hi = lo;
        }
        (void)w;
    };
    const double mid = 0.5 * (a + b);
    if (grade_left && grade_right) {
        append_graded_toward(a, mid);
        append_graded_toward(b, mid);
    } else if (grade_left) {
        append_graded_toward(a, b);
    } else if (grade_right) {
        append_graded_toward(b, a);
    } else {
        append_plain(a, b);
    }
    return out;
}

namespace {
double adaptive_impl(const std::function<double(double)>& f, double a, double b, double whole,
                     double tol, int depth, int max_depth) {
    const double m = 0.5 * (a + b);
    const Rule gl = gauss_legendre_on(10, a, m);
    const Rule gr = gauss_legendre_on(10, m, b);
    const double left = gl.apply(f), right = gr.apply(f);
    const double sum = left + right;
    if (depth >= max_depth || std::abs(sum - whole) <= tol * std::max(1.0, std::abs(sum)))
        return sum;
    return adaptive_impl(f, a, m, left, tol * 0.7, depth + 1, max_depth) +
           adaptive_impl(f, m, b, right, tol * 0.7, depth + 1, max_depth);
}
}  // namespace

double adaptive(const std::function<double(double)>& f, double a, double b, double rel_tol,
                int max_depth) {
    if (a == b) return 0.0;
    const double whole = gauss_legendre_on(10, a, b).apply(f);
    return adaptive_impl(f, a, b, whole, rel_tol, 0, max_depth);
}

namespace {
// Sum of slices graded toward `endpoint`, closed by a geometric tail estimate.
// Subdivision stops near width ~ sqrt(eps): closer in, evaluating f suffers
// cancellation; beyond it the slice contributions of (x-a)^q * analytic form
// a geometric sequence whose ratio is Richardson-extrapolated.
double graded_half(const std::function<double(double)>& f, double endpoint, double other,
                   int levels, int pts) {
    const double span = std::abs(other - endpoint);
    const double w_stop = std::max(1.2e-8 * span, 4.0e-16 * (std::abs(endpoint) + std::abs(other)));
    double total = 0.0;
    double hi = other;
    double c2 = 0.0, c1 = 0.0, c0 = 0.0;  // last three slice contributions
    int counted = 0;
    for (int k = 0; k < levels; ++k) {
        const double lo = endpoint + (hi - endpoint) * 0.5;
        const double c = gauss_legendre_on(pts, std::min(lo, hi), std::max(lo, hi)).apply(f);
        total += c;
        c2 = c1;
        c1 = c0;
        c0 = c;
        ++counted;
        hi = lo;
        if (std::abs(hi - endpoint) < w_stop) break;
    }
    if (counted >= 3 && c1 != 0.0 && c2 != 0.0) {
        const double r0 = c0 / c1, r1 = c1 / c2;
        double rho = 2.0 * r0 - r1;  // rho_k -> rho_inf + O(w_k), w halves per slice
        if (!(rho > 0.0 && rho < 0.97)) rho = (r0 > 0.0 && r0 < 0.97) ? r0 : -1.0;
        if (rho > 0.0) total += c0 * rho / (1.0 - rho);
    }
    return total;
}
}  // namespace

double graded_integral(const std::function<double(double)>& f, double a, double b,
                       bool grade_left, bool grade_right, int levels, int points_per_slice) {
    if (!(b > a)) return 0.0;
    if (grade_left && grade_right) {
        const double mid = 0.5 * (a + b);
        return graded_half(f, a, mid, levels, points_per_slice) +
               graded_half(f, b, mid, levels, points_per_slice);
    }
    if (grade_left) return graded_half(f, a, b, levels, points_per_slice);
    if (grade_right) return graded_half(f, b, a, levels, points_per_slice);
    return gauss_legendre_on(points_per_slice, a, b).apply(f);
}

double angular_integral(const std::function<double(double)>& f, double w, int levels,
                        int points) {
    return graded_integral(
        [&](double tau) { return std::pow(std::sin(tau), w) * f(tau); }, 0.0, M_PI, true, true,
        levels, points);
}

}  // namespace fraclab::quad
