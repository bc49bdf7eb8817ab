#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace fraclab {

struct Vec2 {
    double y = 0.0;
    double t = 0.0;

    Vec2() = default;
    Vec2(double y_, double t_) : y(y_), t(t_) {}

    Vec2 operator+(const Vec2& o) const { return {y + o.y, t + o.t}; }
    Vec2 operator-(const Vec2& o) const { return {y - o.y, t - o.t}; }
    Vec2 operator*(double c) const { return {y * c, t * c}; }
    double dot(const Vec2& o) const { return y * o.y + t * o.t; }
    double norm() const { return std::hypot(y, t); }
};

inline Vec2 operator*(double c, const Vec2& v) { return v * c; }

/// Number of worker threads used by parallel loops. Set once from the CLI
/// (--workers); results are bit-identical for any value.
int worker_count();
void set_worker_count(int n);

/// Chunked parallel loop. Each index writes only its own outputs, so the
/// result does not depend on scheduling or on the number of workers.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

/// Deterministic sum: fixed-size blocks are summed serially, then block
/// partials are summed in order. Independent of worker count.
double blocked_sum(const std::vector<double>& v);

/// SplitMix64 hash; the basis of all seeded randomness. Counter-based, so
/// random suites are reproducible and order-independent.
inline std::uint64_t hash64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline std::uint64_t hash_combine(std::uint64_t seed, std::uint64_t k) {
    return hash64(seed ^ (0x9e3779b97f4a7c15ULL + k + (seed << 6) + (seed >> 2)));
}

/// Uniform double in [0,1) from a (seed, counter) pair.
inline double uniform01(std::uint64_t seed, std::uint64_t counter) {
    return double(hash_combine(seed, counter) >> 11) * 0x1.0p-53;
}

/// Standard normal via Box-Muller on two counter-derived uniforms.
inline double normal01(std::uint64_t seed, std::uint64_t counter) {
    double u1 = uniform01(seed, 2 * counter);
    double u2 = uniform01(seed, 2 * counter + 1);
    if (u1 <= 0.0) u1 = 0x1.0p-53;
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
}

/// Shortest-form decimal that round-trips; used for all CSV/report output.
std::string format_double(double x);

/// Least-squares slope of log(err) vs log(h); returns {slope, rms residual}.
/// Pairs with err <= floor are dropped. Throws if fewer than 2 usable points.
struct FitResult {
    double slope = 0.0;
    double intercept = 0.0;
    double residual = 0.0;
    int points_used = 0;
};
FitResult loglog_fit(const std::vector<double>& h, const std::vector<double>& err,
                     double floor_value = 1e-15);

}  // namespace fraclab
