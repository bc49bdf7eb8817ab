#include "fraclab/numerics.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <cstring>

namespace fraclab {

namespace {
int g_workers = 1;
}

int worker_count() { return g_workers; }

void set_worker_count(int n) {
    if (n < 1) throw std::invalid_argument("worker count must be >= 1");
    g_workers = n;
}

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body) {
    if (n == 0) return;
    int workers = std::min<std::size_t>(g_workers, n);
    if (workers <= 1) {
        for (std::size_t i = 0; i < n; ++i) body(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    const std::size_t chunk = std::max<std::size_t>(1, n / (std::size_t(workers) * 8));
    auto run = [&]() {
        for (;;) {
            std::size_t begin = next.fetch_add(chunk);
            if (begin >= n) break;
            std::size_t end = std::min(begin + chunk, n);
            for (std::size_t i = begin; i < end; ++i) body(i);
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(workers - 1);
    for (int w = 1; w < workers; ++w) pool.emplace_back(run);
    run();
    for (auto& th : pool) th.join();
}

double blocked_sum(const std::vector<double>& v) {
    constexpr std::size_t block = 4096;
    const std::size_t nblocks = (v.size() + block - 1) / block;
    std::vector<double> partial(nblocks, 0.0);
    parallel_for(nblocks, [&](std::size_t b) {
        double s = 0.0;
        const std::size_t end = std::min(v.size(), (b + 1) * block);
        for (std::size_t i = b * block; i < end; ++i) s += v[i];
        partial[b] = s;
    });
    double total = 0.0;
    for (double p : partial) total += p;
    return total;
}

std::string format_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    // trim to the shortest representation that round-trips
    for (int prec = 1; prec < 17; ++prec) {
        char trial[40];
        std::snprintf(trial, sizeof trial, "%.*g", prec, x);
        if (std::strtod(trial, nullptr) == x) return trial;
    }
    return buf;
}

FitResult loglog_fit(const std::vector<double>& h, const std::vector<double>& err,
                     double floor_value) {
    if (h.size() != err.size()) throw std::invalid_argument("loglog_fit: size mismatch");
    std::vector<double> x, y;
    for (std::size_t i = 0; i < h.size(); ++i) {
        if (err[i] > floor_value && h[i] > 0.0) {
            x.push_back(std::log(h[i]));
            y.push_back(std::log(err[i]));
        }
    }
    FitResult res;
    res.points_used = int(x.size());
    if (x.size() < 2) throw std::runtime_error("loglog_fit: degenerate fit (fewer than 2 points)");
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const double n = double(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        sx += x[i];
        sy += y[i];
        sxx += x[i] * x[i];
        sxy += x[i] * y[i];
    }
    const double denom = n * sxx - sx * sx;
    if (std::abs(denom) < 1e-30) throw std::runtime_error("loglog_fit: degenerate abscissae");
    res.slope = (n * sxy - sx * sy) / denom;
    res.intercept = (sy - res.slope * sx) / n;
    double ss = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double d = y[i] - (res.intercept + res.slope * x[i]);
        ss += d * d;
    }
    res.residual = std::sqrt(ss / n);
    return res;
}

}  // namespace fraclab
