#ifndef PFLAB_BENCH_HPP
#define PFLAB_BENCH_HPP

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

#include "pflab/dodgson.hpp"
#include "pflab/dtoda.hpp"
#include "pflab/glv.hpp"
#include "pflab/matrix.hpp"
#include "pflab/pfaffian.hpp"
#include "pflab/rng.hpp"

namespace pflab {

struct BenchPoint {
    std::size_t size = 0;
    double seconds = 0.0;   // median wall time of one run
    double checksum = 0.0;  // deterministic under the seed
    int failures = 0;       // zero-divisor instances (recorded, not fatal)
};

struct BenchSeries {
    std::string algo;
    std::vector<BenchPoint> points;
    double slope = 0.0;  // log-log least-squares growth exponent
};

struct BenchConfig {
    std::vector<std::string> algos;
    std::vector<std::size_t> sizes;
    std::uint64_t seed = 20240819;
    int samples = 5;             // median over this many measurements
    double min_sample_s = 2e-3;  // each measurement repeats the run to this budget
};

namespace bench_detail {

// Median wall time of one invocation of f, with adaptive inner repetition
// so each sample exceeds the configured budget.
template <typename F>
double measure(F&& f, int samples, double min_sample_s) {
    using clock = std::chrono::steady_clock;
    long reps = 1;
    for (;;) {
        auto t0 = clock::now();
        for (long r = 0; r < reps; ++r) f();
        double dt = std::chrono::duration<double>(clock::now() - t0).count();
        if (dt >= min_sample_s || reps >= (1L << 24)) break;
        reps = (dt <= 0) ? reps * 8 : std::max(reps * 2, static_cast<long>(
            static_cast<double>(reps) * 1.2 * min_sample_s / dt));
    }
    std::vector<double> ts;
    for (int s = 0; s < samples; ++s) {
        auto t0 = clock::now();
        for (long r = 0; r < reps; ++r) f();
        double dt = std::chrono::duration<double>(clock::now() - t0).count();
        ts.push_back(dt / static_cast<double>(reps));
    }
    std::sort(ts.begin(), ts.end());
    return ts[ts.size() / 2];
}

inline double loglog_slope(const std::vector<BenchPoint>& pts) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    std::size_t n = 0;
    for (const auto& p : pts) {
        if (p.seconds <= 0) continue;
        double x = std::log(static_cast<double>(p.size));
        double y = std::log(p.seconds);
        sx += x; sy += y; sxx += x * x; sxy += x * y;
        ++n;
    }
    if (n < 2) return 0.0;
    double dn = static_cast<double>(n);
    return (dn * sxy - sx * sy) / (dn * sxx - sx * sx);
}

} // namespace bench_detail

// One float-mode run of the named algorithm on a seeded random instance;
// returns the computed value (checksummed by the caller).
inline double bench_run_algo(const std::string& algo, const SkewMatrix<double>& skew,
                             const Matrix<double>& square, int* failures) {
    try {
        if (algo == "expansion") return pfaffian_expansion(skew);
        if (algo == "elimination") return pfaffian_elimination(skew);
        if (algo == "glv") {
            RetryPolicy p;
            p.retries = 0;
            return glv_condense(skew, ones_alpha<double>(skew.order()), 1.0, p).value;
        }
        if (algo == "dtoda") return dtoda_condense(skew, -1.0).value;
        if (algo == "dodgson") return dodgson_determinant(square);
        if (algo == "lambda-det") return lambda_determinant(square, -1.0);
    } catch (const Error&) {
        if (failures) ++*failures;
        return 0.0;
    }
    throw ParameterError("unknown algorithm '" + algo + "'");
}

inline bool bench_algo_known(const std::string& algo) {
    static const char* names[] = {"expansion", "elimination", "glv",
                                  "dtoda",     "dodgson",     "lambda-det"};
    for (const char* n : names)
        if (algo == n) return true;
    return false;
}

inline std::vector<BenchSeries> run_bench(const BenchConfig& cfg) {
    std::vector<BenchSeries> out;
    for (const auto& algo : cfg.algos) {
        if (!bench_algo_known(algo)) throw ParameterError("unknown algorithm '" + algo + "'");
        BenchSeries series;
        series.algo = algo;
        for (std::size_t size : cfg.sizes) {
            if (algo == "expansion" && size > 16)
                throw ParameterError("expansion benchmark limited to order 16");
            // one deterministic instance per (algo, size)
            Rng rng(cfg.seed ^ (size * 0x9e3779b97f4a7c15ull));
            const std::size_t even = size % 2 == 0 ? size : size + 1;
            SkewMatrix<double> skew = random_integer_skew(rng, even).cast<double>();
            Matrix<Rational> sq = random_integer_matrix(rng, size, size);
            Matrix<double> squared(size, size);
            for (std::size_t i = 0; i < size; ++i)
                for (std::size_t j = 0; j < size; ++j) squared(i, j) = sq(i, j).to_double();

            BenchPoint pt;
            pt.size = size;
            pt.checksum = bench_run_algo(algo, skew, squared, &pt.failures);
            pt.seconds = bench_detail::measure(
                [&] { bench_run_algo(algo, skew, squared, nullptr); }, cfg.samples,
                cfg.min_sample_s);
            series.points.push_back(pt);
        }
        series.slope = bench_detail::loglog_slope(series.points);
        out.push_back(std::move(series));
    }
    return out;
}

inline nlohmann::json bench_to_json(const std::vector<BenchSeries>& series,
                                    const BenchConfig& cfg) {
    nlohmann::json js = nlohmann::json::array();
    for (const auto& s : series) {
        nlohmann::json pts = nlohmann::json::array();
        for (const auto& p : s.points)
            pts.push_back({{"size", p.size},
                           {"median_s", p.seconds},
                           {"checksum", p.checksum},
                           {"failures", p.failures}});
        js.push_back({{"algo", s.algo}, {"slope", s.slope}, {"points", pts}});
    }
    return {{"bench", js}, {"seed", cfg.seed}};
}

} // namespace pflab

#endif
