#include "folrig/dynamics/haar.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <thread>

#include "folrig/errors.hpp"

namespace folrig::dynamics {

namespace {

// Box-Muller Gaussians over explicit 53-bit uniforms.  std::normal_distribution
// is implementation-defined, which would break the bit-identical-reports
// guarantee across standard libraries; this stream depends only on the
// Mersenne twister output, which the standard pins exactly.
class GaussianStream {
public:
    explicit GaussianStream(std::uint64_t seed) : rng_(seed) {}

    double next() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        const double u = uniform01();
        const double v = uniform01();
        const double radius = std::sqrt(-2.0 * std::log(u));
        const double angle = 2.0 * std::numbers::pi * v;
        spare_ = radius * std::sin(angle);
        have_spare_ = true;
        return radius * std::cos(angle);
    }

private:
    // Strictly inside (0, 1), so the logarithm above is always finite.
    double uniform01() { return (static_cast<double>(rng_() >> 11) + 0.5) * 0x1.0p-53; }

    std::mt19937_64 rng_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

}  // namespace

std::vector<Eigen::MatrixXd> haar_probes(Eigen::Index n, std::size_t count, std::uint64_t seed) {
    if (n < 1) throw ValidationError("probe dimension must be at least 1");
    GaussianStream stream(seed);
    std::vector<Eigen::MatrixXd> probes;
    probes.reserve(count);
    for (std::size_t p = 0; p < count; ++p) {
        Eigen::MatrixXd g(n, n);
        for (Eigen::Index i = 0; i < n; ++i)
            for (Eigen::Index j = 0; j < n; ++j) g(i, j) = stream.next();
        const Eigen::HouseholderQR<Eigen::MatrixXd> qr(g);
        Eigen::MatrixXd q = qr.householderQ() * Eigen::MatrixXd::Identity(n, n);
        const Eigen::MatrixXd r = qr.matrixQR();
        for (Eigen::Index j = 0; j < n; ++j)
            if (r(j, j) < 0) q.col(j) = -q.col(j);
        if (q.determinant() < 0) q.col(n - 1) = -q.col(n - 1);
        probes.push_back(std::move(q));
    }
    return probes;
}

std::vector<DensityReport> covering_profile(const WordBall& ball, std::size_t probes,
                                            std::uint64_t seed, unsigned workers) {
    if (ball.elements.empty()) throw ValidationError("covering radius of an empty ball");
    if (probes == 0) throw ValidationError("at least one probe is required");
    const Eigen::Index n = ball.elements.front().matrix.rows();
    const std::vector<Eigen::MatrixXd> targets = haar_probes(n, probes, seed);
    const std::vector<std::size_t> offsets = ball.layer_offsets();
    const std::size_t layers = ball.radius + 1;  // prefix balls of radius 0..radius

    // minima[p][r]: distance from probe p to the radius-r prefix ball.
    std::vector<std::vector<double>> minima(probes, std::vector<double>(layers, 0.0));
    const auto scan = [&](std::size_t lo, std::size_t hi) {
        for (std::size_t p = lo; p < hi; ++p) {
            double best = std::numeric_limits<double>::infinity();
            for (std::size_t r = 0; r < layers; ++r) {
                for (std::size_t i = offsets[r]; i < offsets[r + 1]; ++i) {
                    const double d = (ball.elements[i].matrix - targets[p]).norm();
                    if (d < best) best = d;
                }
                minima[p][r] = best;
            }
        }
    };

    const unsigned nworkers =
        std::max(1u, std::min(workers, static_cast<unsigned>(probes)));
    if (nworkers == 1) {
        scan(0, probes);
    } else {
        std::vector<std::thread> pool;
        const std::size_t chunk = (probes + nworkers - 1) / nworkers;
        for (unsigned w = 0; w < nworkers; ++w) {
            const std::size_t lo = w * chunk, hi = std::min(probes, lo + chunk);
            if (lo >= hi) break;
            pool.emplace_back([&scan, lo, hi] { scan(lo, hi); });
        }
        for (std::thread& t : pool) t.join();
    }

    std::vector<DensityReport> reports(layers);
    for (std::size_t r = 0; r < layers; ++r) {
        double worst = 0.0;
        for (std::size_t p = 0; p < probes; ++p) worst = std::max(worst, minima[p][r]);
        reports[r].radius = r;
        reports[r].covering_radius = worst;
        reports[r].probe_count = probes;
        reports[r].seed = seed;
    }
    return reports;
}

DensityReport covering_radius(const WordBall& ball, std::size_t probes, std::uint64_t seed,
                              unsigned workers) {
    return covering_profile(ball, probes, seed, workers).back();
}

}  // namespace folrig::dynamics
