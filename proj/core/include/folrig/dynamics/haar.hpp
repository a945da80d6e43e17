#pragma once

#include <Eigen/Dense>

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "folrig/dynamics/word_ball.hpp"

namespace folrig::dynamics {

// Deterministic Haar-distributed sample on SO(n): QR factorization of a
// matrix of seeded standard Gaussians, with the sign ambiguity removed by
// making the R diagonal positive and the determinant corrected to +1 by
// flipping the last column.  The Gaussian stream is derived from the seed
// alone (Box-Muller over the 64-bit Mersenne twister), so a fixed seed pins
// the probe set exactly.
std::vector<Eigen::MatrixXd> haar_probes(Eigen::Index n, std::size_t count, std::uint64_t seed);

struct DensityReport {
    std::size_t radius = 0;
    // Max over probe targets of the min Frobenius distance to a ball element.
    double covering_radius = 0.0;
    std::size_t probe_count = 0;
    std::string metric = "frobenius";
    std::uint64_t seed = 0;
};

// Covering radii of every prefix ball (radius 0 .. ball.radius) against one
// shared probe set.  Entry r equals covering_radius() of the radius-r ball
// with the same probes and seed: the per-probe minimum is tracked along the
// length-sorted element list and sampled at each layer boundary.  The probe
// loop may be split across workers; max/min composition makes the result
// identical for any worker count.
std::vector<DensityReport> covering_profile(const WordBall& ball, std::size_t probes,
                                            std::uint64_t seed, unsigned workers = 1);

// The report for the full ball, i.e. the last entry of covering_profile.
DensityReport covering_radius(const WordBall& ball, std::size_t probes, std::uint64_t seed,
                              unsigned workers = 1);

}  // namespace folrig::dynamics
