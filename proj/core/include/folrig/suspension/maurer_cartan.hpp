#pragma once

#include <Eigen/Dense>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace folrig::suspension {

// Exponential-coordinate charts around grid points of a matrix group,
// carrying the left-logarithmic-derivative evaluator w |-> g^{-1} w.  The
// flat-connection checks difference this form numerically, so everything a
// run needs (grid, step ladder, sampling seed) is pinned here.
struct MCChart {
    std::size_t n = 0;                  // ambient matrix size
    std::vector<Eigen::MatrixXd> grid;  // invertible chart base points
    std::vector<double> steps;          // finite-difference ladder, decreasing
    std::uint64_t seed = 0;             // chart-offset and tangent sampling
    // When set, the evaluator returns this fixed value instead of g^{-1} w:
    // a degenerate reference form whose flatness defect must come out as
    // exactly 0.0, which pins the difference plumbing itself.
    std::optional<Eigen::MatrixXd> constant_form;
};

// Chart over SO(n) with a seeded Haar-sampled grid and the default ladder
// {1e-2, 5e-3, 2.5e-3}.
MCChart so_chart(std::size_t n, std::size_t grid_points, std::uint64_t seed);

struct MCResidualReport {
    std::vector<double> step_sizes;
    // Max-norm of  d omega + 1/2 [omega, omega]  over all coordinate pairs
    // and grid points, one entry per step size.  The analytic value is zero,
    // so this is pure discretization error.
    std::vector<double> residuals;
    // log(residual ratio) / log(step ratio) for consecutive ladder entries,
    // and their mean; absent when the residuals already sit at zero (abelian
    // or constant forms), where no order is observable.
    std::vector<double> pair_orders;
    std::optional<double> order;
};

// Central-difference flatness defect of the chart's form, expected to decay
// at second order along the ladder.
MCResidualReport mc_residual(const MCChart& chart);

// Max deviation between the form evaluated at (b, g) with tangent w and at
// (b, gamma g) with the pushed-forward tangent gamma w; analytically zero by
// left invariance, so anything above float noise flags a broken evaluator.
double invariance_residual(const MCChart& chart, const Eigen::MatrixXd& gamma_image);

}  // namespace folrig::suspension
