#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "common.hpp"

namespace folrig::cli {

struct AlgebraOptions {
    std::string input;
};

struct ForgeOptions {
    std::string form_file;
    long height = 10;
    std::size_t radius = 4;
    std::size_t probes = 500;
    std::vector<std::size_t> degrees = {1, 2};
    std::size_t max_generators = 6;
    double dedup_tol = 1e-9;
    std::size_t ball_cap = 1'000'000;
    double power_tol = 1e-8;
    std::size_t power_iters = 500;
};

struct CohomologyOptions {
    std::string presentation_file;
    std::string representation_file;
    std::vector<std::size_t> degrees;  // empty: plain H^1 of the representation
    std::size_t budget = 10000;
};

struct DynamicsOptions {
    std::string matrices_file;
    std::size_t radius = 4;
    std::size_t probes = 500;
    std::vector<std::size_t> degrees = {1, 2};
    double dedup_tol = 1e-9;
    std::size_t ball_cap = 1'000'000;
    double power_tol = 1e-8;
    std::size_t power_iters = 500;
};

struct SuspensionOptions {
    std::string action_file;
    std::size_t chart_n = 0;  // 0: skip the flat-connection checks
    std::size_t grid = 6;
    std::size_t translations = 20;
};

void cmd_algebra(const AlgebraOptions& opt, const CommonOptions& common,
                 const OptionResolver& resolver);
void cmd_forge(const ForgeOptions& opt, const CommonOptions& common,
               const OptionResolver& resolver);
void cmd_cohomology(const CohomologyOptions& opt, const CommonOptions& common,
                    const OptionResolver& resolver);
void cmd_dynamics(const DynamicsOptions& opt, const CommonOptions& common,
                  const OptionResolver& resolver);
void cmd_suspension(const SuspensionOptions& opt, const CommonOptions& common,
                    const OptionResolver& resolver);

}  // namespace folrig::cli
