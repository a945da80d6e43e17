#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "folrig/dynamics/haar.hpp"
#include "folrig/dynamics/spectral.hpp"
#include "folrig/exactnum/quadratic.hpp"
#include "folrig/groupcoh/fox.hpp"
#include "folrig/liealg/cohomology.hpp"
#include "folrig/qform/form.hpp"
#include "folrig/qform/orthogonal.hpp"
#include "folrig/suspension/finite_action.hpp"
#include "folrig/suspension/maurer_cartan.hpp"
#include "folrig/suspension/pipeline.hpp"

// Report serialization.  Every function returns the complete file contents
// (JSON with two-space indentation or CSV, always ending in a newline) and
// emits identical bytes for identical inputs: doubles go through the
// shortest-round-trip printer, map keys are fixed, and nothing time- or
// host-dependent is included.  Run metadata that legitimately varies between
// runs (wall time) lives only in the manifest, which is written to its own
// file so the analytical reports stay reproducible byte for byte.

namespace folrig::io {

struct RunManifest {
    std::string subcommand;
    std::string tool_version;
    std::uint64_t seed = 0;
    unsigned workers = 1;
    // Resolved option values after CLI/environment/config merging.
    std::map<std::string, std::string> options;
    // Content hash (FNV-1a, hex) of every input file that was read.
    std::map<std::string, std::string> input_hashes;
    double wall_seconds = 0.0;
};

std::string manifest_json(const RunManifest& manifest);

std::string obstruction_json(const suspension::ObstructionReport& report);

std::string cohomology_json(const std::vector<liealg::CohomologyReport>& reports);

std::string classification_json(const qform::EmbeddingClassification& classification,
                                bool anisotropic);

std::string generator_set_json(const qform::GeneratorSet<exactnum::QuadElement>& generators);

std::string density_json(const std::vector<dynamics::DensityReport>& profile);
std::string density_csv(const std::vector<dynamics::DensityReport>& profile);

std::string gaps_json(const std::vector<dynamics::GapEstimate>& gaps);
std::string gaps_csv(const std::vector<dynamics::GapEstimate>& gaps);

std::string cocycle_json(const groupcoh::CocycleSpaceReport& report);
std::string rigidity_json(const std::vector<groupcoh::TruncatedRigidityReport>& reports);

std::string orbit_json(const suspension::OrbitReport& report);

std::string mc_json(const suspension::MCResidualReport& report,
                    const std::vector<double>& invariance_residuals);

}  // namespace folrig::io
