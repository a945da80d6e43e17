#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>

#include "folrig/io/reports.hpp"

namespace folrig::cli {

// Options shared by every subcommand.  Resolution order, lowest to highest:
// built-in default, config file, FOLIATION_* environment variable, explicit
// command-line flag.  `resolve_*` applies the env/config layers only when the
// CLI flag was absent (cli_count == 0).
struct CommonOptions {
    std::string config_path;
    std::uint64_t seed = 20260816;
    unsigned workers = 1;
    std::string out_dir = ".";
    std::string cache_dir;
};

class OptionResolver {
public:
    // Loads the config file (JSON object of option name -> value) if a path
    // was given on the command line or through FOLIATION_CONFIG.
    explicit OptionResolver(const std::string& cli_config_path);

    // Each lookup records the resolved value, so the manifest can list the
    // configuration the run actually used.
    std::string resolve_string(const std::string& name, std::string value, int cli_count);
    std::uint64_t resolve_u64(const std::string& name, std::uint64_t value, int cli_count);
    unsigned resolve_unsigned(const std::string& name, unsigned value, int cli_count);
    long resolve_long(const std::string& name, long value, int cli_count);
    double resolve_double(const std::string& name, double value, int cli_count);

    const std::string& config_path() const { return config_path_; }
    const std::map<std::string, std::string>& resolved() const { return resolved_; }

private:
    std::optional<std::string> layered(const std::string& name, int cli_count) const;

    std::string config_path_;
    std::map<std::string, std::string> config_values_;
    std::map<std::string, std::string> resolved_;
};

// Writes `contents` to out_dir/name, creating the directory first.
void write_output(const std::string& out_dir, const std::string& name,
                  const std::string& contents);

io::RunManifest make_manifest(const std::string& subcommand, const OptionResolver& resolver,
                              std::uint64_t seed, unsigned workers,
                              const std::vector<std::string>& input_paths);

// Stamps the wall time, serializes, and writes manifest.json.  The manifest
// is the only emitted file allowed to differ between reruns.
void finish_manifest(io::RunManifest manifest, const std::string& out_dir, double wall_seconds);

// Runs a subcommand body and maps the error taxonomy onto exit codes
// (validation 2, budget 3, convergence 4); success is 0.
int run_guarded(const std::function<void()>& body);

}  // namespace folrig::cli
