#include "common.hpp"

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "json.hpp"

#include "folrig/errors.hpp"
#include "folrig/io/hash.hpp"
#include "folrig/version.hpp"

namespace folrig::cli {
namespace {

// FOLIATION_SEED, FOLIATION_OUT, ... from an option name like "seed", "out".
std::string env_name(const std::string& option) {
    std::string out = "FOLIATION_";
    for (char c : option) out += (c == '-') ? '_' : static_cast<char>(std::toupper(c));
    return out;
}

}  // namespace

OptionResolver::OptionResolver(const std::string& cli_config_path) {
    config_path_ = cli_config_path;
    if (config_path_.empty())
        if (const char* env = std::getenv("FOLIATION_CONFIG")) config_path_ = env;
    if (config_path_.empty()) return;

    std::ifstream in(config_path_);
    if (!in) throw ValidationError("cannot read config file '" + config_path_ + "'");
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw ValidationError(config_path_ + ": " + e.what());
    }
    if (!doc.is_object())
        throw ValidationError(config_path_ + ": config must be a JSON object");
    for (const auto& item : doc.items()) {
        const auto& v = item.value();
        config_values_[item.key()] = v.is_string() ? v.get<std::string>() : v.dump();
    }
}

std::optional<std::string> OptionResolver::layered(const std::string& name, int cli_count) const {
    if (cli_count > 0) return std::nullopt;  // explicit flag wins
    if (const char* env = std::getenv(env_name(name).c_str())) return std::string(env);
    const auto it = config_values_.find(name);
    if (it != config_values_.end()) return it->second;
    return std::nullopt;
}

std::string OptionResolver::resolve_string(const std::string& name, std::string value,
                                           int cli_count) {
    if (auto v = layered(name, cli_count)) value = *v;
    resolved_[name] = value;
    return value;
}

std::uint64_t OptionResolver::resolve_u64(const std::string& name, std::uint64_t value,
                                          int cli_count) {
    if (auto v = layered(name, cli_count)) {
        try {
            value = std::stoull(*v);
        } catch (const std::exception&) {
            throw ValidationError("option '" + name + "': cannot parse '" + *v + "'");
        }
    }
    resolved_[name] = std::to_string(value);
    return value;
}

unsigned OptionResolver::resolve_unsigned(const std::string& name, unsigned value, int cli_count) {
    const auto wide = resolve_u64(name, value, cli_count);
    if (wide > 1u << 16) throw ValidationError("option '" + name + "': value too large");
    return static_cast<unsigned>(wide);
}

long OptionResolver::resolve_long(const std::string& name, long value, int cli_count) {
    if (auto v = layered(name, cli_count)) {
        try {
            value = std::stol(*v);
        } catch (const std::exception&) {
            throw ValidationError("option '" + name + "': cannot parse '" + *v + "'");
        }
    }
    resolved_[name] = std::to_string(value);
    return value;
}

double OptionResolver::resolve_double(const std::string& name, double value, int cli_count) {
    if (auto v = layered(name, cli_count)) {
        try {
            value = std::stod(*v);
        } catch (const std::exception&) {
            throw ValidationError("option '" + name + "': cannot parse '" + *v + "'");
        }
    }
    resolved_[name] = nlohmann::json(value).dump();
    return value;
}

void write_output(const std::string& out_dir, const std::string& name,
                  const std::string& contents) {
    std::filesystem::create_directories(out_dir);
    const auto path = std::filesystem::path(out_dir) / name;
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ValidationError("cannot write '" + path.string() + "'");
    out << contents;
}

io::RunManifest make_manifest(const std::string& subcommand, const OptionResolver& resolver,
                              std::uint64_t seed, unsigned workers,
                              const std::vector<std::string>& input_paths) {
    io::RunManifest manifest;
    manifest.subcommand = subcommand;
    manifest.tool_version = kToolVersion;
    manifest.seed = seed;
    manifest.workers = workers;
    manifest.options = resolver.resolved();
    if (!resolver.config_path().empty()) manifest.options["config"] = resolver.config_path();
    for (const auto& path : input_paths) manifest.input_hashes[path] = io::hash_file(path);
    return manifest;
}

void finish_manifest(io::RunManifest manifest, const std::string& out_dir, double wall_seconds) {
    manifest.wall_seconds = wall_seconds;
    write_output(out_dir, "manifest.json", io::manifest_json(manifest));
}

int run_guarded(const std::function<void()>& body) {
    try {
        body();
        return 0;
    } catch (const Error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        switch (e.kind()) {
            case ErrorKind::validation: return 2;
            case ErrorKind::budget: return 3;
            case ErrorKind::convergence: return 4;
        }
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "internal error: %s\n", e.what());
        return 1;
    }
}

}  // namespace folrig::cli
