#include "folrig/io/reports.hpp"

#include <sstream>

#include "json.hpp"

namespace folrig::io {
namespace {

using nlohmann::ordered_json;

std::string finish(const ordered_json& doc) { return doc.dump(2) + "\n"; }

// Shortest round-trip representation, same printer the JSON reports use, so
// CSV and JSON agree byte for byte on every double.
std::string fmt(double v) { return ordered_json(v).dump(); }

ordered_json rational_strings(const std::vector<exactnum::Rational>& v) {
    ordered_json out = ordered_json::array();
    for (const auto& x : v) out.push_back(x.to_string());
    return out;
}

}  // namespace

std::string manifest_json(const RunManifest& manifest) {
    ordered_json doc;
    doc["subcommand"] = manifest.subcommand;
    doc["tool_version"] = manifest.tool_version;
    doc["seed"] = manifest.seed;
    doc["workers"] = manifest.workers;
    doc["options"] = ordered_json::object();
    for (const auto& [key, value] : manifest.options) doc["options"][key] = value;
    doc["input_hashes"] = ordered_json::object();
    for (const auto& [path, hash] : manifest.input_hashes) doc["input_hashes"][path] = hash;
    doc["wall_seconds"] = manifest.wall_seconds;
    return finish(doc);
}

std::string obstruction_json(const suspension::ObstructionReport& report) {
    ordered_json doc;
    doc["dimension"] = report.dimension;
    doc["perfect"] = report.perfect;
    doc["compact_type"] = report.compact_type;
    doc["semisimple"] = report.semisimple;
    doc["so3_factor"] = report.so3_factor;
    doc["full_criterion"] = report.full_criterion;
    if (report.ideal_h1) doc["ideal_h1"] = *report.ideal_h1;
    if (report.reduction_preserves_rigidity)
        doc["reduction_preserves_rigidity"] = *report.reduction_preserves_rigidity;
    return finish(doc);
}

std::string cohomology_json(const std::vector<liealg::CohomologyReport>& reports) {
    ordered_json list = ordered_json::array();
    for (const auto& r : reports) {
        ordered_json entry;
        entry["degree"] = r.degree;
        entry["dimension"] = r.dimension;
        ordered_json reps = ordered_json::array();
        for (const auto& v : r.representatives) reps.push_back(rational_strings(v));
        entry["representatives"] = std::move(reps);
        list.push_back(std::move(entry));
    }
    ordered_json doc;
    doc["cohomology"] = std::move(list);
    return finish(doc);
}

std::string classification_json(const qform::EmbeddingClassification& classification,
                                bool anisotropic) {
    ordered_json embeddings = ordered_json::array();
    for (const auto& e : classification.all_embeddings) {
        ordered_json entry;
        entry["id"] = e.id;
        entry["real"] = e.real;
        if (e.real) {
            entry["signature"] = ordered_json::array({e.positive, e.negative});
            entry["definite"] = e.definite;
        }
        embeddings.push_back(std::move(entry));
    }
    ordered_json doc;
    doc["embeddings"] = std::move(embeddings);
    doc["definite_set"] = classification.definite_set;
    doc["chosen_set"] = classification.chosen_set;
    doc["anisotropic"] = anisotropic;
    // The lattice construction needs at least one real embedding whose
    // conjugate form is NOT definite; when every one is definite the group
    // of integral members is finite and the construction degenerates.
    std::size_t real_count = 0;
    for (const auto& e : classification.all_embeddings) real_count += e.real ? 1 : 0;
    doc["lattice_hypothesis_satisfied"] = classification.definite_set.size() < real_count;
    return finish(doc);
}

std::string generator_set_json(const qform::GeneratorSet<exactnum::QuadElement>& generators) {
    ordered_json list = ordered_json::array();
    for (const auto& g : generators.elements) {
        ordered_json entry;
        if (g.word) entry["word"] = *g.word;
        ordered_json rows = ordered_json::array();
        for (std::size_t i = 0; i < g.matrix.rows(); ++i) {
            ordered_json row = ordered_json::array();
            for (std::size_t j = 0; j < g.matrix.cols(); ++j) {
                const auto& x = g.matrix(i, j);
                row.push_back(ordered_json::array({x.a().to_string(), x.b().to_string()}));
            }
            rows.push_back(std::move(row));
        }
        entry["matrix"] = std::move(rows);
        list.push_back(std::move(entry));
    }
    ordered_json doc;
    doc["count"] = generators.elements.size();
    doc["closure_note"] = generators.closure_note;
    doc["elements"] = std::move(list);
    return finish(doc);
}

std::string density_json(const std::vector<dynamics::DensityReport>& profile) {
    ordered_json list = ordered_json::array();
    for (const auto& r : profile) {
        ordered_json entry;
        entry["radius"] = r.radius;
        entry["covering_radius"] = r.covering_radius;
        entry["probe_count"] = r.probe_count;
        entry["metric"] = r.metric;
        entry["seed"] = r.seed;
        list.push_back(std::move(entry));
    }
    ordered_json doc;
    doc["density"] = std::move(list);
    return finish(doc);
}

std::string density_csv(const std::vector<dynamics::DensityReport>& profile) {
    std::ostringstream out;
    out << "radius,covering_radius\n";
    for (const auto& r : profile) out << r.radius << "," << fmt(r.covering_radius) << "\n";
    return out.str();
}

std::string gaps_json(const std::vector<dynamics::GapEstimate>& gaps) {
    ordered_json list = ordered_json::array();
    for (const auto& g : gaps) {
        ordered_json entry;
        entry["degree"] = g.degree;
        if (g.estimate) entry["estimate"] = *g.estimate;
        if (g.gap) entry["gap"] = *g.gap;
        entry["iterations"] = g.iterations;
        entry["tolerance"] = g.tolerance;
        entry["converged"] = g.converged;
        entry["empty_invariant_free"] = g.empty_invariant_free;
        entry["invariant_space_exact"] = g.invariant_space_exact;
        entry["invariant_dimension"] = g.invariant_dimension;
        list.push_back(std::move(entry));
    }
    ordered_json doc;
    doc["gaps"] = std::move(list);
    return finish(doc);
}

std::string gaps_csv(const std::vector<dynamics::GapEstimate>& gaps) {
    std::ostringstream out;
    out << "degree,estimate,gap,iterations,converged\n";
    for (const auto& g : gaps) {
        out << g.degree << ",";
        if (g.estimate) out << fmt(*g.estimate);
        out << ",";
        if (g.gap) out << fmt(*g.gap);
        out << "," << g.iterations << "," << (g.converged ? "true" : "false") << "\n";
    }
    return out.str();
}

namespace {

ordered_json cocycle_body(const groupcoh::CocycleSpaceReport& report) {
    ordered_json entry;
    entry["z1"] = report.z1;
    entry["b1"] = report.b1;
    entry["h1"] = report.h1;
    entry["exact"] = report.exact_path;
    ordered_json basis = ordered_json::array();
    if (report.exact_path) {
        for (const auto& cocycle : report.exact_cocycles) {
            ordered_json per_gen = ordered_json::array();
            for (const auto& value : cocycle) per_gen.push_back(rational_strings(value));
            basis.push_back(std::move(per_gen));
        }
    } else {
        for (const auto& cocycle : report.float_cocycles) {
            ordered_json per_gen = ordered_json::array();
            for (const auto& value : cocycle) {
                ordered_json coords = ordered_json::array();
                for (Eigen::Index i = 0; i < value.size(); ++i) coords.push_back(value(i));
                per_gen.push_back(std::move(coords));
            }
            basis.push_back(std::move(per_gen));
        }
    }
    entry["cocycle_basis"] = std::move(basis);
    return entry;
}

}  // namespace

std::string cocycle_json(const groupcoh::CocycleSpaceReport& report) {
    return finish(cocycle_body(report));
}

std::string rigidity_json(const std::vector<groupcoh::TruncatedRigidityReport>& reports) {
    ordered_json list = ordered_json::array();
    bool all_vanish = true;
    for (const auto& r : reports) {
        ordered_json entry;
        entry["degree"] = r.degree;
        entry["harmonic_dimension"] = r.harmonic_dimension;
        entry["cocycles"] = cocycle_body(r.cocycles);
        all_vanish = all_vanish && r.cocycles.h1 == 0;
        list.push_back(std::move(entry));
    }
    ordered_json doc;
    doc["degrees"] = std::move(list);
    doc["all_tested_degrees_vanish"] = all_vanish;
    return finish(doc);
}

std::string orbit_json(const suspension::OrbitReport& report) {
    ordered_json list = ordered_json::array();
    for (const auto& orbit : report.orbits) {
        ordered_json entry;
        entry["members"] = orbit.members;
        entry["stabilizer_index"] = orbit.stabilizer_index;
        entry["compact_leaf"] = orbit.compact_leaf;
        list.push_back(std::move(entry));
    }
    ordered_json doc;
    doc["set_size"] = report.set_size;
    doc["orbit_count"] = report.orbits.size();
    doc["orbits"] = std::move(list);
    return finish(doc);
}

std::string mc_json(const suspension::MCResidualReport& report,
                    const std::vector<double>& invariance_residuals) {
    ordered_json doc;
    doc["step_sizes"] = report.step_sizes;
    doc["residuals"] = report.residuals;
    doc["pair_orders"] = report.pair_orders;
    if (report.order) doc["order"] = *report.order;
    doc["invariance_residuals"] = invariance_residuals;
    return finish(doc);
}

}  // namespace folrig::io
