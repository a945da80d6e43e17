#include <chrono>
#include <cstdio>
#include <filesystem>
#include <optional>
#include <set>
#include <utility>

#include "json.hpp"

#include "commands.hpp"
#include "folrig/dynamics/haar.hpp"
#include "folrig/dynamics/harmonic.hpp"
#include "folrig/dynamics/spectral.hpp"
#include "folrig/dynamics/word_ball.hpp"
#include "folrig/io/files.hpp"
#include "folrig/io/hash.hpp"
#include "folrig/qform/embed.hpp"
#include "folrig/qform/search.hpp"

namespace folrig::cli {
namespace {

using exactnum::QuadElement;
using qform::QuadraticForm;

// Brute scan for a nontrivial zero of the form with coefficients a + b*sqrt2,
// |a|, |b| <= 1.  Only consulted when the definiteness certificate is absent,
// to tell "anisotropy unknown" apart from "provably isotropic".
std::optional<std::vector<std::string>> isotropy_witness(const QuadraticForm<QuadElement>& phi) {
    const std::size_t n = phi.n();
    std::vector<QuadElement> values;
    for (int a = -1; a <= 1; ++a)
        for (int b = -1; b <= 1; ++b)
            values.emplace_back(exactnum::Rational(a), exactnum::Rational(b));
    std::vector<std::size_t> pick(n, 0);
    std::vector<QuadElement> v(n);
    while (true) {
        bool all_zero = true;
        for (std::size_t i = 0; i < n; ++i) {
            v[i] = values[pick[i]];
            all_zero = all_zero && v[i].is_zero();
        }
        if (!all_zero && phi.evaluate(v).is_zero()) {
            std::vector<std::string> out;
            for (const auto& x : v) out.push_back(x.to_string());
            return out;
        }
        std::size_t i = 0;
        for (; i < n; ++i) {
            if (++pick[i] < values.size()) break;
            pick[i] = 0;
        }
        if (i == n) return std::nullopt;
    }
}

struct Selection {
    std::vector<std::string> words;
    std::vector<Eigen::MatrixXd> images;
    bool beyond_coordinate_symmetries = false;
};

// Deterministic working subset for the dynamics stage.  The full sweep can
// return dozens of elements whose combined word ball is far beyond any
// budget, so we keep at most `limit` of them: for every coordinate plane,
// the first searched element supported on exactly that plane and reaching
// past the {0, +-1} coordinate symmetries (those have infinite order in the
// compact embedding), mixed-coefficient planes first; remaining slots are
// filled with the plain quarter turns.
Selection select_working_subset(const qform::GeneratorSet<QuadElement>& gens,
                                const QuadraticForm<QuadElement>& phi, int embedding_id,
                                std::size_t limit) {
    const std::size_t n = phi.n();
    const auto plane_of = [&](const exactnum::ExactMatrix<QuadElement>& m)
        -> std::optional<std::pair<std::size_t, std::size_t>> {
        std::set<std::pair<std::size_t, std::size_t>> planes;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (!m(i, j).is_zero() || !m(j, i).is_zero()) planes.insert({i, j});
        if (planes.size() != 1) return std::nullopt;
        return *planes.begin();
    };
    const auto tall = [](const exactnum::ExactMatrix<QuadElement>& m) {
        const exactnum::Rational two(2);
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j)
                if (!(m(i, j).a().abs() < two) || !(m(i, j).b().abs() < two)) return true;
        return false;
    };

    std::vector<std::pair<std::size_t, std::size_t>> planes;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) planes.push_back({i, j});
    std::stable_sort(planes.begin(), planes.end(), [&](const auto& p, const auto& q) {
        const bool p_mixed = !(phi.matrix()(p.first, p.first) == phi.matrix()(p.second, p.second));
        const bool q_mixed = !(phi.matrix()(q.first, q.first) == phi.matrix()(q.second, q.second));
        return p_mixed > q_mixed;
    });

    Selection out;
    const auto take = [&](const qform::OrthogonalElement<QuadElement>& g) {
        out.images.push_back(qform::orthonormalized_embedding(g, phi, embedding_id));
        out.words.push_back(g.word.value_or("(unnamed)"));
    };
    for (const auto& plane : planes) {
        if (out.images.size() >= limit) return out;
        for (const auto& g : gens.elements)
            if (plane_of(g.matrix) == std::optional{plane} && tall(g.matrix)) {
                take(g);
                out.beyond_coordinate_symmetries = true;
                break;
            }
    }
    for (const auto& plane : planes) {
        if (out.images.size() >= limit) return out;
        for (const auto& g : gens.elements)
            if (plane_of(g.matrix) == std::optional{plane} && !tall(g.matrix)) {
                take(g);
                break;
            }
    }
    return out;
}

}  // namespace

void cmd_forge(const ForgeOptions& opt, const CommonOptions& common,
               const OptionResolver& resolver) {
    const auto t0 = std::chrono::steady_clock::now();
    auto manifest =
        make_manifest("forge", resolver, common.seed, common.workers, {opt.form_file});

    const io::FormFile form = io::load_quadratic_form(opt.form_file);
    if (!form.sqrt2)
        throw ValidationError("forge analyzes forms over Q(sqrt2); this file declares " +
                              form.field);
    const QuadraticForm<QuadElement>& phi = *form.sqrt2;

    const auto classification = qform::classify_embeddings(phi);
    const bool anisotropic = qform::anisotropy_by_conjugate_definiteness(phi);
    std::optional<std::vector<std::string>> witness;
    if (!anisotropic) witness = isotropy_witness(phi);
    write_output(common.out_dir, "classification.json",
                 io::classification_json(classification, anisotropic));

    for (const auto& e : classification.all_embeddings)
        if (e.real)
            std::printf("embedding %d: signature (%zu,%zu)%s\n", e.id, e.positive, e.negative,
                        e.definite ? " [definite]" : "");
    std::printf("anisotropy certificate: %s\n", anisotropic ? "definite conjugate found" : "none");
    if (witness) std::printf("isotropy witness found: the form has a nontrivial zero\n");

    const auto gens = qform::search_generators(phi, opt.height, common.workers);
    write_output(common.out_dir, "generators.json", io::generator_set_json(gens));
    std::printf("generator sweep at height %ld: %zu certified elements\n", opt.height,
                gens.elements.size());

    nlohmann::ordered_json forge;
    forge["field"] = form.field;
    forge["n"] = phi.n();
    forge["anisotropic"] = anisotropic;
    if (witness) forge["isotropy_witness"] = *witness;
    std::size_t real_count = 0;
    for (const auto& e : classification.all_embeddings) real_count += e.real ? 1 : 0;
    const bool lattice_ok = classification.definite_set.size() < real_count;
    forge["lattice_hypothesis_satisfied"] = lattice_ok;
    forge["generator_count"] = gens.elements.size();

    if (classification.definite_set.empty()) {
        forge["dynamics_skipped"] = "no definite conjugate form, so no compact embedding";
        std::printf("no definite conjugate form: skipping the compact-group diagnostics\n");
        write_output(common.out_dir, "forge.json", forge.dump(2) + "\n");
        finish_manifest(
            std::move(manifest), common.out_dir,
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
        return;
    }
    if (!lattice_ok)
        std::printf("every real conjugate form is definite: the integral group is finite "
                    "and the lattice construction degenerates\n");

    const int embedding_id = classification.definite_set.front();
    const Selection selection =
        select_working_subset(gens, phi, embedding_id, opt.max_generators);
    forge["embedding_id"] = embedding_id;
    forge["selected_words"] = selection.words;
    const bool empty_warning = selection.images.empty() || !selection.beyond_coordinate_symmetries;
    forge["only_coordinate_symmetries"] = empty_warning;
    if (empty_warning)
        std::printf("warning: EmptyGeneratorSet — the sweep found only finite-order "
                    "coordinate symmetries\n");

    if (selection.images.empty()) {
        write_output(common.out_dir, "forge.json", forge.dump(2) + "\n");
        finish_manifest(
            std::move(manifest), common.out_dir,
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
        return;
    }

    // Word ball, through the cache when one is configured.
    std::optional<dynamics::WordBall> ball;
    std::string cache_path;
    if (!common.cache_dir.empty()) {
        std::string key = manifest.input_hashes.at(opt.form_file);
        key += "|" + std::to_string(opt.height) + "|" + std::to_string(opt.radius);
        key += "|" + std::to_string(opt.dedup_tol) + "|" + std::to_string(embedding_id);
        for (const auto& w : selection.words) key += "|" + w;
        std::filesystem::create_directories(common.cache_dir);
        cache_path = (std::filesystem::path(common.cache_dir) /
                      ("ball-" + io::fnv1a64_hex(key) + ".json"))
                         .string();
        ball = io::load_word_ball(cache_path, selection.images, opt.radius, opt.dedup_tol);
        std::printf("ball cache %s\n", ball ? "hit" : "miss");
    }
    if (!ball) {
        ball = dynamics::enumerate_ball(selection.images, opt.radius, opt.dedup_tol, opt.ball_cap);
        if (!cache_path.empty()) io::save_word_ball(cache_path, *ball);
    }
    forge["ball_elements"] = ball->elements.size();
    forge["ball_closed"] = ball->closed;
    std::printf("word ball radius %zu: %zu elements%s\n", opt.radius, ball->elements.size(),
                ball->closed ? " (closed: the generated group is finite)" : "");

    const auto profile = dynamics::covering_profile(*ball, opt.probes, common.seed,
                                                    common.workers);
    write_output(common.out_dir, "density.json", io::density_json(profile));
    write_output(common.out_dir, "density.csv", io::density_csv(profile));
    std::printf("covering radius at full radius: %.6f\n", profile.back().covering_radius);

    std::vector<dynamics::GapEstimate> gaps;
    for (const std::size_t d : opt.degrees) {
        const auto space = dynamics::harmonic_space(phi.n(), d);
        gaps.push_back(dynamics::averaging_operator_norm(ball->generators, space, opt.power_tol,
                                                         opt.power_iters));
        const auto& g = gaps.back();
        std::printf("degree %zu: averaging norm %s, gap %s\n", d,
                    g.estimate ? std::to_string(*g.estimate).c_str() : "n/a",
                    g.gap ? std::to_string(*g.gap).c_str() : "n/a");
    }
    write_output(common.out_dir, "gaps.json", io::gaps_json(gaps));
    write_output(common.out_dir, "gaps.csv", io::gaps_csv(gaps));

    write_output(common.out_dir, "forge.json", forge.dump(2) + "\n");
    finish_manifest(std::move(manifest), common.out_dir,
                    std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
}

}  // namespace folrig::cli
