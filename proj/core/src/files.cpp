#include "folrig/io/files.hpp"

#include <cstdint>
#include <fstream>
#include <set>
#include <utility>

#include "json.hpp"

#include "folrig/errors.hpp"
#include "folrig/io/hash.hpp"

namespace folrig::io {
namespace {

using nlohmann::json;
using nlohmann::ordered_json;

json parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot read file '" + path + "'");
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw ValidationError(path + ": " + e.what());
    }
}

const json& field_of(const json& j, const char* key, const std::string& path) {
    if (!j.is_object()) throw ValidationError(path + ": expected a JSON object");
    const auto it = j.find(key);
    if (it == j.end()) throw ValidationError(path + ": missing field '" + key + "'");
    return *it;
}

template <typename T>
T get_as(const json& j, const std::string& where) {
    try {
        return j.get<T>();
    } catch (const json::exception& e) {
        throw ValidationError(where + ": " + e.what());
    }
}

std::size_t index_of(const json& j, const std::string& where) {
    const auto raw = get_as<long long>(j, where);
    if (raw < 0) throw ValidationError(where + ": negative index");
    return static_cast<std::size_t>(raw);
}

exactnum::Rational rational_of(const json& j, const std::string& where) {
    if (j.is_string()) {
        try {
            return exactnum::Rational::from_string(j.get<std::string>());
        } catch (const Error& e) {
            throw ValidationError(where + ": " + e.what());
        }
    }
    if (j.is_number_integer()) return exactnum::Rational(get_as<long>(j, where));
    throw ValidationError(where + ": expected a rational string or integer (floats are lossy)");
}

// Shared shape of both quadratic-form loaders; the component count and the
// tuple-to-scalar assembly differ per field.
template <typename F, typename Assemble>
qform::QuadraticForm<F> parse_form(const json& doc, const std::string& path,
                                   std::size_t components, Assemble assemble) {
    const std::size_t n = index_of(field_of(doc, "n", path), path + ": n");
    if (n == 0) throw ValidationError(path + ": n must be positive");
    const json& entries = field_of(doc, "entries", path);
    if (!entries.is_array()) throw ValidationError(path + ": entries must be an array");

    exactnum::ExactMatrix<F> m(n, n);
    std::vector<bool> assigned(n * n, false);
    for (std::size_t idx = 0; idx < entries.size(); ++idx) {
        const std::string where = path + ": entries[" + std::to_string(idx) + "]";
        const json& item = entries[idx];
        if (!item.is_array() || item.size() != 3)
            throw ValidationError(where + ": expected [i, j, coefficients]");
        const std::size_t i = index_of(item[0], where);
        const std::size_t j = index_of(item[1], where);
        if (i >= n || j >= n) throw ValidationError(where + ": index outside the form");
        if (!item[2].is_array() || item[2].size() != components)
            throw ValidationError(where + ": expected " + std::to_string(components) +
                                  " coefficient components");
        std::vector<exactnum::Rational> parts;
        for (std::size_t c = 0; c < components; ++c)
            parts.push_back(rational_of(item[2][c], where));
        const F value = assemble(parts);
        if ((assigned[i * n + j] && !(m(i, j) == value)) ||
            (assigned[j * n + i] && !(m(j, i) == value)))
            throw ValidationError(where + ": conflicts with an earlier entry");
        m(i, j) = value;
        m(j, i) = value;
        assigned[i * n + j] = assigned[j * n + i] = true;
    }
    try {
        return qform::QuadraticForm<F>(std::move(m));
    } catch (const Error& e) {
        throw ValidationError(path + ": " + e.what());
    }
}

ordered_json matrix_to_json(const Eigen::MatrixXd& m) {
    ordered_json rows = ordered_json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        ordered_json row = ordered_json::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
        rows.push_back(std::move(row));
    }
    return rows;
}

// Strict n-square float matrix; empty optional on any shape or type defect
// (the word-ball cache treats those as a stale file, not an error).
template <typename Json>
std::optional<Eigen::MatrixXd> matrix_from_json(const Json& j, Eigen::Index n) {
    if (!j.is_array() || static_cast<Eigen::Index>(j.size()) != n) return std::nullopt;
    Eigen::MatrixXd m(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        const auto& row = j[static_cast<std::size_t>(i)];
        if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != n) return std::nullopt;
        for (Eigen::Index c = 0; c < n; ++c) {
            const auto& cell = row[static_cast<std::size_t>(c)];
            if (!cell.is_number()) return std::nullopt;
            m(i, c) = cell.template get<double>();
        }
    }
    return m;
}

}  // namespace

liealg::LieAlgebra load_lie_algebra(const std::string& path) {
    const json doc = parse_file(path);
    const std::size_t dim = index_of(field_of(doc, "dim", path), path + ": dim");
    std::vector<std::string> names;
    if (doc.contains("basis_names"))
        names = get_as<std::vector<std::string>>(doc["basis_names"], path + ": basis_names");

    const json& brackets = field_of(doc, "brackets", path);
    if (!brackets.is_array()) throw ValidationError(path + ": brackets must be an array");
    std::vector<liealg::BracketEntry> entries;
    for (std::size_t idx = 0; idx < brackets.size(); ++idx) {
        const std::string where = path + ": brackets[" + std::to_string(idx) + "]";
        const json& item = brackets[idx];
        if (!item.is_array() || item.size() != 4)
            throw ValidationError(where + ": expected [i, j, k, coeff]");
        liealg::BracketEntry entry;
        entry.i = index_of(item[0], where);
        entry.j = index_of(item[1], where);
        entry.k = index_of(item[2], where);
        entry.coeff = rational_of(item[3], where);
        entries.push_back(std::move(entry));
    }
    try {
        return liealg::LieAlgebra(dim, entries, std::move(names));
    } catch (const Error& e) {
        throw ValidationError(path + ": " + e.what());
    }
}

FormFile load_quadratic_form(const std::string& path) {
    const json doc = parse_file(path);
    const auto field = get_as<std::string>(field_of(doc, "field", path), path + ": field");

    FormFile out;
    out.field = field;
    if (field == "Q(sqrt2)") {
        out.sqrt2 = parse_form<exactnum::QuadElement>(
            doc, path, 2, [](const std::vector<exactnum::Rational>& p) {
                return exactnum::QuadElement(p[0], p[1]);
            });
    } else if (field == "Q(cbrt2)") {
        out.cbrt2 = parse_form<exactnum::CubicElement>(
            doc, path, 3, [](const std::vector<exactnum::Rational>& p) {
                return exactnum::CubicElement(p[0], p[1], p[2]);
            });
    } else {
        throw ValidationError(path + ": unknown field tag '" + field +
                              "' (expected Q(sqrt2) or Q(cbrt2))");
    }
    return out;
}

groupcoh::Presentation load_presentation(const std::string& path) {
    const json doc = parse_file(path);
    groupcoh::Presentation pres;
    pres.generators =
        get_as<std::vector<std::string>>(field_of(doc, "generators", path), path + ": generators");
    const json& relators = field_of(doc, "relators", path);
    if (!relators.is_array()) throw ValidationError(path + ": relators must be an array");
    for (std::size_t idx = 0; idx < relators.size(); ++idx)
        pres.relators.push_back(get_as<std::vector<int>>(
            relators[idx], path + ": relators[" + std::to_string(idx) + "]"));
    try {
        groupcoh::validate_presentation(pres);
    } catch (const Error& e) {
        throw ValidationError(path + ": " + e.what());
    }
    return pres;
}

groupcoh::MatrixRep load_representation(const std::string& path,
                                        const groupcoh::Presentation& pres) {
    const json doc = parse_file(path);
    const std::size_t dim = index_of(field_of(doc, "dimension", path), path + ": dimension");
    const json& images = field_of(doc, "images", path);
    if (!images.is_object()) throw ValidationError(path + ": images must be an object");

    const std::set<std::string> declared(pres.generators.begin(), pres.generators.end());
    for (const auto& item : images.items())
        if (declared.find(item.key()) == declared.end())
            throw ValidationError(path + ": image for undeclared generator '" + item.key() + "'");

    // One path for the whole file: strings mean exact rationals, numbers
    // mean floats; mixing the two is ambiguous and rejected.
    bool any_string = false, any_number = false;
    for (const auto& item : images.items())
        if (item.value().is_array())
            for (const json& row : item.value())
                if (row.is_array())
                    for (const json& cell : row) {
                        any_string = any_string || cell.is_string();
                        any_number = any_number || cell.is_number();
                    }
    if (any_string && any_number)
        throw ValidationError(path + ": mixed exact and float entries");

    groupcoh::MatrixRep rep;
    rep.dimension = dim;
    for (const std::string& name : pres.generators) {
        if (!images.contains(name))
            throw ValidationError(path + ": missing image for generator '" + name + "'");
        const json& mat = images[name];
        const std::string where = path + ": image of '" + name + "'";
        if (!mat.is_array() || mat.size() != dim)
            throw ValidationError(where + ": expected " + std::to_string(dim) + " rows");
        if (any_string) {
            exactnum::ExactMatrix<exactnum::Rational> m(dim, dim);
            for (std::size_t i = 0; i < dim; ++i) {
                const json& row = mat[i];
                if (!row.is_array() || row.size() != dim)
                    throw ValidationError(where + ": row " + std::to_string(i) +
                                          " has the wrong length");
                for (std::size_t j = 0; j < dim; ++j) m(i, j) = rational_of(row[j], where);
            }
            rep.exact_images.push_back(std::move(m));
        } else {
            Eigen::MatrixXd m(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
            for (std::size_t i = 0; i < dim; ++i) {
                const json& row = mat[i];
                if (!row.is_array() || row.size() != dim)
                    throw ValidationError(where + ": row " + std::to_string(i) +
                                          " has the wrong length");
                for (std::size_t j = 0; j < dim; ++j)
                    m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
                        get_as<double>(row[j], where);
            }
            rep.float_images.push_back(std::move(m));
        }
    }
    try {
        groupcoh::validate_representation(pres, rep);
    } catch (const Error& e) {
        throw ValidationError(path + ": " + e.what());
    }
    return rep;
}

suspension::FiniteAction load_finite_action(const std::string& path) {
    const json doc = parse_file(path);
    suspension::FiniteAction action;
    action.generators =
        get_as<std::vector<std::string>>(field_of(doc, "generators", path), path + ": generators");
    const json& images = field_of(doc, "images", path);
    if (!images.is_array()) throw ValidationError(path + ": images must be an array");
    for (std::size_t idx = 0; idx < images.size(); ++idx) {
        const std::string where = path + ": images[" + std::to_string(idx) + "]";
        const json& perm = images[idx];
        if (!perm.is_array()) throw ValidationError(where + ": expected a permutation array");
        std::vector<std::size_t> values;
        for (const json& v : perm) values.push_back(index_of(v, where));
        action.images.push_back(std::move(values));
    }
    if (doc.contains("relators")) {
        const json& relators = doc["relators"];
        if (!relators.is_array()) throw ValidationError(path + ": relators must be an array");
        for (std::size_t idx = 0; idx < relators.size(); ++idx)
            action.relators.push_back(get_as<std::vector<int>>(
                relators[idx], path + ": relators[" + std::to_string(idx) + "]"));
    }
    try {
        suspension::validate_action(action);
    } catch (const Error& e) {
        throw ValidationError(path + ": " + e.what());
    }
    return action;
}

std::vector<Eigen::MatrixXd> load_float_matrices(const std::string& path) {
    const json doc = parse_file(path);
    const auto n =
        static_cast<Eigen::Index>(index_of(field_of(doc, "n", path), path + ": n"));
    if (n == 0) throw ValidationError(path + ": n must be positive");
    const json& mats = field_of(doc, "matrices", path);
    if (!mats.is_array() || mats.empty())
        throw ValidationError(path + ": matrices must be a nonempty array");
    std::vector<Eigen::MatrixXd> out;
    for (std::size_t idx = 0; idx < mats.size(); ++idx) {
        auto m = matrix_from_json(mats[idx], n);
        if (!m)
            throw ValidationError(path + ": matrices[" + std::to_string(idx) +
                                  "] is not a " + std::to_string(n) + "-square float matrix");
        out.push_back(std::move(*m));
    }
    return out;
}

void save_word_ball(const std::string& path, const dynamics::WordBall& ball) {
    ordered_json doc;
    doc["format"] = "folrig-word-ball";
    doc["radius"] = ball.radius;
    doc["dedup_tol"] = ball.dedup_tol;
    doc["closed"] = ball.closed;
    ordered_json gens = ordered_json::array();
    for (const auto& g : ball.generators) gens.push_back(matrix_to_json(g));
    doc["generators"] = std::move(gens);
    ordered_json elements = ordered_json::array();
    for (const auto& el : ball.elements) {
        ordered_json e;
        e["parent"] = el.parent;
        e["letter"] = el.letter;
        e["length"] = el.length;
        e["matrix"] = matrix_to_json(el.matrix);
        elements.push_back(std::move(e));
    }
    doc["integrity"] = fnv1a64_hex(elements.dump());
    doc["elements"] = std::move(elements);

    std::ofstream out(path);
    if (!out) throw ValidationError("cannot write file '" + path + "'");
    out << doc.dump() << "\n";
}

std::optional<dynamics::WordBall> load_word_ball(const std::string& path,
                                                 const std::vector<Eigen::MatrixXd>& generators,
                                                 std::size_t radius, double dedup_tol) {
    std::ifstream in(path);
    if (!in) return std::nullopt;
    // Parse order-preserving: the integrity hash covers the serialized
    // "elements" array, so the re-dump must reproduce the on-disk key order.
    ordered_json doc;
    try {
        doc = ordered_json::parse(in);
    } catch (const ordered_json::exception&) {
        return std::nullopt;
    }
    if (!doc.is_object() || doc.value("format", "") != "folrig-word-ball") return std::nullopt;
    if (doc.value("radius", std::size_t{0}) != radius) return std::nullopt;
    if (doc.value("dedup_tol", -1.0) != dedup_tol) return std::nullopt;
    if (!doc.contains("generators") || !doc.contains("elements") || !doc.contains("integrity"))
        return std::nullopt;
    if (doc["integrity"].get<std::string>() != fnv1a64_hex(doc["elements"].dump()))
        return std::nullopt;

    if (generators.empty()) return std::nullopt;
    const Eigen::Index n = generators[0].rows();

    // The stored list is the expanded one (input order, then auto-appended
    // inverses); the caller's input must match its prefix bit for bit.
    const ordered_json& gens = doc["generators"];
    if (!gens.is_array() || gens.size() < generators.size()) return std::nullopt;
    dynamics::WordBall ball;
    for (const ordered_json& g : gens) {
        auto m = matrix_from_json(g, n);
        if (!m) return std::nullopt;
        ball.generators.push_back(std::move(*m));
    }
    for (std::size_t k = 0; k < generators.size(); ++k)
        if (ball.generators[k] != generators[k]) return std::nullopt;

    ball.radius = radius;
    ball.dedup_tol = dedup_tol;
    ball.closed = doc.value("closed", false);
    const ordered_json& elements = doc["elements"];
    if (!elements.is_array() || elements.empty()) return std::nullopt;
    for (std::size_t idx = 0; idx < elements.size(); ++idx) {
        const ordered_json& e = elements[idx];
        if (!e.is_object()) return std::nullopt;
        dynamics::WordBallElement el;
        el.parent = e.value("parent", std::int64_t{-2});
        el.letter = e.value("letter", -2);
        el.length = e.value("length", std::size_t{0});
        if (el.parent < -1 || el.parent >= static_cast<std::int64_t>(idx)) return std::nullopt;
        if (el.letter < -1 || el.letter >= static_cast<int>(ball.generators.size()))
            return std::nullopt;
        if (!e.contains("matrix")) return std::nullopt;
        auto m = matrix_from_json(e["matrix"], n);
        if (!m) return std::nullopt;
        el.matrix = std::move(*m);
        ball.elements.push_back(std::move(el));
    }
    return ball;
}

}  // namespace folrig::io
