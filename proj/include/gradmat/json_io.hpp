#pragma once

/// JSON (de)serialization: scalars as strings ("a/b", "r mod p"), matrices
/// as row-major nested arrays of scalar strings, groups as invariant-factor
/// lists, gradings keyed by element coordinates. All emission orders are
/// deterministic so output is byte-stable across runs.

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include <json.hpp>

#include "gradmat/classify.hpp"
#include "gradmat/common.hpp"
#include "gradmat/galois.hpp"
#include "gradmat/graded.hpp"
#include "gradmat/group.hpp"
#include "gradmat/matrix.hpp"
#include "gradmat/scalar.hpp"

namespace gradmat {

using json = nlohmann::ordered_json;

inline json group_to_json(const FiniteAbelianGroup& g) {
    return json{{"factors", g.factors()}};
}

inline FiniteAbelianGroup group_from_json(const json& j) {
    if (!j.contains("factors") || !j["factors"].is_array())
        throw invalid_argument("group JSON needs a \"factors\" array");
    return FiniteAbelianGroup(j["factors"].get<std::vector<std::int64_t>>());
}

inline GroupElement element_from_string(const FiniteAbelianGroup& g, const std::string& s) {
    GroupElement e;
    std::string tok;
    for (std::size_t i = 0; i <= s.size(); ++i) {
        if (i == s.size() || s[i] == ',') {
            if (tok.empty()) throw invalid_argument("bad element coordinates: " + s);
            e.coords.push_back(std::stoll(tok));
            tok.clear();
        } else {
            tok.push_back(s[i]);
        }
    }
    e = g.reduce(e);
    return e;
}

inline json matrix_to_json(const Matrix& m) {
    json rows = json::array();
    for (std::int64_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::int64_t j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).to_string());
        rows.push_back(std::move(row));
    }
    return rows;
}

inline Matrix matrix_from_json(const Field& f, const json& j) {
    if (!j.is_array() || j.empty()) throw invalid_argument("matrix JSON must be a nested array");
    std::vector<std::vector<Scalar>> rows;
    for (const auto& jr : j) {
        std::vector<Scalar> row;
        for (const auto& e : jr) row.push_back(Scalar::parse(f, e.get<std::string>()));
        rows.push_back(std::move(row));
    }
    return Matrix::from_rows(f, rows);
}

inline json grading_to_json(const Grading& g) {
    json comps = json::object();
    for (const auto& [s, basis] : g.components) {
        if (basis.empty()) continue;
        json list = json::array();
        for (const auto& m : basis) list.push_back(matrix_to_json(m));
        comps[s.to_string()] = std::move(list);
    }
    return json{{"group", group_to_json(g.group)},
                {"field", g.field.to_string()},
                {"m", g.size},
                {"components", std::move(comps)}};
}

inline Grading grading_from_json(const json& j) {
    Grading g;
    g.group = group_from_json(j.at("group"));
    g.field = Field::parse(j.at("field").get<std::string>());
    g.size = j.at("m").get<std::int64_t>();
    if (g.size < 1) throw invalid_argument("grading size must be positive");
    g.algebra_dim = g.size * g.size;
    for (const auto& [key, val] : j.at("components").items()) {
        GroupElement s = element_from_string(g.group, key);
        std::vector<Matrix> basis;
        for (const auto& jm : val) basis.push_back(matrix_from_json(g.field, jm));
        g.components[s] = std::move(basis);
    }
    return g;
}

inline json extension_to_json(const GaloisExtension& e) {
    json mul = json::array();
    for (const auto& row : e.algebra().constants()) {
        json jr = json::array();
        for (const auto& v : row) {
            json jv = json::array();
            for (const auto& s : v) jv.push_back(s.to_string());
            jr.push_back(std::move(jv));
        }
        mul.push_back(std::move(jr));
    }
    json action = json::object();
    for (const auto& s : e.group().elements())
        action[s.to_string()] = matrix_to_json(e.action_matrix(s));
    return json{{"base", e.base().to_string()},
                {"dim", e.dim()},
                {"mul_table", std::move(mul)},
                {"group", group_to_json(e.group())},
                {"action", std::move(action)}};
}

inline GaloisExtension extension_from_json(const json& j) {
    Field k = Field::parse(j.at("base").get<std::string>());
    std::int64_t d = j.at("dim").get<std::int64_t>();
    std::vector<std::vector<std::vector<Scalar>>> c;
    for (const auto& jr : j.at("mul_table")) {
        std::vector<std::vector<Scalar>> row;
        for (const auto& jv : jr) {
            std::vector<Scalar> v;
            for (const auto& s : jv) v.push_back(Scalar::parse(k, s.get<std::string>()));
            row.push_back(std::move(v));
        }
        c.push_back(std::move(row));
    }
    if (static_cast<std::int64_t>(c.size()) != d)
        throw invalid_argument("extension dimension mismatch");
    std::vector<Scalar> unit(static_cast<std::size_t>(d), Scalar::zero(k));
    unit[0] = Scalar::one(k);
    // the unit is not part of the schema; it must be the first basis vector
    CommutativeAlgebra l(k, std::move(c), std::move(unit));
    FiniteAbelianGroup h = group_from_json(j.at("group"));
    std::map<GroupElement, Matrix> action;
    for (const auto& [key, val] : j.at("action").items())
        action[element_from_string(h, key)] = matrix_from_json(k, val);
    return GaloisExtension(std::move(l), std::move(h), std::move(action));
}

inline std::int64_t to_int64(const BigInt& v) {
    if (v > std::numeric_limits<std::int64_t>::max() ||
        v < std::numeric_limits<std::int64_t>::min())
        throw resource_limit("count does not fit in 64 bits");
    return v.convert_to<std::int64_t>();
}

inline json orbit_count_to_json(std::int64_t n, std::int64_t m, const OrbitCount& oc,
                                bool include_representatives) {
    json by = json::object();
    for (const auto& [d, cnt] : oc.by_orbit_length) by[std::to_string(d)] = to_int64(cnt);
    json out = json{{"n", n}, {"m", m}, {"count", to_int64(oc.count)},
                    {"by_orbit_length", std::move(by)}};
    if (include_representatives) {
        json reps = json::array();
        for (const auto& r : oc.representatives) reps.push_back(r.parts);
        out["representatives"] = std::move(reps);
    }
    return out;
}

} // namespace gradmat
