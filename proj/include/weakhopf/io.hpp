#pragma once

#include "weakhopf/errors.hpp"
#include "weakhopf/linmap.hpp"
#include "weakhopf/modules.hpp"
#include "weakhopf/rational.hpp"
#include "weakhopf/weak_bimonoid.hpp"

#include "json.hpp"

#include <cstdint>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace weakhopf {

using json = nlohmann::ordered_json;

inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr const char* kTensorOrder = "left-major";

// ---------------------------------------------------------------------------
// File format: one algebra per JSON document.
//
//   {
//     "tensor_order": "left-major",          (required, fixed value)
//     "dim": 2,
//     "mu":    dim   rows × dim²  cols,      (arrays of arrays of "p/q" strings)
//     "eta":   flat array, dim entries,      (column vector)
//     "delta": dim²  rows × dim   cols,
//     "eps":   flat array, dim entries,      (row vector)
//     "braid": dim²  rows × dim²  cols,      (optional)
//     "modules": { "name": {"carrier": d, "action": d rows × d·dim cols}, … },
//     "meta":  { "name": "...", … }          (optional, free-form strings)
//   }
//
// Basis vectors of a tensor product are indexed with the left factor most
// significant: e_i⊗e_j ↦ i·dim(right) + j.
// ---------------------------------------------------------------------------

struct ModuleSpec {
    int carrier = 0;
    LinMap action;
};

struct AlgebraSpec {
    std::string name = "unnamed";
    int dim = 0;
    LinMap mu, eta, delta, eps;
    std::optional<LinMap> braid;
    std::vector<std::pair<std::string, ModuleSpec>> modules;
    std::vector<std::pair<std::string, std::string>> meta;

    WeakBimonoid to_algebra() const { return WeakBimonoid(dim, mu, eta, delta, eps, braid); }

    RightModule find_module(const std::string& module_name) const {
        for (const auto& [n, m] : modules)
            if (n == module_name) return RightModule{m.carrier, m.action};
        throw ParseError("module '" + module_name + "' is not defined in the input file");
    }
};

namespace detail {

inline Rational parse_rational_field(const json& j, const std::string& where) {
    if (j.is_string()) {
        try {
            return rat_from_string(j.get<std::string>());
        } catch (const std::exception& e) {
            throw ParseError(where + ": " + e.what());
        }
    }
    if (j.is_number_integer()) return Rational(j.get<long long>());
    throw ParseError(where + ": expected an exact rational string \"p/q\" or an integer");
}

inline LinMap parse_matrix(const json& j, int cod, int dom, const std::string& field) {
    if (!j.is_array() || static_cast<int>(j.size()) != cod)
        throw ParseError(field + ": expected " + std::to_string(cod) + " rows");
    LinMap out = LinMap::zero(cod, dom);
    for (int r = 0; r < cod; ++r) {
        const json& row = j[r];
        if (!row.is_array() || static_cast<int>(row.size()) != dom)
            throw ParseError(field + "[" + std::to_string(r) + "]: expected " +
                             std::to_string(dom) + " entries");
        for (int c = 0; c < dom; ++c) {
            Rational v = parse_rational_field(
                row[c], field + "[" + std::to_string(r) + "][" + std::to_string(c) + "]");
            if (v != 0) out.set_entry(r, c, v);
        }
    }
    return out;
}

inline std::vector<Rational> parse_flat_vector(const json& j, int len, const std::string& field) {
    if (!j.is_array() || static_cast<int>(j.size()) != len)
        throw ParseError(field + ": expected a flat array of " + std::to_string(len) +
                         " entries");
    std::vector<Rational> out;
    out.reserve(len);
    for (int k = 0; k < len; ++k)
        out.push_back(parse_rational_field(j[k], field + "[" + std::to_string(k) + "]"));
    return out;
}

inline json matrix_to_json(const LinMap& m) {
    json rows = json::array();
    for (const auto& row : m.to_rows()) {
        json jr = json::array();
        for (const auto& v : row) jr.push_back(rat_to_string(v));
        rows.push_back(jr);
    }
    return rows;
}

inline json flat_vector_to_json(const std::vector<Rational>& v) {
    json out = json::array();
    for (const auto& x : v) out.push_back(rat_to_string(x));
    return out;
}

}  // namespace detail

inline AlgebraSpec parse_algebra(const json& j) {
    if (!j.is_object()) throw ParseError("top level: expected a JSON object");
    static const std::vector<std::string> known = {"tensor_order", "dim",   "mu",      "eta",
                                                   "delta",        "eps",   "braid",   "modules",
                                                   "meta"};
    for (const auto& [key, value] : j.items()) {
        (void)value;
        bool ok = false;
        for (const auto& k : known) ok = ok || k == key;
        if (!ok) throw ParseError("unknown field '" + key + "'");
    }
    if (!j.contains("tensor_order") || !j["tensor_order"].is_string() ||
        j["tensor_order"].get<std::string>() != kTensorOrder)
        throw ParseError("tensor_order: required field with the fixed value \"left-major\"");
    if (!j.contains("dim") || !j["dim"].is_number_integer())
        throw ParseError("dim: required integer field");
    int dim = j["dim"].get<int>();
    if (dim <= 0) throw ParseError("dim: must be positive");
    for (const char* f : {"mu", "eta", "delta", "eps"})
        if (!j.contains(f)) throw ParseError(std::string(f) + ": required field");

    AlgebraSpec spec;
    spec.dim = dim;
    spec.mu = detail::parse_matrix(j["mu"], dim, dim * dim, "mu");
    spec.delta = detail::parse_matrix(j["delta"], dim * dim, dim, "delta");
    std::vector<Rational> eta = detail::parse_flat_vector(j["eta"], dim, "eta");
    std::vector<Rational> eps = detail::parse_flat_vector(j["eps"], dim, "eps");
    spec.eta = LinMap::zero(dim, 1);
    spec.eps = LinMap::zero(1, dim);
    for (int k = 0; k < dim; ++k) {
        if (eta[k] != 0) spec.eta.set_entry(k, 0, eta[k]);
        if (eps[k] != 0) spec.eps.set_entry(0, k, eps[k]);
    }
    if (j.contains("braid"))
        spec.braid = detail::parse_matrix(j["braid"], dim * dim, dim * dim, "braid");
    if (j.contains("modules")) {
        const json& mods = j["modules"];
        if (!mods.is_object()) throw ParseError("modules: expected an object");
        for (const auto& [name, body] : mods.items()) {
            const std::string where = "modules." + name;
            if (!body.is_object() || !body.contains("carrier") ||
                !body["carrier"].is_number_integer() || !body.contains("action"))
                throw ParseError(where + ": expected {\"carrier\": d, \"action\": matrix}");
            ModuleSpec m;
            m.carrier = body["carrier"].get<int>();
            if (m.carrier < 0) throw ParseError(where + ".carrier: must be nonnegative");
            m.action = detail::parse_matrix(body["action"], m.carrier, m.carrier * dim,
                                            where + ".action");
            spec.modules.emplace_back(name, std::move(m));
        }
    }
    if (j.contains("meta")) {
        const json& meta = j["meta"];
        if (!meta.is_object()) throw ParseError("meta: expected an object of strings");
        for (const auto& [key, value] : meta.items()) {
            if (!value.is_string()) throw ParseError("meta." + key + ": expected a string");
            spec.meta.emplace_back(key, value.get<std::string>());
            if (key == "name") spec.name = value.get<std::string>();
        }
    }
    return spec;
}

inline AlgebraSpec parse_algebra_text(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("JSON syntax: ") + e.what());
    }
    return parse_algebra(j);
}

inline AlgebraSpec load_algebra_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open file: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_algebra_text(buf.str());
}

inline json serialize_algebra(const AlgebraSpec& spec) {
    json j = json::object();
    j["tensor_order"] = kTensorOrder;
    j["dim"] = spec.dim;
    j["mu"] = detail::matrix_to_json(spec.mu);
    std::vector<Rational> eta(spec.dim), eps(spec.dim);
    for (int k = 0; k < spec.dim; ++k) {
        eta[k] = spec.eta.entry(k, 0);
        eps[k] = spec.eps.entry(0, k);
    }
    j["eta"] = detail::flat_vector_to_json(eta);
    j["delta"] = detail::matrix_to_json(spec.delta);
    j["eps"] = detail::flat_vector_to_json(eps);
    if (spec.braid) j["braid"] = detail::matrix_to_json(*spec.braid);
    if (!spec.modules.empty()) {
        json mods = json::object();
        for (const auto& [name, m] : spec.modules) {
            json body = json::object();
            body["carrier"] = m.carrier;
            body["action"] = detail::matrix_to_json(m.action);
            mods[name] = body;
        }
        j["modules"] = mods;
    }
    if (!spec.meta.empty()) {
        json meta = json::object();
        for (const auto& [key, value] : spec.meta) meta[key] = value;
        j["meta"] = meta;
    }
    return j;
}

inline std::string serialize_algebra_text(const AlgebraSpec& spec) {
    return serialize_algebra(spec).dump(2) + "\n";
}

// 64-bit FNV-1a over the compact canonical serialization.
inline std::string algebra_digest(const AlgebraSpec& spec) {
    std::string canonical = serialize_algebra(spec).dump();
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char ch : canonical) {
        h ^= ch;
        h *= 1099511628211ull;
    }
    static const char* hexdigits = "0123456789abcdef";
    std::string hex(16, '0');
    for (int k = 15; k >= 0; --k) {
        hex[k] = hexdigits[h & 0xf];
        h >>= 4;
    }
    return "fnv1a64:" + hex;
}

}  // namespace weakhopf
