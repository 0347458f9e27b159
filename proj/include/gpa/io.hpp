#pragma once

// Instance configuration files, the algebra cache format, and the
// deterministic instance hash that guards cache loading. External files
// use 1-based vertex indices.

#include "gpa/module.hpp"
#include "gpa/numeric.hpp"

#include "json.hpp"

#include <cstdio>
#include <fstream>
#include <string>

namespace gpa {

constexpr const char* kEngineVersion = "0.1.0";
constexpr int kCacheSchemaVersion = 1;

struct FieldSpec {
    bool rational = true;
    std::uint64_t prime = 0;

    std::string str() const {
        return rational ? "rational" : "p:" + std::to_string(prime);
    }
    nlohmann::json to_json() const {
        if (rational)
            return "rational";
        return nlohmann::json{{"prime", prime}};
    }
};

enum class SymmetrizerSpec { Minimal, Explicit, Multiplier };

struct InstanceConfig {
    IntMatrix cartan;
    SymmetrizerSpec sym_kind = SymmetrizerSpec::Minimal;
    std::vector<int> symmetrizer;
    int multiplier = 1;
    bool default_orientation = true;
    std::vector<std::pair<int, int>> orientation; // 0-based after parsing
    FieldSpec field;
    int max_degree = 0; // 0 = use the default bound
    std::string cache_path;
};

inline InstanceConfig parse_config(const nlohmann::json& j) {
    InstanceConfig cfg;
    if (!j.contains("cartan") || !j["cartan"].is_array())
        throw ConfigError("config needs a \"cartan\" matrix");
    for (const auto& row : j["cartan"]) {
        std::vector<int> r;
        for (const auto& x : row)
            r.push_back(x.get<int>());
        cfg.cartan.push_back(std::move(r));
    }
    if (j.contains("symmetrizer")) {
        const auto& s = j["symmetrizer"];
        if (s.is_string() && s.get<std::string>() == "minimal") {
            cfg.sym_kind = SymmetrizerSpec::Minimal;
        } else if (s.is_array()) {
            cfg.sym_kind = SymmetrizerSpec::Explicit;
            for (const auto& x : s)
                cfg.symmetrizer.push_back(x.get<int>());
        } else if (s.is_object() && s.contains("multiplier")) {
            cfg.sym_kind = SymmetrizerSpec::Multiplier;
            cfg.multiplier = s["multiplier"].get<int>();
            if (cfg.multiplier <= 0)
                throw ConfigError("symmetrizer multiplier must be positive");
        } else {
            throw ConfigError("symmetrizer must be \"minimal\", a list, or "
                              "{\"multiplier\": m}");
        }
    }
    if (j.contains("orientation")) {
        const auto& o = j["orientation"];
        if (o.is_string() && o.get<std::string>() == "default") {
            cfg.default_orientation = true;
        } else if (o.is_array()) {
            cfg.default_orientation = false;
            for (const auto& pr : o) {
                if (!pr.is_array() || pr.size() != 2)
                    throw ConfigError("orientation entries must be pairs");
                cfg.orientation.emplace_back(pr[0].get<int>() - 1,
                                             pr[1].get<int>() - 1);
            }
        } else {
            throw ConfigError(
                "orientation must be \"default\" or a list of pairs");
        }
    }
    if (j.contains("field")) {
        const auto& f = j["field"];
        if (f.is_string() && f.get<std::string>() == "rational") {
            cfg.field.rational = true;
        } else if (f.is_object() && f.contains("prime")) {
            cfg.field.rational = false;
            cfg.field.prime = f["prime"].get<std::uint64_t>();
        } else {
            throw ConfigError("field must be \"rational\" or {\"prime\": p}");
        }
    }
    if (j.contains("max_degree"))
        cfg.max_degree = j["max_degree"].get<int>();
    if (j.contains("cache"))
        cfg.cache_path = j["cache"].get<std::string>();
    return cfg;
}

inline InstanceConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ConfigError("cannot open config file: " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw ConfigError("config parse error in " + path + ": " + e.what());
    }
    return parse_config(j);
}

inline CartanData resolve_cartan(const InstanceConfig& cfg) {
    std::vector<int> d;
    switch (cfg.sym_kind) {
    case SymmetrizerSpec::Explicit:
        d = cfg.symmetrizer;
        break;
    case SymmetrizerSpec::Minimal:
        d = minimal_symmetrizer(cfg.cartan).d;
        break;
    case SymmetrizerSpec::Multiplier:
        d = minimal_symmetrizer(cfg.cartan).d;
        for (int& x : d)
            x *= cfg.multiplier;
        break;
    }
    std::optional<std::vector<std::pair<int, int>>> omega;
    if (!cfg.default_orientation)
        omega = cfg.orientation;
    try {
        return validate_gcm(cfg.cartan, d, std::move(omega));
    } catch (const Error& e) {
        throw ConfigError(std::string("invalid instance: ") + e.what());
    }
}

/// Dense serialization of a module: per-vertex dimensions plus one exact
/// action matrix per generator. Used to dump witnesses for failed checks.
template <class F>
nlohmann::json module_json(const ModuleRep<F>& M) {
    nlohmann::json j;
    j["dims"] = M.dims;
    nlohmann::json acts = nlohmann::json::array();
    for (size_t a = 0; a < M.act.size(); ++a) {
        nlohmann::json aj;
        aj["arrow"] = M.A->pres.arrows[a].name;
        nlohmann::json rows = nlohmann::json::array();
        for (int r = 0; r < M.act[a].rows; ++r) {
            nlohmann::json row = nlohmann::json::array();
            for (int c = 0; c < M.act[a].cols; ++c)
                row.push_back(M.act[a].at(r, c).str());
            rows.push_back(std::move(row));
        }
        aj["matrix"] = std::move(rows);
        acts.push_back(std::move(aj));
    }
    j["actions"] = std::move(acts);
    j["side"] = M.A->opposite_side ? "opposite" : "left";
    return j;
}

inline nlohmann::json instance_json(const CartanData& cd,
                                    const FieldSpec& field) {
    nlohmann::json j;
    j["cartan"] = cd.C;
    j["symmetrizer"] = cd.D;
    nlohmann::json om = nlohmann::json::array();
    for (const auto& [a, b] : cd.omega)
        om.push_back({a + 1, b + 1});
    j["orientation"] = om;
    j["field"] = field.to_json();
    return j;
}

inline std::string instance_hash(const CartanData& cd,
                                 const FieldSpec& field) {
    std::string s = instance_json(cd, field).dump();
    std::uint64_t h = 1469598103934665603ULL; // FNV-1a
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx",
                  static_cast<unsigned long long>(h));
    return std::string(buf);
}

// ---------------------------------------------------------------------------
// Algebra cache
// ---------------------------------------------------------------------------

template <class F>
nlohmann::json cache_json(const FinDimAlgebra<F>& A, const CartanData& cd,
                          const FieldSpec& field) {
    nlohmann::json j;
    j["schema_version"] = kCacheSchemaVersion;
    j["engine_version"] = kEngineVersion;
    j["instance_hash"] = instance_hash(cd, field);
    j["instance"] = instance_json(cd, field);
    nlohmann::json basis = nlohmann::json::array();
    for (const PathWord& w : A.basis) {
        nlohmann::json bw;
        bw["src"] = w.src + 1;
        bw["tgt"] = w.tgt + 1;
        bw["arrows"] = w.arrows;
        basis.push_back(std::move(bw));
    }
    j["basis"] = std::move(basis);
    nlohmann::json table = nlohmann::json::array();
    for (int i = 0; i < A.dim(); ++i)
        for (int k = 0; k < A.dim(); ++k) {
            const auto& sv = A.mult_basis(i, k);
            if (sv.empty())
                continue;
            nlohmann::json entry;
            entry.push_back(i);
            entry.push_back(k);
            nlohmann::json coeffs = nlohmann::json::array();
            for (const auto& [t, c] : sv)
                coeffs.push_back({t, c.str()});
            entry.push_back(std::move(coeffs));
            table.push_back(std::move(entry));
        }
    j["table"] = std::move(table);
    nlohmann::json anf = nlohmann::json::array();
    for (const auto& sv : A.arrow_nf) {
        nlohmann::json coeffs = nlohmann::json::array();
        for (const auto& [t, c] : sv)
            coeffs.push_back({t, c.str()});
        anf.push_back(std::move(coeffs));
    }
    j["arrow_nf"] = std::move(anf);
    return j;
}

template <class F>
void save_cache(const std::string& path, const FinDimAlgebra<F>& A,
                const CartanData& cd, const FieldSpec& field) {
    std::ofstream out(path);
    if (!out)
        throw CacheError("cannot write cache file: " + path);
    out << cache_json(A, cd, field).dump(2) << "\n";
}

template <class F>
std::shared_ptr<FinDimAlgebra<F>> load_cache(const std::string& path,
                                             const CartanData& cd,
                                             const FieldSpec& field) {
    std::ifstream in(path);
    if (!in)
        throw CacheError("cannot open cache file: " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw CacheError("cache parse error: " + std::string(e.what()));
    }
    if (!j.contains("schema_version") ||
        j["schema_version"].get<int>() != kCacheSchemaVersion)
        throw CacheError("cache schema version mismatch");
    std::string expect = instance_hash(cd, field);
    if (!j.contains("instance_hash") ||
        j["instance_hash"].get<std::string>() != expect)
        throw CacheError("cache instance hash mismatch: expected " + expect);
    std::vector<PathWord> basis;
    for (const auto& bw : j["basis"]) {
        PathWord w;
        w.src = bw["src"].get<int>() - 1;
        w.tgt = bw["tgt"].get<int>() - 1;
        for (const auto& a : bw["arrows"])
            w.arrows.push_back(a.get<int>());
        basis.push_back(std::move(w));
    }
    size_t dim = basis.size();
    std::vector<SparseVec<F>> table(dim * dim);
    for (const auto& entry : j["table"]) {
        int i = entry[0].get<int>();
        int k = entry[1].get<int>();
        SparseVec<F> sv;
        for (const auto& pr : entry[2])
            sv.emplace_back(pr[0].get<int>(),
                            F::from_string(pr[1].get<std::string>()));
        table[static_cast<size_t>(i) * dim + k] = std::move(sv);
    }
    std::vector<SparseVec<F>> anf;
    for (const auto& coeffs : j["arrow_nf"]) {
        SparseVec<F> sv;
        for (const auto& pr : coeffs)
            sv.emplace_back(pr[0].get<int>(),
                            F::from_string(pr[1].get<std::string>()));
        anf.push_back(std::move(sv));
    }
    auto pres = quiver_presentation(cd, AlgebraKind::Preprojective);
    try {
        return FinDimAlgebra<F>::from_parts(std::move(pres), std::move(basis),
                                            std::move(table), std::move(anf));
    } catch (const RelationViolation& e) {
        throw CacheError(std::string("cache integrity check failed: ") +
                         e.what());
    }
}

} // namespace gpa
