#include "pforge/io.hpp"

#include "json.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace pforge {

namespace {

using nlohmann::json;
using ordered_json = nlohmann::ordered_json;

FieldSpec parse_field(const json& j) {
    if (j.is_string()) {
        if (j.get<std::string>() == "Q") return FieldSpec{0};
        throw error("field must be \"Q\" or {\"prime\": p}");
    }
    if (j.is_object() && j.contains("prime") &&
        j.at("prime").is_number_integer()) {
        return FieldSpec{require_supported_prime(j.at("prime").get<long>())};
    }
    throw error("field must be \"Q\" or {\"prime\": p}");
}

std::vector<std::string> string_list(const json& j, const char* what) {
    if (!j.is_array()) throw error(std::string(what) + " must be an array");
    std::vector<std::string> out;
    for (const json& e : j) {
        if (!e.is_string())
            throw error(std::string(what) + " must contain strings");
        out.push_back(e.get<std::string>());
    }
    return out;
}

}  // namespace

StructureEnv load_structure(std::istream& in) {
    json j;
    try {
        j = json::parse(in);
    } catch (const json::exception& e) {
        throw error(std::string("JSON parse error: ") + e.what());
    }
    if (!j.is_object()) throw error("structure file must be a JSON object");
    if (!j.contains("format_version") ||
        !j.at("format_version").is_number_integer() ||
        j.at("format_version").get<int>() != kFormatVersion)
        throw error("unsupported or missing format_version (expected " +
                    std::to_string(kFormatVersion) + ")");
    if (!j.contains("field")) throw error("missing field");

    StructureEnv env;
    env.field = parse_field(j.at("field"));

    if (!j.contains("spaces") || !j.at("spaces").is_object())
        throw error("missing spaces object");
    // Deterministic order: sorted by name (json object iteration is sorted).
    for (const auto& [name, sj] : j.at("spaces").items()) {
        if (!sj.is_object() || !sj.contains("dim") ||
            !sj.at("dim").is_number_integer())
            throw error("space " + name + " needs an integer dim");
        int dim = sj.at("dim").get<int>();
        if (dim < 0) throw error("space " + name + " has negative dim");
        std::vector<std::string> labels;
        if (sj.contains("basis")) {
            labels = string_list(sj.at("basis"), "basis");
            if (static_cast<int>(labels.size()) != dim)
                throw error("space " + name + " basis length != dim");
        }
        env.add_space(name, dim, std::move(labels));
    }

    if (j.contains("maps")) {
        if (!j.at("maps").is_object()) throw error("maps must be an object");
        for (const auto& [name, mj] : j.at("maps").items()) {
            if (!mj.is_object() || !mj.contains("signature"))
                throw error("map " + name + " needs a signature");
            const json& sig = mj.at("signature");
            if (!sig.is_object() || !sig.contains("source") ||
                !sig.contains("target"))
                throw error("map " + name +
                            " signature needs source and target");
            std::vector<std::string> source =
                string_list(sig.at("source"), "signature.source");
            std::vector<std::string> target =
                string_list(sig.at("target"), "signature.target");
            for (const std::string& s : source)
                if (!env.has_space(s))
                    throw error("map " + name + " uses unknown space " + s);
            for (const std::string& s : target)
                if (!env.has_space(s))
                    throw error("map " + name + " uses unknown space " + s);
            LinMap m = make_zero_map(env, source, target);
            std::set<std::vector<int>> seen;
            if (mj.contains("entries")) {
                if (!mj.at("entries").is_array())
                    throw error("map " + name + " entries must be an array");
                std::size_t legs = source.size() + target.size();
                for (const json& ej : mj.at("entries")) {
                    if (!ej.is_array() || ej.size() != legs + 1)
                        throw error("map " + name +
                                    " entry must be [target indices..., "
                                    "source indices..., scalar]");
                    std::vector<int> tgt, src;
                    for (std::size_t i = 0; i < legs; ++i) {
                        if (!ej[i].is_number_integer())
                            throw error("map " + name +
                                        " entry indices must be integers");
                        int idx = ej[i].get<int>();
                        const std::vector<int>& dims =
                            i < target.size() ? m.tgt_dims : m.src_dims;
                        std::size_t leg =
                            i < target.size() ? i : i - target.size();
                        if (idx < 0 || idx >= dims[leg])
                            throw error("map " + name + " index " +
                                        std::to_string(idx) +
                                        " out of range");
                        (i < target.size() ? tgt : src).push_back(idx);
                    }
                    std::vector<int> full = tgt;
                    full.insert(full.end(), src.begin(), src.end());
                    if (!seen.insert(full).second)
                        throw error("map " + name +
                                    " has a duplicate entry at tuple " +
                                    tuple_to_string(full));
                    if (!ej[legs].is_string())
                        throw error("map " + name +
                                    " scalars must be strings");
                    m.set(tgt, src,
                          Scalar::parse(ej[legs].get<std::string>(),
                                        env.field));
                }
            }
            env.maps.emplace(name, std::move(m));
        }
    }

    if (j.contains("roles")) {
        if (!j.at("roles").is_object())
            throw error("roles must be an object");
        std::map<std::string, LinMap> bound;
        for (const auto& [role, tj] : j.at("roles").items()) {
            if (!tj.is_string()) throw error("role targets must be strings");
            std::string target = tj.get<std::string>();
            if (!env.has_map(target))
                throw error("role " + role + " binds unknown map " + target);
            bound.emplace(role, env.map_at(target));
        }
        // Role names win over raw file names on collision.
        for (auto& [role, m] : bound) env.maps[role] = std::move(m);
    }
    return env;
}

StructureEnv load_structure_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw error("cannot open " + path);
    return load_structure(in);
}

std::string emit_structure(const StructureEnv& env) {
    ordered_json j;
    j["format_version"] = kFormatVersion;
    if (env.field.is_rational())
        j["field"] = "Q";
    else
        j["field"] = ordered_json{{"prime", env.field.prime}};
    ordered_json spaces = ordered_json::object();
    for (const SpaceDecl& s : env.spaces) {
        ordered_json sj{{"dim", s.dim}};
        if (!s.basis_labels.empty()) sj["basis"] = s.basis_labels;
        spaces[s.name] = std::move(sj);
    }
    j["spaces"] = std::move(spaces);
    ordered_json maps = ordered_json::object();
    for (const auto& [name, m] : env.maps) {
        ordered_json mj;
        mj["signature"] =
            ordered_json{{"source", m.source}, {"target", m.target}};
        ordered_json entries = ordered_json::array();
        std::vector<int> tgt(m.tgt_dims.size(), 0);
        do {
            std::vector<int> src(m.src_dims.size(), 0);
            do {
                const Scalar& v = m.at(tgt, src);
                if (v.is_zero()) continue;
                ordered_json row = ordered_json::array();
                for (int i : tgt) row.push_back(i);
                for (int i : src) row.push_back(i);
                row.push_back(v.to_string());
                entries.push_back(std::move(row));
            } while (next_tuple(src, m.src_dims));
        } while (next_tuple(tgt, m.tgt_dims));
        mj["entries"] = std::move(entries);
        maps[name] = std::move(mj);
    }
    j["maps"] = std::move(maps);
    return j.dump(2) + "\n";
}

void save_structure_file(const std::string& path, const StructureEnv& env) {
    std::ofstream out(path);
    if (!out) throw error("cannot write " + path);
    out << emit_structure(env);
}

std::string render_report_text(const std::vector<SetReport>& reports,
                               const StructureEnv& env) {
    std::ostringstream out;
    for (const SetReport& rep : reports) {
        out << rep.set_id << ": "
            << (rep.violations.empty() ? "pass" : "FAIL") << "\n";
        for (const Violation& v : rep.violations) {
            out << "  " << v.cond_id << " [descriptor " << v.identity_index
                << "] at tuple " << tuple_to_string(v.basis_tuple)
                << ": difference " << v.difference.to_string() << "\n";
        }
    }
    (void)env;
    return out.str();
}

std::string render_report_json(const std::vector<SetReport>& reports,
                               const StructureEnv& env) {
    (void)env;
    ordered_json out = ordered_json::array();
    for (const SetReport& rep : reports) {
        ordered_json violations = ordered_json::array();
        for (const Violation& v : rep.violations) {
            ordered_json diff = ordered_json::array();
            for (const Scalar& s : v.difference.data)
                diff.push_back(s.to_string());
            violations.push_back(ordered_json{{"condition", v.cond_id},
                                              {"identity", v.identity_index},
                                              {"tuple", v.basis_tuple},
                                              {"difference", diff}});
        }
        out.push_back(ordered_json{{"set", rep.set_id},
                                   {"verdict", rep.violations.empty()
                                                   ? "pass"
                                                   : "fail"},
                                   {"violations", violations}});
    }
    return out.dump(2) + "\n";
}

}  // namespace pforge
