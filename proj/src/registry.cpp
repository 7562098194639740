#include "pforge/registry.hpp"

#include "pforge/build.hpp"

namespace pforge {

static std::map<std::string, ConditionSet> build_registry() {
    std::map<std::string, ConditionSet> reg;
    register_core_sets(reg);
    register_bimodule_sets(reg);
    register_matched_sets(reg);
    register_cocycle_sets(reg);
    register_ext_sets(reg);
    register_mor_sets(reg);
    return reg;
}

const std::map<std::string, ConditionSet>& registry() {
    static const std::map<std::string, ConditionSet> reg = build_registry();
    return reg;
}

const ConditionSet& registry_set(const std::string& id) {
    const auto& reg = registry();
    auto it = reg.find(id);
    if (it == reg.end()) throw error("unknown condition set '" + id + "'");
    return it->second;
}

std::vector<std::string> registry_ids() {
    std::vector<std::string> ids;
    for (const auto& [id, _] : registry()) ids.push_back(id);
    return ids;
}

const std::map<std::string, int>& registry_manifest() {
    static const std::map<std::string, int> manifest = {
        {"PA", 4},       {"PC", 4},       {"PB", 2},       {"LIEBI", 1},
        {"ASI", 2},      {"BIMOD", 7},    {"BICOMOD", 7},  {"MODALG", 7},
        {"COMODCOALG", 7}, {"HOPF_H", 8}, {"BRAIDED_A", 2}, {"BIPROD18", 18},
        {"MP_ALG", 6},   {"MP_COALG", 6}, {"HOPF_A", 8},   {"BRAIDED_H", 2},
        {"DMP", 24},     {"CC", 8},       {"CP", 12},      {"CCP", 12},
        {"CDM", 24},     {"CBB", 4},      {"EXT_A1", 8},   {"EXT_A2", 14},
        {"EXT_C1", 14},  {"EXT_C2", 9},   {"EXT_I", 23},   {"EXT_II", 23},
        {"MOR_A1", 14},  {"MOR_A2", 10},  {"MOR_C1", 14},  {"MOR_C2", 7},
    };
    return manifest;
}

ViolationList run_conditions(const std::string& set_id,
                             const std::vector<ConditionEntry>& conditions,
                             const StructureEnv& env) {
    ViolationList out;
    for (const ConditionEntry& c : conditions) {
        for (std::size_t i = 0; i < c.descriptors.size(); ++i) {
            for (IdentityViolation& v :
                 evaluate_identity(c.descriptors[i], env)) {
                out.push_back(Violation{set_id, c.cond_id, static_cast<int>(i),
                                        std::move(v.basis_tuple),
                                        std::move(v.difference)});
            }
        }
    }
    return out;
}

// EXT_* sets are evaluated against the datum env augmented with the built
// unified structure on E (the kind's lemma says "the unified product is a
// Poisson (co)algebra iff ..." — the built maps appear in the 0-indexed
// conditions).
static StructureEnv augment_with_built(const StructureEnv& env, ExtKind kind) {
    ExtendingDatum d;
    d.kind = kind;
    d.env = env;
    BuiltStructure built = build_unified(kind, d);
    StructureEnv out = env;
    out.add_space("E", built.ambient.dim("E"));
    for (const auto& [name, m] : built.ambient.maps) {
        if (!out.has_map(name)) out.maps.emplace(name, m);
    }
    return out;
}

static ExtKind ext_kind_of(const std::string& id) {
    if (id == "EXT_A1") return ExtKind::a1;
    if (id == "EXT_A2") return ExtKind::a2;
    if (id == "EXT_C1") return ExtKind::c1;
    if (id == "EXT_C2") return ExtKind::c2;
    if (id == "EXT_I") return ExtKind::I;
    return ExtKind::II;
}

ViolationList check_condition_set(const std::string& id,
                                  const StructureEnv& env,
                                  const CheckOptions& opts) {
    const ConditionSet& set = registry_set(id);

    if (id.rfind("EXT_", 0) == 0) {
        StructureEnv aug = augment_with_built(env, ext_kind_of(id));
        return run_conditions(id, set.conditions, aug);
    }

    if (id == "HOPF_H" && opts.hm3_variant) {
        std::vector<ConditionEntry> conds;
        for (const auto& c : set.conditions)
            conds.push_back(c.cond_id == "HM3" ? hm3_variant_set().conditions[0]
                                               : c);
        return run_conditions(id, conds, env);
    }

    ViolationList out = run_conditions(id, set.conditions, env);

    if (id == "MP_ALG" || id == "MP_COALG") {
        // Constructive cross-check: the matched-pair lemma asserts that the
        // bicrossed (co)product is again a Poisson (co)algebra.
        BuiltStructure built = (id == "MP_ALG")
                                   ? build_bicrossed_product(env)
                                   : build_bicrossed_coproduct(env);
        std::vector<ConditionEntry> amb =
            (id == "MP_ALG") ? make_pa_conditions("E", "brE", "mulE")
                             : make_pc_conditions("E", "cobrE", "copE");
        for (Violation& v : run_conditions(id, amb, built.ambient)) {
            v.cond_id = "constructive:" + v.cond_id;
            out.push_back(std::move(v));
        }
    }
    return out;
}

ViolationList check_poisson_algebra(const PoissonAlgebraData& alg,
                                    const FieldSpec& f) {
    return check_condition_set("PA", to_env(alg, f));
}

ViolationList check_poisson_coalgebra(const PoissonCoalgebraData& co,
                                      const FieldSpec& f) {
    return check_condition_set("PC", to_env(co, f));
}

ViolationList check_poisson_bialgebra(const PoissonBialgebraData& b,
                                      const FieldSpec& f,
                                      const CheckOptions& opts) {
    StructureEnv env = to_env(b, f);
    ViolationList out = check_condition_set("PA", env);
    for (auto& v : check_condition_set("PC", env)) out.push_back(std::move(v));
    for (auto& v : check_condition_set("PB", env)) out.push_back(std::move(v));
    if (opts.lie_bialgebra)
        for (auto& v : check_condition_set("LIEBI", env))
            out.push_back(std::move(v));
    if (opts.asi)
        for (auto& v : check_condition_set("ASI", env))
            out.push_back(std::move(v));
    return out;
}

ViolationList check_named(const std::string& id, const StructureEnv& env,
                          const CheckOptions& opts) {
    return check_condition_set(id, env, opts);
}

}  // namespace pforge
