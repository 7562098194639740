#pragma once
//
// The condition-set registry: every numbered compatibility condition
// compiled to IdentityDescriptors once at startup, plus the composite
// checkers that bundle them into the named notions (Poisson algebra,
// braided bialgebra, matched pair, ...).
//

#include "pforge/structures.hpp"

namespace pforge {

struct Violation {
    std::string set_id;
    std::string cond_id;       // e.g. "HM3", "jacobi", "CDM17"
    int identity_index = 0;    // index within the condition's descriptor list
    std::vector<int> basis_tuple;
    DenseArray difference;
};

using ViolationList = std::vector<Violation>;

// One numbered condition: usually a single descriptor; composite conditions
// (e.g. A0 = "is an extending system") carry several.
struct ConditionEntry {
    std::string cond_id;
    std::vector<IdentityDescriptor> descriptors;
};

struct ConditionSet {
    std::string id;
    std::string description;
    std::vector<ConditionEntry> conditions;
};

struct CheckOptions {
    bool lie_bialgebra = true;  // include the Lie-bialgebra cocycle axiom
    bool asi = true;            // include the infinitesimal-bialgebra axioms
    bool hm3_variant = false;   // swapped-leg reading of the HM3 right side
};

// --- registry access --------------------------------------------------------

const std::map<std::string, ConditionSet>& registry();
const ConditionSet& registry_set(const std::string& id);
std::vector<std::string> registry_ids();

// Expected number of numbered conditions per set; the self-test audits the
// registry against this manifest.
const std::map<std::string, int>& registry_manifest();

// --- checking ---------------------------------------------------------------

ViolationList run_conditions(const std::string& set_id,
                             const std::vector<ConditionEntry>& conditions,
                             const StructureEnv& env);

// Evaluates one registry set.  EXT_* sets build the kind's unified product
// into an ambient space first; MP_ALG / MP_COALG additionally run the
// constructive cross-check (build the bicrossed (co)product and run PA/PC
// on it, reported under cond_id "constructive").
ViolationList check_condition_set(const std::string& id,
                                  const StructureEnv& env,
                                  const CheckOptions& opts = {});

ViolationList check_poisson_algebra(const PoissonAlgebraData& alg,
                                    const FieldSpec& f = FieldSpec{});
ViolationList check_poisson_coalgebra(const PoissonCoalgebraData& co,
                                      const FieldSpec& f = FieldSpec{});
ViolationList check_poisson_bialgebra(const PoissonBialgebraData& b,
                                      const FieldSpec& f = FieldSpec{},
                                      const CheckOptions& opts = {});
ViolationList check_named(const std::string& id, const StructureEnv& env,
                          const CheckOptions& opts = {});

// --- condition generators (parameterized by space/map names so the same
// identities can run on A, H, or a built ambient space E) ------------------

std::vector<ConditionEntry> make_pa_conditions(const std::string& space,
                                               const std::string& br,
                                               const std::string& mul);
std::vector<ConditionEntry> make_pc_conditions(const std::string& space,
                                               const std::string& cobr,
                                               const std::string& cop);
std::vector<ConditionEntry> make_pb_conditions(const std::string& space,
                                               const std::string& br,
                                               const std::string& mul,
                                               const std::string& cobr,
                                               const std::string& cop);
std::vector<ConditionEntry> make_liebi_conditions(const std::string& space,
                                                  const std::string& br,
                                                  const std::string& cobr);
std::vector<ConditionEntry> make_asi_conditions(const std::string& space,
                                                const std::string& mul,
                                                const std::string& cop);

// Internal: per-file registration helpers (one per translation unit).
void register_core_sets(std::map<std::string, ConditionSet>& reg);
void register_bimodule_sets(std::map<std::string, ConditionSet>& reg);
void register_matched_sets(std::map<std::string, ConditionSet>& reg);
void register_cocycle_sets(std::map<std::string, ConditionSet>& reg);
void register_ext_sets(std::map<std::string, ConditionSet>& reg);
void register_mor_sets(std::map<std::string, ConditionSet>& reg);

// The alternate-reading descriptors kept behind CheckOptions flags.
const ConditionSet& hm3_variant_set();

}  // namespace pforge
