#pragma once
//
// The domain data model: typed bundles of spaces and structural maps, the
// extending-datum kinds, shape validation, zero data, and direct sums.
//
// Canonical role names (also the file-format role vocabulary).  Every name
// carries its signature because the same glyph is reused with different
// sources across the different constructions:
//
//   brA, mulA      : A⊗A→A         bracket / product on A
//   cobrA, copA    : A→A⊗A         cobracket / coproduct on A
//   brH, mulH, cobrH, copH : same on H (H doubles as the complement V)
//   tri_HA  ⊳ : H⊗A→A    tl_HA  ⊲ : H⊗A→H
//   hpr_HA  ⇀ : H⊗A→A    hpl_AH ↼ : A⊗H→A
//   rar_AH  → : A⊗H→H    lar_HA ← : H⊗A→H
//   phi_A   φ : A→H⊗A    psi_H  ψ : H→H⊗A
//   rho_A   ρ : A→H⊗A    gamma_A γ : A→A⊗H
//   alpha_H α : H→A⊗H    beta_H  β : H→H⊗A
//   sigma_HH σ : H⊗H→A   omega_HH ω : H⊗H→A
//   theta_AA θ : A⊗A→H   nu_AA    ν : A⊗A→H
//   p_A : A→H⊗H   s_A : A→H⊗H   q_H : H→A⊗A   t_H : H→A⊗A
//   r_VA r : H→A  s_VV s : H→H   (morphism pairs; V stored as H)
//
// Ambient structures built on E = A ⊕ H use space "E" with maps
// brE, mulE, cobrE, copE.

#include "pforge/term.hpp"

#include <array>

namespace pforge {

struct PoissonAlgebraData {
    SpaceDecl space;
    LinMap bracket;  // A⊗A→A
    LinMap product;  // A⊗A→A
};

struct PoissonCoalgebraData {
    SpaceDecl space;
    LinMap cobracket;  // A→A⊗A
    LinMap coproduct;  // A→A⊗A
};

struct PoissonBialgebraData {
    PoissonAlgebraData algebra;
    PoissonCoalgebraData coalgebra;  // same space
};

enum class ExtKind { a1, a2, c1, c2, I, II };

ExtKind parse_kind(const std::string& s);
std::string kind_name(ExtKind k);
bool kind_has_algebra(ExtKind k);
bool kind_has_coalgebra(ExtKind k);

// One map of a construction roster: name and signature over spaces A/H.
struct RosterEntry {
    std::string name;
    std::vector<std::string> source;
    std::vector<std::string> target;
};

// The full cocycle-bicrossproduct roster (all pair maps, cocycles and
// cycles, plus the four structure maps on each of A and H).
const std::vector<RosterEntry>& full_roster();

// The maps a given extending-datum kind is allowed to carry (base and
// complement structure maps included).
std::vector<RosterEntry> kind_roster(ExtKind k);

// An extending datum is an env over spaces "A" (the base) and "H" (the
// complement V) carrying exactly its kind's roster.
struct ExtendingDatum {
    ExtKind kind = ExtKind::a1;
    StructureEnv env;

    bool operator==(const ExtendingDatum& o) const;
};

struct MorphismPair {
    LinMap r;      // H→A
    LinMap s_map;  // H→H
};

// --- operations -----------------------------------------------------------

struct ShapeViolation {
    std::string map_name;
    std::string message;
};

// Shape errors only; algebra axioms are never constructor invariants here.
std::vector<ShapeViolation> validate(const StructureEnv& env);

// All-zero extending datum of the given kind.
ExtendingDatum zero_datum(ExtKind k, int dim_a, int dim_v,
                          const FieldSpec& f = FieldSpec{});

// Zero bialgebra data on a space.
PoissonBialgebraData zero_bialgebra(const std::string& space_name, int dim,
                                    const FieldSpec& f = FieldSpec{});

// Block-diagonal direct sum (the biproduct with all actions/coactions zero).
PoissonBialgebraData direct_sum(const PoissonBialgebraData& a,
                                const PoissonBialgebraData& b);

// --- env <-> bundle conversion --------------------------------------------

// Env with space "A" and maps brA/mulA (and cobrA/copA for the co-side).
StructureEnv to_env(const PoissonAlgebraData& a, const FieldSpec& f);
StructureEnv to_env(const PoissonCoalgebraData& c, const FieldSpec& f);
StructureEnv to_env(const PoissonBialgebraData& b, const FieldSpec& f);

PoissonBialgebraData bialgebra_from_env(const StructureEnv& env,
                                        const std::string& space,
                                        const std::string& br,
                                        const std::string& mul,
                                        const std::string& cobr,
                                        const std::string& cop);

}  // namespace pforge
