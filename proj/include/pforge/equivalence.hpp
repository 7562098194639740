#pragma once
//
// The extending problem made executable: split an ambient structure on
// E = A ⊕ V back into its extending datum, verify morphism pairs (r, s),
// decide equivalence of data by exhaustive search over a prime field, and
// classify small instances into equivalence classes.
//

#include "pforge/build.hpp"
#include "pforge/registry.hpp"

namespace pforge {

// Thrown when an exhaustive search would exceed its configured budget;
// carries the size of the search space it refused to walk.
class budget_error : public error {
public:
    budget_error(const std::string& what, double search_space)
        : error(what), search_space(search_space) {}
    double search_space;
};

// An ambient structure on E together with the splitting data: a coordinate
// embedding of A and a coordinate projection p: E→A with p ∘ i = id.  The
// complement V is the set of E coordinates the projection kills.
struct ExtensionPresentation {
    StructureEnv ambient;         // space "E" with brE/mulE and/or cobrE/copE
    int dim_a = 0;
    std::vector<int> embedding;   // A basis index -> E basis index
    std::vector<int> projection;  // E basis index -> A index, -1 on V
};

// Presentation of a built structure via its stored embedding/projection.
ExtensionPresentation presentation_of(const BuiltStructure& built);

// Inverts the construction: extracts the kind's datum from the ambient
// blocks, then rebuilds and verifies the reconstruction is the identity.
//
// Preconditions checked: projection is a left inverse of the embedding; for
// kinds a1/c1/I the projection is a homomorphism of the ambient structure,
// for kinds a2/c2/II the embedding is.  Violations raise `error` naming the
// failing map and basis tuple.
ExtendingDatum split_extension(const ExtensionPresentation& pres, ExtKind kind);

// Evaluates the kind's (r, s) condition list on the pair of data (second
// datum's maps suffixed "2").  When cross_validate is set, additionally
// verifies constructively that φ(a,x) = (a + r(x), s(x)) is a structure
// homomorphism build(d) → build(d2); any disagreement is reported with
// cond_id "constructive:…".
ViolationList check_morphism_pair(ExtKind kind, const MorphismPair& w,
                                  const ExtendingDatum& d,
                                  const ExtendingDatum& d2,
                                  bool cross_validate = true);

// The constructive side alone: is φ_{r,s} a homomorphism of the built
// ambient structures that stabilizes A?  Independent of the condition lists.
ViolationList morphism_is_homomorphism(ExtKind kind, const MorphismPair& w,
                                       const ExtendingDatum& d,
                                       const ExtendingDatum& d2);

struct EquivalenceWitness {
    MorphismPair pair;
    ExtKind kind = ExtKind::a1;
    bool verified = false;
};

struct EquivalenceResult {
    bool found = false;        // false = search exhausted without a witness
    EquivalenceWitness witness;
};

// Exhaustive search over all (r, s) with s invertible, in a fixed
// deterministic order ((0, id) is probed first).  Prime fields only; the
// search space p^(dimA·dimV + dimV²) must stay within `budget`.
EquivalenceResult decide_equivalence(ExtKind kind, const ExtendingDatum& d,
                                     const ExtendingDatum& d2,
                                     const FieldSpec& f,
                                     unsigned long budget = 1u << 20);

// Verifies a supplied witness (any field): s invertible and the condition
// list empty.
bool verify_witness(ExtKind kind, const MorphismPair& w,
                    const ExtendingDatum& d, const ExtendingDatum& d2);

struct EquivalenceClass {
    ExtendingDatum representative;  // lexicographically least member
    std::size_t size = 0;
};

struct ClassifyResult {
    std::vector<EquivalenceClass> classes;
    std::size_t total_valid = 0;  // number of kind-valid data enumerated
};

// Enumerates every datum of the kind over F_p with the given dimensions and
// fixed base structure on A (maps brA/mulA/cobrA/copA from `base`; all zero
// when base is null), keeps those passing the kind's extension conditions,
// and partitions them by decide_equivalence.  Representatives are the
// enumeration-least (= lexicographically least structure constants).
ClassifyResult classify_small(ExtKind kind, int dim_a, int dim_v,
                              const FieldSpec& f,
                              const StructureEnv* base = nullptr,
                              unsigned long budget = 1u << 20);

// Transports a datum along φ_{r,s} (s invertible): conjugates the built
// ambient operations by φ and splits the result back into a datum.  Throws
// if the transported extension leaves the kind's stratum (not every (r, s)
// admits a pushforward).  The result is equivalent to d with witness (r, s).
ExtendingDatum pushforward(ExtKind kind, const ExtendingDatum& d,
                           const MorphismPair& w);

// Odometer step over a map's entries for exhaustive prime-field enumeration:
// advances to the next assignment in lexicographic order (last entry
// fastest); returns false after wrapping back to all zeros.
bool advance_entries(LinMap& m, long prime);

// True iff the square map (H→H or A→A) is invertible over its field.
bool is_invertible(const LinMap& m);

}  // namespace pforge
