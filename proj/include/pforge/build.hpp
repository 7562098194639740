#pragma once
//
// Builders for every direct-sum structure: one generic cocycle-
// bicrossproduct routine on E = A ⊕ H, of which the biproduct, bicrossed
// (co)products, double cross biproduct and the six unified-product kinds
// are validated parameter slices.
//

#include "pforge/structures.hpp"

namespace pforge {

struct BuiltStructure {
    StructureEnv ambient;        // space "E" with brE/mulE and/or cobrE/copE
    int dim_a = 0;
    int dim_h = 0;
    bool has_algebra = false;
    bool has_coalgebra = false;
    std::vector<int> embedding;  // A basis index -> E basis index
    std::vector<int> projection; // E basis index -> A index, -1 on V
    std::string provenance;

    PoissonBialgebraData as_bialgebra() const;
};

// The master construction: reads any subset of the full roster from
// env (missing maps are zero) and emits both the algebra and the coalgebra
// structure on E.
BuiltStructure build_cocycle_bicrossproduct(const StructureEnv& env);

// Slices.  Each verifies that the maps outside its documented roster are
// absent or zero (shape-level validation only; no condition sets are run).
BuiltStructure build_biproduct(const StructureEnv& env);
BuiltStructure build_bicrossed_product(const StructureEnv& env);    // algebra
BuiltStructure build_bicrossed_coproduct(const StructureEnv& env);  // coalgebra
BuiltStructure build_cocycle_cross_product(const StructureEnv& env);   // algebra
BuiltStructure build_cycle_cross_coproduct(const StructureEnv& env);   // coalgebra
BuiltStructure build_double_cross_biproduct(const StructureEnv& env);
BuiltStructure build_unified(ExtKind kind, const ExtendingDatum& datum);

}  // namespace pforge
