#pragma once
//
// A shape-check env with deliberately distinct dims (A=2, H=3, E=5) so any
// leg-bookkeeping mistake in a registry descriptor produces a detectable
// dimension mismatch.  Carries every map any registry set can mention:
// the full construction roster, a second "2"-suffixed copy (for the
// morphism-pair sets), the pair maps r/s, and the ambient E operations.
//

#include "pforge/structures.hpp"

inline pforge::StructureEnv make_canary_env() {
    using namespace pforge;
    StructureEnv env;
    env.field = FieldSpec{0};
    env.add_space("A", 2);
    env.add_space("H", 3);
    env.add_space("E", 5);
    for (const RosterEntry& e : full_roster()) {
        env.add_zero_map(e.name, e.source, e.target);
        env.add_zero_map(e.name + "2", e.source, e.target);
    }
    env.add_zero_map("r_VA", {"H"}, {"A"});
    env.add_zero_map("s_VV", {"H"}, {"H"});
    env.add_zero_map("brE", {"E", "E"}, {"E"});
    env.add_zero_map("mulE", {"E", "E"}, {"E"});
    env.add_zero_map("cobrE", {"E"}, {"E", "E"});
    env.add_zero_map("copE", {"E"}, {"E", "E"});
    return env;
}
