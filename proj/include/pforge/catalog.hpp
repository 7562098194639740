#pragma once
//
// Built-in fixtures: small exactly-known structures used by the test suite
// and exposed through the CLI (`catalog list` / `catalog emit`).
//

#include "pforge/structures.hpp"

#include <string>
#include <utility>
#include <vector>

namespace pforge {

// Fixture names accepted by catalog().  "zero_<n>" matches any n >= 0.
std::vector<std::string> catalog_names();

// Returns the named fixture env.  Throws pforge::error on unknown names.
//   zero_<n>          all-zero bialgebra maps on an n-dim space
//   idem1             1-dim algebra with u·u = u
//   dual_numbers      2-dim algebra u,e with u unit and e² = 0
//   nonab_lie2        2-dim Lie bracket [e1,e2] = e2, zero product
//   bad_bracket       1-dim map with [e,e] = e (fails antisymmetry)
//   central_ext_a1    kind-a1 extending datum with only the cycle ν = 1
//   direct_sum_demo   block sum of idem1 and nonab_lie2
//   planted_equiv_pair_f2  two equivalent kind-a1 data over F₂ (second
//                          datum's maps carry a "2" suffix)
StructureEnv catalog(const std::string& name);

// Deterministic extending data of the given kind used by round-trip tests:
// zero data plus structure-carrying samples over Q and F₃.
std::vector<ExtendingDatum> catalog_data(ExtKind kind);

// The two data behind planted_equiv_pair_f2, in order.  They are related by
// a stabilizing isomorphism and are distinct.
std::pair<ExtendingDatum, ExtendingDatum> planted_pair_f2();

}  // namespace pforge
