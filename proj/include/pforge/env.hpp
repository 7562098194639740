#pragma once
//
// Spaces, structural maps stored as dense structure constants, and the
// StructureEnv bundle that condition sets are evaluated against.
//

#include "pforge/scalar.hpp"

#include <map>
#include <string>
#include <vector>

namespace pforge {

struct SpaceDecl {
    std::string name;
    int dim = 0;
    std::vector<std::string> basis_labels;  // empty or length == dim
};

// A linear map between tensor powers of declared spaces, e.g. a product
// A⊗A→A or a coaction A→H⊗A.  Entries are stored densely, indexed
// row-major by (all target indices, then all source indices):
//   at({k}, {i,j}) = coefficient of e_k in m(e_i ⊗ e_j).
struct LinMap {
    std::vector<std::string> source;  // source space names, in order
    std::vector<std::string> target;  // target space names, in order
    std::vector<int> src_dims;
    std::vector<int> tgt_dims;
    std::vector<Scalar> entries;

    std::size_t flat_index(const std::vector<int>& tgt,
                           const std::vector<int>& src) const;
    const Scalar& at(const std::vector<int>& tgt,
                     const std::vector<int>& src) const;
    void set(const std::vector<int>& tgt, const std::vector<int>& src,
             const Scalar& v);
    bool is_zero() const;
    bool operator==(const LinMap& o) const;
};

struct StructureEnv {
    FieldSpec field;
    std::vector<SpaceDecl> spaces;          // declaration order preserved
    std::map<std::string, LinMap> maps;     // name -> map

    bool has_space(const std::string& name) const;
    const SpaceDecl& space(const std::string& name) const;
    int dim(const std::string& space_name) const;

    void add_space(const std::string& name, int dim,
                   std::vector<std::string> labels = {});
    // Creates an all-zero map with the given signature and registers it.
    LinMap& add_zero_map(const std::string& name,
                         const std::vector<std::string>& source,
                         const std::vector<std::string>& target);
    bool has_map(const std::string& name) const;
    const LinMap& map_at(const std::string& name) const;
    LinMap& map_at(const std::string& name);

    // Human-readable basis label for index i of a space.
    std::string basis_label(const std::string& space_name, int i) const;
};

// An all-zero map with the given signature, with dims resolved against env.
LinMap make_zero_map(const StructureEnv& env,
                     const std::vector<std::string>& source,
                     const std::vector<std::string>& target);

// Returns a new LinMap whose output legs are permuted: new leg i is old leg
// perm[i].  E.g. perm {1,0} on δ: A→A⊗A gives τ∘δ.
LinMap permute_legs(const LinMap& m, const std::vector<int>& perm);

// Row-major multi-index iteration helper: advances idx within dims, returns
// false after the last tuple.  An empty dims vector yields one (empty) tuple.
bool next_tuple(std::vector<int>& idx, const std::vector<int>& dims);

std::string tuple_to_string(const std::vector<int>& idx);

}  // namespace pforge
