#pragma once
//
// Tensor-network terms: the mechanization of Sweedler-notation composites.
// A TensorTerm starts from the identity's input legs, applies structural
// maps to chosen legs one step at a time, and finally permutes the output
// legs.  An IdentityDescriptor is a signed sum of such terms that must
// vanish on every input basis tuple.
//

#include "pforge/env.hpp"

#include <optional>

namespace pforge {

// Dense array of scalars over a list of legs (row-major).
struct DenseArray {
    std::vector<int> dims;
    std::vector<Scalar> data;

    static DenseArray zeros(const std::vector<int>& dims, const FieldSpec& f);
    std::size_t flat_index(const std::vector<int>& idx) const;
    const Scalar& at(const std::vector<int>& idx) const;
    Scalar& at(const std::vector<int>& idx);
    bool is_zero() const;
    bool operator==(const DenseArray& o) const;
    std::string to_string() const;
};

// One step of a term: apply `map` to the current legs listed in `consume`
// (in the order the map's source slots expect them); the surviving legs keep
// their relative order and the map's output legs are inserted at position
// `insert_at` of the surviving list.
struct TermStep {
    std::string map;
    std::vector<int> consume;
    int insert_at = 0;
};

struct TensorTerm {
    long coeff = 1;                 // integer weight (converted to the env field)
    std::vector<TermStep> steps;
    std::vector<int> out_perm;      // empty = identity; new leg i is old leg out_perm[i]

    // Chainable builders, so identities read like the Sweedler composites:
    //   tt().ap("copA", {1}, 1).ap("mulA", {0, 1}, 0)
    TensorTerm& ap(const std::string& map, std::vector<int> consume,
                   int insert_at) {
        steps.push_back(TermStep{map, std::move(consume), insert_at});
        return *this;
    }
    TensorTerm& pm(std::vector<int> perm) {
        out_perm = std::move(perm);
        return *this;
    }
};

inline TensorTerm tt(long coeff = 1) {
    TensorTerm t;
    t.coeff = coeff;
    return t;
}

struct IdentityDescriptor {
    std::string id;
    std::vector<std::string> input_spaces;
    std::vector<std::string> output_spaces;
    std::vector<TensorTerm> lhs_terms;
    std::vector<TensorTerm> rhs_terms;
};

// Applies the term to one basis tuple of the input spaces and returns the
// exact coefficient array over the output legs.  Pure.
DenseArray evaluate_term(const TensorTerm& term, const StructureEnv& env,
                         const std::vector<int>& basis_tuple,
                         const std::vector<std::string>& input_spaces,
                         const std::vector<std::string>& output_spaces);

struct IdentityViolation {
    std::vector<int> basis_tuple;
    DenseArray difference;
};

// Evaluates lhs minus rhs on every input basis tuple (row-major order) and
// returns the nonzero differences.  Empty result = identity holds.
std::vector<IdentityViolation> evaluate_identity(const IdentityDescriptor& desc,
                                                 const StructureEnv& env);

// Symbolically traces a term's leg bookkeeping (spaces only, no scalars) and
// returns an error message if any step is inconsistent with the env's map
// signatures, or nullopt if the term is well-formed.  Used by the registry
// self-test to audit every descriptor.
std::optional<std::string> check_term_shape(
    const TensorTerm& term, const StructureEnv& env,
    const std::vector<std::string>& input_spaces,
    const std::vector<std::string>& output_spaces);

}  // namespace pforge
