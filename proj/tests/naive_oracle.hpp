#pragma once
//
// Independent naive evaluator for the Poisson algebra / coalgebra /
// bialgebra axioms.  Deliberately shares no code with the descriptor
// machinery: every identity is written out as explicit nested loops over
// structure constants, straight from the axioms.
//

#include "pforge/env.hpp"

#include <string>
#include <vector>

namespace oracle {

struct OracleViolation {
    std::string cond_id;
    std::vector<int> tuple;                 // input basis tuple
    std::vector<pforge::Scalar> difference;  // indexed by output basis
};

std::vector<OracleViolation> check_pa(const pforge::StructureEnv& env,
                                      const std::string& space,
                                      const std::string& br,
                                      const std::string& mul);

std::vector<OracleViolation> check_pc(const pforge::StructureEnv& env,
                                      const std::string& space,
                                      const std::string& cobr,
                                      const std::string& cop);

std::vector<OracleViolation> check_pb(const pforge::StructureEnv& env,
                                      const std::string& space,
                                      const std::string& br,
                                      const std::string& mul,
                                      const std::string& cobr,
                                      const std::string& cop);

}  // namespace oracle
