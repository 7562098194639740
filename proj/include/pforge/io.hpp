#pragma once
//
// The JSON structure-file format and report rendering.
//
// A structure file holds a field specification, named spaces with dims and
// optional basis labels, named maps stored as sparse structure-constant
// entries, and an optional "roles" table binding registry vocabulary
// (e.g. "brA") to the file's own map names so files may use local names.
//

#include "pforge/env.hpp"
#include "pforge/registry.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace pforge {

inline constexpr int kFormatVersion = 1;

// Parses and validates a structure file.  Roles are resolved: the returned
// env holds each role-bound map under its role name (in addition to maps
// that were not renamed by a role).  Throws pforge::error on any defect
// (malformed JSON, unknown space, non-canonical scalar, duplicate entry
// tuple, index out of range, unknown role target).
StructureEnv load_structure(std::istream& in);
StructureEnv load_structure_file(const std::string& path);

// Serializes an env.  load_structure(emit_structure(env)) == env bit-exactly
// (scalars keep their canonical textual form).
std::string emit_structure(const StructureEnv& env);
void save_structure_file(const std::string& path, const StructureEnv& env);

// One verified condition set and its violations.
struct SetReport {
    std::string set_id;
    ViolationList violations;
};

// Human-readable rendering: verdict per set, then one line per violation
// with basis labels resolved against env.
std::string render_report_text(const std::vector<SetReport>& reports,
                               const StructureEnv& env);

// Machine-readable rendering (JSON text); lossless.
std::string render_report_json(const std::vector<SetReport>& reports,
                               const StructureEnv& env);

}  // namespace pforge
