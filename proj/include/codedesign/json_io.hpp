#ifndef CODEDESIGN_JSON_IO_HPP
#define CODEDESIGN_JSON_IO_HPP

#include <memory>
#include <string>
#include <vector>

#include <json.hpp>

#include "codedesign/constraints.hpp"
#include "codedesign/designer.hpp"
#include "codedesign/field.hpp"
#include "codedesign/matrix.hpp"

namespace codedesign {

// Bumped when a file produced by this library stops loading in the previous
// shape. Every file we write carries it.
inline constexpr int kSchemaVersion = 1;

// Insertion order is the canonical key order: equal designs serialize to
// identical bytes.
using Json = nlohmann::ordered_json;

// Instance files: {schema_version, n, k, zero_sets} with 0-based column
// indices. A file may instead (or additionally) carry a general block form
// {blocks: [{set, r}]} for the determinant criterion tools.
Json instance_to_json(const ConstraintInstance& inst);
ConstraintInstance instance_from_json(const Json& j);

Json general_to_json(const GeneralInstance& inst);
GeneralInstance general_from_json(const Json& j);
bool has_general_blocks(const Json& j);

// The raw image of a design file after structural validation: shapes, ranges
// and internal redundancies (d, eval_points, modulus) are checked, semantic
// health (zero pattern, invertibility, distance) deliberately is not, so a
// tampered file still loads and the verifier gets to issue the verdict.
struct DesignFileData {
    ConstraintInstance instance;
    std::shared_ptr<const FieldContext> field;
    int ell = 0;
    int distance = 0;
    std::vector<IndexSet> extended;   // ell sets of size ell - 1
    std::vector<FieldElement> alpha;  // n entries
    FieldMatrix t_full;               // ell x ell, as stored
    FieldMatrix generator;            // k x n, as stored
};

Json design_to_json(const CodeDesign& d);
DesignFileData design_from_json(const Json& j);

// Rebuilds a working design (inverse and full generator included) from a
// loaded file. Throws MismatchError when the stored coefficient matrix is
// singular, since no code can be run through it.
CodeDesign to_design(const DesignFileData& data);

// dump with two-space indent and a trailing newline; the byte-for-byte
// output format of every tool.
std::string to_canonical_string(const Json& j);

Json load_json_file(const std::string& path);
void save_json_file(const std::string& path, const Json& j);

}  // namespace codedesign

#endif
