#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "skewpair/block.hpp"
#include "skewpair/kronecker.hpp"
#include "skewpair/matrix.hpp"

namespace skewpair::io {

using json = nlohmann::json;

/// {"field": "Q" | "GF(p)", "a": [[...]], "b": [[...]]} with scalars as strings
/// (plain JSON integers are accepted too). Throws ParseError.
MatrixPair parse_instance(const json& j);
json instance_to_json(const MatrixPair& p);

Matrix parse_matrix(const json& j, FieldSpec field);
json matrix_to_json(const Matrix& m);

json polynomial_to_json(const Polynomial& f);
Polynomial parse_polynomial(const json& j, FieldSpec field);

/// {"kind": "J", "n": 2, "label": "3"}; polynomial labels are coefficient lists, lowest first.
json block_to_json(const CanonicalBlock& b);
CanonicalBlock parse_block(const json& j, FieldSpec field);
json blocks_to_json(const std::vector<CanonicalBlock>& blocks);
std::vector<CanonicalBlock> parse_blocks(const json& j, FieldSpec field);

json invariants_to_json(const PencilInvariants& inv);

json read_json_file(const std::string& path);
/// Sorted keys, two-space indent, trailing newline.
std::string dump(const json& j);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace skewpair::io
