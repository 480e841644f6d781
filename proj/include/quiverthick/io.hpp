#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "quiverthick/curve.hpp"
#include "quiverthick/error.hpp"
#include "quiverthick/realizability.hpp"
#include "quiverthick/representation.hpp"
#include "quiverthick/tree.hpp"

namespace quiverthick::io {

using Json = nlohmann::json;

/// Malformed input; the message names the file and the offending line or field.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Reads and parses a JSON document. Syntax errors report line and column.
Json load_json_file(const std::filesystem::path& path);

/// {"adjacency": [[...]], "vertices": n}
Quiver quiver_from_json(const Json& j, const std::string& where);
Json quiver_to_json(const Quiver& q);
Quiver load_quiver_file(const std::filesystem::path& path);

/// {"arrows": [{"copy", "from", "matrix", "to"}], "dims": [...], "field": "Q" | {"Fp": p},
///  "quiver": {...} | "relative/path.json"}. Rationals are strings "p/q" (bare
/// integers accepted); prime-field entries are integer residues.
Representation representation_from_json(const Json& j, const std::filesystem::path& base_dir,
                                         const std::string& where);
Json representation_to_json(const Representation& m);
Representation load_representation_file(const std::filesystem::path& path);

Json field_to_json(const Field& f);
Json scalar_to_json(const Field& f, const Scalar& s);
Json matrix_to_json(const Field& f, const Matrix& m);

Json witness_to_json(const Witness& w);
Json reason_to_json(const ReasonCode& r);
Json verdict_to_json(const Verdict& v);
Json hom_element_to_json(const HomElement& h);
Json tree_node_to_json(const TreeNode& node);
Json verification_to_json(const NodeVerification& v);

/// Byte-stable serialization: sorted keys, two-space indent, trailing newline.
std::string canonical_dump(const Json& j);

/// Lowercase hex SHA-256 of a string.
std::string sha256_hex(const std::string& data);

}  // namespace quiverthick::io
