#include "quiverthick/io.hpp"

#include <openssl/evp.h>

#include <fstream>
#include <iomanip>
#include <sstream>

namespace quiverthick::io {

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) { throw ParseError(where + ": " + what); }

const Json& member(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object()) fail(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(where, std::string("missing field '") + key + "'");
  return *it;
}

Integer as_integer(const Json& j, const std::string& where) {
  if (!j.is_number_integer()) fail(where, "expected an integer");
  return j.get<Integer>();
}

std::size_t as_index(const Json& j, const std::string& where) {
  const auto v = as_integer(j, where);
  if (v < 0) fail(where, "expected a nonnegative integer");
  return static_cast<std::size_t>(v);
}

mpq_class as_rational(const Json& j, const std::string& where) {
  if (j.is_number_integer()) return mpq_class(mpz_class(j.get<Integer>()));
  if (!j.is_string()) fail(where, "expected an integer or a rational string \"p/q\"");
  const auto text = j.get<std::string>();
  mpq_class q;
  if (text.empty() || q.set_str(text, 10) != 0) fail(where, "malformed rational \"" + text + "\"");
  if (q.get_den() == 0) fail(where, "zero denominator in \"" + text + "\"");
  q.canonicalize();
  return q;
}

Field field_from_json(const Json& j, const std::string& where) {
  if (j.is_string() && j.get<std::string>() == "Q") return Field::rationals();
  if (j.is_object() && j.size() == 1 && j.contains("Fp")) {
    try {
      return Field::prime(as_integer(j.at("Fp"), where + ".Fp"));
    } catch (const InvalidArgument& e) {
      fail(where + ".Fp", e.what());
    }
  }
  fail(where, "expected \"Q\" or {\"Fp\": p}");
}

Matrix matrix_from_json(const Json& j, const Field& field, std::size_t rows, std::size_t cols,
                        const std::string& where) {
  const auto shape = std::to_string(rows) + "x" + std::to_string(cols);
  if (!j.is_array() || j.size() != rows) fail(where, "expected a " + shape + " matrix");
  Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    const auto row_where = where + "[" + std::to_string(r) + "]";
    if (!j[r].is_array() || j[r].size() != cols) fail(row_where, "expected a row of length " + std::to_string(cols));
    for (std::size_t c = 0; c < cols; ++c) {
      const auto entry_where = row_where + "[" + std::to_string(c) + "]";
      try {
        m(r, c) = field.from(as_rational(j[r][c], entry_where));
      } catch (const InvalidArgument& e) {
        fail(entry_where, e.what());
      }
    }
  }
  return m;
}

std::string big_to_string(const BigInt& b) { return b.get_str(); }

}  // namespace

Json load_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path.string() + ": cannot open file");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

Quiver quiver_from_json(const Json& j, const std::string& where) {
  const auto n = as_index(member(j, "vertices", where), where + ".vertices");
  const auto& adj = member(j, "adjacency", where);
  if (!adj.is_array() || adj.size() != n) fail(where + ".adjacency", "expected " + std::to_string(n) + " rows");
  IntMatrix a(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto row_where = where + ".adjacency[" + std::to_string(i) + "]";
    if (!adj[i].is_array() || adj[i].size() != n) fail(row_where, "expected a row of length " + std::to_string(n));
    for (std::size_t k = 0; k < n; ++k) {
      const auto v = as_integer(adj[i][k], row_where + "[" + std::to_string(k) + "]");
      if (v < 0) fail(row_where + "[" + std::to_string(k) + "]", "arrow counts must be nonnegative");
      a[i].push_back(v);
    }
  }
  try {
    return Quiver(std::move(a));
  } catch (const InvalidArgument& e) {
    fail(where, e.what());
  }
}

Json quiver_to_json(const Quiver& q) {
  return Json{{"adjacency", q.adjacency()}, {"vertices", q.vertex_count()}};
}

Quiver load_quiver_file(const std::filesystem::path& path) {
  return quiver_from_json(load_json_file(path), path.string());
}

Representation representation_from_json(const Json& j, const std::filesystem::path& base_dir,
                                         const std::string& where) {
  const Field field = field_from_json(member(j, "field", where), where + ".field");
  const auto& quiver_json = member(j, "quiver", where);
  std::optional<Quiver> quiver;
  if (quiver_json.is_string()) {
    const auto path = base_dir / quiver_json.get<std::string>();
    quiver = load_quiver_file(path);
  } else {
    quiver = quiver_from_json(quiver_json, where + ".quiver");
  }
  const auto& dims_json = member(j, "dims", where);
  if (!dims_json.is_array() || dims_json.size() != quiver->vertex_count())
    fail(where + ".dims", "expected " + std::to_string(quiver->vertex_count()) + " dimensions");
  std::vector<Integer> dims;
  for (std::size_t i = 0; i < dims_json.size(); ++i)
    dims.push_back(static_cast<Integer>(as_index(dims_json[i], where + ".dims[" + std::to_string(i) + "]")));

  std::map<ArrowId, Matrix> maps;
  const auto& arrows = member(j, "arrows", where);
  if (!arrows.is_array()) fail(where + ".arrows", "expected an array");
  for (std::size_t k = 0; k < arrows.size(); ++k) {
    const auto aw = where + ".arrows[" + std::to_string(k) + "]";
    ArrowId id;
    id.source = as_index(member(arrows[k], "from", aw), aw + ".from");
    id.target = as_index(member(arrows[k], "to", aw), aw + ".to");
    id.copy = static_cast<Integer>(as_index(member(arrows[k], "copy", aw), aw + ".copy"));
    if (id.source >= dims.size() || id.target >= dims.size()) fail(aw, "vertex out of range");
    if (id.copy >= quiver->arrows(id.source, id.target)) fail(aw + ".copy", "no such arrow copy in the quiver");
    if (maps.count(id)) fail(aw, "duplicate arrow");
    maps.emplace(id, matrix_from_json(member(arrows[k], "matrix", aw), field, static_cast<std::size_t>(dims[id.source]),
                                      static_cast<std::size_t>(dims[id.target]), aw + ".matrix"));
  }
  try {
    return Representation(*quiver, field, std::move(dims), std::move(maps));
  } catch (const InvalidArgument& e) {
    fail(where, e.what());
  }
}

Json field_to_json(const Field& f) {
  if (f.is_rationals()) return "Q";
  return Json{{"Fp", f.characteristic()}};
}

Json scalar_to_json(const Field& f, const Scalar& s) {
  if (f.is_prime()) return s.get_num().get_si();
  return s.get_str();
}

Json matrix_to_json(const Field& f, const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(scalar_to_json(f, m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json representation_to_json(const Representation& m) {
  Json arrows = Json::array();
  for (const auto& [a, rho] : m.nonzero_arrow_maps())
    arrows.push_back(Json{{"copy", a.copy}, {"from", a.source}, {"matrix", matrix_to_json(m.field(), rho)}, {"to", a.target}});
  return Json{{"arrows", std::move(arrows)},
              {"dims", m.dims()},
              {"field", field_to_json(m.field())},
              {"quiver", quiver_to_json(m.quiver())}};
}

Representation load_representation_file(const std::filesystem::path& path) {
  return representation_from_json(load_json_file(path), path.parent_path(), path.string());
}

Json witness_to_json(const Witness& w) {
  Json ranks = Json::array(), degrees = Json::array();
  for (const auto& b : w.bundles) {
    ranks.push_back(b.rank);
    degrees.push_back(b.degree);
  }
  return Json{{"degrees", std::move(degrees)}, {"genus", w.genus}, {"ranks", std::move(ranks)}};
}

Json reason_to_json(const ReasonCode& r) {
  Json out{{"code", ReasonCode::kind_name(r.kind)}, {"text", r.to_string()}};
  if (r.i) out["i"] = *r.i;
  if (r.j) out["j"] = *r.j;
  return out;
}

Json verdict_to_json(const Verdict& v) {
  Json out{{"kind", Verdict::kind_name(v.kind)}, {"realizable", v.realizable()}};
  if (v.witness) out["witness"] = witness_to_json(*v.witness);
  if (v.reason) out["reason"] = reason_to_json(*v.reason);
  return out;
}

Json hom_element_to_json(const HomElement& h) {
  Json comps = Json::array();
  for (const auto& c : h.components) comps.push_back(matrix_to_json(h.source.field(), c));
  return comps;
}

Json tree_node_to_json(const TreeNode& node) {
  Json quiver = Json::array();
  for (const auto& row : node.node_quiver) quiver.push_back(Json{big_to_string(row[0]), big_to_string(row[1])});
  Json classes = Json::array();
  for (const auto& cls : node.generator_classes) {
    Json c = Json::array();
    for (const auto& x : cls) c.push_back(big_to_string(x));
    classes.push_back(std::move(c));
  }
  Json out{{"chi", big_to_string(node.chi_node)},
           {"classes", std::move(classes)},
           {"depth", node.depth},
           {"path", node.path},
           {"quiver", std::move(quiver)}};
  if (node.multipliers) out["multipliers"] = Json{(*node.multipliers)[0], (*node.multipliers)[1]};
  return out;
}

Json verification_to_json(const NodeVerification& v) {
  return Json{{"chi", v.chi}, {"ext1", v.ext1}, {"failures", v.failures}, {"hom", v.hom}, {"passed", v.passed}};
}

std::string canonical_dump(const Json& j) { return j.dump(2) + "\n"; }

std::string sha256_hex(const std::string& data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int length = 0;
  EVP_Digest(data.data(), data.size(), digest, &length, EVP_sha256(), nullptr);
  std::ostringstream out;
  for (unsigned int i = 0; i < length; ++i) out << std::hex << std::setw(2) << std::setfill('0') << int(digest[i]);
  return out.str();
}

}  // namespace quiverthick::io
