#include "skewpair/io.hpp"

#include <fstream>
#include <sstream>

namespace skewpair::io {

namespace {

FieldElement parse_scalar(const json& v, FieldSpec field) {
  if (v.is_string()) return field.parse_scalar(v.get<std::string>());
  if (v.is_number_integer()) return field.parse_scalar(std::to_string(v.get<long long>()));
  throw ParseError("scalar must be a string or an integer");
}

}  // namespace

Matrix parse_matrix(const json& j, FieldSpec field) {
  if (!j.is_array()) throw ParseError("matrix must be an array of rows");
  const std::size_t rows = j.size();
  std::size_t cols = rows == 0 ? 0 : j[0].size();
  Matrix m(field, rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (!j[i].is_array() || j[i].size() != cols) throw ParseError("matrix rows must be arrays of equal length");
    for (std::size_t c = 0; c < cols; ++c) m(i, c) = parse_scalar(j[i][c], field);
  }
  return m;
}

json matrix_to_json(const Matrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(i, c).to_string());
    rows.push_back(std::move(row));
  }
  return rows;
}

MatrixPair parse_instance(const json& j) {
  if (!j.is_object()) throw ParseError("instance must be a JSON object");
  for (const char* key : {"field", "a", "b"}) {
    if (!j.contains(key)) throw ParseError(std::string("instance is missing \"") + key + "\"");
  }
  if (!j["field"].is_string()) throw ParseError("\"field\" must be a string");
  FieldSpec field = FieldSpec::parse(j["field"].get<std::string>());
  Matrix a = parse_matrix(j["a"], field);
  Matrix b = parse_matrix(j["b"], field);
  if (!a.is_square() || !b.is_square() || a.rows() != b.rows()) throw ParseError("a and b must be square of equal size");
  if (!a.is_skew_symmetric() || !b.is_skew_symmetric()) throw ParseError("a and b must be skew-symmetric");
  return {std::move(a), std::move(b)};
}

json instance_to_json(const MatrixPair& p) {
  return {{"field", p.field().name()}, {"a", matrix_to_json(p.a())}, {"b", matrix_to_json(p.b())}};
}

json polynomial_to_json(const Polynomial& f) {
  json c = json::array();
  for (const auto& x : f.coeffs()) c.push_back(x.to_string());
  return c;
}

Polynomial parse_polynomial(const json& j, FieldSpec field) {
  if (!j.is_array()) throw ParseError("polynomial must be a coefficient list");
  std::vector<FieldElement> c;
  for (const auto& v : j) c.push_back(parse_scalar(v, field));
  return Polynomial(field, std::move(c));
}

json block_to_json(const CanonicalBlock& b) {
  static const char* names[] = {"L", "K", "J"};
  json j = {{"kind", names[static_cast<int>(b.kind)]}, {"n", b.n}};
  if (b.eigenvalue) j["label"] = b.eigenvalue->to_string();
  if (b.poly) {
    j["label"] = polynomial_to_json(*b.poly);
    j["fully_decomposed"] = b.fully_decomposed;
  }
  return j;
}

CanonicalBlock parse_block(const json& j, FieldSpec field) {
  if (!j.is_object() || !j.contains("kind") || !j.contains("n")) throw ParseError("block needs \"kind\" and \"n\"");
  const std::string kind = j["kind"].get<std::string>();
  const auto n = j["n"].get<std::size_t>();
  if (n == 0) throw ParseError("block size must be positive");
  if (kind == "L") return CanonicalBlock::L(n);
  if (kind == "K") return CanonicalBlock::K(n);
  if (kind != "J") throw ParseError("unknown block kind \"" + kind + "\"");
  if (!j.contains("label")) throw ParseError("J block needs a label");
  const json& label = j["label"];
  if (label.is_array()) {
    Polynomial f = parse_polynomial(label, field);
    if (f.degree() != static_cast<int>(n)) throw ParseError("J block degree does not match n");
    return CanonicalBlock::J(std::move(f), j.value("fully_decomposed", false));
  }
  return CanonicalBlock::J(n, parse_scalar(label, field));
}

json blocks_to_json(const std::vector<CanonicalBlock>& blocks) {
  json arr = json::array();
  for (const auto& b : blocks) arr.push_back(block_to_json(b));
  return arr;
}

std::vector<CanonicalBlock> parse_blocks(const json& j, FieldSpec field) {
  if (!j.is_array()) throw ParseError("\"blocks\" must be an array");
  std::vector<CanonicalBlock> out;
  for (const auto& b : j) out.push_back(parse_block(b, field));
  return out;
}

json invariants_to_json(const PencilInvariants& inv) {
  json finite = json::array();
  for (const auto& fp : inv.finite_divisors) {
    finite.push_back({{"factor", polynomial_to_json(fp.factor)}, {"power", fp.multiplicity}});
  }
  json factors = json::array();
  for (const auto& f : inv.invariant_factors) factors.push_back(polynomial_to_json(f));
  return {{"right_minimal_indices", inv.right_minimal_indices},
          {"left_minimal_indices", inv.left_minimal_indices},
          {"infinite_divisors", inv.infinite_divisors},
          {"invariant_factors", factors},
          {"finite_divisors", finite}};
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path);
  out << text;
}

}  // namespace skewpair::io
