#include "rota/io/json_io.hpp"

#include <fstream>
#include <sstream>

#include "rota/core/errors.hpp"

namespace rota::io {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ValidationError(std::string("missing field '") + key + "'");
  return j.at(key);
}

int int_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number_integer()) throw ValidationError(std::string("field '") + key + "' must be an integer");
  return v.get<int>();
}

std::vector<int> int_array(const Json& j, const char* what) {
  if (!j.is_array()) throw ValidationError(std::string(what) + " must be an array");
  std::vector<int> out;
  for (const auto& v : j) {
    if (!v.is_number_integer()) throw ValidationError(std::string(what) + " entries must be integers");
    out.push_back(v.get<int>());
  }
  return out;
}

std::vector<Scalar> scalar_array(const Json& j, const char* what) {
  if (!j.is_array()) throw ValidationError(std::string(what) + " must be an array");
  std::vector<Scalar> out;
  for (const auto& v : j) out.push_back(scalar_from_json(v));
  return out;
}

Json scalar_array_to_json(const std::vector<Scalar>& values) {
  Json out = Json::array();
  for (const auto& v : values) out.push_back(scalar_to_json(v));
  return out;
}

}  // namespace

Scalar scalar_from_json(const Json& j) {
  if (j.is_string()) return parse_scalar(j.get<std::string>());
  if (j.is_number_integer()) return parse_scalar(j.dump());
  throw ValidationError("rational value must be an integer or a \"p/q\" string");
}

Json scalar_to_json(const Scalar& v) { return to_string(v); }

SparseTensor tensor_from_json(const Json& j) {
  SparseTensor t(int_field(j, "order"), int_field(j, "dim"));
  const Json& entries = field(j, "entries");
  if (!entries.is_array()) throw ValidationError("'entries' must be an array");
  std::map<Index, bool> seen;
  for (const auto& e : entries) {
    Index idx = int_array(field(e, "i"), "index");
    validate_index(idx, t.order(), t.dim());
    if (seen.contains(idx)) throw ValidationError("duplicate tensor index");
    seen[idx] = true;
    t.set(std::move(idx), scalar_from_json(field(e, "v")));
  }
  return t;
}

Json tensor_to_json(const SparseTensor& t) {
  Json entries = Json::array();
  for (const auto& [idx, v] : t.support()) entries.push_back(Json{{"i", idx}, {"v", scalar_to_json(v)}});
  return Json{{"order", t.order()}, {"dim", t.dim()}, {"entries", std::move(entries)}};
}

Json tensor_to_json(const DenseTensor& t) { return tensor_to_json(SparseTensor::from_dense(t)); }

Matrix matrix_from_json(const Json& j) {
  const int n = int_field(j, "dim");
  if (n < 1) throw ValidationError("matrix dim must be >= 1");
  const Json& cols = field(j, "cols");
  if (!cols.is_array() || static_cast<int>(cols.size()) != n) throw ValidationError("matrix needs exactly dim columns");
  std::vector<std::vector<Scalar>> columns;
  for (const auto& c : cols) {
    columns.push_back(scalar_array(c, "matrix column"));
    if (static_cast<int>(columns.back().size()) != n) throw ValidationError("matrix column must have dim entries");
  }
  return Matrix::from_columns(columns);
}

Json matrix_to_json(const Matrix& m) {
  Json cols = Json::array();
  for (int c = 0; c < m.cols(); ++c) cols.push_back(scalar_array_to_json(m.column(c)));
  return Json{{"dim", m.rows()}, {"cols", std::move(cols)}};
}

std::vector<Matrix> matrices_from_json(const Json& j) {
  const Json& mats = field(j, "mats");
  if (!mats.is_array()) throw ValidationError("'mats' must be an array");
  std::vector<Matrix> out;
  for (const auto& m : mats) out.push_back(matrix_from_json(m));
  return out;
}

BasisSequence bases_from_json(const Json& j) {
  const int n = int_field(j, "n");
  const Json& list = field(j, "bases");
  if (!list.is_array() || static_cast<int>(list.size()) != n) throw ValidationError("'bases' must hold exactly n matrices");
  std::vector<Matrix> bases;
  for (const auto& m : list) bases.push_back(matrix_from_json(m));
  return BasisSequence(std::move(bases));
}

Json bases_to_json(const BasisSequence& b) {
  Json list = Json::array();
  for (const auto& m : b.bases()) list.push_back(matrix_to_json(m));
  return Json{{"n", b.n()}, {"bases", std::move(list)}};
}

ArrangementMatrix arrangement_from_json(const Json& j) {
  const Json& grid = field(j, "grid");
  if (!grid.is_array()) throw ValidationError("'grid' must be an array");
  std::vector<std::vector<int>> rows;
  for (const auto& r : grid) rows.push_back(int_array(r, "grid row"));
  return ArrangementMatrix(int_field(j, "n"), int_field(j, "M"), std::move(rows));
}

Json arrangement_to_json(const ArrangementMatrix& a) {
  return Json{{"n", a.n()}, {"M", a.columns()}, {"grid", a.grid()}};
}

TotalOrders orders_from_json(const Json& j) {
  const Json& list = field(j, "orders");
  if (!list.is_array()) throw ValidationError("'orders' must be an array");
  TotalOrders orders;
  for (const auto& o : list) orders.ranks.push_back(int_array(o, "ordering"));
  return orders;
}

PermTuple perms_from_json(const Json& j) {
  const Json& list = field(j, "perms");
  if (!list.is_array()) throw ValidationError("'perms' must be an array");
  PermTuple perms;
  for (const auto& p : list) perms.emplace_back(int_array(p, "permutation"));
  return perms;
}

Json perms_to_json(const PermTuple& perms) {
  Json list = Json::array();
  for (const auto& p : perms) list.push_back(p.one_line());
  return list;
}

InvariantCertificate certificate_from_json(const Json& j) {
  return InvariantCertificate{int_field(j, "M"), perms_from_json(j), scalar_from_json(field(j, "value"))};
}

Json certificate_to_json(const InvariantCertificate& c) {
  return Json{{"M", c.degree}, {"perms", perms_to_json(c.perms)}, {"value", scalar_to_json(c.value)}};
}

SliceDecomposition decomposition_from_json(const Json& j) {
  SliceDecomposition dec{int_field(j, "order"), int_field(j, "dim"), {}};
  const Json& terms = field(j, "terms");
  if (!terms.is_array()) throw ValidationError("'terms' must be an array");
  for (const auto& t : terms) {
    dec.terms.push_back(
        SliceTerm{int_field(t, "axis"), scalar_array(field(t, "vector"), "vector"), scalar_array(field(t, "residual"), "residual")});
  }
  return dec;
}

Json decomposition_to_json(const SliceDecomposition& dec) {
  Json terms = Json::array();
  for (const auto& t : dec.terms) {
    terms.push_back(Json{{"axis", t.axis}, {"vector", scalar_array_to_json(t.vector)},
                         {"residual", scalar_array_to_json(t.residual)}});
  }
  return Json{{"order", dec.order}, {"dim", dec.dim}, {"terms", std::move(terms)}};
}

Json partition_to_json(const SupportPartition& p) {
  Json out = Json::array();
  for (const auto& [idx, label] : p) out.push_back(Json{{"i", idx}, {"label", label}});
  return out;
}

Json diagonal_to_json(const DiagonalCertificate& c) {
  return Json{{"bound", c.bound()}, {"points", c.points}};
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ValidationError(std::string("invalid JSON: ") + e.what());
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_json(buf.str());
}

std::string dump(const Json& j) { return j.dump() + "\n"; }

}  // namespace rota::io
