#include "trb/io.hpp"

#include <fstream>
#include <sstream>

namespace trb::io {

namespace {

[[noreturn]] void invalid(const std::string& what) { fail(ErrorKind::InvalidInput, what); }

const Json& field(const Json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) invalid(std::string("missing field \"") + name + "\"");
  return j.at(name);
}

std::size_t size_field(const Json& j, const char* name) {
  const Json& v = field(j, name);
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0))
    invalid(std::string("field \"") + name + "\" must be a non-negative integer");
  return v.get<std::size_t>();
}

Json pairs_to_json(const BilinearMap& m, bool increasing_only) {
  Json out = Json::object();
  for (std::size_t i = 0; i < m.left_dim(); ++i)
    for (std::size_t k = increasing_only ? i + 1 : 0; k < m.right_dim(); ++k) {
      const Vec v = m.at(i, k);
      if (!is_zero(v)) out[format_key({i, k})] = to_json(v);
    }
  return out;
}

BilinearMap ordered_pairs_from_json(const Json& j, std::size_t dim, const char* what) {
  if (!j.is_object()) invalid(std::string(what) + " must be an object keyed by \"[i,j]\"");
  BilinearMap out(dim, dim, dim);
  for (const auto& [key, value] : j.items()) {
    const IndexTuple t = parse_key(key);
    if (t.size() != 2 || t[0] >= dim || t[1] >= dim) invalid(std::string(what) + " key " + key + " out of range");
    out.set(t[0], t[1], vec_from_json(value, dim));
  }
  return out;
}

std::vector<Assignment> assignments_from_json(const Json& j, std::size_t target_dim) {
  if (!j.is_object()) invalid("values must be an object keyed by \"[i,j,...]\"");
  std::vector<Assignment> out;
  for (const auto& [key, value] : j.items()) out.emplace_back(parse_key(key), vec_from_json(value, target_dim));
  return out;
}

}  // namespace

Json to_json(const Scalar& s) { return s.str(); }

Json to_json(const Vec& v) {
  Json out = Json::array();
  for (const Scalar& s : v) out.push_back(to_json(s));
  return out;
}

Json to_json(const Matrix& m) {
  Json out = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(to_json(m.row(r)));
  return out;
}

Json to_json(const Cochain& c) {
  Json values = Json::object();
  for (const auto& t : ExtBasis(c.source_dim(), c.degree()).tuples()) {
    const Vec v = c.at(t);
    if (!is_zero(v)) values[format_key(t)] = to_json(v);
  }
  return Json{{"degree", c.degree()},
              {"source_dim", c.source_dim()},
              {"target_dim", c.target_dim()},
              {"values", std::move(values)}};
}

Json to_json(const LieAlgebra& g) {
  return Json{{"dim", g.dim()}, {"brackets", pairs_to_json(g.table(), true)}};
}

Json to_json(const Representation& rep) {
  Json action = Json::array();
  for (const Matrix& m : rep.action()) action.push_back(to_json(m));
  return Json{{"module_dim", rep.module_dim()}, {"action", std::move(action)}};
}

Json to_json(const NsLie& ns) {
  return Json{{"dim", ns.dim()},
              {"circ", pairs_to_json(ns.circ, false)},
              {"vee", pairs_to_json(BilinearMap::from_cochain(ns.vee), true)}};
}

Json to_json(const AssocNs& a) {
  return Json{{"dim", a.dim()},
              {"prec", pairs_to_json(a.prec, false)},
              {"succ", pairs_to_json(a.succ, false)},
              {"box", pairs_to_json(a.box, false)}};
}

Json to_json(const GcsComponents& j) {
  return Json{{"N", to_json(j.n)}, {"T", to_json(j.t)}, {"sigma", to_json(j.sigma)}, {"S", to_json(j.s)}};
}

Json to_json(const TrbSetup& s) {
  return Json{{"lie_algebra", to_json(s.algebra())},
              {"representation", to_json(s.rep())},
              {"cocycle_H", to_json(s.cocycle())}};
}

Scalar scalar_from_json(const Json& j) {
  if (j.is_number_integer()) return Scalar(j.get<long>());
  if (!j.is_string()) invalid("scalar must be a string \"p/q\" or an integer, got " + j.dump());
  try {
    return Scalar::parse(j.get<std::string>());
  } catch (const std::exception&) {
    invalid("malformed scalar " + j.dump());
  }
}

Vec vec_from_json(const Json& j, std::optional<std::size_t> size) {
  if (!j.is_array()) invalid("vector must be an array, got " + j.dump());
  if (size && j.size() != *size)
    invalid("vector " + j.dump() + " has length " + std::to_string(j.size()) + ", expected " + std::to_string(*size));
  Vec out;
  for (const Json& e : j) out.push_back(scalar_from_json(e));
  return out;
}

Matrix matrix_from_json(const Json& j, std::optional<std::size_t> rows, std::optional<std::size_t> cols) {
  if (!j.is_array()) invalid("matrix must be an array of rows");
  if (rows && j.size() != *rows)
    invalid("matrix has " + std::to_string(j.size()) + " rows, expected " + std::to_string(*rows));
  // An empty row list still carries its expected column count.
  const std::size_t c = cols ? *cols : (j.empty() ? 0 : j.front().size());
  std::vector<Vec> out;
  for (const Json& row : j) out.push_back(vec_from_json(row, c));
  return Matrix::from_rows(out, c);
}

Cochain cochain_from_json(const Json& j) {
  const std::size_t p = size_field(j, "degree"), n = size_field(j, "source_dim"), m = size_field(j, "target_dim");
  return cochain_from_values(p, n, m, assignments_from_json(field(j, "values"), m));
}

LieAlgebra lie_from_json(const Json& j) {
  const std::size_t n = size_field(j, "dim");
  return LieAlgebra(cochain_from_values(2, n, n, assignments_from_json(field(j, "brackets"), n)));
}

Representation rep_from_json(const Json& j, std::size_t algebra_dim) {
  const std::size_t m = size_field(j, "module_dim");
  const Json& action = field(j, "action");
  if (!action.is_array() || action.size() != algebra_dim)
    invalid("representation needs one action matrix per algebra generator (" + std::to_string(algebra_dim) + ")");
  std::vector<Matrix> mats;
  for (const Json& a : action) mats.push_back(matrix_from_json(a, m, m));
  return Representation(algebra_dim, m, std::move(mats));
}

NsLie ns_lie_from_json(const Json& j) {
  const std::size_t n = size_field(j, "dim");
  BilinearMap circ = ordered_pairs_from_json(field(j, "circ"), n, "circ");
  return NsLie(std::move(circ), cochain_from_values(2, n, n, assignments_from_json(field(j, "vee"), n)));
}

AssocNs assoc_ns_from_json(const Json& j) {
  const std::size_t n = size_field(j, "dim");
  return AssocNs(ordered_pairs_from_json(field(j, "prec"), n, "prec"),
                 ordered_pairs_from_json(field(j, "succ"), n, "succ"),
                 ordered_pairs_from_json(field(j, "box"), n, "box"));
}

GcsComponents gcs_from_json(const Json& j) {
  return {matrix_from_json(field(j, "N")), matrix_from_json(field(j, "T")), matrix_from_json(field(j, "sigma")),
          matrix_from_json(field(j, "S"))};
}

LieGcsTriple lie_gcs_from_json(const Json& j) {
  return {matrix_from_json(field(j, "N")), matrix_from_json(field(j, "r")), matrix_from_json(field(j, "sigma"))};
}

std::vector<Matrix> deformation_from_json(const Json& j) {
  const std::size_t k = size_field(j, "order");
  const Json& coeffs = field(j, "coefficients");
  if (!coeffs.is_array() || coeffs.size() != k) invalid("deformation needs exactly \"order\" coefficient matrices");
  std::vector<Matrix> out;
  for (const Json& c : coeffs) out.push_back(matrix_from_json(c));
  return out;
}

IndexTuple parse_key(const std::string& key) {
  const Json parsed = Json::parse(key, nullptr, false);
  if (parsed.is_discarded() || !parsed.is_array()) invalid("malformed index key " + key);
  IndexTuple out;
  for (const Json& e : parsed) {
    if (!e.is_number_integer() || e.get<long long>() < 0) invalid("malformed index key " + key);
    out.push_back(e.get<std::size_t>());
  }
  return out;
}

std::string format_key(const IndexTuple& t) {
  std::string out = "[";
  for (std::size_t i = 0; i < t.size(); ++i) out += (i ? "," : "") + std::to_string(t[i]);
  return out + "]";
}

Instance instance_from_json(const Json& j) {
  if (!j.is_object()) invalid("instance must be a JSON object");
  Instance in;
  if (j.contains("lie_algebra")) in.lie_algebra = lie_from_json(j.at("lie_algebra"));
  const auto need_lie = [&](const char* section) -> const LieAlgebra& {
    if (!in.lie_algebra) invalid(std::string("section \"") + section + "\" requires \"lie_algebra\"");
    return *in.lie_algebra;
  };
  if (j.contains("representation")) {
    in.representation = rep_from_json(j.at("representation"), need_lie("representation").dim());
  } else if (j.contains("module")) {
    const Json& m = j.at("module");
    const LieAlgebra& g = need_lie("module");
    if (m == "adjoint")
      in.representation = adjoint_rep(g);
    else if (m == "coadjoint")
      in.representation = coadjoint_rep(g);
    else if (m.is_object() && m.contains("trivial"))
      in.representation = trivial_rep(g, size_field(m, "trivial"));
    else
      invalid("module must be \"adjoint\", \"coadjoint\" or {\"trivial\": m}");
  }
  if (j.contains("cocycle_H")) in.cocycle_h = cochain_from_json(j.at("cocycle_H"));
  if (j.contains("operator_T")) in.operator_t = matrix_from_json(j.at("operator_T"));
  if (j.contains("operator_N")) in.operator_n = matrix_from_json(j.at("operator_N"));
  if (j.contains("derivation_d")) in.derivation_d = matrix_from_json(j.at("derivation_d"));
  if (j.contains("ns_lie")) in.ns_lie = ns_lie_from_json(j.at("ns_lie"));
  if (j.contains("assoc_ns")) in.assoc_ns = assoc_ns_from_json(j.at("assoc_ns"));
  if (j.contains("gcs_components")) in.gcs_components = gcs_from_json(j.at("gcs_components"));
  if (j.contains("lie_gcs")) in.lie_gcs = lie_gcs_from_json(j.at("lie_gcs"));
  if (j.contains("deformation")) in.deformation = deformation_from_json(j.at("deformation"));
  if (j.contains("psi")) in.psi = cochain_from_json(j.at("psi"));
  static const char* known[] = {"lie_algebra", "module",       "representation", "cocycle_H", "operator_T",
                                "operator_N",  "derivation_d", "ns_lie",         "assoc_ns",  "gcs_components",
                                "lie_gcs",     "deformation",  "psi",            "comment"};
  for (const auto& [key, value] : j.items()) {
    bool ok = false;
    for (const char* k : known) ok = ok || key == k;
    if (!ok) invalid("unknown section \"" + key + "\"");
  }
  return in;
}

Instance load_instance(const std::string& path) {
  std::ifstream file(path);
  if (!file) invalid("cannot open " + path);
  std::stringstream buffer;
  buffer << file.rdbuf();
  const Json j = Json::parse(buffer.str(), nullptr, false);
  if (j.is_discarded()) invalid(path + " is not valid JSON");
  return instance_from_json(j);
}

}  // namespace trb::io
