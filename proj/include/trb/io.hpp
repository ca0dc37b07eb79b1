#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "trb/deform.hpp"
#include "trb/nslie.hpp"
#include "trb/tgcs.hpp"

/// JSON forms of every structure. Scalars are strings "p/q" in lowest terms
/// (integers without "/1"); integer JSON numbers are accepted on input.
/// Schema violations throw MathError(InvalidInput).
namespace trb::io {

using Json = nlohmann::ordered_json;

Json to_json(const Scalar& s);
Json to_json(const Vec& v);
/// Row-major array of rows.
Json to_json(const Matrix& m);
/// {"degree", "source_dim", "target_dim", "values": {"[i,j,...]": [...]}}; zero values omitted.
Json to_json(const Cochain& c);
/// {"dim", "brackets": {"[i,j]": [...]}} with i < j.
Json to_json(const LieAlgebra& g);
/// {"module_dim", "action": [matrix per generator]}
Json to_json(const Representation& rep);
/// {"dim", "circ": ordered pairs, "vee": pairs i < j}
Json to_json(const NsLie& ns);
/// {"dim", "prec", "succ", "box"} over ordered pairs.
Json to_json(const AssocNs& a);
/// {"N", "T", "sigma", "S"}
Json to_json(const GcsComponents& j);
/// {"lie_algebra", "representation", "cocycle_H"}
Json to_json(const TrbSetup& s);

Scalar scalar_from_json(const Json& j);
Vec vec_from_json(const Json& j, std::optional<std::size_t> size = std::nullopt);
Matrix matrix_from_json(const Json& j, std::optional<std::size_t> rows = std::nullopt,
                        std::optional<std::size_t> cols = std::nullopt);
Cochain cochain_from_json(const Json& j);
/// Structure constants only; the Jacobi identity is not checked.
LieAlgebra lie_from_json(const Json& j);
Representation rep_from_json(const Json& j, std::size_t algebra_dim);
NsLie ns_lie_from_json(const Json& j);
AssocNs assoc_ns_from_json(const Json& j);
GcsComponents gcs_from_json(const Json& j);
LieGcsTriple lie_gcs_from_json(const Json& j);
/// {"order": k, "coefficients": [T_1 .. T_k]}
std::vector<Matrix> deformation_from_json(const Json& j);

/// "[i,j,...]" -> indices.
IndexTuple parse_key(const std::string& key);
std::string format_key(const IndexTuple& t);

/// All sections optional; the module is either "representation" (explicit) or
/// "module": "adjoint" | "coadjoint" | {"trivial": m}.
struct Instance {
  std::optional<LieAlgebra> lie_algebra;
  std::optional<Representation> representation;
  std::optional<Cochain> cocycle_h;
  std::optional<Matrix> operator_t;
  std::optional<Matrix> operator_n;
  std::optional<Matrix> derivation_d;
  std::optional<NsLie> ns_lie;
  std::optional<AssocNs> assoc_ns;
  std::optional<GcsComponents> gcs_components;
  std::optional<LieGcsTriple> lie_gcs;
  std::optional<std::vector<Matrix>> deformation;
  std::optional<Cochain> psi;
};

Instance instance_from_json(const Json& j);
Instance load_instance(const std::string& path);

}  // namespace trb::io
