#pragma once

#include <array>
#include <string>

#include "trb/twistrb.hpp"

namespace trb {

/// Structure components of J = [[N, T], [sigma, -S]] on g + M. S is stored
/// unnegated; block() renders the minus sign.
struct GcsComponents {
  Matrix n;      ///< g -> g
  Matrix t;      ///< M -> g
  Matrix sigma;  ///< g -> M
  Matrix s;      ///< M -> M
  Matrix block() const;
  friend bool operator==(const GcsComponents&, const GcsComponents&) = default;
};

struct GcsDirectReport {
  Verdict almost_complex;  ///< J^2 = -id, witness per column
  Verdict integrable;      ///< [Jr,Js] - [r,s] - J([Jr,s] + [r,Js]) on basis pairs of g + M
  bool holds() const { return almost_complex.holds && integrable.holds; }
};
/// Throws DimensionMismatch on inconsistent shapes.
GcsDirectReport tgcs_check_direct(const TrbSetup& s, const GcsComponents& j);

struct GcsComponentReport {
  static constexpr std::size_t count = 10;
  static const std::array<const char*, count> names;
  std::array<Verdict, count> equations;
  bool holds() const;
};
/// The ten component equations. Their conjunction is asserted equal to the
/// direct verdict; equation 5 is asserted to imply check_trb with H = 0 and,
/// together with equation 6, closure of the graph of (T, S) in the (-H)
/// twisted semidirect product. When T is injective closure plus equation 5
/// is asserted to give equation 6.
GcsComponentReport tgcs_check_components(const TrbSetup& s, const GcsComponents& j);

/// Closure of {(Tu, Su)} under the bracket of g + M twisted by -H, by rank.
Verdict graph_pair_subalgebra_check(const TrbSetup& s, const Matrix& t, const Matrix& smat);

/// [[0, T], [-T^{-1}, 0]]. Throws NonzeroH, NotTwistedRB, SingularMatrix.
GcsComponents gcs_from_invertible_rb(const TrbSetup& s, const Matrix& t);

struct OppositeResult {
  TrbSetup setup;  ///< same algebra and module, cocycle -H
  GcsComponents gcs;  ///< [[N, -T], [-sigma, -S]]
};
/// Throws NotGcs; the opposite is asserted to pass the direct check.
OppositeResult opposite(const TrbSetup& s, const GcsComponents& j);

struct ComplexStructureReport {
  Verdict algebra_square;  ///< I^2 = -id
  Verdict algebra_integrable;  ///< [Ix,Iy] - [x,y] - I([Ix,y] + [x,Iy]) = 0
  Verdict module_square;   ///< I_M^2 = -id
  Verdict module_integrable;  ///< Ix . I_M u - x . u - I_M(Ix . u + x . I_M u) = 0
  bool holds() const {
    return algebra_square.holds && algebra_integrable.holds && module_square.holds && module_integrable.holds;
  }
};
ComplexStructureReport complex_structure_check(const LieAlgebra& algebra, const Representation& rep, const Matrix& i,
                                               const Matrix& i_m);
/// N = I, T = 0, sigma = 0, S = -I_M.
GcsComponents embed_complex(const Matrix& i, const Matrix& i_m);

/// (N, r, sigma) with r, sigma skew; J = [[N, r#], [sigma_flat, -N*]] on g + g*.
struct LieGcsTriple {
  Matrix n;
  Matrix r;
  Matrix sigma;
};

/// (x, a) -> (a(y) + b(x)) / 2 as a Gram matrix on g + g*.
Matrix pairing_gram(std::size_t dim);
/// <Jr, Js> = <r, s> on basis pairs.
Verdict orthogonality_check(const Matrix& j);

struct LieGcsReport {
  TrbSetup setup;       ///< (g, g*, coadjoint, psi#)
  GcsComponents gcs;    ///< T = r#, sigma = sigma_flat, S = N*
  Verdict orthogonal;
  GcsComponentReport components;
  bool holds() const { return orthogonal.holds && components.holds(); }
};
/// Throws NotSkew, NotCocycle (psi with trivial coefficients), DimensionMismatch.
LieGcsReport lie_tgcs_check(const LieAlgebra& algebra, const Cochain& psi, const LieGcsTriple& triple);

}  // namespace trb
