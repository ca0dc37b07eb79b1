#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "trb/linfty.hpp"

namespace trb {

/// Polynomial deformation T_t = T_0 + t T_1 + ... + t^k T_k.
struct FormalDeformation {
  TrbSetup setup;
  Matrix base;                    ///< T_0
  std::vector<Matrix> coefficients;  ///< T_1 .. T_k
  std::size_t order() const { return coefficients.size(); }
  /// T_i with T_0 = base and T_i = 0 beyond the order.
  Matrix term(std::size_t i) const;
};

/// Order-n defect, n = 1..k, of the deformation equations
/// sum_{i+j=n} [T_i u, T_j v] = sum_{i+j=n} T_i(T_j u . v - T_j v . u) + sum_{i+j+l=n} T_i H(T_j u, T_l v),
/// as M x M -> g cochains (left side minus right side).
std::vector<Cochain> deformation_equation_defects(const FormalDeformation& d);

/// d_T(T_1) = 0; asserted equal to the vanishing of the order-1 defect. Throws NotTwistedRB.
bool infinitesimal_is_cocycle(const TrbSetup& s, const Matrix& t, const Matrix& t1);

struct LinearDeformationReport {
  Verdict order1;  ///< t^1 coefficient
  Verdict order2;  ///< t^2 coefficient
  Verdict order3;  ///< T_1 H(T_1 u, T_1 v) = 0
  bool holds() const { return order1.holds && order2.holds && order3.holds; }
};
/// Throws NotTwistedRB.
LinearDeformationReport linear_deformation_check(const TrbSetup& s, const Matrix& t, const Matrix& t1);

struct EquivalenceReport {
  std::vector<std::pair<std::string, Verdict>> conditions;  ///< seven identities
  bool holds() const;
};
/// The seven conditions for (id + t[x,-], id + t(x . - + H(x, T -))) to be a
/// morphism from T + t T_1 to T + t T_1'. When all pass, T_1 - T_1' = d_T(x) is
/// asserted. Throws NotTwistedRB.
EquivalenceReport equivalence_check(const TrbSetup& s, const Matrix& t, const Matrix& t1, const Matrix& t1_prime,
                                    const Vec& x);

/// a - b lies in d_T(g), i.e. a and b define the same class in H^1_T. Throws NotTwistedRB.
bool cohomologous(const TrbSetup& s, const Matrix& t, const Matrix& a, const Matrix& b);

struct NijenhuisElementReport {
  std::vector<std::pair<std::string, Verdict>> conditions;  ///< six identities
  bool holds() const;
};
/// [x, u .bar x] = 0 together with the Lie-morphism, action and cocycle
/// conditions on all basis elements. Throws NotTwistedRB.
NijenhuisElementReport nijenhuis_element_check(const TrbSetup& s, const Matrix& t, const Vec& x);

struct RigidityReport {
  std::size_t z1_dim = 0;  ///< dim ker d_T on degree 1
  std::size_t b1_dim = 0;  ///< dim d_T(g)
  std::vector<Cochain> cocycle_basis;
  /// Chosen Nijenhuis preimage per basis cocycle, up to the first failure.
  std::vector<Vec> preimages;
  bool sufficient = false;
  std::string summary() const;
};
/// Probe of the hypothesis Z^1_T = d_T(Nij(T)). For each basis cocycle f the
/// affine space {x : d_T x = f} is scanned over coefficients in [-grid, grid]
/// of a kernel basis (0, 1, -1, 2, -2, ... per coordinate, lexicographic).
/// A candidate is accepted when it and its sums with all earlier choices are
/// Nijenhuis elements; the quadratic conditions then hold on the whole span,
/// so every cocycle has a Nijenhuis preimage. Throws NotTwistedRB.
RigidityReport rigidity_probe(const TrbSetup& s, const Matrix& t, long grid = 2);

}  // namespace trb
