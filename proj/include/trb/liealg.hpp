#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "trb/errors.hpp"
#include "trb/matrix.hpp"
#include "trb/multilin.hpp"

namespace trb {

/// Finite-dimensional Lie algebra given by its structure constants.
///
/// Construction only checks shapes; use validate_lie / jacobi_check for the
/// axioms. Intermediate brackets produced by constructions (deformed or
/// induced brackets) are representable before they are known to be Lie.
class LieAlgebra {
 public:
  LieAlgebra() = default;
  /// `bracket` must be a degree-2 cochain with equal source and target dimension.
  explicit LieAlgebra(Cochain bracket);
  static LieAlgebra abelian(std::size_t dim);

  std::size_t dim() const { return bracket_.source_dim(); }
  const Cochain& bracket_cochain() const { return bracket_; }
  const BilinearMap& table() const { return table_; }

  Vec bracket(std::size_t i, std::size_t j) const { return table_.at(i, j); }
  Vec bracket(const Vec& x, const Vec& y) const { return table_(x, y); }
  /// Matrix of ad_x = [x, -].
  Matrix ad(const Vec& x) const;

  friend bool operator==(const LieAlgebra& a, const LieAlgebra& b) { return a.bracket_ == b.bracket_; }

 private:
  Cochain bracket_;
  BilinearMap table_;
};

/// Action of a Lie algebra on a module: one module_dim x module_dim matrix
/// per algebra basis element.
class Representation {
 public:
  Representation() = default;
  Representation(std::size_t algebra_dim, std::size_t module_dim, std::vector<Matrix> action);

  std::size_t algebra_dim() const { return action_.size(); }
  std::size_t module_dim() const { return module_dim_; }
  const std::vector<Matrix>& action() const { return action_; }
  const Matrix& action(std::size_t i) const { return action_[i]; }
  Matrix action_of(const Vec& x) const;
  /// x . u
  Vec act(const Vec& x, const Vec& u) const;

  friend bool operator==(const Representation&, const Representation&) = default;

 private:
  std::size_t module_dim_ = 0;
  std::vector<Matrix> action_;
};

template <class T>
struct Checked {
  std::optional<T> value;
  Verdict verdict;
  explicit operator bool() const { return value.has_value(); }
};

/// Checks skewness on all basis pairs, then Jacobi on all basis triples.
Checked<LieAlgebra> validate_lie(const BilinearMap& structure_constants);
Verdict jacobi_check(const LieAlgebra& algebra);

Checked<Representation> validate_rep(const LieAlgebra& algebra, std::vector<Matrix> action);
/// rho([e_i, e_j]) = [rho(e_i), rho(e_j)] on all pairs i < j.
Verdict representation_check(const LieAlgebra& algebra, const Representation& rep);

Representation adjoint_rep(const LieAlgebra& algebra);
Representation trivial_rep(const LieAlgebra& algebra, std::size_t module_dim);
/// (ad*_x alpha)(y) = -alpha([x, y]) in the dual basis; matrices are -ad(e_i)^T.
Representation coadjoint_rep(const LieAlgebra& algebra);
Representation direct_sum(const Representation& a, const Representation& b);

/// Chevalley-Eilenberg differential applied to a cochain Hom(wedge^n g, M).
Cochain ce_apply(const LieAlgebra& algebra, const Representation& rep, const Cochain& f);
/// Matrix of delta: C^n -> C^{n+1} in flattened cochain coordinates.
Matrix ce_differential(const LieAlgebra& algebra, const Representation& rep, std::size_t n);
/// dim H^0 .. dim H^{n_max}. Requires n_max <= dim.
std::vector<std::size_t> ce_cohomology_dims(const LieAlgebra& algebra, const Representation& rep,
                                            std::size_t n_max);

/// dim H^n = (dim C^n - rank d^n) - rank d^{n-1} for n = 0..n_max.
std::vector<std::size_t> cohomology_dims(const std::function<Matrix(std::size_t)>& differential,
                                         std::size_t n_max);

/// Witness is the first basis triple where delta H does not vanish.
Verdict is_two_cocycle(const LieAlgebra& algebra, const Representation& rep, const Cochain& h);
/// delta_CE f = 0, witness on the first failing tuple.
Verdict is_cocycle(const LieAlgebra& algebra, const Representation& rep, const Cochain& f);

/// [Nx, Ny] = N([Nx, y] + [x, Ny] - N[x, y]) on basis pairs.
Verdict nijenhuis_check(const LieAlgebra& algebra, const Matrix& n);
/// [x, y]_N = [Nx, y] + [x, Ny] - N[x, y]. Throws NotNijenhuis.
LieAlgebra deformed_bracket(const LieAlgebra& algebra, const Matrix& n);
/// Bracket-wise sum of two brackets on the same space (not validated).
LieAlgebra sum_bracket(const LieAlgebra& a, const LieAlgebra& b);

/// d[x, y] = [dx, y] + [x, dy] on basis pairs.
Verdict derivation_check(const LieAlgebra& algebra, const Matrix& d);
/// Least k >= 1 with d^k = 0, scanning k <= dim^2 + 1. Throws NotNilpotent.
std::size_t nilpotency_index(const Matrix& d);

Matrix power(const Matrix& m, std::size_t k);

}  // namespace trb
