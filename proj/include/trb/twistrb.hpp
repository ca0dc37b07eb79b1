#pragma once

#include <cstddef>
#include <vector>

#include "trb/liealg.hpp"

namespace trb {

/// Ambient data (g, M, rho, H) against which an operator T : M -> g is tested.
/// The constructor checks shapes only; make_setup also validates the axioms.
class TrbSetup {
 public:
  TrbSetup() = default;
  TrbSetup(LieAlgebra algebra, Representation rep, Cochain cocycle);

  const LieAlgebra& algebra() const { return algebra_; }
  const Representation& rep() const { return rep_; }
  const Cochain& cocycle() const { return cocycle_; }
  std::size_t algebra_dim() const { return algebra_.dim(); }
  std::size_t module_dim() const { return rep_.module_dim(); }

  /// H(x, y) for arbitrary algebra elements.
  Vec twist(const Vec& x, const Vec& y) const { return h_table_(x, y); }

  friend bool operator==(const TrbSetup& a, const TrbSetup& b) {
    return a.algebra_ == b.algebra_ && a.rep_ == b.rep_ && a.cocycle_ == b.cocycle_;
  }

 private:
  LieAlgebra algebra_;
  Representation rep_;
  Cochain cocycle_;
  BilinearMap h_table_;
};

/// Throws NotLie, NotRepresentation or NotCocycle with the first witness.
TrbSetup make_setup(LieAlgebra algebra, Representation rep, Cochain cocycle);
/// Verdict form of the three axioms.
Verdict setup_check(const TrbSetup& s);

/// Setup (g_N, g, x . y = [Nx, y], H = -N[-, -]) for a Nijenhuis operator N.
TrbSetup nijenhuis_trb_setup(const LieAlgebra& algebra, const Matrix& n);

/// An invertible h : g -> M yields T = h^{-1} twisted by H = -delta h.
struct InverseExample {
  TrbSetup setup;
  Matrix op;
};
InverseExample inverse_cochain_example(const LieAlgebra& algebra, const Representation& rep, const Matrix& h);

/// [Tu, Tv] - T(Tu . v - Tv . u + H(Tu, Tv)) for arbitrary u, v.
Vec trb_defect(const TrbSetup& s, const Matrix& t, const Vec& u, const Vec& v);
/// The defining identity on basis pairs u_i, u_j with i < j.
Verdict check_trb(const TrbSetup& s, const Matrix& t);

/// g + M with [(x,u),(y,v)] = ([x,y], x.v - y.u + H(x,y)); algebra coordinates first.
LieAlgebra twisted_semidirect(const TrbSetup& s);
/// Closure of the graph {(Tu, u)} under the twisted semidirect bracket, by rank.
Verdict graph_subalgebra_check(const TrbSetup& s, const Matrix& t);

/// [u, v]_T = Tu . v - Tv . u + H(Tu, Tv) without checking T.
LieAlgebra induced_bracket_unchecked(const TrbSetup& s, const Matrix& t);
/// u .bar x = [Tu, x] + T(x . u + H(x, Tu)) without checking T.
Representation induced_rep_unchecked(const TrbSetup& s, const Matrix& t);
/// Throw NotTwistedRB unless check_trb passes.
LieAlgebra induced_bracket(const TrbSetup& s, const Matrix& t);
Representation induced_rep(const TrbSetup& s, const Matrix& t);

struct GaugeResult {
  Matrix op;         ///< T_B = T (id + B T)^{-1}
  Matrix transport;  ///< id + B T, an isomorphism [,]_T -> [,]_{T_B}
};
/// Throws NotTwistedRB, NotCocycle or NotAdmissible.
GaugeResult gauge_transform(const TrbSetup& s, const Matrix& t, const Matrix& b);
/// A([u_i, u_j]_from) = [A u_i, A u_j]_to on basis pairs.
Verdict morphism_check(const LieAlgebra& from, const LieAlgebra& to, const Matrix& a);

struct ShiftResult {
  TrbSetup setup;  ///< H replaced by H + delta h
  Matrix op;       ///< T (id - h T)^{-1}
};
/// Throws NotTwistedRB or NotAdmissible.
ShiftResult shift_by_coboundary(const TrbSetup& s, const Matrix& t, const Matrix& h);

/// Adjoint module with H = -mu.
TrbSetup reynolds_setup(const LieAlgebra& algebra);
/// [Rx, Ry] = R([Rx, y] + [x, Ry] - [Rx, Ry]); the direct route is compared with
/// check_trb on reynolds_setup and a disagreement throws InvariantViolated.
Verdict reynolds_check(const LieAlgebra& algebra, const Matrix& r);
/// R = sum_{k < index} (-1)^k d^k. Throws NotDerivation or NotNilpotent.
Matrix reynolds_from_derivation(const LieAlgebra& algebra, const Matrix& d);

/// Symbolic check of R(l_m) = l_m / (m + 1) on the positive Witt algebra
/// [l_m, l_n] = (m - n) l_{m+n}. All values are coefficients of l_{m+n}.
struct WittRow {
  long m = 0;
  long n = 0;
  Scalar lhs;      ///< [R l_m, R l_n]
  Scalar rhs;      ///< R([R l_m, l_n] + [l_m, R l_n] - [R l_m, R l_n])
  Scalar induced;  ///< [l_m, l_n]_R
  bool pass = false;
};
WittRow witt_pair(long m, long n);
/// Rows for 0 <= m <= n <= n_max.
std::vector<WittRow> witt_report(long n_max);

/// psi^sharp(x, y) = psi(x, y, -) as a g*-valued 2-cochain.
Cochain psi_sharp(const Cochain& psi);
/// r^sharp(alpha) = r(alpha, -); the matrix is r^T.
Matrix r_sharp(const Matrix& r);

struct RMatrixReport {
  Verdict verdict;         ///< check_trb of r^sharp in the (coadjoint, psi^sharp) setup
  LieAlgebra dual_bracket; ///< [a, b]_{r,psi} on g*
  Verdict morphism;        ///< r^sharp [a, b]_{r,psi} = [r^sharp a, r^sharp b]
  TrbSetup setup;
};
/// Throws NotSkew (r or psi) or NotCocycle (psi with trivial coefficients).
RMatrixReport r_matrix_check(const LieAlgebra& algebra, const Matrix& r, const Cochain& psi);

}  // namespace trb
