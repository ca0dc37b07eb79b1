#pragma once

#include <cstddef>
#include <vector>

#include "trb/twistrb.hpp"

namespace trb {

/// Homogeneous element of the graded space of Hom(wedge^p M, g); the grading
/// is the cochain degree p.
using GradedElement = Cochain;

/// Binary bracket [[P, Q]] of degree p + q.
GradedElement bracket2(const TrbSetup& s, const GradedElement& p, const GradedElement& q);
/// Ternary bracket [[P, Q, R]] of degree p + q + r - 1, built from H.
GradedElement bracket3(const TrbSetup& s, const GradedElement& p, const GradedElement& q, const GradedElement& r);

/// 1/2 [[T, T]] - 1/6 [[T, T, T]]. Throws InvariantViolated if its vanishing
/// disagrees with check_trb.
GradedElement mc_defect(const TrbSetup& s, const Matrix& t);

/// d_T f = [[T, f]] - 1/2 [[T, T, f]] without checking T.
GradedElement d_t_unchecked(const TrbSetup& s, const Matrix& t, const GradedElement& f);
/// Throws NotTwistedRB.
GradedElement d_t(const TrbSetup& s, const Matrix& t, const GradedElement& f);
/// Matrix of d_T on degree n in flattened cochain coordinates. Throws NotTwistedRB.
Matrix d_t_matrix(const TrbSetup& s, const Matrix& t, std::size_t n);

/// d_T f = (-1)^n delta_CE f, delta_CE over (M, [,]_T) with coefficients (g, .bar).
bool compare_dt_ce(const TrbSetup& s, const Matrix& t, const GradedElement& f);
/// dim H^n_T(M, g) for n = 0..n_max.
std::vector<std::size_t> cohomology_of_t_dims(const TrbSetup& s, const Matrix& t, std::size_t n_max);

/// [[P, Q]]_T = [[P, Q]] - [[T, P, Q]]. Throws NotTwistedRB.
GradedElement twisted_bracket2(const TrbSetup& s, const Matrix& t, const GradedElement& p, const GradedElement& q);
/// d_T T' + 1/2 [[T', T']]_T - 1/6 [[T', T', T']]. Throws NotTwistedRB, and
/// InvariantViolated if the result differs from mc_defect(T + T').
GradedElement mc_defect_shifted(const TrbSetup& s, const Matrix& t, const Matrix& t_prime);

/// Koszul sign of a permutation of homogeneous elements of the given degrees;
/// permutation[k] is the element placed in slot k.
int koszul_sign(std::span<const std::size_t> permutation, std::span<const std::size_t> degrees);

/// n-th higher Jacobi sum for l1 = 0, l2, l3 and n in {3, 4, 5}. For n = 2 the
/// sum is identically zero; the graded skew residual [[x1,x2]] + (-1)^{pq}[[x2,x1]]
/// is returned instead. When the target degree would be negative a zero
/// degree-0 element is returned.
GradedElement linfty_jacobi_defect(const TrbSetup& s, std::size_t n, const std::vector<GradedElement>& elements);

}  // namespace trb
