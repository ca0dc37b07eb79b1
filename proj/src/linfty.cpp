#include "trb/linfty.hpp"

#include <array>

namespace trb {

namespace {

void require_element(const TrbSetup& s, const GradedElement& f) {
  require(f.source_dim() == s.module_dim() && f.target_dim() == s.algebra_dim(), ErrorKind::DimensionMismatch,
          "graded element must be a cochain from M to g");
}

Scalar parity(std::size_t k) { return k % 2 == 0 ? Scalar(1) : Scalar(-1); }

// Basis indices t[perm[k]] for k in [begin, end).
IndexTuple pick(const IndexTuple& t, const Unshuffle& sh, std::size_t begin, std::size_t end) {
  IndexTuple out;
  out.reserve(end - begin);
  for (std::size_t k = begin; k < end; ++k) out.push_back(t[sh.permutation[k]]);
  return out;
}

std::vector<Unshuffle> unshuffles(std::initializer_list<long> blocks) {
  std::vector<std::size_t> sizes;
  for (long b : blocks) {
    if (b < 0) return {};  // a block of size -1 makes the sum empty
    sizes.push_back(static_cast<std::size_t>(b));
  }
  return enumerate_unshuffles(sizes);
}

// One sum of the ternary bracket: outer(H(first(..), second(..)), rest).
void add_ternary_sum(const TrbSetup& s, const IndexTuple& t, const GradedElement& outer, const GradedElement& first,
                     const GradedElement& second, const std::vector<Unshuffle>& shs, const Scalar& coefficient,
                     Vec& value) {
  const std::size_t a = first.degree(), b = second.degree(), n = t.size();
  for (const auto& sh : shs) {
    const Vec y = first.at(pick(t, sh, 0, a));
    if (is_zero(y)) continue;
    const Vec z = second.at(pick(t, sh, a, a + b));
    if (is_zero(z)) continue;
    const Vec h = s.twist(y, z);
    if (is_zero(h)) continue;
    axpy(value, coefficient * Scalar(sh.sign), eval_lead(outer, h, pick(t, sh, a + b, n)));
  }
}

}  // namespace

GradedElement bracket2(const TrbSetup& s, const GradedElement& pe, const GradedElement& qe) {
  require_element(s, pe);
  require_element(s, qe);
  const long p = static_cast<long>(pe.degree()), q = static_cast<long>(qe.degree());
  const std::size_t n = pe.degree() + qe.degree();
  const std::size_t m = s.module_dim(), d = s.algebra_dim();
  GradedElement out(n, m, d);
  if (binomial(m, n) == 0 || pe.is_zero() || qe.is_zero()) return out;
  const auto sh1 = unshuffles({q, 1, p - 1});
  const auto sh2 = unshuffles({p, 1, q - 1});
  const auto sh3 = unshuffles({p, q});
  const Scalar s_pq = parity(pe.degree() * qe.degree());
  for (const auto& t : ExtBasis(m, n).tuples()) {
    Vec value = zero_vec(d);
    for (const auto& sh : sh1) {
      const Vec x = qe.at(pick(t, sh, 0, qe.degree()));
      if (is_zero(x)) continue;
      const Vec w = s.rep().action_of(x).column(t[sh.permutation[qe.degree()]]);
      axpy(value, Scalar(sh.sign), eval_lead(pe, w, pick(t, sh, qe.degree() + 1, n)));
    }
    for (const auto& sh : sh2) {
      const Vec x = pe.at(pick(t, sh, 0, pe.degree()));
      if (is_zero(x)) continue;
      const Vec w = s.rep().action_of(x).column(t[sh.permutation[pe.degree()]]);
      axpy(value, -s_pq * Scalar(sh.sign), eval_lead(qe, w, pick(t, sh, pe.degree() + 1, n)));
    }
    for (const auto& sh : sh3) {
      const Vec x = pe.at(pick(t, sh, 0, pe.degree()));
      if (is_zero(x)) continue;
      const Vec y = qe.at(pick(t, sh, pe.degree(), n));
      axpy(value, s_pq * Scalar(sh.sign), s.algebra().bracket(x, y));
    }
    out.set(t, value);
  }
  return out;
}

GradedElement bracket3(const TrbSetup& s, const GradedElement& pe, const GradedElement& qe, const GradedElement& re) {
  require_element(s, pe);
  require_element(s, qe);
  require_element(s, re);
  const std::size_t p = pe.degree(), q = qe.degree(), r = re.degree();
  const std::size_t m = s.module_dim(), d = s.algebra_dim();
  require(p + q + r >= 1, ErrorKind::DimensionMismatch, "ternary bracket of three degree-0 elements");
  const std::size_t n = p + q + r - 1;
  GradedElement out(n, m, d);
  if (binomial(m, n) == 0 || pe.is_zero() || qe.is_zero() || re.is_zero() || s.cocycle().is_zero()) return out;
  const long lp = static_cast<long>(p), lq = static_cast<long>(q), lr = static_cast<long>(r);
  const std::array<std::vector<Unshuffle>, 6> shs{
      unshuffles({lq, lr, lp - 1}), unshuffles({lr, lq, lp - 1}), unshuffles({lp, lr, lq - 1}),
      unshuffles({lr, lp, lq - 1}), unshuffles({lp, lq, lr - 1}), unshuffles({lq, lp, lr - 1})};
  const Scalar half = parity(p * q * r) * Scalar(1, 2);
  const std::array<Scalar, 6> coef{half,
                                   -half * parity(q * r),
                                   -half * parity(p * q),
                                   half * parity(p * (q + r)),
                                   half * parity((p + q) * r),
                                   -half * parity(p * q + q * r + r * p)};
  for (const auto& t : ExtBasis(m, n).tuples()) {
    Vec value = zero_vec(d);
    add_ternary_sum(s, t, pe, qe, re, shs[0], coef[0], value);
    add_ternary_sum(s, t, pe, re, qe, shs[1], coef[1], value);
    add_ternary_sum(s, t, qe, pe, re, shs[2], coef[2], value);
    add_ternary_sum(s, t, qe, re, pe, shs[3], coef[3], value);
    add_ternary_sum(s, t, re, pe, qe, shs[4], coef[4], value);
    add_ternary_sum(s, t, re, qe, pe, shs[5], coef[5], value);
    out.set(t, value);
  }
  return out;
}

GradedElement mc_defect(const TrbSetup& s, const Matrix& t) {
  const GradedElement te = Cochain::linear(t);
  GradedElement defect = Scalar(1, 2) * bracket2(s, te, te) - Scalar(1, 6) * bracket3(s, te, te, te);
  require(defect.is_zero() == check_trb(s, t).holds, ErrorKind::InvariantViolated,
          "Maurer-Cartan defect disagrees with the twisted Rota-Baxter check");
  return defect;
}

GradedElement d_t_unchecked(const TrbSetup& s, const Matrix& t, const GradedElement& f) {
  const GradedElement te = Cochain::linear(t);
  return bracket2(s, te, f) - Scalar(1, 2) * bracket3(s, te, te, f);
}

namespace {

void require_trb(const TrbSetup& s, const Matrix& t) {
  const Verdict v = check_trb(s, t);
  require(v.holds, ErrorKind::NotTwistedRB, v.describe());
}

}  // namespace

GradedElement d_t(const TrbSetup& s, const Matrix& t, const GradedElement& f) {
  require_trb(s, t);
  return d_t_unchecked(s, t, f);
}

Matrix d_t_matrix(const TrbSetup& s, const Matrix& t, std::size_t n) {
  require_trb(s, t);
  const std::size_t m = s.module_dim(), d = s.algebra_dim();
  const std::size_t src = d * binomial(m, n), dst = d * binomial(m, n + 1);
  Matrix out(dst, src);
  for (std::size_t k = 0; k < src; ++k)
    out.set_column(k, d_t_unchecked(s, t, Cochain::from_flat(n, m, d, unit_vec(src, k))).flatten());
  return out;
}

bool compare_dt_ce(const TrbSetup& s, const Matrix& t, const GradedElement& f) {
  require_trb(s, t);
  require_element(s, f);
  const LieAlgebra induced = induced_bracket_unchecked(s, t);
  const Representation rep = induced_rep_unchecked(s, t);
  return d_t_unchecked(s, t, f) == parity(f.degree()) * ce_apply(induced, rep, f);
}

std::vector<std::size_t> cohomology_of_t_dims(const TrbSetup& s, const Matrix& t, std::size_t n_max) {
  require_trb(s, t);
  return cohomology_dims([&](std::size_t n) { return d_t_matrix(s, t, n); }, n_max);
}

GradedElement twisted_bracket2(const TrbSetup& s, const Matrix& t, const GradedElement& p, const GradedElement& q) {
  require_trb(s, t);
  return bracket2(s, p, q) - bracket3(s, Cochain::linear(t), p, q);
}

GradedElement mc_defect_shifted(const TrbSetup& s, const Matrix& t, const Matrix& t_prime) {
  require_trb(s, t);
  const GradedElement tp = Cochain::linear(t_prime);
  const GradedElement te = Cochain::linear(t);
  const GradedElement twisted = bracket2(s, tp, tp) - bracket3(s, te, tp, tp);
  GradedElement defect =
      d_t_unchecked(s, t, tp) + Scalar(1, 2) * twisted - Scalar(1, 6) * bracket3(s, tp, tp, tp);
  require(defect == mc_defect(s, t + t_prime), ErrorKind::InvariantViolated,
          "shifted Maurer-Cartan defect differs from the defect of T + T'");
  return defect;
}

int koszul_sign(std::span<const std::size_t> perm, std::span<const std::size_t> degrees) {
  int sign = 1;
  for (std::size_t k = 0; k < perm.size(); ++k)
    for (std::size_t l = k + 1; l < perm.size(); ++l)
      if (perm[k] > perm[l] && (degrees[perm[k]] * degrees[perm[l]]) % 2 == 1) sign = -sign;
  return sign;
}

namespace {

GradedElement apply_bracket(const TrbSetup& s, const std::vector<const GradedElement*>& args) {
  if (args.size() == 2) return bracket2(s, *args[0], *args[1]);
  return bracket3(s, *args[0], *args[1], *args[2]);
}

}  // namespace

GradedElement linfty_jacobi_defect(const TrbSetup& s, std::size_t n, const std::vector<GradedElement>& xs) {
  require(n >= 2 && n <= 5, ErrorKind::InvalidInput, "higher Jacobi defect is implemented for n = 2..5");
  require(xs.size() == n, ErrorKind::DimensionMismatch, "higher Jacobi defect needs exactly n elements");
  for (const auto& x : xs) require_element(s, x);
  std::vector<std::size_t> degrees;
  std::size_t total = 0;
  for (const auto& x : xs) {
    degrees.push_back(x.degree());
    total += x.degree();
  }
  if (n == 2)
    return bracket2(s, xs[0], xs[1]) + parity(degrees[0] * degrees[1]) * bracket2(s, xs[1], xs[0]);
  // Only l2 and l3 are nonzero, so i, j range over {2, 3} with i + j = n + 1.
  // A negative target degree means every term lands in the zero space.
  if (total + 3 < n) return GradedElement(0, s.module_dim(), s.algebra_dim());
  GradedElement defect(total + 3 - n, s.module_dim(), s.algebra_dim());
  for (std::size_t i = 2; i <= 3; ++i) {
    if (n + 1 < i) continue;
    const std::size_t j = n + 1 - i;
    if (j < 2 || j > 3) continue;
    // l3 of three degree-0 elements is undefined; such terms are skipped.
    for (const auto& sh : unshuffles({static_cast<long>(i), static_cast<long>(n - i)})) {
      std::vector<const GradedElement*> inner_args;
      std::size_t inner_degree = 0;
      for (std::size_t k = 0; k < i; ++k) {
        inner_args.push_back(&xs[sh.permutation[k]]);
        inner_degree += degrees[sh.permutation[k]];
      }
      if (i == 3 && inner_degree == 0) continue;
      const GradedElement inner = apply_bracket(s, inner_args);
      std::vector<const GradedElement*> outer_args{&inner};
      std::size_t outer_degree = inner.degree();
      for (std::size_t k = i; k < n; ++k) {
        outer_args.push_back(&xs[sh.permutation[k]]);
        outer_degree += degrees[sh.permutation[k]];
      }
      if (j == 3 && outer_degree == 0) continue;
      const Scalar sign = Scalar(sh.sign * koszul_sign(sh.permutation, degrees)) * parity(i * (j - 1));
      defect += sign * apply_bracket(s, outer_args);
    }
  }
  return defect;
}

}  // namespace trb
