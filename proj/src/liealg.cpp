#include "trb/liealg.hpp"

#include <string>

namespace trb {

LieAlgebra::LieAlgebra(Cochain bracket) : bracket_(std::move(bracket)) {
  require(bracket_.degree() == 2 && bracket_.source_dim() == bracket_.target_dim(), ErrorKind::DimensionMismatch,
          "a Lie bracket is a degree-2 cochain from g to g");
  table_ = BilinearMap::from_cochain(bracket_);
}

LieAlgebra LieAlgebra::abelian(std::size_t dim) { return LieAlgebra(Cochain(2, dim, dim)); }

Matrix LieAlgebra::ad(const Vec& x) const {
  Matrix m(dim(), dim());
  for (std::size_t j = 0; j < dim(); ++j) m.set_column(j, bracket(x, unit_vec(dim(), j)));
  return m;
}

Representation::Representation(std::size_t algebra_dim, std::size_t module_dim, std::vector<Matrix> action)
    : module_dim_(module_dim), action_(std::move(action)) {
  require(action_.size() == algebra_dim, ErrorKind::DimensionMismatch,
          "representation needs one action matrix per algebra basis element");
  for (const auto& m : action_)
    require(m.rows() == module_dim && m.cols() == module_dim, ErrorKind::DimensionMismatch,
            "action matrices must be module_dim x module_dim");
}

Matrix Representation::action_of(const Vec& x) const {
  require(x.size() == action_.size(), ErrorKind::DimensionMismatch, "action_of: algebra element dimension");
  Matrix m(module_dim_, module_dim_);
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!x[i].is_zero()) m += x[i] * action_[i];
  return m;
}

Vec Representation::act(const Vec& x, const Vec& u) const {
  require(x.size() == action_.size() && u.size() == module_dim_, ErrorKind::DimensionMismatch,
          "act: argument dimension");
  Vec out = zero_vec(module_dim_);
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!x[i].is_zero()) axpy(out, x[i], action_[i].apply(u));
  return out;
}

Checked<LieAlgebra> validate_lie(const BilinearMap& sc) {
  require(sc.left_dim() == sc.right_dim() && sc.right_dim() == sc.out_dim(), ErrorKind::DimensionMismatch,
          "structure constants must be a bilinear map g x g -> g");
  Checked<LieAlgebra> out;
  const std::size_t n = sc.left_dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) out.verdict.note("skewness", {i, j}, sc.at(i, j) + sc.at(j, i));
  if (!out.verdict) return out;
  LieAlgebra algebra(sc.to_cochain());
  out.verdict = jacobi_check(algebra);
  if (out.verdict) out.value = std::move(algebra);
  return out;
}

Verdict jacobi_check(const LieAlgebra& g) {
  Verdict v;
  const std::size_t n = g.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        const Vec ei = unit_vec(n, i), ej = unit_vec(n, j), ek = unit_vec(n, k);
        const Vec defect = g.bracket(ei, g.bracket(j, k)) + g.bracket(ej, g.bracket(k, i)) +
                           g.bracket(ek, g.bracket(i, j));
        if (!v.note("jacobi", {i, j, k}, defect)) return v;
      }
  return v;
}

Verdict representation_check(const LieAlgebra& g, const Representation& rep) {
  require(rep.algebra_dim() == g.dim(), ErrorKind::DimensionMismatch, "representation/algebra dimension");
  Verdict v;
  for (std::size_t i = 0; i < g.dim(); ++i)
    for (std::size_t j = i + 1; j < g.dim(); ++j) {
      const Matrix defect = rep.action_of(g.bracket(i, j)) -
                            (rep.action(i) * rep.action(j) - rep.action(j) * rep.action(i));
      if (!v.note("representation", {i, j}, defect.entries())) return v;
    }
  return v;
}

Checked<Representation> validate_rep(const LieAlgebra& g, std::vector<Matrix> action) {
  Checked<Representation> out;
  require(!action.empty() || g.dim() == 0, ErrorKind::DimensionMismatch, "empty action list");
  const std::size_t m = action.empty() ? 0 : action.front().rows();
  Representation rep(g.dim(), m, std::move(action));
  out.verdict = representation_check(g, rep);
  if (out.verdict) out.value = std::move(rep);
  return out;
}

Representation adjoint_rep(const LieAlgebra& g) {
  std::vector<Matrix> action;
  for (std::size_t i = 0; i < g.dim(); ++i) action.push_back(g.ad(unit_vec(g.dim(), i)));
  return Representation(g.dim(), g.dim(), std::move(action));
}

Representation trivial_rep(const LieAlgebra& g, std::size_t module_dim) {
  return Representation(g.dim(), module_dim, std::vector<Matrix>(g.dim(), Matrix(module_dim, module_dim)));
}

Representation coadjoint_rep(const LieAlgebra& g) {
  std::vector<Matrix> action;
  for (std::size_t i = 0; i < g.dim(); ++i) action.push_back(-g.ad(unit_vec(g.dim(), i)).transpose());
  return Representation(g.dim(), g.dim(), std::move(action));
}

Representation direct_sum(const Representation& a, const Representation& b) {
  require(a.algebra_dim() == b.algebra_dim(), ErrorKind::DimensionMismatch, "direct sum over different algebras");
  std::vector<Matrix> action;
  for (std::size_t i = 0; i < a.algebra_dim(); ++i) action.push_back(direct_sum(a.action(i), b.action(i)));
  return Representation(a.algebra_dim(), a.module_dim() + b.module_dim(), std::move(action));
}

Cochain ce_apply(const LieAlgebra& g, const Representation& rep, const Cochain& f) {
  require(f.source_dim() == g.dim() && f.target_dim() == rep.module_dim() && rep.algebra_dim() == g.dim(),
          ErrorKind::DimensionMismatch, "ce_apply: cochain does not match (g, M)");
  const std::size_t n = f.degree();
  const std::size_t d = g.dim();
  Cochain out(n + 1, d, rep.module_dim());
  const ExtBasis basis(d, n + 1);
  IndexTuple rest;
  for (const auto& t : basis.tuples()) {
    Vec value = zero_vec(rep.module_dim());
    for (std::size_t i = 0; i <= n; ++i) {
      rest.assign(t.begin(), t.end());
      rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
      const Vec fv = f.at(rest);
      if (is_zero(fv)) continue;
      axpy(value, i % 2 == 0 ? Scalar(1) : Scalar(-1), rep.action(t[i]).apply(fv));
    }
    for (std::size_t i = 0; i <= n; ++i)
      for (std::size_t j = i + 1; j <= n; ++j) {
        const Vec b = g.bracket(t[i], t[j]);
        if (is_zero(b)) continue;
        rest.clear();
        for (std::size_t k = 0; k <= n; ++k)
          if (k != i && k != j) rest.push_back(t[k]);
        axpy(value, (i + j) % 2 == 0 ? Scalar(1) : Scalar(-1), eval_lead(f, b, rest));
      }
    out.set(t, value);
  }
  return out;
}

Matrix ce_differential(const LieAlgebra& g, const Representation& rep, std::size_t n) {
  const std::size_t m = rep.module_dim();
  const std::size_t src = m * binomial(g.dim(), n);
  const std::size_t dst = m * binomial(g.dim(), n + 1);
  Matrix delta(dst, src);
  for (std::size_t k = 0; k < src; ++k)
    delta.set_column(k, ce_apply(g, rep, Cochain::from_flat(n, g.dim(), m, unit_vec(src, k))).flatten());
  return delta;
}

std::vector<std::size_t> cohomology_dims(const std::function<Matrix(std::size_t)>& differential,
                                         std::size_t n_max) {
  std::vector<std::size_t> dims;
  std::size_t previous_rank = 0;
  for (std::size_t n = 0; n <= n_max; ++n) {
    const Matrix d = differential(n);
    const std::size_t r = rank(d);
    dims.push_back(d.cols() - r - previous_rank);
    previous_rank = r;
  }
  return dims;
}

std::vector<std::size_t> ce_cohomology_dims(const LieAlgebra& g, const Representation& rep, std::size_t n_max) {
  require(n_max <= g.dim(), ErrorKind::DimensionMismatch, "ce_cohomology_dims: n_max exceeds dim g");
  return cohomology_dims([&](std::size_t n) { return ce_differential(g, rep, n); }, n_max);
}

Verdict is_cocycle(const LieAlgebra& g, const Representation& rep, const Cochain& f) {
  const Cochain df = ce_apply(g, rep, f);
  const ExtBasis basis(g.dim(), f.degree() + 1);
  Verdict v;
  for (std::size_t c = 0; c < basis.size(); ++c)
    if (!v.note("cocycle", basis[c], df.column(c))) break;
  return v;
}

Verdict is_two_cocycle(const LieAlgebra& g, const Representation& rep, const Cochain& h) {
  require(h.degree() == 2, ErrorKind::DimensionMismatch, "is_two_cocycle: H must have degree 2");
  return is_cocycle(g, rep, h);
}

Verdict nijenhuis_check(const LieAlgebra& g, const Matrix& n) {
  require(n.rows() == g.dim() && n.cols() == g.dim(), ErrorKind::DimensionMismatch, "N must be an endomorphism of g");
  Verdict v;
  for (std::size_t i = 0; i < g.dim(); ++i)
    for (std::size_t j = i + 1; j < g.dim(); ++j) {
      const Vec ei = unit_vec(g.dim(), i), ej = unit_vec(g.dim(), j);
      const Vec nx = n.apply(ei), ny = n.apply(ej);
      const Vec inner = g.bracket(nx, ej) + g.bracket(ei, ny) - n.apply(g.bracket(i, j));
      if (!v.note("nijenhuis", {i, j}, g.bracket(nx, ny) - n.apply(inner))) return v;
    }
  return v;
}

LieAlgebra deformed_bracket(const LieAlgebra& g, const Matrix& n) {
  const Verdict v = nijenhuis_check(g, n);
  require(v.holds, ErrorKind::NotNijenhuis, v.describe());
  Cochain c(2, g.dim(), g.dim());
  for (const auto& t : ExtBasis(g.dim(), 2).tuples()) {
    const Vec ei = unit_vec(g.dim(), t[0]), ej = unit_vec(g.dim(), t[1]);
    c.set(t, g.bracket(n.apply(ei), ej) + g.bracket(ei, n.apply(ej)) - n.apply(g.bracket(t[0], t[1])));
  }
  LieAlgebra deformed(std::move(c));
  const Verdict jac = jacobi_check(deformed);
  require(jac.holds, ErrorKind::InvariantViolated, "deformed bracket of a Nijenhuis operator: " + jac.describe());
  return deformed;
}

LieAlgebra sum_bracket(const LieAlgebra& a, const LieAlgebra& b) {
  require(a.dim() == b.dim(), ErrorKind::DimensionMismatch, "sum_bracket: dimensions differ");
  return LieAlgebra(a.bracket_cochain() + b.bracket_cochain());
}

Verdict derivation_check(const LieAlgebra& g, const Matrix& d) {
  require(d.rows() == g.dim() && d.cols() == g.dim(), ErrorKind::DimensionMismatch, "d must be an endomorphism of g");
  Verdict v;
  for (std::size_t i = 0; i < g.dim(); ++i)
    for (std::size_t j = i + 1; j < g.dim(); ++j) {
      const Vec ei = unit_vec(g.dim(), i), ej = unit_vec(g.dim(), j);
      const Vec defect = d.apply(g.bracket(i, j)) - g.bracket(d.apply(ei), ej) - g.bracket(ei, d.apply(ej));
      if (!v.note("derivation", {i, j}, defect)) return v;
    }
  return v;
}

Matrix power(const Matrix& m, std::size_t k) {
  require(m.is_square(), ErrorKind::DimensionMismatch, "power of a non-square matrix");
  Matrix p = Matrix::identity(m.rows());
  for (std::size_t i = 0; i < k; ++i) p = p * m;
  return p;
}

std::size_t nilpotency_index(const Matrix& d) {
  require(d.is_square(), ErrorKind::DimensionMismatch, "nilpotency_index: matrix not square");
  const std::size_t bound = d.rows() * d.rows() + 1;
  Matrix p = d;
  for (std::size_t k = 1; k <= bound; ++k) {
    if (p.is_zero()) return k;
    p = p * d;
  }
  fail(ErrorKind::NotNilpotent, "no power up to " + std::to_string(bound) + " vanishes");
}

}  // namespace trb
