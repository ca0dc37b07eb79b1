#include "trb/twistrb.hpp"

#include <map>
#include <string>

namespace trb {

TrbSetup::TrbSetup(LieAlgebra algebra, Representation rep, Cochain cocycle)
    : algebra_(std::move(algebra)), rep_(std::move(rep)), cocycle_(std::move(cocycle)) {
  require(rep_.algebra_dim() == algebra_.dim(), ErrorKind::DimensionMismatch, "representation/algebra dimension");
  require(cocycle_.degree() == 2 && cocycle_.source_dim() == algebra_.dim() &&
              cocycle_.target_dim() == rep_.module_dim(),
          ErrorKind::DimensionMismatch, "H must be a degree-2 cochain from g to M");
  h_table_ = BilinearMap::from_cochain(cocycle_);
}

Verdict setup_check(const TrbSetup& s) {
  Verdict v = jacobi_check(s.algebra());
  if (!v) return v;
  v = representation_check(s.algebra(), s.rep());
  if (!v) return v;
  return is_two_cocycle(s.algebra(), s.rep(), s.cocycle());
}

TrbSetup make_setup(LieAlgebra algebra, Representation rep, Cochain cocycle) {
  Verdict v = jacobi_check(algebra);
  require(v.holds, ErrorKind::NotLie, v.describe());
  v = representation_check(algebra, rep);
  require(v.holds, ErrorKind::NotRepresentation, v.describe());
  v = is_two_cocycle(algebra, rep, cocycle);
  require(v.holds, ErrorKind::NotCocycle, v.describe());
  return TrbSetup(std::move(algebra), std::move(rep), std::move(cocycle));
}

TrbSetup nijenhuis_trb_setup(const LieAlgebra& g, const Matrix& n) {
  LieAlgebra gn = deformed_bracket(g, n);
  std::vector<Matrix> action;
  for (std::size_t i = 0; i < g.dim(); ++i) action.push_back(g.ad(n.apply(unit_vec(g.dim(), i))));
  Representation rep(g.dim(), g.dim(), std::move(action));
  Cochain h(2, g.dim(), g.dim());
  for (const auto& t : ExtBasis(g.dim(), 2).tuples()) h.set(t, -n.apply(g.bracket(t[0], t[1])));
  return make_setup(std::move(gn), std::move(rep), std::move(h));
}

InverseExample inverse_cochain_example(const LieAlgebra& g, const Representation& rep, const Matrix& h) {
  require(h.rows() == rep.module_dim() && h.cols() == g.dim(), ErrorKind::DimensionMismatch,
          "h must be a linear map g -> M");
  Matrix t = invert(h);
  Cochain twist = Scalar(-1) * ce_apply(g, rep, Cochain::linear(h));
  return {make_setup(g, rep, std::move(twist)), std::move(t)};
}

namespace {

void require_operator_shape(const TrbSetup& s, const Matrix& t) {
  require(t.rows() == s.algebra_dim() && t.cols() == s.module_dim(), ErrorKind::DimensionMismatch,
          "operator must be a dim g x dim M matrix");
}

}  // namespace

Vec trb_defect(const TrbSetup& s, const Matrix& t, const Vec& u, const Vec& v) {
  const Vec tu = t.apply(u), tv = t.apply(v);
  const Vec inner = s.rep().act(tu, v) - s.rep().act(tv, u) + s.twist(tu, tv);
  return s.algebra().bracket(tu, tv) - t.apply(inner);
}

Verdict check_trb(const TrbSetup& s, const Matrix& t) {
  require_operator_shape(s, t);
  Verdict v;
  const std::size_t m = s.module_dim();
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      if (!v.note("twisted Rota-Baxter", {i, j}, trb_defect(s, t, unit_vec(m, i), unit_vec(m, j)))) return v;
  return v;
}

LieAlgebra twisted_semidirect(const TrbSetup& s) {
  const std::size_t d = s.algebra_dim(), m = s.module_dim(), n = d + m;
  Cochain c(2, n, n);
  auto split = [&](std::size_t i) {
    Vec x = zero_vec(d), u = zero_vec(m);
    if (i < d) x[i] = 1; else u[i - d] = 1;
    return std::pair{x, u};
  };
  for (const auto& t : ExtBasis(n, 2).tuples()) {
    const auto [x, u] = split(t[0]);
    const auto [y, v] = split(t[1]);
    const Vec top = s.algebra().bracket(x, y);
    const Vec bottom = s.rep().act(x, v) - s.rep().act(y, u) + s.twist(x, y);
    Vec value = top;
    value.insert(value.end(), bottom.begin(), bottom.end());
    c.set(t, value);
  }
  return LieAlgebra(std::move(c));
}

Verdict graph_subalgebra_check(const TrbSetup& s, const Matrix& t) {
  require_operator_shape(s, t);
  const std::size_t d = s.algebra_dim(), m = s.module_dim();
  const LieAlgebra semi = twisted_semidirect(s);
  auto graph_vector = [&](std::size_t i) {
    Vec w = t.apply(unit_vec(m, i));
    const Vec u = unit_vec(m, i);
    w.insert(w.end(), u.begin(), u.end());
    return w;
  };
  std::vector<Vec> spanning;
  for (std::size_t i = 0; i < m; ++i) spanning.push_back(graph_vector(i));
  const std::size_t graph_rank = rank(Matrix::from_columns(spanning, d + m));
  Verdict v;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) {
      const Vec w = semi.bracket(spanning[i], spanning[j]);
      auto cols = spanning;
      cols.push_back(w);
      if (rank(Matrix::from_columns(cols, d + m)) == graph_rank) continue;
      // Off-graph component: algebra part minus T applied to the module part.
      const Vec module_part(w.begin() + static_cast<std::ptrdiff_t>(d), w.end());
      const Vec off = Vec(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(d)) - t.apply(module_part);
      v.note("graph closure", {i, j}, off);
      return v;
    }
  return v;
}

LieAlgebra induced_bracket_unchecked(const TrbSetup& s, const Matrix& t) {
  require_operator_shape(s, t);
  const std::size_t m = s.module_dim();
  Cochain c(2, m, m);
  for (const auto& tup : ExtBasis(m, 2).tuples()) {
    const Vec u = unit_vec(m, tup[0]), v = unit_vec(m, tup[1]);
    const Vec tu = t.apply(u), tv = t.apply(v);
    c.set(tup, s.rep().act(tu, v) - s.rep().act(tv, u) + s.twist(tu, tv));
  }
  return LieAlgebra(std::move(c));
}

Representation induced_rep_unchecked(const TrbSetup& s, const Matrix& t) {
  require_operator_shape(s, t);
  const std::size_t d = s.algebra_dim(), m = s.module_dim();
  std::vector<Matrix> action;
  for (std::size_t i = 0; i < m; ++i) {
    const Vec u = unit_vec(m, i);
    const Vec tu = t.apply(u);
    Matrix a(d, d);
    for (std::size_t j = 0; j < d; ++j) {
      const Vec x = unit_vec(d, j);
      a.set_column(j, s.algebra().bracket(tu, x) + t.apply(s.rep().act(x, u) + s.twist(x, tu)));
    }
    action.push_back(std::move(a));
  }
  return Representation(m, d, std::move(action));
}

namespace {

void require_trb(const TrbSetup& s, const Matrix& t) {
  const Verdict v = check_trb(s, t);
  require(v.holds, ErrorKind::NotTwistedRB, v.describe());
}

}  // namespace

LieAlgebra induced_bracket(const TrbSetup& s, const Matrix& t) {
  require_trb(s, t);
  return induced_bracket_unchecked(s, t);
}

Representation induced_rep(const TrbSetup& s, const Matrix& t) {
  require_trb(s, t);
  return induced_rep_unchecked(s, t);
}

Verdict morphism_check(const LieAlgebra& from, const LieAlgebra& to, const Matrix& a) {
  require(a.rows() == to.dim() && a.cols() == from.dim(), ErrorKind::DimensionMismatch, "morphism shape");
  Verdict v;
  for (std::size_t i = 0; i < from.dim(); ++i)
    for (std::size_t j = i + 1; j < from.dim(); ++j) {
      const Vec defect = a.apply(from.bracket(i, j)) -
                         to.bracket(a.apply(unit_vec(from.dim(), i)), a.apply(unit_vec(from.dim(), j)));
      if (!v.note("morphism", {i, j}, defect)) return v;
    }
  return v;
}

GaugeResult gauge_transform(const TrbSetup& s, const Matrix& t, const Matrix& b) {
  require_trb(s, t);
  require(b.rows() == s.module_dim() && b.cols() == s.algebra_dim(), ErrorKind::DimensionMismatch,
          "B must be a linear map g -> M");
  const Verdict cocycle = is_cocycle(s.algebra(), s.rep(), Cochain::linear(b));
  require(cocycle.holds, ErrorKind::NotCocycle, cocycle.describe());
  Matrix transport = Matrix::identity(s.module_dim()) + b * t;
  Matrix inverse;
  try {
    inverse = invert(transport);
  } catch (const MathError&) {
    fail(ErrorKind::NotAdmissible, "id + B T is singular");
  }
  GaugeResult out{t * inverse, std::move(transport)};
  const Verdict trb = check_trb(s, out.op);
  require(trb.holds, ErrorKind::InvariantViolated, "gauge transform is not twisted Rota-Baxter: " + trb.describe());
  const Verdict iso =
      morphism_check(induced_bracket_unchecked(s, t), induced_bracket_unchecked(s, out.op), out.transport);
  require(iso.holds, ErrorKind::InvariantViolated, "gauge transport is not a morphism: " + iso.describe());
  return out;
}

ShiftResult shift_by_coboundary(const TrbSetup& s, const Matrix& t, const Matrix& h) {
  require_trb(s, t);
  require(h.rows() == s.module_dim() && h.cols() == s.algebra_dim(), ErrorKind::DimensionMismatch,
          "h must be a linear map g -> M");
  Matrix inverse;
  try {
    inverse = invert(Matrix::identity(s.module_dim()) - h * t);
  } catch (const MathError&) {
    fail(ErrorKind::NotAdmissible, "id - h T is singular");
  }
  TrbSetup shifted(s.algebra(), s.rep(), s.cocycle() + ce_apply(s.algebra(), s.rep(), Cochain::linear(h)));
  ShiftResult out{std::move(shifted), t * inverse};
  const Verdict v = check_trb(out.setup, out.op);
  require(v.holds, ErrorKind::InvariantViolated, "shifted operator is not twisted Rota-Baxter: " + v.describe());
  return out;
}

TrbSetup reynolds_setup(const LieAlgebra& g) {
  return TrbSetup(g, adjoint_rep(g), Scalar(-1) * g.bracket_cochain());
}

Verdict reynolds_check(const LieAlgebra& g, const Matrix& r) {
  require(r.rows() == g.dim() && r.cols() == g.dim(), ErrorKind::DimensionMismatch, "R must be an endomorphism of g");
  Verdict direct;
  for (std::size_t i = 0; i < g.dim() && direct.holds; ++i)
    for (std::size_t j = i + 1; j < g.dim(); ++j) {
      const Vec x = unit_vec(g.dim(), i), y = unit_vec(g.dim(), j);
      const Vec rx = r.apply(x), ry = r.apply(y);
      const Vec rxry = g.bracket(rx, ry);
      const Vec defect = rxry - r.apply(g.bracket(rx, y) + g.bracket(x, ry) - rxry);
      if (!direct.note("reynolds", {i, j}, defect)) break;
    }
  const Verdict via_trb = check_trb(reynolds_setup(g), r);
  require(direct.holds == via_trb.holds, ErrorKind::InvariantViolated,
          "Reynolds identity disagrees with the (-mu)-twisted Rota-Baxter check");
  return direct;
}

Matrix reynolds_from_derivation(const LieAlgebra& g, const Matrix& d) {
  const Verdict v = derivation_check(g, d);
  require(v.holds, ErrorKind::NotDerivation, v.describe());
  const std::size_t index = nilpotency_index(d);
  Matrix r(g.dim(), g.dim());
  Matrix p = Matrix::identity(g.dim());
  for (std::size_t k = 0; k < index; ++k) {
    r += (k % 2 == 0 ? Scalar(1) : Scalar(-1)) * p;
    p = p * d;
  }
  const Verdict check = reynolds_check(g, r);
  require(check.holds, ErrorKind::InvariantViolated, "derivation series is not Reynolds: " + check.describe());
  return r;
}

namespace {

// Finitely supported element of the positive Witt algebra, index -> coefficient.
using Witt = std::map<long, Scalar>;

Witt witt_basis(long m) { return Witt{{m, Scalar(1)}}; }

Witt witt_add(Witt a, const Witt& b, const Scalar& s = Scalar(1)) {
  for (const auto& [k, c] : b) {
    a[k] += s * c;
    if (a[k].is_zero()) a.erase(k);
  }
  return a;
}

Witt witt_bracket(const Witt& a, const Witt& b) {
  Witt out;
  for (const auto& [m, x] : a)
    for (const auto& [n, y] : b) out = witt_add(out, witt_basis(m + n), Scalar(m - n) * x * y);
  return out;
}

Witt witt_r(const Witt& a) {
  Witt out;
  for (const auto& [m, x] : a) out[m] = x / Scalar(m + 1);
  return out;
}

Scalar coefficient(const Witt& a, long k) {
  const auto it = a.find(k);
  return it == a.end() ? Scalar(0) : it->second;
}

}  // namespace

WittRow witt_pair(long m, long n) {
  require(m >= 0 && n >= 0, ErrorKind::IndexOutOfRange, "Witt indices must be nonnegative");
  const Witt x = witt_basis(m), y = witt_basis(n);
  const Witt rx = witt_r(x), ry = witt_r(y);
  const Witt rxry = witt_bracket(rx, ry);
  // Induced bracket for H = -mu on the adjoint module.
  const Witt induced = witt_add(witt_add(witt_bracket(rx, y), witt_bracket(x, ry)), rxry, Scalar(-1));
  const Witt rhs = witt_r(induced);
  WittRow row;
  row.m = m;
  row.n = n;
  row.lhs = coefficient(rxry, m + n);
  row.rhs = coefficient(rhs, m + n);
  row.induced = coefficient(induced, m + n);
  const Scalar expected = Scalar(m - n) / Scalar((m + 1) * (n + 1));
  const Scalar expected_induced = Scalar((m - n) * (m + n + 1)) / Scalar((m + 1) * (n + 1));
  // Everything lands in the single line l_{m+n}.
  const bool single_line = rxry.size() <= 1 && rhs.size() <= 1 && induced.size() <= 1;
  row.pass = single_line && row.lhs == expected && row.rhs == expected && row.induced == expected_induced;
  return row;
}

std::vector<WittRow> witt_report(long n_max) {
  require(n_max >= 1, ErrorKind::InvalidInput, "witt_report needs n_max >= 1");
  std::vector<WittRow> rows;
  for (long m = 0; m <= n_max; ++m)
    for (long n = m; n <= n_max; ++n) rows.push_back(witt_pair(m, n));
  return rows;
}

Cochain psi_sharp(const Cochain& psi) {
  require(psi.degree() == 3 && psi.target_dim() == 1, ErrorKind::DimensionMismatch,
          "psi must be a degree-3 scalar cochain");
  const std::size_t d = psi.source_dim();
  Cochain h(2, d, d);
  for (const auto& t : ExtBasis(d, 2).tuples()) {
    Vec value = zero_vec(d);
    for (std::size_t k = 0; k < d; ++k) {
      const IndexTuple args{t[0], t[1], k};
      value[k] = psi.on_basis(args)[0];
    }
    h.set(t, value);
  }
  return h;
}

Matrix r_sharp(const Matrix& r) { return r.transpose(); }

RMatrixReport r_matrix_check(const LieAlgebra& g, const Matrix& r, const Cochain& psi) {
  require(r.rows() == g.dim() && r.cols() == g.dim(), ErrorKind::DimensionMismatch, "r must be dim g x dim g");
  require((r + r.transpose()).is_zero(), ErrorKind::NotSkew, "r is not skew-symmetric");
  require(psi.source_dim() == g.dim(), ErrorKind::DimensionMismatch, "psi must be a cochain on g");
  const Verdict cocycle = is_cocycle(g, trivial_rep(g, 1), psi);
  require(cocycle.holds, ErrorKind::NotCocycle, cocycle.describe());
  RMatrixReport out;
  out.setup = make_setup(g, coadjoint_rep(g), psi_sharp(psi));
  const Matrix rs = r_sharp(r);
  out.verdict = check_trb(out.setup, rs);
  out.dual_bracket = induced_bracket_unchecked(out.setup, rs);
  out.morphism = morphism_check(out.dual_bracket, g, rs);
  require(out.morphism.holds == out.verdict.holds, ErrorKind::InvariantViolated,
          "r^sharp morphism property disagrees with the twisted Rota-Baxter check");
  return out;
}

}  // namespace trb
