#include "trb/deform.hpp"

#include <sstream>

namespace trb {

namespace {

void require_trb(const TrbSetup& s, const Matrix& t) {
  const Verdict v = check_trb(s, t);
  require(v.holds, ErrorKind::NotTwistedRB, v.describe());
}

void require_op_shape(const TrbSetup& s, const Matrix& m, const char* what) {
  require(m.rows() == s.algebra_dim() && m.cols() == s.module_dim(), ErrorKind::DimensionMismatch,
          std::string(what) + " must be a map M -> g");
}

// x . u + H(x, T u)
Vec twisted_action(const TrbSetup& s, const Matrix& t, const Vec& x, const Vec& u) {
  return s.rep().act(x, u) + s.twist(x, t.apply(u));
}

Vec d_t_zero(const TrbSetup& s, const Matrix& t, const Vec& x, const Vec& u) {
  return s.algebra().bracket(t.apply(u), x) + t.apply(twisted_action(s, t, x, u));
}

// Linear map u -> d_T(x)(u) as a matrix.
Matrix d_t_of_element(const TrbSetup& s, const Matrix& t, const Vec& x) {
  const std::size_t m = s.module_dim();
  Matrix out(s.algebra_dim(), m);
  for (std::size_t i = 0; i < m; ++i) out.set_column(i, d_t_zero(s, t, x, unit_vec(m, i)));
  return out;
}

bool all_hold(const std::vector<std::pair<std::string, Verdict>>& conditions) {
  for (const auto& [name, v] : conditions)
    if (!v.holds) return false;
  return true;
}

}  // namespace

Matrix FormalDeformation::term(std::size_t i) const {
  if (i == 0) return base;
  if (i <= coefficients.size()) return coefficients[i - 1];
  return Matrix(base.rows(), base.cols());
}

std::vector<Cochain> deformation_equation_defects(const FormalDeformation& d) {
  const TrbSetup& s = d.setup;
  require_op_shape(s, d.base, "T_0");
  for (const Matrix& c : d.coefficients) require_op_shape(s, c, "T_i");
  const std::size_t m = s.module_dim(), g = s.algebra_dim(), k = d.order();

  std::vector<Matrix> terms;
  for (std::size_t i = 0; i <= k; ++i) terms.push_back(d.term(i));

  std::vector<Cochain> out;
  for (std::size_t n = 1; n <= k; ++n) {
    Cochain defect(2, m, g);
    for (const auto& tup : ExtBasis(m, 2).tuples()) {
      const Vec u = unit_vec(m, tup[0]), v = unit_vec(m, tup[1]);
      Vec value = zero_vec(g);
      for (std::size_t i = 0; i <= n; ++i) {
        const std::size_t j = n - i;
        const Vec tiu = terms[i].apply(u), tiv = terms[i].apply(v);
        const Vec tju = terms[j].apply(u), tjv = terms[j].apply(v);
        value += s.algebra().bracket(tiu, tjv);
        value -= terms[i].apply(s.rep().act(tju, v) - s.rep().act(tjv, u));
        for (std::size_t jj = 0; jj <= n - i; ++jj)
          value -= terms[i].apply(s.twist(terms[jj].apply(u), terms[n - i - jj].apply(v)));
      }
      defect.set(tup, value);
    }
    out.push_back(std::move(defect));
  }
  return out;
}

bool infinitesimal_is_cocycle(const TrbSetup& s, const Matrix& t, const Matrix& t1) {
  require_trb(s, t);
  require_op_shape(s, t1, "T_1");
  const bool closed = d_t_unchecked(s, t, Cochain::linear(t1)).is_zero();
  const bool order1 = deformation_equation_defects({s, t, {t1}}).front().is_zero();
  require(closed == order1, ErrorKind::InvariantViolated,
          "d_T(T_1) = 0 disagrees with the first-order deformation equation");
  return closed;
}

LinearDeformationReport linear_deformation_check(const TrbSetup& s, const Matrix& t, const Matrix& t1) {
  require_trb(s, t);
  require_op_shape(s, t1, "T_1");
  const std::size_t m = s.module_dim();
  const auto& g = s.algebra();
  const auto& rep = s.rep();
  LinearDeformationReport r;
  for (const auto& tup : ExtBasis(m, 2).tuples()) {
    const Vec u = unit_vec(m, tup[0]), v = unit_vec(m, tup[1]);
    const Vec tu = t.apply(u), tv = t.apply(v), au = t1.apply(u), av = t1.apply(v);
    const Vec cross = s.twist(au, tv) + s.twist(tu, av);
    if (r.order1.holds) {
      const Vec lhs = g.bracket(tu, av) + g.bracket(au, tv);
      const Vec rhs = t1.apply(rep.act(tu, v) - rep.act(tv, u) + s.twist(tu, tv)) +
                      t.apply(rep.act(au, v) - rep.act(av, u) + cross);
      r.order1.note("first order", tup, lhs - rhs);
    }
    if (r.order2.holds) {
      const Vec rhs = t.apply(s.twist(au, av)) + t1.apply(rep.act(au, v) - rep.act(av, u) + cross);
      r.order2.note("second order", tup, g.bracket(au, av) - rhs);
    }
    if (r.order3.holds) r.order3.note("third order", tup, t1.apply(s.twist(au, av)));
  }
  return r;
}

bool EquivalenceReport::holds() const { return all_hold(conditions); }
bool NijenhuisElementReport::holds() const { return all_hold(conditions); }

namespace {

// The five conditions on x alone shared by equivalences and Nijenhuis elements.
std::vector<std::pair<std::string, Verdict>> element_conditions(const TrbSetup& s, const Matrix& t, const Vec& x) {
  const std::size_t d = s.algebra_dim(), m = s.module_dim();
  const auto& g = s.algebra();
  const auto& rep = s.rep();
  Verdict lie_hom, h_equivariant, action_kernel, h_cocycle, h_square;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      const Vec y = unit_vec(d, i), z = unit_vec(d, j);
      const Vec xy = g.bracket(x, y), xz = g.bracket(x, z);
      if (lie_hom.holds) lie_hom.note("[[x,y],[x,z]] = 0", {i, j}, g.bracket(xy, xz));
      if (h_cocycle.holds) {
        const Vec hyz = s.twist(y, z);
        const Vec lhs = rep.act(x, hyz) + s.twist(x, t.apply(hyz));
        h_cocycle.note("x.H(y,z) + H(x,TH(y,z)) = H([x,y],z) + H(y,[x,z])", {i, j},
                       lhs - s.twist(xy, z) - s.twist(y, xz));
      }
      if (h_square.holds) h_square.note("H([x,y],[x,z]) = 0", {i, j}, s.twist(xy, xz));
    }
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t a = 0; a < m; ++a) {
      const Vec y = unit_vec(d, i), u = unit_vec(m, a);
      if (h_equivariant.holds)
        h_equivariant.note("H(x,T(y.u)) = y.H(x,Tu)", {i, a},
                           s.twist(x, t.apply(rep.act(y, u))) - rep.act(y, s.twist(x, t.apply(u))));
      if (action_kernel.holds)
        action_kernel.note("[x,y].(x.u + H(x,Tu)) = 0", {i, a},
                           rep.act(g.bracket(x, y), twisted_action(s, t, x, u)));
    }
  return {{"lie morphism", lie_hom},
          {"twist equivariance", h_equivariant},
          {"action compatibility", action_kernel},
          {"twist cocycle", h_cocycle},
          {"twist square", h_square}};
}

void require_element(const TrbSetup& s, const Vec& x) {
  require(x.size() == s.algebra_dim(), ErrorKind::DimensionMismatch, "x must lie in g");
}

}  // namespace

EquivalenceReport equivalence_check(const TrbSetup& s, const Matrix& t, const Matrix& t1, const Matrix& t1_prime,
                                    const Vec& x) {
  require_trb(s, t);
  require_op_shape(s, t1, "T_1");
  require_op_shape(s, t1_prime, "T_1'");
  require_element(s, x);
  EquivalenceReport r;
  r.conditions = element_conditions(s, t, x);
  Verdict first, second;
  for (std::size_t a = 0; a < s.module_dim(); ++a) {
    const Vec u = unit_vec(s.module_dim(), a);
    const Vec tw = twisted_action(s, t, x, u);
    if (first.holds)
      first.note("T_1 u + [x,Tu] = T(x.u + H(x,Tu)) + T_1' u", {a},
                 t1.apply(u) + s.algebra().bracket(x, t.apply(u)) - t.apply(tw) - t1_prime.apply(u));
    if (second.holds)
      second.note("[x,T_1 u] = T_1'(x.u + H(x,Tu))", {a}, s.algebra().bracket(x, t1.apply(u)) - t1_prime.apply(tw));
  }
  r.conditions.emplace_back("first order terms", first);
  r.conditions.emplace_back("second order terms", second);
  if (r.holds())
    require(t1 - t1_prime == d_t_of_element(s, t, x), ErrorKind::InvariantViolated,
            "equivalent deformations whose difference is not d_T(x)");
  return r;
}

bool cohomologous(const TrbSetup& s, const Matrix& t, const Matrix& a, const Matrix& b) {
  require_op_shape(s, a, "a");
  require_op_shape(s, b, "b");
  return solve(d_t_matrix(s, t, 0), Cochain::linear(a - b).flatten()).has_value();
}

NijenhuisElementReport nijenhuis_element_check(const TrbSetup& s, const Matrix& t, const Vec& x) {
  require_trb(s, t);
  require_element(s, x);
  NijenhuisElementReport r;
  const Representation bar = induced_rep_unchecked(s, t);
  Verdict invariance;
  for (std::size_t a = 0; a < s.module_dim() && invariance.holds; ++a) {
    const Vec u = unit_vec(s.module_dim(), a);
    invariance.note("[x, u .bar x] = 0", {a}, s.algebra().bracket(x, bar.act(u, x)));
  }
  r.conditions.emplace_back("induced invariance", invariance);
  for (auto& c : element_conditions(s, t, x)) r.conditions.push_back(std::move(c));
  return r;
}

namespace {

// 0, 1, -1, 2, -2, ...
long grid_value(long index) { return index % 2 == 1 ? (index + 1) / 2 : -(index / 2); }

// Next index vector in lexicographic order, last coordinate fastest; false after the last one.
bool advance(std::vector<long>& idx, long side) {
  for (std::size_t pos = idx.size(); pos-- > 0;) {
    if (++idx[pos] < side) return true;
    idx[pos] = 0;
  }
  return false;
}

}  // namespace

RigidityReport rigidity_probe(const TrbSetup& s, const Matrix& t, long grid) {
  require_trb(s, t);
  require(grid >= 0, ErrorKind::InvalidInput, "grid radius must be non-negative");
  const std::size_t d = s.algebra_dim(), m = s.module_dim();
  const Matrix d0 = d_t_matrix(s, t, 0);
  const Matrix d1 = d_t_matrix(s, t, 1);
  RigidityReport r;
  r.b1_dim = rank(d0);
  for (const Vec& k : kernel_basis(d1)) r.cocycle_basis.push_back(Cochain::from_flat(1, m, d, k));
  r.z1_dim = r.cocycle_basis.size();

  const std::vector<Vec> free = kernel_basis(d0);
  const long side = 2 * grid + 1;
  auto is_nij = [&](const Vec& x) { return nijenhuis_element_check(s, t, x).holds(); };

  for (const Cochain& f : r.cocycle_basis) {
    const std::optional<Vec> base = solve(d0, f.flatten());
    if (!base) return r;
    std::vector<long> idx(free.size(), 0);
    while (true) {
      Vec x = *base;
      for (std::size_t i = 0; i < free.size(); ++i) axpy(x, Scalar(grid_value(idx[i])), free[i]);
      bool ok = is_nij(x);
      for (std::size_t p = 0; ok && p < r.preimages.size(); ++p) ok = is_nij(x + r.preimages[p]);
      if (ok) {
        r.preimages.push_back(std::move(x));
        break;
      }
      if (!advance(idx, side)) return r;
    }
  }
  r.sufficient = true;
  return r;
}

std::string RigidityReport::summary() const {
  std::ostringstream out;
  out << "dim Z^1 = " << z1_dim << ", dim B^1 = " << b1_dim << ": ";
  if (sufficient)
    out << "sufficient condition established";
  else
    out << "inconclusive (" << preimages.size() << " of " << z1_dim << " cocycles have a Nijenhuis preimage)";
  return out.str();
}

}  // namespace trb
