#include "trb/nslie.hpp"

namespace trb {

NsLie::NsLie(BilinearMap circ_map, Cochain vee_map) : circ(std::move(circ_map)), vee(std::move(vee_map)) {
  const std::size_t n = circ.left_dim();
  require(circ.right_dim() == n && circ.out_dim() == n, ErrorKind::DimensionMismatch, "circ must map L x L -> L");
  require(vee.degree() == 2 && vee.source_dim() == n && vee.target_dim() == n, ErrorKind::DimensionMismatch,
          "vee must be a skew map L x L -> L");
  vee_table = BilinearMap::from_cochain(vee);
}

Vec NsLie::star(const Vec& x, const Vec& y) const { return circ(x, y) - circ(y, x) + vee_table(x, y); }

NsReport ns_check(const NsLie& ns) {
  NsReport r;
  const std::size_t n = ns.dim();
  for (std::size_t i = 0; i < n && r.ns1.holds; ++i)
    for (std::size_t j = 0; j < n && r.ns1.holds; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const Vec x = unit_vec(n, i), y = unit_vec(n, j), z = unit_vec(n, k);
        const Vec defect = ns.circ(ns.circ(x, y), z) - ns.circ(x, ns.circ(y, z)) - ns.circ(ns.circ(y, x), z) +
                           ns.circ(y, ns.circ(x, z)) + ns.circ(ns.vee_of(x, y), z);
        if (!r.ns1.note("NS1", {i, j, k}, defect)) break;
      }
  for (std::size_t i = 0; i < n && r.ns2.holds; ++i)
    for (std::size_t j = i + 1; j < n && r.ns2.holds; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        const Vec x = unit_vec(n, i), y = unit_vec(n, j), z = unit_vec(n, k);
        const Vec defect = ns.vee_of(x, ns.star(y, z)) + ns.vee_of(y, ns.star(z, x)) + ns.vee_of(z, ns.star(x, y)) +
                           ns.circ(x, ns.vee_of(y, z)) + ns.circ(y, ns.vee_of(z, x)) + ns.circ(z, ns.vee_of(x, y));
        if (!r.ns2.note("NS2", {i, j, k}, defect)) break;
      }
  return r;
}

AdjacentStructure adjacent_structure_unchecked(const NsLie& ns) {
  const std::size_t n = ns.dim();
  Cochain bracket(2, n, n);
  for (const auto& t : ExtBasis(n, 2).tuples()) bracket.set(t, ns.star(unit_vec(n, t[0]), unit_vec(n, t[1])));
  std::vector<Matrix> action;
  for (std::size_t i = 0; i < n; ++i) {
    Matrix a(n, n);
    for (std::size_t j = 0; j < n; ++j) a.set_column(j, ns.circ.at(i, j));
    action.push_back(std::move(a));
  }
  return {LieAlgebra(std::move(bracket)), Representation(n, n, std::move(action))};
}

AdjacentStructure adjacent_lie(const NsLie& ns) {
  const NsReport r = ns_check(ns);
  require(r.holds(), ErrorKind::NotNsLie, r.ns1.holds ? r.ns2.describe() : r.ns1.describe());
  AdjacentStructure out = adjacent_structure_unchecked(ns);
  const Verdict lie = jacobi_check(out.algebra);
  require(lie.holds, ErrorKind::InvariantViolated, "adjacent bracket is not Lie: " + lie.describe());
  const Verdict rep = representation_check(out.algebra, out.rep);
  require(rep.holds, ErrorKind::InvariantViolated, "x circ - is not a representation: " + rep.describe());
  return out;
}

NsLie ns_from_nijenhuis(const LieAlgebra& g, const Matrix& n) {
  const Verdict v = nijenhuis_check(g, n);
  require(v.holds, ErrorKind::NotNijenhuis, v.describe());
  const std::size_t d = g.dim();
  BilinearMap circ(d, d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) circ.set(i, j, g.bracket(n.apply(unit_vec(d, i)), unit_vec(d, j)));
  Cochain vee(2, d, d);
  for (const auto& t : ExtBasis(d, 2).tuples()) vee.set(t, -n.apply(g.bracket(t[0], t[1])));
  return NsLie(std::move(circ), std::move(vee));
}

AssocNs::AssocNs(BilinearMap p, BilinearMap s, BilinearMap b)
    : prec(std::move(p)), succ(std::move(s)), box(std::move(b)) {
  const std::size_t n = prec.left_dim();
  for (const BilinearMap* m : {&prec, &succ, &box})
    require(m->left_dim() == n && m->right_dim() == n && m->out_dim() == n, ErrorKind::DimensionMismatch,
            "NS-algebra products must map A x A -> A");
}

Verdict assoc_ns_check(const AssocNs& a) {
  Verdict v;
  const std::size_t n = a.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const Vec x = unit_vec(n, i), y = unit_vec(n, j), z = unit_vec(n, k);
        const IndexTuple t{i, j, k};
        if (!v.note("(x < y) < z = x < (y * z)", t, a.prec(a.prec(x, y), z) - a.prec(x, a.total(y, z)))) return v;
        if (!v.note("(x > y) < z = x > (y < z)", t, a.prec(a.succ(x, y), z) - a.succ(x, a.prec(y, z)))) return v;
        if (!v.note("(x * y) > z = x > (y > z)", t, a.succ(a.total(x, y), z) - a.succ(x, a.succ(y, z)))) return v;
        const Vec lhs = a.prec(a.box(x, y), z) + a.box(a.total(x, y), z);
        const Vec rhs = a.succ(x, a.box(y, z)) + a.box(x, a.total(y, z));
        if (!v.note("box identity", t, lhs - rhs)) return v;
      }
  return v;
}

NsLie ns_from_assoc(const AssocNs& a) {
  const Verdict v = assoc_ns_check(a);
  require(v.holds, ErrorKind::NotAssocNs, v.describe());
  const std::size_t n = a.dim();
  BilinearMap circ(n, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) circ.set(i, j, a.succ.at(i, j) - a.prec.at(j, i));
  Cochain vee(2, n, n);
  for (const auto& t : ExtBasis(n, 2).tuples()) vee.set(t, a.box.at(t[0], t[1]) - a.box.at(t[1], t[0]));
  return NsLie(std::move(circ), std::move(vee));
}

NsLie ns_from_trb(const TrbSetup& s, const Matrix& t) {
  const Verdict v = check_trb(s, t);
  require(v.holds, ErrorKind::NotTwistedRB, v.describe());
  const std::size_t m = s.module_dim();
  BilinearMap circ(m, m, m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) circ.set(i, j, s.rep().act(t.apply(unit_vec(m, i)), unit_vec(m, j)));
  Cochain vee(2, m, m);
  for (const auto& tup : ExtBasis(m, 2).tuples())
    vee.set(tup, s.twist(t.apply(unit_vec(m, tup[0])), t.apply(unit_vec(m, tup[1]))));
  return NsLie(std::move(circ), std::move(vee));
}

TrbFromNs trb_from_ns(const NsLie& ns) {
  AdjacentStructure adj = adjacent_lie(ns);
  TrbSetup setup = make_setup(std::move(adj.algebra), std::move(adj.rep), ns.vee);
  Matrix id = Matrix::identity(ns.dim());
  const Verdict v = check_trb(setup, id);
  require(v.holds, ErrorKind::InvariantViolated, "identity is not twisted Rota-Baxter: " + v.describe());
  return {std::move(setup), std::move(id)};
}

}  // namespace trb
