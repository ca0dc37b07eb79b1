#pragma once

#include <cstddef>

#include "trb/twistrb.hpp"

namespace trb {

/// Vector space with a non-symmetric product circ and a skew product vee.
struct NsLie {
  NsLie() = default;
  /// Checks shapes only.
  NsLie(BilinearMap circ, Cochain vee);

  std::size_t dim() const { return circ.left_dim(); }
  Vec circ_of(const Vec& x, const Vec& y) const { return circ(x, y); }
  Vec vee_of(const Vec& x, const Vec& y) const { return vee_table(x, y); }
  /// x * y = x circ y - y circ x + x vee y
  Vec star(const Vec& x, const Vec& y) const;

  friend bool operator==(const NsLie& a, const NsLie& b) { return a.circ == b.circ && a.vee == b.vee; }

  BilinearMap circ;
  Cochain vee;

 private:
  BilinearMap vee_table;
};

struct NsReport {
  Verdict ns1;  ///< on ordered basis triples
  Verdict ns2;  ///< on sorted basis triples i < j < k
  bool holds() const { return ns1.holds && ns2.holds; }
};
NsReport ns_check(const NsLie& ns);

struct AdjacentStructure {
  LieAlgebra algebra;  ///< [x, y] = x circ y - y circ x + x vee y
  Representation rep;  ///< x . m = x circ m
};
/// No axioms checked; used to compare NS2 with the cocycle condition.
AdjacentStructure adjacent_structure_unchecked(const NsLie& ns);
/// Throws NotNsLie; the Lie and representation axioms of the result are asserted.
AdjacentStructure adjacent_lie(const NsLie& ns);

/// x circ y = [Nx, y], x vee y = -N[x, y]. Throws NotNijenhuis.
NsLie ns_from_nijenhuis(const LieAlgebra& algebra, const Matrix& n);

/// Associative NS-algebra (prec, succ, box); the total product is their sum.
struct AssocNs {
  AssocNs() = default;
  AssocNs(BilinearMap prec, BilinearMap succ, BilinearMap box);
  std::size_t dim() const { return prec.left_dim(); }
  Vec total(const Vec& x, const Vec& y) const { return prec(x, y) + succ(x, y) + box(x, y); }

  BilinearMap prec;
  BilinearMap succ;
  BilinearMap box;
};
/// The four defining identities on all ordered basis triples.
Verdict assoc_ns_check(const AssocNs& a);
/// x circ y = x succ y - y prec x, x vee y = x box y - y box x. Throws NotAssocNs.
NsLie ns_from_assoc(const AssocNs& a);

/// u circ v = Tu . v, u vee v = H(Tu, Tv). Throws NotTwistedRB.
NsLie ns_from_trb(const TrbSetup& s, const Matrix& t);

struct TrbFromNs {
  TrbSetup setup;  ///< (adjacent Lie algebra, L, x . u = x circ u, H = vee)
  Matrix op;       ///< identity
};
/// Throws NotNsLie; the identity is asserted to be twisted Rota-Baxter.
TrbFromNs trb_from_ns(const NsLie& ns);

}  // namespace trb
