#pragma once

// Independent recomputations used as test oracles. Nothing here calls the
// library routine it is meant to cross-check.

#include <cstddef>
#include <cstdint>
#include <algorithm>
#include <functional>
#include <optional>
#include <random>
#include <vector>

#include <gmpxx.h>

#include "trb/linfty.hpp"

namespace oracle {

using trb::Cochain;
using trb::IndexTuple;
using trb::LieAlgebra;
using trb::Matrix;
using trb::Representation;
using trb::Scalar;
using trb::Vec;

/// Seeded source of small integer data. Uses rng() % k so that sequences do
/// not depend on the standard library's distribution implementation.
struct Random {
  explicit Random(std::uint64_t seed) : rng(seed) {}

  long integer(long lo, long hi) { return lo + static_cast<long>(rng() % static_cast<std::uint64_t>(hi - lo + 1)); }
  Scalar scalar(long lo = -2, long hi = 2) { return Scalar(integer(lo, hi)); }
  Vec vec(std::size_t n, long lo = -2, long hi = 2) {
    Vec v(n);
    for (auto& x : v) x = scalar(lo, hi);
    return v;
  }
  Matrix matrix(std::size_t rows, std::size_t cols, long lo = -2, long hi = 2) {
    Matrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < cols; ++c) m(r, c) = scalar(lo, hi);
    return m;
  }
  Cochain cochain(std::size_t p, std::size_t src, std::size_t dst, long lo = -2, long hi = 2) {
    Cochain c(p, src, dst);
    for (const auto& t : trb::ExtBasis(src, p).tuples()) c.set(t, vec(dst, lo, hi));
    return c;
  }

  std::mt19937_64 rng;
};

inline Scalar parity(std::size_t k) { return k % 2 ? Scalar(-1) : Scalar(1); }

/// Rank by fraction-free Bareiss elimination over the integers after clearing
/// denominators row by row.
inline std::size_t bareiss_rank(const Matrix& m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<std::vector<mpz_class>> a(rows, std::vector<mpz_class>(cols));
  for (std::size_t r = 0; r < rows; ++r) {
    mpz_class l = 1;
    for (std::size_t c = 0; c < cols; ++c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(r, c).denominator().get_mpz_t());
    for (std::size_t c = 0; c < cols; ++c) a[r][c] = m(r, c).numerator() * (l / m(r, c).denominator());
  }
  mpz_class prev = 1;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t p = rank;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[rank]);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      for (std::size_t k = c + 1; k < cols; ++k) a[r][k] = (a[rank][c] * a[r][k] - a[r][c] * a[rank][k]) / prev;
      a[r][c] = 0;
    }
    prev = a[rank][c];
    ++rank;
  }
  return rank;
}

/// delta f evaluated straight from the textbook formula on argument vectors.
inline Vec ce_value(const LieAlgebra& g, const Representation& rep, const Cochain& f, const std::vector<Vec>& xs) {
  const std::size_t n = xs.size() - 1;
  Vec out = trb::zero_vec(rep.module_dim());
  for (std::size_t i = 0; i <= n; ++i) {
    std::vector<Vec> rest;
    for (std::size_t k = 0; k <= n; ++k)
      if (k != i) rest.push_back(xs[k]);
    trb::axpy(out, parity(i), rep.action_of(xs[i]).apply(trb::skew_eval(f, rest)));
  }
  for (std::size_t i = 0; i <= n; ++i)
    for (std::size_t j = i + 1; j <= n; ++j) {
      std::vector<Vec> args{g.bracket(xs[i], xs[j])};
      for (std::size_t k = 0; k <= n; ++k)
        if (k != i && k != j) args.push_back(xs[k]);
      trb::axpy(out, parity(i + j), trb::skew_eval(f, args));
    }
  return out;
}

/// Matrix of delta on degree n assembled column by column from ce_value on
/// unit cochains.
inline Matrix ce_matrix(const LieAlgebra& g, const Representation& rep, std::size_t n) {
  const std::size_t d = g.dim(), m = rep.module_dim();
  const std::size_t in = trb::binomial(d, n) * m, out = trb::binomial(d, n + 1) * m;
  Matrix a(out, in);
  const auto targets = trb::ExtBasis(d, n + 1).tuples();
  for (std::size_t col = 0; col < in; ++col) {
    Vec flat = trb::zero_vec(in);
    flat[col] = 1;
    const Cochain f = Cochain::from_flat(n, d, m, flat);
    for (std::size_t t = 0; t < targets.size(); ++t) {
      std::vector<Vec> xs;
      for (auto i : targets[t]) xs.push_back(trb::unit_vec(d, i));
      const Vec v = ce_value(g, rep, f, xs);
      for (std::size_t r = 0; r < m; ++r) a(t * m + r, col) = v[r];
    }
  }
  return a;
}

inline std::vector<std::size_t> ce_dims(const LieAlgebra& g, const Representation& rep, std::size_t n_max) {
  std::vector<std::size_t> out;
  std::size_t prev_rank = 0;
  for (std::size_t n = 0; n <= n_max; ++n) {
    const std::size_t r = bareiss_rank(ce_matrix(g, rep, n));
    out.push_back(trb::binomial(g.dim(), n) * rep.module_dim() - r - prev_rank);
    prev_rank = r;
  }
  return out;
}

/// Koszul sign of reordering homogeneous elements: every inverted pair of
/// odd elements contributes a factor -1.
inline int koszul(const std::vector<std::size_t>& perm, const std::vector<std::size_t>& deg) {
  int s = 1;
  for (std::size_t a = 0; a < perm.size(); ++a)
    for (std::size_t b = a + 1; b < perm.size(); ++b)
      if (perm[a] > perm[b] && deg[perm[a]] % 2 && deg[perm[b]] % 2) s = -s;
  return s;
}

inline int perm_sign(const std::vector<std::size_t>& perm) {
  int s = 1;
  for (std::size_t a = 0; a < perm.size(); ++a)
    for (std::size_t b = a + 1; b < perm.size(); ++b)
      if (perm[a] > perm[b]) s = -s;
  return s;
}

using Bracket2 = std::function<Cochain(const Cochain&, const Cochain&)>;
using Bracket3 = std::function<Cochain(const Cochain&, const Cochain&, const Cochain&)>;

/// n-th Jacobi sum for l1 = 0 and the given l2, l3:
///   sum over i + j = n + 1 and (i, n - i)-unshuffles of
///   sign * koszul * (-1)^{i(j-1)} l_j(l_i(x..), x..).
/// Unshuffles are enumerated here by brute force over all permutations.
/// Returns a degree-0 zero cochain when the target degree is negative.
inline Cochain jacobi_sum(std::size_t n, const std::vector<Cochain>& xs, std::size_t module_dim,
                          std::size_t algebra_dim, const Bracket2& l2, const Bracket3& l3) {
  std::vector<std::size_t> deg;
  long total = 0;
  for (const auto& x : xs) {
    deg.push_back(x.degree());
    total += static_cast<long>(x.degree());
  }
  const long target = total - static_cast<long>(n) + 3;
  if (target < 0) return Cochain(0, module_dim, algebra_dim);
  Cochain acc(static_cast<std::size_t>(target), module_dim, algebra_dim);
  const auto apply = [&](std::size_t arity, const std::vector<const Cochain*>& in) -> std::optional<Cochain> {
    std::size_t d = 0;
    for (auto* c : in) d += c->degree();
    if (arity == 2) return l2(*in[0], *in[1]);
    if (d == 0) return std::nullopt;  // l3 lands in negative degree
    return l3(*in[0], *in[1], *in[2]);
  };
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 2; i <= 3; ++i) {
    const std::size_t j = n + 1 - i;
    if (j < 2 || j > 3) continue;
    for (std::size_t k = 0; k < n; ++k) perm[k] = k;
    do {
      bool unshuffle = true;
      for (std::size_t k = 0; k + 1 < n; ++k)
        if (k + 1 != i && perm[k] > perm[k + 1]) unshuffle = false;
      if (!unshuffle) continue;
      std::vector<const Cochain*> inner;
      for (std::size_t k = 0; k < i; ++k) inner.push_back(&xs[perm[k]]);
      const auto first = apply(i, inner);
      if (!first) continue;
      std::vector<const Cochain*> outer{&*first};
      for (std::size_t k = i; k < n; ++k) outer.push_back(&xs[perm[k]]);
      const auto second = apply(j, outer);
      if (!second || second->is_zero()) continue;
      const Scalar sign = Scalar(perm_sign(perm) * koszul(perm, deg)) * parity(i * (j - 1));
      acc += sign * *second;
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return acc;
}

}  // namespace oracle
