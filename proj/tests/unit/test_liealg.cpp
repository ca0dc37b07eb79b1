#include <doctest.h>

#include "support/corpus.hpp"
#include "support/oracles.hpp"
#include "trb/examples.hpp"
#include "trb/liealg.hpp"

using namespace trb;

namespace {

BilinearMap table(std::size_t dim, const std::vector<std::tuple<std::size_t, std::size_t, Vec>>& entries) {
  BilinearMap m(dim, dim, dim);
  for (const auto& [i, j, v] : entries) m.set(i, j, v);
  return m;
}

// Euler characteristic of the cochain complex.
long euler_chains(std::size_t dim, std::size_t m) {
  long out = 0;
  for (std::size_t n = 0; n <= dim; ++n) out += (n % 2 ? -1 : 1) * static_cast<long>(binomial(dim, n) * m);
  return out;
}

}  // namespace

TEST_SUITE("liealg") {
  TEST_CASE("validate_lie examples") {
    const auto sl2 = validate_lie(table(3, {{0, 1, {0, 2, 0}},
                                            {1, 0, {0, -2, 0}},
                                            {0, 2, {0, 0, -2}},
                                            {2, 0, {0, 0, 2}},
                                            {1, 2, {1, 0, 0}},
                                            {2, 1, {-1, 0, 0}}}));
    CHECK(sl2);
    CHECK(*sl2.value == examples::sl2());
    CHECK(validate_lie(table(2, {{0, 1, {0, 1}}, {1, 0, {0, -1}}})));
    const auto bad = validate_lie(table(2, {{0, 1, {1, 0}}, {1, 0, {1, 0}}}));
    CHECK_FALSE(bad);
    REQUIRE(bad.verdict.witness);
    CHECK(bad.verdict.witness->tuple == std::vector<std::size_t>{0, 1});
  }

  TEST_CASE("jacobi failure is witnessed") {
    // Skew but not Lie: [e0,e1] = e2, [e1,e2] = e1, [e0,e2] = 0 gives a nonzero triple.
    const LieAlgebra g(cochain_from_values(2, 3, 3, {{{0, 1}, {0, 0, 1}}, {{1, 2}, {0, 1, 0}}}));
    const Verdict v = jacobi_check(g);
    CHECK_FALSE(v.holds);
    REQUIRE(v.witness);
    CHECK(v.witness->tuple == std::vector<std::size_t>{0, 1, 2});
  }

  TEST_CASE("validate_rep examples") {
    for (const auto& [name, g] : corpus::algebras()) {
      CAPTURE(name);
      CHECK(representation_check(g, adjoint_rep(g)).holds);
      CHECK(representation_check(g, coadjoint_rep(g)).holds);
    }
    const LieAlgebra ab = LieAlgebra::abelian(2);
    CHECK(validate_rep(ab, trivial_rep(ab, 3).action()));
    // The identity action of a nonabelian algebra is not a representation.
    const LieAlgebra aff2 = examples::aff2();
    CHECK_FALSE(validate_rep(aff2, {Matrix::identity(1), Matrix::identity(1)}));
  }

  TEST_CASE("coadjoint examples") {
    const LieAlgebra sl2 = examples::sl2();
    for (std::size_t i = 0; i < 3; ++i)
      CHECK(coadjoint_rep(sl2).action(i) == -adjoint_rep(sl2).action(i).transpose());
    CHECK(coadjoint_rep(LieAlgebra::abelian(2)).action(0).is_zero());
    // ad*_{e1} alpha (y) = -alpha([e1, y]); [e1, e2] = e2 gives diag(0, -1).
    CHECK(coadjoint_rep(examples::aff2()).action(0) == Matrix::from_rows({{0, 0}, {0, -1}}));
  }

  TEST_CASE("ce_differential examples") {
    const LieAlgebra sl2 = examples::sl2();
    const Representation ad = adjoint_rep(sl2);
    // (delta f)(x) = x . f for a constant f.
    const Matrix d0 = ce_differential(sl2, ad, 0);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t k = 0; k < 3; ++k) CHECK(Vec(d0.row(i * 3 + k)) == ad.action(i).row(k));
    const LieAlgebra ab = LieAlgebra::abelian(3);
    for (std::size_t n = 0; n <= 3; ++n) CHECK(ce_differential(ab, trivial_rep(ab, 2), n).is_zero());
    CHECK(rank(ce_differential(examples::heisenberg(), trivial_rep(examples::heisenberg(), 1), 1)) == 1);
  }

  TEST_CASE("differential matches the straight-line oracle and squares to zero") {
    for (const auto& [gname, g] : corpus::algebras())
      for (const auto& [mname, rep] : corpus::modules(g)) {
        CAPTURE(gname);
        CAPTURE(mname);
        for (std::size_t n = 0; n <= g.dim(); ++n) {
          const Matrix d = ce_differential(g, rep, n);
          CHECK(d == oracle::ce_matrix(g, rep, n));
          if (n < g.dim()) CHECK((ce_differential(g, rep, n + 1) * d).is_zero());
        }
      }
  }

  TEST_CASE("ce_cohomology_dims examples") {
    const LieAlgebra line = LieAlgebra::abelian(1);
    CHECK(ce_cohomology_dims(line, trivial_rep(line, 1), 1) == std::vector<std::size_t>{1, 1});
    const LieAlgebra heis = examples::heisenberg();
    CHECK(ce_cohomology_dims(heis, trivial_rep(heis, 1), 3) == std::vector<std::size_t>{1, 2, 2, 1});
    CHECK(oracle::ce_dims(heis, trivial_rep(heis, 1), 3) == std::vector<std::size_t>{1, 2, 2, 1});
    const LieAlgebra sl2 = examples::sl2();
    CHECK(ce_cohomology_dims(sl2, adjoint_rep(sl2), 3) == std::vector<std::size_t>{0, 0, 0, 0});
    CHECK(oracle::ce_dims(sl2, adjoint_rep(sl2), 1) == std::vector<std::size_t>{0, 0});
  }

  TEST_CASE("euler characteristic and oracle agreement") {
    for (const auto& [gname, g] : corpus::algebras())
      for (const auto& [mname, rep] : corpus::modules(g)) {
        CAPTURE(gname);
        CAPTURE(mname);
        const auto dims = ce_cohomology_dims(g, rep, g.dim());
        CHECK(dims == oracle::ce_dims(g, rep, g.dim()));
        long chi = 0;
        for (std::size_t n = 0; n < dims.size(); ++n) chi += (n % 2 ? -1 : 1) * static_cast<long>(dims[n]);
        CHECK(chi == euler_chains(g.dim(), rep.module_dim()));
      }
  }

  TEST_CASE("two-cocycle examples") {
    const LieAlgebra sl2 = examples::sl2();
    CHECK(is_two_cocycle(sl2, adjoint_rep(sl2), Cochain(2, 3, 3)).holds);
    // The bracket itself is a 2-cocycle with adjoint coefficients.
    for (const auto& [name, g] : corpus::algebras()) CHECK(is_two_cocycle(g, adjoint_rep(g), g.bracket_cochain()).holds);
    oracle::Random rnd(301);
    for (int k = 0; k < 20; ++k) {
      const Cochain h = rnd.cochain(1, 3, 3);
      CHECK(is_two_cocycle(sl2, adjoint_rep(sl2), ce_apply(sl2, adjoint_rep(sl2), h)).holds);
    }
    // A generic 2-cochain on sl2 is not closed.
    const Cochain f = cochain_from_values(2, 3, 3, {{{0, 1}, {1, 0, 0}}});
    const Verdict v = is_two_cocycle(sl2, adjoint_rep(sl2), f);
    CHECK_FALSE(v.holds);
    CHECK(v.witness);
  }

  TEST_CASE("nijenhuis examples") {
    const LieAlgebra sl2 = examples::sl2(), aff2 = examples::aff2();
    CHECK(nijenhuis_check(sl2, Matrix::identity(3)).holds);
    CHECK(deformed_bracket(sl2, Matrix::identity(3)) == sl2);
    CHECK(nijenhuis_check(sl2, Matrix(3, 3)).holds);
    CHECK(deformed_bracket(sl2, Matrix(3, 3)) == LieAlgebra::abelian(3));
    for (long l = -2; l <= 2; ++l)
      for (long m = -2; m <= 2; ++m) {
        const Matrix n = Matrix::from_rows({{l, 0}, {0, m}});
        CHECK(nijenhuis_check(aff2, n).holds);
        const LieAlgebra gn = deformed_bracket(aff2, n);
        CHECK(jacobi_check(gn).holds);
        CHECK(jacobi_check(sum_bracket(aff2, gn)).holds);
        // Both sides of the identity equal lambda mu e2, and [e1, e2]_N = lambda e2.
        CHECK(aff2.bracket(n.column(0), n.column(1)) == Vec{0, Scalar(l * m)});
        CHECK(gn.bracket(0, 1) == Vec{0, Scalar(l)});
      }
    // Projection onto h fails on (e, f): the left side is 0, the right side -h.
    Matrix bad(3, 3);
    bad(0, 0) = 1;
    CHECK_FALSE(nijenhuis_check(sl2, bad).holds);
    CHECK_THROWS_AS(deformed_bracket(sl2, bad), MathError);
  }

  TEST_CASE("derivations and nilpotency") {
    const LieAlgebra heis = examples::heisenberg(), sl2 = examples::sl2();
    CHECK(derivation_check(heis, Matrix(3, 3)).holds);
    CHECK(nilpotency_index(Matrix(3, 3)) == 1);
    Matrix d(3, 3);
    d(2, 0) = 1;
    CHECK(derivation_check(heis, d).holds);
    CHECK(nilpotency_index(d) == 2);
    CHECK_FALSE(derivation_check(sl2, Matrix::identity(3)).holds);
    CHECK_THROWS_AS(nilpotency_index(Matrix::identity(2)), MathError);
    for (std::size_t i = 0; i < 3; ++i) CHECK(derivation_check(sl2, sl2.ad(unit_vec(3, i))).holds);
  }
}
