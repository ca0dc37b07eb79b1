#include <doctest.h>

#include "support/corpus.hpp"
#include "support/oracles.hpp"
#include "trb/examples.hpp"
#include "trb/twistrb.hpp"

using namespace trb;

namespace {

ErrorKind kind_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const MathError& e) {
    return e.kind();
  }
  return ErrorKind::InvariantViolated;
}

// [Tu, Tv] - T(Tu . v - Tv . u + H(Tu, Tv)) on basis pairs, written out.
bool trb_oracle(const TrbSetup& s, const Matrix& t) {
  for (std::size_t i = 0; i < s.module_dim(); ++i)
    for (std::size_t j = i + 1; j < s.module_dim(); ++j) {
      const Vec u = unit_vec(s.module_dim(), i), v = unit_vec(s.module_dim(), j);
      const Vec tu = t.apply(u), tv = t.apply(v);
      const Vec lhs = s.algebra().bracket(tu, tv);
      const Vec rhs = t.apply(s.rep().act(tu, v) - s.rep().act(tv, u) + s.twist(tu, tv));
      if (lhs != rhs) return false;
    }
  return true;
}

}  // namespace

TEST_SUITE("twistrb") {
  TEST_CASE("setup validation") {
    const LieAlgebra sl2 = examples::sl2();
    CHECK(setup_check(TrbSetup(sl2, adjoint_rep(sl2), sl2.bracket_cochain())).holds);
    CHECK(kind_of([&] { make_setup(sl2, adjoint_rep(sl2), cochain_from_values(2, 3, 3, {{{0, 1}, {1, 0, 0}}})); }) ==
          ErrorKind::NotCocycle);
    const LieAlgebra aff2 = examples::aff2();
    CHECK(kind_of([&] {
            make_setup(aff2, Representation(2, 1, {Matrix::identity(1), Matrix::identity(1)}), Cochain(2, 2, 1));
          }) == ErrorKind::NotRepresentation);
    const LieAlgebra broken(cochain_from_values(2, 3, 3, {{{0, 1}, {0, 0, 1}}, {{1, 2}, {0, 1, 0}}}));
    CHECK(kind_of([&] { make_setup(broken, trivial_rep(broken, 1), Cochain(2, 3, 1)); }) == ErrorKind::NotLie);
  }

  TEST_CASE("check_trb examples") {
    oracle::Random rnd(401);
    for (const auto& [name, s] : corpus::random_setups(rnd)) {
      CAPTURE(name);
      CHECK(check_trb(s, Matrix(s.algebra_dim(), s.module_dim())).holds);
    }
    for (const auto& e : corpus::trb_instances()) {
      CAPTURE(e.name);
      CHECK(check_trb(e.setup, e.op).holds);
    }
    // h^-1 with H = -delta h, the example written out once.
    const LieAlgebra sl2 = examples::sl2();
    const Matrix h = Matrix::from_rows({{1, 1, 0}, {0, 1, 2}, {1, 0, 1}});
    const InverseExample ex = inverse_cochain_example(sl2, adjoint_rep(sl2), h);
    CHECK(ex.op == invert(h));
    CHECK(ex.setup.cocycle() == Scalar(-1) * ce_apply(sl2, adjoint_rep(sl2), Cochain::linear(h)));
    CHECK(check_trb(ex.setup, ex.op).holds);
  }

  TEST_CASE("failures carry the first basis pair") {
    const LieAlgebra sl2 = examples::sl2();
    const TrbSetup s(sl2, adjoint_rep(sl2), Cochain(2, 3, 3));
    const Verdict v = check_trb(s, Matrix::identity(3));
    CHECK_FALSE(v.holds);
    REQUIRE(v.witness);
    CHECK(v.witness->tuple == std::vector<std::size_t>{0, 1});
    // [h, e] - (h . e - e . h) = 2e - 4e.
    CHECK(v.witness->value == Vec{0, -2, 0});
  }

  TEST_CASE("check_trb, graph criterion and direct oracle agree on random operators") {
    oracle::Random rnd(402);
    std::size_t positives = 0, total = 0;
    for (const auto& [name, s] : corpus::random_setups(rnd))
      for (int k = 0; k < 100; ++k) {
        const Matrix t = rnd.matrix(s.algebra_dim(), s.module_dim(), -1, 1);
        const bool v = check_trb(s, t).holds;
        CHECK(v == graph_subalgebra_check(s, t).holds);
        CHECK(v == trb_oracle(s, t));
        positives += v;
        ++total;
      }
    CHECK(positives > 0);
    CHECK(positives < total);
  }

  TEST_CASE("twisted semidirect products are Lie algebras") {
    oracle::Random rnd(403);
    for (const auto& [name, s] : corpus::random_setups(rnd)) {
      CAPTURE(name);
      CHECK(jacobi_check(twisted_semidirect(s)).holds);
    }
    const LieAlgebra ab = LieAlgebra::abelian(2);
    CHECK(twisted_semidirect(TrbSetup(ab, trivial_rep(ab, 1), Cochain(2, 2, 1))) == LieAlgebra::abelian(3));
  }

  TEST_CASE("induced structures are Lie and representations") {
    for (const auto& e : corpus::trb_instances()) {
      CAPTURE(e.name);
      const LieAlgebra b = induced_bracket(e.setup, e.op);
      CHECK(jacobi_check(b).holds);
      CHECK(representation_check(b, induced_rep(e.setup, e.op)).holds);
    }
    const LieAlgebra sl2 = examples::sl2();
    const TrbSetup s(sl2, adjoint_rep(sl2), Cochain(2, 3, 3));
    CHECK(kind_of([&] { induced_bracket(s, Matrix::identity(3)); }) == ErrorKind::NotTwistedRB);
    CHECK(induced_bracket(s, Matrix(3, 3)) == LieAlgebra::abelian(3));
    const Representation zero = induced_rep(s, Matrix(3, 3));
    for (const Matrix& a : zero.action()) CHECK(a.is_zero());
  }

  TEST_CASE("Nijenhuis setups: identity is twisted RB and induces the deformed bracket") {
    const LieAlgebra sl2 = examples::sl2(), aff2 = examples::aff2();
    for (const auto& [g, n] : std::vector<std::pair<LieAlgebra, Matrix>>{
             {sl2, Matrix::identity(3)},
             {sl2, Matrix::from_rows({{2, 0, 0}, {0, 2, 0}, {0, 0, -1}})},
             {sl2, Matrix(3, 3)},
             {aff2, Matrix::from_rows({{1, 0}, {0, 3}})}}) {
      const TrbSetup s = nijenhuis_trb_setup(g, n);
      CHECK(setup_check(s).holds);
      CHECK(check_trb(s, Matrix::identity(g.dim())).holds);
      CHECK(induced_bracket(s, Matrix::identity(g.dim())) == deformed_bracket(g, n));
      CHECK(s.algebra() == deformed_bracket(g, n));
    }
    const TrbSetup zero = nijenhuis_trb_setup(sl2, Matrix(3, 3));
    CHECK(zero.algebra() == LieAlgebra::abelian(3));
    CHECK(zero.cocycle().is_zero());
  }

  TEST_CASE("reynolds examples") {
    const LieAlgebra sl2 = examples::sl2(), heis = examples::heisenberg();
    CHECK(reynolds_check(sl2, Matrix::identity(3)).holds);
    CHECK(reynolds_check(sl2, Matrix(3, 3)).holds);
    Matrix d(3, 3);
    d(2, 0) = 1;
    const Matrix r = reynolds_from_derivation(heis, d);
    CHECK(r == Matrix::identity(3) - d);
    CHECK(reynolds_check(heis, r).holds);
    CHECK(reynolds_from_derivation(sl2, Matrix(3, 3)) == Matrix::identity(3));
    CHECK(kind_of([&] { reynolds_from_derivation(sl2, Matrix::identity(3)); }) == ErrorKind::NotDerivation);
    // ad(h) is a derivation of sl2 but not nilpotent.
    CHECK(kind_of([&] { reynolds_from_derivation(sl2, sl2.ad({1, 0, 0})); }) == ErrorKind::NotNilpotent);
    // Nilpotent inner derivations on every corpus algebra.
    for (const auto& [name, g] : corpus::algebras())
      for (std::size_t i = 0; i < g.dim(); ++i) {
        const Matrix ad = g.ad(unit_vec(g.dim(), i));
        try {
          nilpotency_index(ad);
        } catch (const MathError&) {
          continue;
        }
        CAPTURE(name);
        CHECK(reynolds_check(g, reynolds_from_derivation(g, ad)).holds);
      }
  }

  TEST_CASE("reynolds check agrees with the twisted check on random operators") {
    oracle::Random rnd(404);
    for (const auto& [name, g] : corpus::algebras())
      for (int k = 0; k < 20; ++k) {
        const Matrix r = rnd.matrix(g.dim(), g.dim(), -1, 1);
        CHECK(reynolds_check(g, r).holds == check_trb(reynolds_setup(g), r).holds);
      }
  }

  TEST_CASE("witt examples") {
    const WittRow row = witt_pair(1, 2);
    CHECK(row.lhs == Scalar(-1, 6));
    CHECK(row.rhs == Scalar(-1, 6));
    CHECK(row.induced == Scalar(-2, 3));
    CHECK(row.pass);
    for (long m = 0; m <= 5; ++m) {
      const WittRow diag = witt_pair(m, m);
      CHECK(diag.lhs == 0);
      CHECK(diag.rhs == 0);
      CHECK(diag.induced == 0);
    }
    const auto report = witt_report(10);
    CHECK(report.size() == 66);
    for (const auto& r : report) CHECK(r.pass);
  }

  TEST_CASE("gauge transformations") {
    const LieAlgebra sl2 = examples::sl2();
    const InverseExample ex =
        inverse_cochain_example(sl2, adjoint_rep(sl2), Matrix::from_rows({{1, 1, 0}, {0, 1, 2}, {1, 0, 1}}));
    CHECK(gauge_transform(ex.setup, ex.op, Matrix(3, 3)).op == ex.op);
    // T = 0 stays 0 for any cocycle B; B = ad(h) is a coboundary.
    const Matrix b = sl2.ad({1, 0, 0});
    CHECK(gauge_transform(ex.setup, Matrix(3, 3), b).op.is_zero());
    CHECK(kind_of([&] { gauge_transform(ex.setup, ex.op, Matrix::from_rows({{1, 0, 0}, {0, 0, 0}, {0, 0, 0}})); }) ==
          ErrorKind::NotCocycle);
    CHECK(kind_of([&] { gauge_transform(ex.setup, Matrix::identity(3), b); }) == ErrorKind::NotTwistedRB);
    oracle::Random rnd(405);
    std::size_t done = 0;
    for (const auto& e : corpus::trb_instances())
      for (int k = 0; k < 3; ++k) {
        const Matrix bb = corpus::random_cocycle(e.setup.algebra(), e.setup.rep(), 1, rnd).matrix();
        const Matrix a = Matrix::identity(e.setup.module_dim()) + bb * e.op;
        if (rank(a) < a.rows()) {
          CHECK(kind_of([&] { gauge_transform(e.setup, e.op, bb); }) == ErrorKind::NotAdmissible);
          continue;
        }
        const GaugeResult g = gauge_transform(e.setup, e.op, bb);
        CHECK(g.op == e.op * invert(a));
        CHECK(check_trb(e.setup, g.op).holds);
        CHECK(morphism_check(induced_bracket(e.setup, e.op), induced_bracket(e.setup, g.op), g.transport).holds);
        ++done;
      }
    CHECK(done > 20);
  }

  TEST_CASE("shift by a coboundary") {
    const LieAlgebra sl2 = examples::sl2();
    const TrbSetup s(sl2, adjoint_rep(sl2), Cochain(2, 3, 3));
    const auto same = shift_by_coboundary(s, Matrix(3, 3), Matrix(3, 3));
    CHECK(same.setup == s);
    CHECK(same.op.is_zero());
    const Matrix h = Matrix::from_rows({{0, 1, 0}, {1, 0, 0}, {0, 0, 1}});
    const auto moved = shift_by_coboundary(s, Matrix(3, 3), h);
    CHECK(moved.op.is_zero());
    CHECK(moved.setup.cocycle() == ce_apply(sl2, adjoint_rep(sl2), Cochain::linear(h)));
    // id - h T singular: h = T = identity on the line.
    const LieAlgebra line = LieAlgebra::abelian(1);
    const TrbSetup ls(line, trivial_rep(line, 1), Cochain(2, 1, 1));
    CHECK(kind_of([&] { shift_by_coboundary(ls, Matrix::identity(1), Matrix::identity(1)); }) ==
          ErrorKind::NotAdmissible);
    oracle::Random rnd(406);
    for (const auto& e : corpus::trb_instances()) {
      const Matrix hh = rnd.matrix(e.setup.module_dim(), e.setup.algebra_dim(), -1, 1);
      try {
        const auto r = shift_by_coboundary(e.setup, e.op, hh);
        CHECK(check_trb(r.setup, r.op).holds);
        CHECK(setup_check(r.setup).holds);
      } catch (const MathError& err) {
        CHECK(err.kind() == ErrorKind::NotAdmissible);
      }
    }
  }

  TEST_CASE("r-matrix examples") {
    const LieAlgebra sl2 = examples::sl2();
    const RMatrixReport zero = r_matrix_check(sl2, Matrix(3, 3), Cochain(3, 3, 1));
    CHECK(zero.verdict.holds);
    CHECK(zero.dual_bracket == LieAlgebra::abelian(3));
    const LieAlgebra ab = LieAlgebra::abelian(3);
    CHECK(r_matrix_check(ab, Matrix::from_rows({{0, 1, 2}, {-1, 0, 3}, {-2, -3, 0}}), Cochain(3, 3, 1)).verdict.holds);
    // psi = 0 is the classical check with H = 0 on the coadjoint module.
    oracle::Random rnd(407);
    for (int k = 0; k < 30; ++k) {
      Matrix r = rnd.matrix(3, 3, -1, 1);
      r = r - r.transpose();
      const RMatrixReport rep = r_matrix_check(sl2, r, Cochain(3, 3, 1));
      CHECK(rep.verdict.holds == check_trb(TrbSetup(sl2, coadjoint_rep(sl2), Cochain(2, 3, 3)), r.transpose()).holds);
      if (rep.verdict.holds) {
        CHECK(rep.morphism.holds);
        CHECK(jacobi_check(rep.dual_bracket).holds);
      }
    }
    CHECK(r_matrix_check(sl2, Matrix::from_rows({{0, 1, 0}, {-1, 0, 0}, {0, 0, 0}}), Cochain(3, 3, 1)).verdict.holds);
    CHECK(kind_of([&] { r_matrix_check(sl2, Matrix::identity(3), Cochain(3, 3, 1)); }) == ErrorKind::NotSkew);
    // aff2 + abelian2 with psi = y^z^w: delta psi(x, y, z, w) = -psi([x, y], z, w) = -1.
    const LieAlgebra g4(cochain_from_values(2, 4, 4, {{{0, 1}, {0, 1, 0, 0}}}));
    const Cochain psi = cochain_from_values(3, 4, 1, {{{1, 2, 3}, {1}}});
    CHECK(kind_of([&] { r_matrix_check(g4, Matrix(4, 4), psi); }) == ErrorKind::NotCocycle);
    CHECK(psi_sharp(cochain_from_values(3, 3, 1, {{{0, 1, 2}, {1}}})).at(IndexTuple{0, 1}) == Vec{0, 0, 1});
  }
}
