#include <doctest.h>

#include "support/oracles.hpp"
#include "trb/errors.hpp"
#include "trb/matrix.hpp"

using namespace trb;

TEST_SUITE("exactlin") {
  TEST_CASE("scalars are canonical fractions") {
    CHECK(Scalar(6, 4).str() == "3/2");
    CHECK(Scalar(3, -6).str() == "-1/2");
    CHECK(Scalar(0, 5).str() == "0");
    CHECK(Scalar(0, 5).denominator() == 1);
    CHECK(Scalar::parse("-10/4") == Scalar(-5, 2));
    CHECK(Scalar::parse("7").str() == "7");
    CHECK_THROWS_AS(Scalar::parse("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(Scalar::parse("x"), std::invalid_argument);
    CHECK_THROWS_AS(Scalar(1) / Scalar(0), std::domain_error);
  }

  TEST_CASE("scalar arithmetic is exact") {
    const Scalar third(1, 3);
    CHECK(third + third + third == Scalar(1));
    CHECK(third * Scalar(3) == Scalar(1));
    CHECK(Scalar(1, 6) - Scalar(1, 2) == Scalar(-1, 3));
    CHECK(Scalar(-2, 3) < Scalar(0));
  }

  TEST_CASE("rank examples") {
    CHECK(rank(Matrix::identity(2)) == 2);
    CHECK(rank(Matrix(2, 2)) == 0);
    CHECK(rank(Matrix::from_rows({{1, 2}, {2, 4}})) == 1);
    CHECK(rank(Matrix(0, 3)) == 0);
  }

  TEST_CASE("kernel examples") {
    CHECK(kernel_basis(Matrix(3, 3)).size() == 3);
    CHECK(kernel_basis(Matrix::identity(3)).empty());
    const auto k = kernel_basis(Matrix::from_rows({{1, 1}}));
    REQUIRE(k.size() == 1);
    // Free variable set to 1.
    CHECK(k[0] == Vec{-1, 1});
  }

  TEST_CASE("inverse examples") {
    CHECK(invert(Matrix::identity(3)) == Matrix::identity(3));
    CHECK(invert(Matrix::from_rows({{2, 0}, {0, Scalar(1, 3)}})) == Matrix::from_rows({{Scalar(1, 2), 0}, {0, 3}}));
    const Matrix m = Matrix::from_rows({{1, 1}, {0, 1}});
    CHECK(invert(m) == Matrix::from_rows({{1, -1}, {0, 1}}));
    CHECK(m * invert(m) == Matrix::identity(2));
    try {
      invert(Matrix::from_rows({{1, 2}, {2, 4}}));
      FAIL("singular matrix inverted");
    } catch (const MathError& e) {
      CHECK(e.kind() == ErrorKind::SingularMatrix);
    }
    try {
      invert(Matrix(2, 3));
      FAIL("non-square matrix inverted");
    } catch (const MathError& e) {
      CHECK(e.kind() == ErrorKind::DimensionMismatch);
    }
  }

  TEST_CASE("rref uses the first nonzero pivot per column") {
    const Echelon e = rref(Matrix::from_rows({{0, 2, 4}, {1, 1, 1}, {2, 4, 6}}));
    CHECK(e.pivot_columns == std::vector<std::size_t>{0, 1});
    CHECK(e.reduced == Matrix::from_rows({{1, 0, -1}, {0, 1, 2}, {0, 0, 0}}));
  }

  TEST_CASE("solve finds a solution or reports none") {
    const Matrix a = Matrix::from_rows({{1, 2}, {2, 4}});
    const auto x = solve(a, {3, 6});
    REQUIRE(x);
    CHECK(a.apply(*x) == Vec{3, 6});
    CHECK_FALSE(solve(a, {1, 0}));
  }

  TEST_CASE("random matrices: rank invariants against a Bareiss oracle") {
    oracle::Random rnd(101);
    for (int k = 0; k < 200; ++k) {
      const std::size_t rows = 1 + rnd.rng() % 5, cols = 1 + rnd.rng() % 5;
      Matrix m = rnd.matrix(rows, cols, -3, 3);
      // Rational entries exercise the denominator clearing in the oracle.
      m(0, 0) = m(0, 0) / Scalar(1 + static_cast<long>(rnd.rng() % 4));
      const std::size_t r = rank(m);
      CHECK(r == oracle::bareiss_rank(m));
      CHECK(r == rank(m.transpose()));
      const auto kernel = kernel_basis(m);
      CHECK(kernel.size() == cols - r);
      for (const Vec& v : kernel) CHECK(is_zero(m.apply(v)));
      if (!kernel.empty()) CHECK(rank(Matrix::from_columns(kernel, cols)) == kernel.size());
      if (rows == cols && r == rows) {
        CHECK(invert(m) * m == Matrix::identity(rows));
        CHECK(m * invert(m) == Matrix::identity(rows));
      }
    }
  }

  TEST_CASE("matrix shape errors") {
    CHECK_THROWS_AS(Matrix(2, 2, {1, 2, 3}), MathError);
    CHECK(block(Matrix::identity(1), Matrix(1, 1), Matrix(1, 1), Matrix::identity(1)) == Matrix::identity(2));
    CHECK(direct_sum(Matrix::identity(1), Matrix::identity(2)) == Matrix::identity(3));
  }
}
