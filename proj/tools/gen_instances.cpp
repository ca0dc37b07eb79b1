// Writes the instances/ corpus. Every instance is built from library
// constructions so derived data (H = -delta h, inverse operators) is exact.
#include <fstream>
#include <iostream>

#include "trb/examples.hpp"
#include "trb/io.hpp"

using namespace trb;
using io::Json;

namespace {

void write(const std::string& dir, const std::string& name, const Json& j) {
  std::ofstream out(dir + "/" + name + ".json");
  out << j.dump(2) << "\n";
  std::cout << "wrote " << name << ".json\n";
}

Json setup_json(const TrbSetup& s, const Matrix& t, const std::string& comment) {
  Json j{{"comment", comment}};
  const Json setup = io::to_json(s);
  for (const auto& [k, v] : setup.items()) j[k] = v;
  j["operator_T"] = io::to_json(t);
  return j;
}

Matrix first_diagonal_nijenhuis(const LieAlgebra& g) {
  for (long a = -2; a <= 2; ++a)
    for (long b = -2; b <= 2; ++b)
      for (long c = -2; c <= 2; ++c) {
        const Matrix n = Matrix::from_rows({{a, 0, 0}, {0, b, 0}, {0, 0, c}});
        if (a == b && b == c) continue;
        if (nijenhuis_check(g, n).holds) return n;
      }
  throw std::runtime_error("no diagonal Nijenhuis operator found");
}

}  // namespace

int main(int argc, char** argv) {
  const std::string dir = argc > 1 ? argv[1] : "instances";
  const LieAlgebra sl2 = examples::sl2(), heis = examples::heisenberg(), aff2 = examples::aff2();

  {
    const TrbSetup s(sl2, adjoint_rep(sl2), Cochain(2, 3, 3));
    write(dir, "sl2_zero", setup_json(s, Matrix(3, 3), "sl2 adjoint, H = 0, T = 0"));
  }
  {
    const Matrix h = Matrix::from_rows({{1, 1, 0}, {0, 1, 2}, {1, 0, 1}});
    const InverseExample ex = inverse_cochain_example(sl2, adjoint_rep(sl2), h);
    Json j = setup_json(ex.setup, ex.op, "sl2 adjoint, T = h^-1 twisted by H = -delta h");
    const Matrix t1 = d_t(ex.setup, ex.op, Cochain::constant(3, {1, 0, 0})).matrix();
    j["deformation"] = Json{{"order", 1}, {"coefficients", Json::array({io::to_json(t1)})}};
    write(dir, "sl2_inverse", j);
    Json ns{{"comment", "NS-Lie algebra induced by the sl2 inverse example"},
            {"ns_lie", io::to_json(ns_from_trb(ex.setup, ex.op))}};
    write(dir, "sl2_inverse_ns", ns);
  }
  {
    const Json j{{"comment", "Heisenberg algebra, trivial one-dimensional module"},
                 {"lie_algebra", io::to_json(heis)},
                 {"module", Json{{"trivial", 1}}},
                 {"operator_T", io::to_json(Matrix(3, 1))}};
    write(dir, "heisenberg_trivial", j);
  }
  {
    // ad(y) is a nilpotent derivation; R = id - d.
    const Matrix d = aff2.ad({0, 1});
    const Matrix r = reynolds_from_derivation(aff2, d);
    const Json j{{"comment", "aff(1): nilpotent derivation ad(y) and its Reynolds operator"},
                 {"lie_algebra", io::to_json(aff2)},
                 {"derivation_d", io::to_json(d)},
                 {"operator_T", io::to_json(r)}};
    write(dir, "aff2_reynolds", j);
  }
  {
    const Matrix n = first_diagonal_nijenhuis(sl2);
    const TrbSetup s = nijenhuis_trb_setup(sl2, n);
    Json j = setup_json(s, Matrix::identity(3), "Nijenhuis operator N on sl2: identity is twisted RB for g_N");
    j["operator_N"] = io::to_json(n);
    write(dir, "sl2_nijenhuis", j);
  }
  {
    // Upper triangular 2x2 matrices with basis E11, E12, E22 as box product.
    BilinearMap box(3, 3, 3);
    box.set(0, 0, {1, 0, 0});
    box.set(0, 1, {0, 1, 0});
    box.set(1, 2, {0, 1, 0});
    box.set(2, 2, {0, 0, 1});
    const AssocNs a(BilinearMap(3, 3, 3), BilinearMap(3, 3, 3), box);
    write(dir, "assoc_ns_triangular",
          Json{{"comment", "associative NS-algebra: only the box product, upper triangular matrices"},
               {"assoc_ns", io::to_json(a)}});
  }
  {
    const TrbSetup s(aff2, coadjoint_rep(aff2), Cochain(2, 2, 2));
    Matrix t;
    for (long a = -1; a <= 1 && t.rows() == 0; ++a)
      for (long b = -1; b <= 1 && t.rows() == 0; ++b)
        for (long c = -1; c <= 1 && t.rows() == 0; ++c)
          for (long e = -1; e <= 1 && t.rows() == 0; ++e) {
            const Matrix cand = Matrix::from_rows({{a, b}, {c, e}});
            if (rank(cand) == 2 && check_trb(s, cand).holds) t = cand;
          }
    Json j = setup_json(s, t, "aff(1) coadjoint, invertible Rota-Baxter operator and its complex structure");
    j["gcs_components"] = io::to_json(gcs_from_invertible_rb(s, t));
    write(dir, "aff2_gcs", j);
  }
  {
    const Json j{{"comment", "abelian 2-dim algebra, psi = 0, J = [[0, r#], [sigma_flat, 0]]"},
                 {"lie_algebra", io::to_json(LieAlgebra::abelian(2))},
                 {"psi", io::to_json(Cochain(3, 2, 1))},
                 {"lie_gcs", Json{{"N", io::to_json(Matrix(2, 2))},
                                  {"r", io::to_json(Matrix::from_rows({{0, 1}, {-1, 0}}))},
                                  {"sigma", io::to_json(Matrix::from_rows({{0, 1}, {-1, 0}}))}}}};
    write(dir, "abelian_lie_gcs", j);
  }
  {
    const Json j{{"comment", "triangular r-matrix h ^ e on sl2"},
                 {"lie_algebra", io::to_json(sl2)},
                 {"operator_T", io::to_json(Matrix::from_rows({{0, 1, 0}, {-1, 0, 0}, {0, 0, 0}}))},
                 {"psi", io::to_json(Cochain(3, 3, 1))}};
    write(dir, "sl2_r_matrix", j);
  }
  {
    // One-dimensional abelian algebra acting by scalars: every element is a
    // Nijenhuis element and H^1_T = 0.
    const LieAlgebra line = LieAlgebra::abelian(1);
    const Representation scalar(1, 1, {Matrix::identity(1)});
    const TrbSetup s(line, scalar, Cochain(2, 1, 1));
    write(dir, "line_rigid", setup_json(s, Matrix::identity(1), "1-dim abelian algebra acting by scalars, T = id"));
  }
  return 0;
}
