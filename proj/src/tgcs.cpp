#include "trb/tgcs.hpp"

namespace trb {

namespace {

void require_shapes(const TrbSetup& s, const GcsComponents& j) {
  const std::size_t d = s.algebra_dim(), m = s.module_dim();
  require(j.n.rows() == d && j.n.cols() == d && j.t.rows() == d && j.t.cols() == m && j.sigma.rows() == m &&
              j.sigma.cols() == d && j.s.rows() == m && j.s.cols() == m,
          ErrorKind::DimensionMismatch, "structure components do not match the setup dimensions");
}

Vec concat(const Vec& a, const Vec& b) {
  Vec out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

// Residual of a matrix identity, column by column.
void note_matrix(Verdict& v, const std::string& name, const Matrix& residual) {
  for (std::size_t c = 0; c < residual.cols() && v.holds; ++c) v.note(name, {c}, residual.column(c));
}

TrbSetup negated(const TrbSetup& s) {
  return TrbSetup(s.algebra(), s.rep(), Scalar(-1) * s.cocycle());
}

}  // namespace

Matrix GcsComponents::block() const { return trb::block(n, t, sigma, -s); }

GcsDirectReport tgcs_check_direct(const TrbSetup& s, const GcsComponents& j) {
  require_shapes(s, j);
  const Matrix jm = j.block();
  const std::size_t dim = jm.rows();
  GcsDirectReport r;
  note_matrix(r.almost_complex, "J^2 = -id", jm * jm + Matrix::identity(dim));
  const LieAlgebra semi = twisted_semidirect(s);
  for (std::size_t a = 0; a < dim && r.integrable.holds; ++a)
    for (std::size_t b = a + 1; b < dim; ++b) {
      const Vec x = unit_vec(dim, a), y = unit_vec(dim, b);
      const Vec jx = jm.apply(x), jy = jm.apply(y);
      const Vec defect = semi.bracket(jx, jy) - semi.bracket(x, y) - jm.apply(semi.bracket(jx, y) + semi.bracket(x, jy));
      if (!r.integrable.note("integrability", {a, b}, defect)) break;
    }
  return r;
}

const std::array<const char*, GcsComponentReport::count> GcsComponentReport::names = {
    "NT = TS",
    "N^2 + T sigma = -id",
    "S sigma = sigma N",
    "S^2 + sigma T = -id",
    "[Tu,Tv] = T(Tu.v - Tv.u)",
    "Tu.Sv - Tv.Su - H(Tu,Tv) = S(Tu.v - Tv.u)",
    "[Nx,Tu] - N[x,Tu] = T(Nx.u - x.Su + H(x,Tu))",
    "sigma[Tu,x] - Tu.sigma x - H(Tu,Nx) = x.u + Nx.Su - S(Nx.u - x.Su + H(x,Tu))",
    "[Nx,Ny] - [x,y] - N([Nx,y] + [x,Ny]) = T(x.sigma y - y.sigma x + H(x,Ny) - H(y,Nx))",
    "Nx.sigma y - Ny.sigma x + H(Nx,Ny) - H(x,y) - sigma([Nx,y] + [x,Ny]) = -S(x.sigma y - y.sigma x + H(x,Ny) - H(y,Nx))",
};

bool GcsComponentReport::holds() const {
  for (const Verdict& v : equations)
    if (!v.holds) return false;
  return true;
}

GcsComponentReport tgcs_check_components(const TrbSetup& s, const GcsComponents& j) {
  require_shapes(s, j);
  const std::size_t d = s.algebra_dim(), m = s.module_dim();
  const LieAlgebra& g = s.algebra();
  const Representation& rep = s.rep();
  const Matrix &N = j.n, &T = j.t, &sig = j.sigma, &S = j.s;
  GcsComponentReport r;
  auto& eq = r.equations;
  auto name = [](std::size_t k) { return std::string(GcsComponentReport::names[k]); };

  note_matrix(eq[0], name(0), N * T - T * S);
  note_matrix(eq[1], name(1), N * N + T * sig + Matrix::identity(d));
  note_matrix(eq[2], name(2), S * sig - sig * N);
  note_matrix(eq[3], name(3), S * S + sig * T + Matrix::identity(m));

  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = a + 1; b < m; ++b) {
      const Vec u = unit_vec(m, a), v = unit_vec(m, b);
      const Vec tu = T.apply(u), tv = T.apply(v);
      const Vec w = rep.act(tu, v) - rep.act(tv, u);
      if (eq[4].holds) eq[4].note(name(4), {a, b}, g.bracket(tu, tv) - T.apply(w));
      if (eq[5].holds)
        eq[5].note(name(5), {a, b},
                   rep.act(tu, S.apply(v)) - rep.act(tv, S.apply(u)) - s.twist(tu, tv) - S.apply(w));
    }

  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t a = 0; a < m; ++a) {
      const Vec x = unit_vec(d, i), u = unit_vec(m, a);
      const Vec nx = N.apply(x), tu = T.apply(u);
      const Vec w = rep.act(nx, u) - rep.act(x, S.apply(u)) + s.twist(x, tu);
      if (eq[6].holds) eq[6].note(name(6), {i, a}, g.bracket(nx, tu) - N.apply(g.bracket(x, tu)) - T.apply(w));
      if (eq[7].holds) {
        const Vec lhs = sig.apply(g.bracket(tu, x)) - rep.act(tu, sig.apply(x)) - s.twist(tu, nx);
        const Vec rhs = rep.act(x, u) + rep.act(nx, S.apply(u)) - S.apply(w);
        eq[7].note(name(7), {i, a}, lhs - rhs);
      }
    }

  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t k = i + 1; k < d; ++k) {
      const Vec x = unit_vec(d, i), y = unit_vec(d, k);
      const Vec nx = N.apply(x), ny = N.apply(y);
      const Vec inner = g.bracket(nx, y) + g.bracket(x, ny);
      const Vec w = rep.act(x, sig.apply(y)) - rep.act(y, sig.apply(x)) + s.twist(x, ny) - s.twist(y, nx);
      if (eq[8].holds) eq[8].note(name(8), {i, k}, g.bracket(nx, ny) - g.bracket(x, y) - N.apply(inner) - T.apply(w));
      if (eq[9].holds) {
        const Vec lhs = rep.act(nx, sig.apply(y)) - rep.act(ny, sig.apply(x)) + s.twist(nx, ny) - s.twist(x, y) -
                        sig.apply(inner);
        eq[9].note(name(9), {i, k}, lhs + S.apply(w));
      }
    }

  const GcsDirectReport direct = tgcs_check_direct(s, j);
  require(direct.holds() == r.holds(), ErrorKind::InvariantViolated,
          "component equations disagree with the direct definition");
  if (eq[4].holds) {
    const TrbSetup untwisted(g, rep, Cochain(2, d, m));
    require(check_trb(untwisted, T).holds, ErrorKind::InvariantViolated,
            "equation 5 holds but T is not a Rota-Baxter operator");
  }
  const bool closed = graph_pair_subalgebra_check(s, T, S).holds;
  if (eq[4].holds && eq[5].holds)
    require(closed, ErrorKind::InvariantViolated, "equations 5 and 6 hold but the graph of (T, S) is not closed");
  if (eq[4].holds && closed && rank(T) == m)
    require(eq[5].holds, ErrorKind::InvariantViolated, "graph of (T, S) is closed but equation 6 fails");
  return r;
}

Verdict graph_pair_subalgebra_check(const TrbSetup& s, const Matrix& t, const Matrix& smat) {
  const std::size_t d = s.algebra_dim(), m = s.module_dim();
  require(t.rows() == d && t.cols() == m && smat.rows() == m && smat.cols() == m, ErrorKind::DimensionMismatch,
          "graph components do not match the setup dimensions");
  const LieAlgebra semi = twisted_semidirect(negated(s));
  std::vector<Vec> spanning;
  for (std::size_t i = 0; i < m; ++i) spanning.push_back(concat(t.column(i), smat.column(i)));
  const Matrix base = Matrix::from_columns(spanning, d + m);
  const std::size_t graph_rank = rank(base);
  Verdict v;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t k = i + 1; k < m; ++k) {
      const Vec w = semi.bracket(spanning[i], spanning[k]);
      auto cols = spanning;
      cols.push_back(w);
      if (rank(Matrix::from_columns(cols, d + m)) == graph_rank) continue;
      v.note("graph closure", {i, k}, w);
      return v;
    }
  return v;
}

GcsComponents gcs_from_invertible_rb(const TrbSetup& s, const Matrix& t) {
  require(s.cocycle().is_zero(), ErrorKind::NonzeroH, "the invertible Rota-Baxter construction needs H = 0");
  const Verdict v = check_trb(s, t);
  require(v.holds, ErrorKind::NotTwistedRB, v.describe());
  const Matrix inv = invert(t);
  const std::size_t d = s.algebra_dim(), m = s.module_dim();
  GcsComponents j{Matrix(d, d), t, -inv, Matrix(m, m)};
  require(tgcs_check_direct(s, j).holds(), ErrorKind::InvariantViolated,
          "[[0, T], [-T^-1, 0]] is not a generalized complex structure");
  return j;
}

OppositeResult opposite(const TrbSetup& s, const GcsComponents& j) {
  const GcsDirectReport r = tgcs_check_direct(s, j);
  require(r.holds(), ErrorKind::NotGcs, r.almost_complex.holds ? r.integrable.describe() : r.almost_complex.describe());
  OppositeResult out{negated(s), GcsComponents{j.n, -j.t, -j.sigma, j.s}};
  require(tgcs_check_direct(out.setup, out.gcs).holds(), ErrorKind::InvariantViolated,
          "the opposite structure fails the direct check");
  return out;
}

ComplexStructureReport complex_structure_check(const LieAlgebra& g, const Representation& rep, const Matrix& i,
                                               const Matrix& i_m) {
  const std::size_t d = g.dim(), m = rep.module_dim();
  require(i.rows() == d && i.cols() == d && i_m.rows() == m && i_m.cols() == m, ErrorKind::DimensionMismatch,
          "complex structure shapes do not match");
  ComplexStructureReport r;
  note_matrix(r.algebra_square, "I^2 = -id", i * i + Matrix::identity(d));
  note_matrix(r.module_square, "I_M^2 = -id", i_m * i_m + Matrix::identity(m));
  for (std::size_t a = 0; a < d && r.algebra_integrable.holds; ++a)
    for (std::size_t b = a + 1; b < d; ++b) {
      const Vec x = unit_vec(d, a), y = unit_vec(d, b), ix = i.apply(x), iy = i.apply(y);
      const Vec defect = g.bracket(ix, iy) - g.bracket(x, y) - i.apply(g.bracket(ix, y) + g.bracket(x, iy));
      if (!r.algebra_integrable.note("[Ix,Iy] - [x,y] - I([Ix,y] + [x,Iy])", {a, b}, defect)) break;
    }
  for (std::size_t a = 0; a < d && r.module_integrable.holds; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      const Vec x = unit_vec(d, a), u = unit_vec(m, b), ix = i.apply(x), iu = i_m.apply(u);
      const Vec defect = rep.act(ix, iu) - rep.act(x, u) - i_m.apply(rep.act(ix, u) + rep.act(x, iu));
      if (!r.module_integrable.note("Ix.I_M u - x.u - I_M(Ix.u + x.I_M u)", {a, b}, defect)) break;
    }
  return r;
}

GcsComponents embed_complex(const Matrix& i, const Matrix& i_m) {
  require(i.is_square() && i_m.is_square(), ErrorKind::DimensionMismatch, "complex structures must be square");
  return {i, Matrix(i.rows(), i_m.rows()), Matrix(i_m.rows(), i.rows()), -i_m};
}

Matrix pairing_gram(std::size_t dim) {
  Matrix g(2 * dim, 2 * dim);
  for (std::size_t k = 0; k < dim; ++k) {
    g(k, dim + k) = Scalar(1, 2);
    g(dim + k, k) = Scalar(1, 2);
  }
  return g;
}

Verdict orthogonality_check(const Matrix& j) {
  require(j.is_square() && j.rows() % 2 == 0, ErrorKind::DimensionMismatch, "J must act on g + g*");
  const Matrix gram = pairing_gram(j.rows() / 2);
  const Matrix residual = j.transpose() * gram * j - gram;
  Verdict v;
  for (std::size_t a = 0; a < j.rows() && v.holds; ++a)
    for (std::size_t b = a; b < j.rows(); ++b)
      if (!v.note("<Jr,Js> = <r,s>", {a, b}, Vec{residual(a, b)})) break;
  return v;
}

LieGcsReport lie_tgcs_check(const LieAlgebra& g, const Cochain& psi, const LieGcsTriple& triple) {
  const std::size_t d = g.dim();
  for (const Matrix* mat : {&triple.n, &triple.r, &triple.sigma})
    require(mat->rows() == d && mat->cols() == d, ErrorKind::DimensionMismatch, "N, r, sigma must be dim g x dim g");
  require((triple.r + triple.r.transpose()).is_zero(), ErrorKind::NotSkew, "r is not skew-symmetric");
  require((triple.sigma + triple.sigma.transpose()).is_zero(), ErrorKind::NotSkew, "sigma is not skew-symmetric");
  require(psi.degree() == 3 && psi.source_dim() == d && psi.target_dim() == 1, ErrorKind::DimensionMismatch,
          "psi must be a degree-3 scalar cochain on g");
  const Verdict cocycle = is_cocycle(g, trivial_rep(g, 1), psi);
  require(cocycle.holds, ErrorKind::NotCocycle, cocycle.describe());

  LieGcsReport out;
  out.setup = make_setup(g, coadjoint_rep(g), psi_sharp(psi));
  // sigma_flat(x) = sigma(x, -), the same transpose convention as r#.
  out.gcs = GcsComponents{triple.n, r_sharp(triple.r), triple.sigma.transpose(), triple.n.transpose()};
  out.orthogonal = orthogonality_check(out.gcs.block());
  out.components = tgcs_check_components(out.setup, out.gcs);
  return out;
}

}  // namespace trb
