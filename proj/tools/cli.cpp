#include "cli.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <sstream>

#include "trb/io.hpp"

namespace trb::cli {

namespace {

using io::Json;

// Malformed or inconsistent input; maps to exit code 2.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

bool is_input_kind(ErrorKind k) {
  switch (k) {
    case ErrorKind::DimensionMismatch:
    case ErrorKind::DuplicateAssignment:
    case ErrorKind::IndexOutOfRange:
    case ErrorKind::InvalidInput:
      return true;
    default:
      return false;
  }
}

Json witness_json(const std::string& check, const Defect& d) {
  return Json{{"check", check}, {"identity", d.identity}, {"tuple", d.tuple}, {"value", io::to_json(d.value)}};
}

class Report {
 public:
  Report(std::string command, std::uint64_t seed) : command_(std::move(command)), seed_(seed) {}

  void line(const std::string& text) { lines_.push_back(text); }
  void dimension(const std::string& name, std::size_t value) {
    dimensions_[name] = value;
    dim_order_.push_back(name);
  }
  void detail(const std::string& key, Json value) { details_[key] = std::move(value); }

  /// Records a named verdict; any failure fails the report.
  bool check(const std::string& name, const Verdict& v) {
    line(std::string(v.holds ? "[PASS] " : "[FAIL] ") + name + (v.holds ? "" : ": " + v.describe()));
    if (v.witness) witnesses_.push_back(witness_json(name, *v.witness));
    checks_.push_back(Json{{"name", name}, {"holds", v.holds}});
    pass_ = pass_ && v.holds;
    return v.holds;
  }
  /// Plain boolean check without a basis witness.
  bool check(const std::string& name, bool holds, const std::string& why = "") {
    line(std::string(holds ? "[PASS] " : "[FAIL] ") + name + (holds || why.empty() ? "" : ": " + why));
    checks_.push_back(Json{{"name", name}, {"holds", holds}});
    pass_ = pass_ && holds;
    return holds;
  }

  void error(const std::string& kind, const std::string& message) {
    pass_ = false;
    error_ = Json{{"kind", kind}, {"message", message}};
    line("error: " + message);
  }

  bool pass() const { return pass_; }

  void print(std::ostream& out, bool json) const {
    if (json) {
      Json dims = Json::object();
      for (const auto& name : dim_order_) dims[name] = dimensions_.at(name);
      Json doc{{"command", command_},
               {"verdict", error_.is_null() ? (pass_ ? "pass" : "fail") : "error"},
               {"witnesses", witnesses_},
               {"dimensions", dims},
               {"seed", seed_},
               {"checks", checks_},
               {"details", details_}};
      if (!error_.is_null()) doc["error"] = error_;
      out << doc.dump(2) << "\n";
      return;
    }
    out << "command: " << command_ << "\nseed: " << seed_ << "\n";
    for (const auto& name : dim_order_) out << name << " = " << dimensions_.at(name) << "\n";
    for (const auto& l : lines_) out << l << "\n";
    out << "verdict: " << (pass_ ? "PASS" : "FAIL") << "\n";
  }

 private:
  std::string command_;
  std::uint64_t seed_;
  std::vector<std::string> lines_;
  std::map<std::string, std::size_t> dimensions_;
  std::vector<std::string> dim_order_;
  Json witnesses_ = Json::array();
  Json checks_ = Json::array();
  Json details_ = Json::object();
  Json error_;
  bool pass_ = true;
};

struct Options {
  bool json = false;
  std::uint64_t seed = 0;
  std::string input;
  std::optional<std::size_t> nmax;
  std::optional<std::size_t> order;
  std::string x;
  long grid = 2;
  std::string b;
  std::string h;
  std::string source;
  std::size_t sweep = 0;
};

// ---------------------------------------------------------------------------
// Input helpers: every failure here is an input error.

template <class F>
auto input_step(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const MathError& e) {
    // Input errors carry their kind only once.
    const std::string prefix = std::string(to_string(ErrorKind::InvalidInput)) + ": ";
    std::string what = e.what();
    if (e.kind() == ErrorKind::InvalidInput) what.erase(0, prefix.size());
    throw InputError(what);
  }
}

template <class T>
const T& need(const std::optional<T>& section, const char* name) {
  if (!section) throw InputError(std::string("missing section \"") + name + "\"");
  return *section;
}

TrbSetup setup_of(const io::Instance& in) {
  const LieAlgebra& g = need(in.lie_algebra, "lie_algebra");
  if (!in.representation) throw InputError("missing section \"representation\" or \"module\"");
  return input_step([&] {
    Cochain h = in.cocycle_h ? *in.cocycle_h : Cochain(2, g.dim(), in.representation->module_dim());
    return make_setup(g, *in.representation, std::move(h));
  });
}

Matrix operator_of(const io::Instance& in, const TrbSetup& s) {
  const Matrix& t = need(in.operator_t, "operator_T");
  if (t.rows() != s.algebra_dim() || t.cols() != s.module_dim())
    throw InputError("operator_T must be a dim g x dim M matrix");
  return t;
}

Matrix square_of(const std::optional<Matrix>& m, const char* name, std::size_t dim) {
  const Matrix& a = need(m, name);
  if (a.rows() != dim || a.cols() != dim) throw InputError(std::string(name) + " must be a square matrix of size dim g");
  return a;
}

LieAlgebra valid_lie(const io::Instance& in) {
  const LieAlgebra& g = need(in.lie_algebra, "lie_algebra");
  const Verdict v = jacobi_check(g);
  if (!v.holds) throw InputError("lie_algebra violates the Jacobi identity: " + v.describe());
  return g;
}

Cochain psi_of(const io::Instance& in, std::size_t dim) { return in.psi ? *in.psi : Cochain(3, dim, 1); }

Vec parse_vector(const std::string& text, std::size_t dim) {
  Vec out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(Scalar::parse(item));
    } catch (const std::exception&) {
      throw InputError("malformed scalar \"" + item + "\" in --x");
    }
  }
  if (out.size() != dim) throw InputError("--x needs " + std::to_string(dim) + " comma-separated scalars");
  return out;
}

Matrix parse_matrix_flag(const std::string& text, const char* flag, std::size_t rows, std::size_t cols) {
  const Json j = Json::parse(text, nullptr, false);
  if (j.is_discarded()) throw InputError(std::string(flag) + " must be a JSON matrix, e.g. [[\"1\",\"0\"]]");
  return input_step([&] { return io::matrix_from_json(j, rows, cols); });
}

void setup_dims(Report& r, const TrbSetup& s) {
  r.dimension("dim g", s.algebra_dim());
  r.dimension("dim M", s.module_dim());
}

std::string dims_text(const std::vector<std::size_t>& dims) {
  std::string out = "[";
  for (std::size_t i = 0; i < dims.size(); ++i) out += (i ? ", " : "") + std::to_string(dims[i]);
  return out + "]";
}

// ---------------------------------------------------------------------------
// Commands.

void cmd_validate(const io::Instance& in, Report& r) {
  if (in.lie_algebra) {
    const LieAlgebra& g = *in.lie_algebra;
    r.dimension("dim g", g.dim());
    const bool lie = r.check("Jacobi identity", jacobi_check(g));
    if (in.representation) {
      r.dimension("dim M", in.representation->module_dim());
      const bool rep = r.check("representation", representation_check(g, *in.representation));
      if (in.cocycle_h) {
        const Cochain& h = *in.cocycle_h;
        if (h.degree() != 2 || h.source_dim() != g.dim() || h.target_dim() != in.representation->module_dim())
          throw InputError("cocycle_H must be a degree-2 cochain g x g -> M");
        if (lie && rep) r.check("cocycle_H is a 2-cocycle", is_two_cocycle(g, *in.representation, h));
      }
      if (in.operator_t) {
        const Matrix& t = *in.operator_t;
        r.check("operator_T shape dim g x dim M",
                t.rows() == g.dim() && t.cols() == in.representation->module_dim());
      }
    }
    if (in.operator_n) {
      const Matrix n = square_of(in.operator_n, "operator_N", g.dim());
      if (lie) r.check("operator_N is Nijenhuis", nijenhuis_check(g, n));
    }
    if (in.derivation_d) {
      const Matrix d = square_of(in.derivation_d, "derivation_d", g.dim());
      if (lie) r.check("derivation_d is a derivation", derivation_check(g, d));
    }
    if (in.psi && lie) {
      const Cochain& psi = *in.psi;
      if (psi.degree() != 3 || psi.source_dim() != g.dim() || psi.target_dim() != 1)
        throw InputError("psi must be a degree-3 scalar cochain on g");
      r.check("psi is a 3-cocycle", is_cocycle(g, trivial_rep(g, 1), psi));
    }
  }
  if (in.ns_lie) {
    const NsReport ns = ns_check(*in.ns_lie);
    r.check("ns_lie NS1", ns.ns1);
    r.check("ns_lie NS2", ns.ns2);
  }
  if (in.assoc_ns) r.check("assoc_ns identities", assoc_ns_check(*in.assoc_ns));
  if (!in.lie_algebra && !in.ns_lie && !in.assoc_ns) throw InputError("nothing to validate");
}

void cmd_ce_cohomology(const io::Instance& in, const Options& o, Report& r) {
  const TrbSetup s = setup_of(in);
  setup_dims(r, s);
  const std::size_t nmax = o.nmax.value_or(s.algebra_dim());
  if (nmax > s.algebra_dim()) throw InputError("--nmax must not exceed dim g");
  const auto dims = ce_cohomology_dims(s.algebra(), s.rep(), nmax);
  r.line("H^n_CE(g, M) for n = 0.." + std::to_string(nmax) + ": " + dims_text(dims));
  r.detail("cohomology_dims", dims);
}

void cmd_check_trb(const io::Instance& in, Report& r) {
  const TrbSetup s = setup_of(in);
  setup_dims(r, s);
  const Matrix t = operator_of(in, s);
  r.check("twisted Rota-Baxter identity", check_trb(s, t));
  r.check("graph closed in the twisted semidirect product", graph_subalgebra_check(s, t));
}

void cmd_check_mc(const io::Instance& in, const Options& o, Report& r) {
  const TrbSetup s = setup_of(in);
  setup_dims(r, s);
  const Matrix t = operator_of(in, s);
  const Cochain defect = mc_defect(s, t);
  Verdict v;
  for (const auto& tup : ExtBasis(s.module_dim(), 2).tuples())
    if (!v.note("1/2 [[T,T]] - 1/6 [[T,T,T]] = 0", tup, defect.at(tup))) break;
  r.check("Maurer-Cartan equation", v);
  r.detail("mc_defect", io::to_json(defect));
  if (o.sweep > 0) {
    std::mt19937_64 rng(o.seed);
    std::size_t agree = 0, positives = 0;
    for (std::size_t k = 0; k < o.sweep; ++k) {
      Matrix candidate(s.algebra_dim(), s.module_dim());
      for (std::size_t i = 0; i < candidate.rows(); ++i)
        for (std::size_t j = 0; j < candidate.cols(); ++j) candidate(i, j) = Scalar(static_cast<long>(rng() % 5) - 2);
      const bool trb = check_trb(s, candidate).holds;
      // mc_defect itself asserts agreement; the count is reported for reference.
      agree += (mc_defect(s, candidate).is_zero() == trb);
      positives += trb;
    }
    r.line("random sweep: " + std::to_string(agree) + "/" + std::to_string(o.sweep) + " agree, " +
           std::to_string(positives) + " twisted Rota-Baxter");
    r.check("Maurer-Cartan and twisted Rota-Baxter verdicts agree on the sweep", agree == o.sweep);
  }
}

void cmd_cohomology_of_t(const io::Instance& in, const Options& o, Report& r) {
  const TrbSetup s = setup_of(in);
  setup_dims(r, s);
  const Matrix t = operator_of(in, s);
  if (!r.check("twisted Rota-Baxter identity", check_trb(s, t))) return;
  const std::size_t nmax = o.nmax.value_or(std::min<std::size_t>(2, s.module_dim()));
  if (nmax > s.module_dim()) throw InputError("--nmax must not exceed dim M");
  const auto dims = cohomology_of_t_dims(s, t, nmax);
  const auto ce = ce_cohomology_dims(induced_bracket(s, t), induced_rep(s, t), nmax);
  r.line("H^n_T(M, g) for n = 0.." + std::to_string(nmax) + ": " + dims_text(dims));
  r.line("H^n_CE of the induced structure: " + dims_text(ce));
  r.check("agrees with the induced Chevalley-Eilenberg cohomology", dims == ce);
  r.detail("cohomology_dims", dims);
}

void cmd_check_reynolds(const io::Instance& in, Report& r) {
  const LieAlgebra g = valid_lie(in);
  r.dimension("dim g", g.dim());
  const Matrix rop = square_of(in.operator_t, "operator_T", g.dim());
  if (r.check("Reynolds identity", reynolds_check(g, rop))) {
    const LieAlgebra induced = induced_bracket(reynolds_setup(g), rop);
    r.detail("induced_bracket", io::to_json(induced));
  }
}

void cmd_reynolds_from_derivation(const io::Instance& in, Report& r) {
  const LieAlgebra g = valid_lie(in);
  r.dimension("dim g", g.dim());
  const Matrix d = square_of(in.derivation_d, "derivation_d", g.dim());
  const Matrix rop = reynolds_from_derivation(g, d);
  r.line("R = " + rop.str());
  r.detail("operator", io::to_json(rop));
  r.check("Reynolds identity", reynolds_check(g, rop));
}

void cmd_witt(const Options& o, Report& r) {
  const long nmax = static_cast<long>(o.nmax.value_or(10));
  const auto rows = witt_report(nmax);
  Json table = Json::array();
  std::size_t passing = 0;
  r.line("m n lhs rhs induced pass");
  for (const WittRow& row : rows) {
    r.line(std::to_string(row.m) + " " + std::to_string(row.n) + " " + row.lhs.str() + " " + row.rhs.str() + " " +
           row.induced.str() + " " + (row.pass ? "yes" : "no"));
    table.push_back(Json{{"m", row.m},
                         {"n", row.n},
                         {"lhs", row.lhs.str()},
                         {"rhs", row.rhs.str()},
                         {"induced", row.induced.str()},
                         {"pass", row.pass}});
    passing += row.pass;
  }
  r.dimension("rows", rows.size());
  r.detail("table", table);
  r.check("all rows pass (" + std::to_string(passing) + "/" + std::to_string(rows.size()) + ")",
          passing == rows.size());
}

void cmd_check_r_matrix(const io::Instance& in, Report& r) {
  const LieAlgebra g = valid_lie(in);
  r.dimension("dim g", g.dim());
  const Matrix rm = square_of(in.operator_t, "operator_T", g.dim());
  const Cochain psi = psi_of(in, g.dim());
  const RMatrixReport rep = r_matrix_check(g, rm, psi);
  r.check("r# is twisted Rota-Baxter on the coadjoint module", rep.verdict);
  r.check("r# is a Lie morphism from the dual bracket", rep.morphism);
  r.detail("dual_bracket", io::to_json(rep.dual_bracket));
}

void cmd_check_ns(const io::Instance& in, Report& r) {
  if (!in.ns_lie && !in.assoc_ns) throw InputError("missing section \"ns_lie\" or \"assoc_ns\"");
  if (in.ns_lie) {
    r.dimension("dim", in.ns_lie->dim());
    const NsReport ns = ns_check(*in.ns_lie);
    r.check("NS1", ns.ns1);
    r.check("NS2", ns.ns2);
    if (ns.holds()) r.detail("adjacent_lie", io::to_json(adjacent_lie(*in.ns_lie).algebra));
  }
  if (in.assoc_ns) {
    if (!in.ns_lie) r.dimension("dim", in.assoc_ns->dim());
    r.check("associative NS identities", assoc_ns_check(*in.assoc_ns));
  }
}

void cmd_ns_from(const io::Instance& in, const Options& o, Report& r) {
  NsLie ns;
  if (o.source == "nijenhuis") {
    const LieAlgebra g = valid_lie(in);
    ns = ns_from_nijenhuis(g, square_of(in.operator_n, "operator_N", g.dim()));
  } else if (o.source == "assoc") {
    ns = ns_from_assoc(need(in.assoc_ns, "assoc_ns"));
  } else {
    const TrbSetup s = setup_of(in);
    ns = ns_from_trb(s, operator_of(in, s));
  }
  r.dimension("dim", ns.dim());
  const NsReport v = ns_check(ns);
  r.check("NS1", v.ns1);
  r.check("NS2", v.ns2);
  r.detail("ns_lie", io::to_json(ns));
}

void cmd_trb_from_ns(const io::Instance& in, Report& r) {
  const TrbFromNs out = trb_from_ns(need(in.ns_lie, "ns_lie"));
  setup_dims(r, out.setup);
  r.check("identity is twisted Rota-Baxter", check_trb(out.setup, out.op));
  Json j = io::to_json(out.setup);
  j["operator_T"] = io::to_json(out.op);
  r.detail("instance", j);
}

void cmd_deform(const io::Instance& in, const Options& o, Report& r) {
  const TrbSetup s = setup_of(in);
  setup_dims(r, s);
  const Matrix t = operator_of(in, s);
  if (!r.check("base operator is twisted Rota-Baxter", check_trb(s, t))) return;
  std::vector<Matrix> coeffs = need(in.deformation, "deformation");
  for (const Matrix& c : coeffs)
    if (c.rows() != s.algebra_dim() || c.cols() != s.module_dim())
      throw InputError("deformation coefficients must be dim g x dim M matrices");
  const std::size_t k = o.order.value_or(coeffs.size());
  if (k == 0) throw InputError("--order must be at least 1");
  coeffs.resize(k, Matrix(s.algebra_dim(), s.module_dim()));
  r.dimension("order", k);
  const auto defects = deformation_equation_defects({s, t, coeffs});
  for (std::size_t n = 0; n < defects.size(); ++n) {
    Verdict v;
    for (const auto& tup : ExtBasis(s.module_dim(), 2).tuples())
      if (!v.note("deformation equation", tup, defects[n].at(tup))) break;
    r.check("deformation equation of order " + std::to_string(n + 1), v);
  }
  const bool cocycle = infinitesimal_is_cocycle(s, t, coeffs.front());
  r.line(std::string("infinitesimal d_T(T_1) = 0: ") + (cocycle ? "yes" : "no"));
  const LinearDeformationReport lin = linear_deformation_check(s, t, coeffs.front());
  r.line(std::string("T + t T_1 for all t: ") + (lin.holds() ? "yes" : "no"));
  r.detail("infinitesimal_is_cocycle", cocycle);
  r.detail("linear_deformation", Json{{"order1", lin.order1.holds}, {"order2", lin.order2.holds},
                                      {"order3", lin.order3.holds}});
}

void cmd_nijenhuis_element(const io::Instance& in, const Options& o, Report& r) {
  const TrbSetup s = setup_of(in);
  setup_dims(r, s);
  const Matrix t = operator_of(in, s);
  if (!r.check("twisted Rota-Baxter identity", check_trb(s, t))) return;
  if (o.x.empty()) throw InputError("--x is required");
  const Vec x = parse_vector(o.x, s.algebra_dim());
  for (const auto& [name, v] : nijenhuis_element_check(s, t, x).conditions) r.check(name, v);
  r.detail("d_T(x)", io::to_json(d_t(s, t, Cochain::constant(s.module_dim(), x))));
}

void cmd_rigidity(const io::Instance& in, const Options& o, Report& r) {
  const TrbSetup s = setup_of(in);
  setup_dims(r, s);
  const Matrix t = operator_of(in, s);
  if (!r.check("twisted Rota-Baxter identity", check_trb(s, t))) return;
  if (o.grid < 0) throw InputError("--grid must be non-negative");
  const RigidityReport rep = rigidity_probe(s, t, o.grid);
  r.line(rep.summary());
  Json pre = Json::array();
  for (const Vec& x : rep.preimages) pre.push_back(io::to_json(x));
  r.detail("z1_dim", rep.z1_dim);
  r.detail("b1_dim", rep.b1_dim);
  r.detail("preimages", pre);
  r.detail("result", rep.sufficient ? "sufficient condition established" : "inconclusive");
  r.check("sufficient condition for rigidity", rep.sufficient, "inconclusive");
}

void report_components(Report& r, const GcsComponentReport& comp) {
  for (std::size_t k = 0; k < GcsComponentReport::count; ++k)
    r.check("equation " + std::to_string(k + 1) + ": " + GcsComponentReport::names[k], comp.equations[k]);
}

void cmd_check_tgcs(const io::Instance& in, Report& r) {
  const TrbSetup s = setup_of(in);
  setup_dims(r, s);
  const GcsComponents& j = need(in.gcs_components, "gcs_components");
  const GcsDirectReport direct = input_step([&] { return tgcs_check_direct(s, j); });
  r.check("J^2 = -id", direct.almost_complex);
  r.check("integrability", direct.integrable);
  report_components(r, tgcs_check_components(s, j));
}

void cmd_lie_tgcs(const io::Instance& in, Report& r) {
  const LieAlgebra g = valid_lie(in);
  r.dimension("dim g", g.dim());
  const LieGcsReport rep = lie_tgcs_check(g, psi_of(in, g.dim()), need(in.lie_gcs, "lie_gcs"));
  r.check("orthogonality", rep.orthogonal);
  report_components(r, rep.components);
}

void cmd_gauge(const io::Instance& in, const Options& o, Report& r) {
  const TrbSetup s = setup_of(in);
  setup_dims(r, s);
  const Matrix t = operator_of(in, s);
  if (o.b.empty()) throw InputError("--b is required");
  const Matrix b = parse_matrix_flag(o.b, "--b", s.module_dim(), s.algebra_dim());
  const GaugeResult g = gauge_transform(s, t, b);
  r.check("T_B is twisted Rota-Baxter", check_trb(s, g.op));
  r.check("id + BT is a Lie isomorphism [,]_T -> [,]_{T_B}",
          morphism_check(induced_bracket(s, t), induced_bracket(s, g.op), g.transport));
  r.detail("operator_T", io::to_json(g.op));
  r.detail("transport", io::to_json(g.transport));
}

void cmd_shift(const io::Instance& in, const Options& o, Report& r) {
  const TrbSetup s = setup_of(in);
  setup_dims(r, s);
  const Matrix t = operator_of(in, s);
  if (o.h.empty()) throw InputError("--h is required");
  const Matrix h = parse_matrix_flag(o.h, "--h", s.module_dim(), s.algebra_dim());
  const ShiftResult out = shift_by_coboundary(s, t, h);
  r.check("shifted operator is twisted Rota-Baxter for H + dh", check_trb(out.setup, out.op));
  r.detail("cocycle_H", io::to_json(out.setup.cocycle()));
  r.detail("operator_T", io::to_json(out.op));
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact checks for twisted Rota-Baxter operators on Lie algebras", "trb"};
  app.require_subcommand(1);
  app.add_flag("--json", o.json, "Machine-readable JSON report");
  app.add_option("--seed", o.seed, "Seed for randomized sweeps");

  auto sub = [&](const char* name, const char* help, bool with_input = true) {
    CLI::App* c = app.add_subcommand(name, help);
    c->fallthrough();
    if (with_input) c->add_option("input", o.input, "Instance JSON file")->required();
    return c;
  };
  sub("validate", "Validate every section of an instance");
  sub("ce-cohomology", "Chevalley-Eilenberg cohomology dimensions")->add_option("--nmax", o.nmax);
  sub("check-trb", "Twisted Rota-Baxter identity");
  sub("check-mc", "Maurer-Cartan equation of the governing L-infinity algebra")
      ->add_option("--sweep", o.sweep, "Also compare both verdicts on this many random operators");
  sub("cohomology-of-t", "Cohomology of the operator")->add_option("--nmax", o.nmax);
  sub("check-reynolds", "Reynolds identity for operator_T on lie_algebra");
  sub("reynolds-from-derivation", "Reynolds operator from a nilpotent derivation");
  sub("witt-report", "Reynolds operator on the positive Witt algebra", false)->add_option("--nmax", o.nmax);
  sub("check-r-matrix", "Twisted r-matrix check for operator_T (skew) and psi");
  sub("check-ns", "NS-Lie and associative NS identities");
  CLI::App* ns_from = app.add_subcommand("ns-from", "Build an NS-Lie algebra");
  ns_from->fallthrough();
  ns_from->add_option("source", o.source)->required()->check(CLI::IsMember({"nijenhuis", "assoc", "trb"}));
  ns_from->add_option("input", o.input, "Instance JSON file")->required();
  sub("trb-from-ns", "Identity operator of an NS-Lie algebra");
  sub("deform-check", "Deformation equations up to a given order")->add_option("--order", o.order);
  sub("nijenhuis-element", "Nijenhuis element conditions")->add_option("--x", o.x, "Comma-separated scalars");
  sub("rigidity-probe", "Probe the sufficient condition for rigidity")->add_option("--grid", o.grid);
  sub("check-tgcs", "Twisted generalized complex structure");
  sub("lie-tgcs", "Twisted generalized complex structure on g + g*");
  sub("gauge", "Gauge transformation by a 1-cocycle B")->add_option("--b", o.b, "JSON matrix dim M x dim g");
  CLI::App* shift = sub("shift", "Shift of H by a coboundary");
  shift->set_help_flag("--help", "Print this help message and exit");  // frees -h for --h
  shift->add_option("--h", o.h, "JSON matrix dim M x dim g");

  std::vector<std::string> storage{"trb"};
  storage.insert(storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : storage) argv.push_back(s.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kPass;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kInvalidInput;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  Report report(command, o.seed);
  int code = kPass;
  try {
    io::Instance in;
    if (command != "witt-report") in = input_step([&] { return io::load_instance(o.input); });
    const std::map<std::string, std::function<void(const io::Instance&, Report&)>> commands = {
        {"validate", [&](auto& i, auto& r) { cmd_validate(i, r); }},
        {"ce-cohomology", [&](auto& i, auto& r) { cmd_ce_cohomology(i, o, r); }},
        {"check-trb", [&](auto& i, auto& r) { cmd_check_trb(i, r); }},
        {"check-mc", [&](auto& i, auto& r) { cmd_check_mc(i, o, r); }},
        {"cohomology-of-t", [&](auto& i, auto& r) { cmd_cohomology_of_t(i, o, r); }},
        {"check-reynolds", [&](auto& i, auto& r) { cmd_check_reynolds(i, r); }},
        {"reynolds-from-derivation", [&](auto& i, auto& r) { cmd_reynolds_from_derivation(i, r); }},
        {"witt-report", [&](auto&, auto& r) { cmd_witt(o, r); }},
        {"check-r-matrix", [&](auto& i, auto& r) { cmd_check_r_matrix(i, r); }},
        {"check-ns", [&](auto& i, auto& r) { cmd_check_ns(i, r); }},
        {"ns-from", [&](auto& i, auto& r) { cmd_ns_from(i, o, r); }},
        {"trb-from-ns", [&](auto& i, auto& r) { cmd_trb_from_ns(i, r); }},
        {"deform-check", [&](auto& i, auto& r) { cmd_deform(i, o, r); }},
        {"nijenhuis-element", [&](auto& i, auto& r) { cmd_nijenhuis_element(i, o, r); }},
        {"rigidity-probe", [&](auto& i, auto& r) { cmd_rigidity(i, o, r); }},
        {"check-tgcs", [&](auto& i, auto& r) { cmd_check_tgcs(i, r); }},
        {"lie-tgcs", [&](auto& i, auto& r) { cmd_lie_tgcs(i, r); }},
        {"gauge", [&](auto& i, auto& r) { cmd_gauge(i, o, r); }},
        {"shift", [&](auto& i, auto& r) { cmd_shift(i, o, r); }},
    };
    commands.at(command)(in, report);
    code = report.pass() ? kPass : kMathFailure;
  } catch (const InputError& e) {
    report.error("InvalidInput", std::string("invalid input: ") + e.what());
    code = kInvalidInput;
  } catch (const MathError& e) {
    report.error(to_string(e.kind()), e.what());
    code = is_input_kind(e.kind()) ? kInvalidInput : kMathFailure;
  }
  report.print(out, o.json);
  return code;
}

}  // namespace trb::cli
