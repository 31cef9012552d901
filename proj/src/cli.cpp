#include "kornlab/cli.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include "kornlab/errors.hpp"
#include "kornlab/mesh.hpp"
#include "kornlab/rng.hpp"
#include "kornlab/solve.hpp"
#include "kornlab/suites.hpp"

namespace kornlab {

namespace {

DomainFamily family_from(const std::string& s) {
  if (s == "rect") return DomainFamily::Rectangle;
  if (s == "cosine-cap") return DomainFamily::CosineCap;
  if (s == "curved-parallel") return DomainFamily::CurvedParallel;
  throw UnknownDescriptor("unknown domain family: " + s);
}

AxialBC bc_from(const std::string& s) {
  if (s == "dirichlet-ends") return AxialBC::DirichletEnds;
  if (s == "periodic") return AxialBC::Periodic;
  throw UnknownDescriptor("unknown bc: " + s);
}

ConstCoeffOperator op_from(const std::string& s, std::uint64_t seed) {
  ConstCoeffOperator op;
  if (s == "laplace") {
    op.a = Eigen::MatrixXd::Identity(2, 2);
    return op;
  }
  if (s == "random") {
    Rng rng(sweep_seed(seed, 0x0Fu));
    const double d1 = rng.uniform(0.5, 2.0);
    const double d2 = rng.uniform(0.5, 2.0);
    const double c = rng.uniform(-0.4, 0.4) * std::min(d1, d2);
    op.a = Eigen::MatrixXd(2, 2);
    op.a << d1, c, c, d2;
    return op;
  }
  throw UnknownDescriptor("unknown operator spec: " + s);
}

SweepOptions sweep_options(const RunConfig& c) {
  SweepOptions o;
  o.nx = c.nx;
  o.ny = c.ny;
  o.l = c.l;
  o.h_sweep = c.h_sweep;
  o.seed = c.seed;
  o.eig_tol = c.eig_tol;
  return o;
}

SuiteOptions suite_options(const RunConfig& c) {
  SuiteOptions o;
  o.cases = c.cases;
  o.seed = c.seed;
  o.eps = c.eps;
  o.quad_n = c.quad_n;
  return o;
}

void validate(const RunConfig& c) {
  if (c.l <= 0.0) throw ConfigError("l must be positive");
  if (c.nx < 1 || c.ny < 1) throw ConfigError("mesh resolution must be at least 1x1");
  if (c.cases < 1) throw ConfigError("cases must be at least 1");
  if (c.eig_tol <= 0.0) throw ConfigError("eig_tol must be positive");
  if (c.h_sweep.empty()) throw ConfigError("h_sweep must not be empty");
  for (double h : c.h_sweep)
    if (!(h > 0.0)) throw ConfigError("h_sweep entries must be positive");
}

void tag_operator(SweepReport& s, const ConstCoeffOperator& op, const std::string& label) {
  s.params.push_back({"op_is_" + label, 1.0});
  s.params.push_back({"op_a11", op.a(0, 0)});
  s.params.push_back({"op_a12", op.a(0, 1)});
  s.params.push_back({"op_a22", op.a(1, 1)});
}

Report verify_dispatch(const RunConfig& c) {
  Report rep;
  rep.config = c;
  const SuiteOptions so = suite_options(c);
  SweepOptions wo = sweep_options(c);
  // The trace-driven ratio sweeps only reach their plateau once the axial
  // gradient of the data stops dominating the thin-direction one, which for
  // the generated trace family happens below h ~ 0.1. Unless the caller chose
  // a sweep, these two checks run on the thinner default range.
  if ((c.check == "thm11" || c.check == "thm13") && c.h_sweep == RunConfig{}.h_sweep)
    wo.h_sweep = {0.05, 0.025, 0.0125, 0.00625};

  if (c.check == "hardy") {
    rep.records = hardy_suite(so);
  } else if (c.check == "lemma21") {
    rep.records = lemma21_suite(so);
  } else if (c.check == "lemma22") {
    rep.records = lemma22_suite(so);
    // The compatibility condition is exercised both ways: identically-zero
    // boundary term above, periodic cancellation here.
    std::vector<InequalityReport> per = periodic_boundary_suite(so);
    rep.records.insert(rep.records.end(), per.begin(), per.end());
  } else if (c.check == "thm11") {
    const ConstCoeffOperator lap = op_from("laplace", c.seed);
    const ConstCoeffOperator rnd = op_from("random", c.seed);
    rep.sweeps.push_back(verify_korn_like(KornLikeScenario::Cylinder, lap, wo));
    tag_operator(rep.sweeps.back(), lap, "laplace");
    rep.sweeps.push_back(verify_korn_like(KornLikeScenario::CurvedCap, lap, wo));
    tag_operator(rep.sweeps.back(), lap, "laplace");
    rep.sweeps.push_back(verify_korn_like(KornLikeScenario::Cylinder, rnd, wo));
    tag_operator(rep.sweeps.back(), rnd, "random");
    rep.sweeps.push_back(verify_korn_like(KornLikeScenario::CurvedCap, rnd, wo));
    tag_operator(rep.sweeps.back(), rnd, "random");
    rep.sweeps.push_back(manufactured_convergence());
  } else if (c.check == "thm13") {
    ShearConsistency sc = verify_shear_consistency(op_from("laplace", c.seed), 0.5, wo);
    rep.sweeps.push_back(std::move(sc.sheared));
    rep.sweeps.push_back(std::move(sc.flattened));
    InequalityReport gap;
    gap.check = "thm_1_3_consistency";
    gap.lhs = sc.max_rel_gap;
    gap.rhs = 0.02;
    gap.seed = c.seed;
    gap.constants = {{"tolerance", 0.02}};
    gap.finish();
    rep.records.push_back(std::move(gap));
    std::vector<InequalityReport> claims = shear_claims_suite(so);
    rep.records.insert(rep.records.end(), claims.begin(), claims.end());
    rep.summary.push_back({"max_rel_gap", sc.max_rel_gap});
  } else if (c.check == "thm14") {
    rep.sweeps.push_back(verify_strong_second_korn(DomainFamily::Rectangle,
                                                   AxialBC::DirichletEnds, wo));
    rep.sweeps.push_back(verify_strong_second_korn(DomainFamily::CurvedParallel,
                                                   AxialBC::DirichletEnds, wo));
  } else if (c.check == "thm18") {
    rep.sweeps.push_back(
        verify_strong_second_korn(DomainFamily::Rectangle, AxialBC::Periodic, wo));
    rep.sweeps.push_back(
        verify_strong_second_korn(DomainFamily::CurvedParallel, AxialBC::Periodic, wo));
  } else {
    throw ConfigError("unknown verify check: " + c.check);
  }

  for (const SweepReport& s : rep.sweeps)
    rep.summary.push_back({s.check + "_exponent", s.fit.exponent});
  return rep;
}

std::string mesh_csv(const Mesh2D& mesh) {
  std::string out = "x,y\n";
  for (int i = 0; i < mesh.n_nodes(); ++i) {
    out += format_g17(mesh.nodes(i, 0));
    out += ',';
    out += format_g17(mesh.nodes(i, 1));
    out += '\n';
  }
  return out;
}

}  // namespace

Report run_command(const RunConfig& c) {
  validate(c);

  if (c.command == "verify") return verify_dispatch(c);

  Report rep;
  rep.config = c;

  if (c.command == "korn-first") {
    SweepReport s = verify_first_korn_scaling(family_from(c.domain), bc_from(c.bc),
                                              sweep_options(c), c.oracle);
    rep.summary.push_back({"exponent", s.fit.exponent});
    rep.summary.push_back({"K_at_coarsest", s.rows.front().ratio});
    rep.sweeps.push_back(std::move(s));
    return rep;
  }

  if (c.command == "strong-ratio") {
    SweepReport s = verify_strong_second_korn(family_from(c.domain), bc_from(c.bc),
                                              sweep_options(c));
    rep.summary.push_back({"exponent", s.fit.exponent});
    rep.sweeps.push_back(std::move(s));
    return rep;
  }

  if (c.command == "solve") {
    const ThinDomain2D d = make_family_domain(family_from(c.domain), c.h_sweep.front(), c.l);
    const Mesh2D mesh = build_mesh(d, c.nx, c.ny);
    OperatorVariant op;
    if (c.op == "flatten")
      op = flatten_operator(d.phi1, d.l);
    else
      op = op_from(c.op, c.seed);
    AnalyticScalar g = sweep_trace_data(c.seed, d);
    EllipticSolveResult res =
        solve_elliptic(mesh, op, [&g](double x, double y) { return g.value(x, y); });
    if (!(res.residual <= 1e-8))
      throw NoConvergence("solve residual " + format_g17(res.residual) + " exceeds 1e-8");
    InequalityReport r;
    r.check = "solve_residual";
    r.lhs = res.residual;
    r.rhs = 1e-8;
    r.seed = c.seed;
    r.params = {{"h", c.h_sweep.front()}, {"nx", static_cast<double>(c.nx)},
                {"ny", static_cast<double>(c.ny)}};
    r.finish();
    rep.records.push_back(std::move(r));
    rep.summary.push_back({"residual", res.residual});
    rep.summary.push_back({"n_nodes", static_cast<double>(mesh.n_nodes())});
    return rep;
  }

  if (c.command == "mesh-dump") {
    const ThinDomain2D d = make_family_domain(family_from(c.domain), c.h_sweep.front(), c.l);
    const Mesh2D mesh = build_mesh(d, c.nx, c.ny);
    rep.csv_override = mesh_csv(mesh);
    rep.summary.push_back({"n_nodes", static_cast<double>(mesh.n_nodes())});
    rep.summary.push_back({"n_elements", static_cast<double>(mesh.n_elements())});
    rep.summary.push_back({"max_aspect_ratio", mesh.max_aspect_ratio});
    return rep;
  }

  throw ConfigError("unknown command: " + c.command);
}

int run(const RunConfig& c, std::ostream& log) {
  try {
    Report rep = run_command(c);
    const std::string stamp = iso_timestamp();
    if (!c.out_json.empty()) write_text_file(c.out_json, rep.to_json(stamp).dump());
    if (!c.out_csv.empty())
      write_text_file(c.out_csv, rep.csv_override.empty() ? report_csv(rep) : rep.csv_override);

    const bool ok = rep.all_hold();
    log << c.command << (c.check.empty() ? "" : " " + c.check) << ": " << rep.records.size()
        << " records, " << rep.sweeps.size() << " sweeps, "
        << (ok ? "all verdicts hold" : "VERDICT FAILURES") << "\n";
    if (!ok) {
      for (const InequalityReport& r : rep.records)
        if (r.converged && !r.holds)
          log << "  counterexample " << r.check << " seed=" << r.seed
              << " lhs=" << format_g17(r.lhs) << " rhs=" << format_g17(r.rhs) << "\n";
      for (const SweepReport& s : rep.sweeps)
        if (!s.holds) {
          log << "  sweep " << s.check << " exponent=" << format_g17(s.fit.exponent)
              << " window=[" << format_g17(s.window_lo) << ", " << format_g17(s.window_hi) << "]";
          // The exponent window is one of several conditions; the notes carry
          // the rest (pointwise cap margin, oracle gap), so print them all.
          for (const NamedValue& n : s.notes) log << " " << n.name << "=" << format_g17(n.value);
          log << "\n";
        }
    }
    return ok ? 0 : 1;
  } catch (const NoConvergence& e) {
    log << "error: " << e.what() << "\n";
    return 3;
  } catch (const SingularSystem& e) {
    log << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    log << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace kornlab
