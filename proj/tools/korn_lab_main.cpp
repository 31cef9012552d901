#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "kornlab/cli.hpp"
#include "kornlab/errors.hpp"

namespace {

// One slot per flag; each subcommand registers the same names bound to the
// same slots, and only the chosen subcommand ever writes them.
struct Flags {
  std::string check;
  std::string config_path;
  std::string domain = "rect";
  std::string op = "laplace";
  std::string bc = "dirichlet-ends";
  double l = 1.0;
  int nx = 8;
  int ny = 64;
  std::vector<double> h_sweep;
  std::uint64_t seed = 1234;
  int cases = 100;
  double eps = -1.0;
  int quad_n = 0;
  double eig_tol = 1e-9;
  bool oracle = false;
  std::string out_json;
  std::string out_csv;
};

void add_common(CLI::App* cmd, Flags& f) {
  cmd->add_option("--config", f.config_path, "JSON config file; explicit flags override it");
  cmd->add_option("--domain", f.domain, "Domain family: rect | cosine-cap | curved-parallel");
  cmd->add_option("--op", f.op, "Operator: laplace | random | flatten");
  cmd->add_option("--bc", f.bc, "Axial condition: dirichlet-ends | periodic");
  cmd->add_option("--l", f.l, "Axial length");
  cmd->add_option("--nx", f.nx, "Elements across the thickness");
  cmd->add_option("--ny", f.ny, "Elements along the axis");
  cmd->add_option("--h-sweep", f.h_sweep, "Comma-separated thickness sweep")->delimiter(',');
  cmd->add_option("--seed", f.seed, "Base RNG seed");
  cmd->add_option("--cases", f.cases, "Randomized suite size");
  cmd->add_option("--eps", f.eps, "Interval split for the Hardy suite, in (0, 1]");
  cmd->add_option("--quad-n", f.quad_n, "Quadrature points (0 = per-check default)");
  cmd->add_option("--eig-tol", f.eig_tol, "Eigensolver tolerance");
  cmd->add_flag("--oracle", f.oracle, "Cross-check against the dense eigensolver");
  cmd->add_option("--out", f.out_json, "Report JSON path");
  cmd->add_option("--csv", f.out_csv, "Sweep-curve CSV path");
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in.is_open()) throw kornlab::ConfigError("cannot open config file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Numerical verification toolkit for gradient inequalities on thin domains",
               "korn-lab"};
  app.require_subcommand(1);
  Flags f;

  CLI::App* verify = app.add_subcommand("verify", "Run a checker suite or theorem sweep");
  verify->add_option("check", f.check, "One of: hardy lemma21 lemma22 thm11 thm13 thm14 thm18")
      ->required()
      ->check(CLI::IsMember(
          {"hardy", "lemma21", "lemma22", "thm11", "thm13", "thm14", "thm18"}));
  add_common(verify, f);

  CLI::App* korn_first = app.add_subcommand("korn-first", "Gradient-vs-strain constant sweep");
  add_common(korn_first, f);
  CLI::App* strong_ratio = app.add_subcommand("strong-ratio", "Mixed-ratio supremum sweep");
  add_common(strong_ratio, f);
  CLI::App* solve = app.add_subcommand("solve", "Single elliptic boundary-value solve");
  add_common(solve, f);
  CLI::App* mesh_dump = app.add_subcommand("mesh-dump", "Write mesh node coordinates as CSV");
  add_common(mesh_dump, f);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  CLI::App* sub = app.get_subcommands().front();

  kornlab::RunConfig c;
  try {
    if (sub->count("--config")) c = kornlab::config_from_json(slurp(f.config_path));

    c.command = sub->get_name();
    if (sub == verify) c.check = f.check;
    if (sub->count("--domain")) c.domain = f.domain;
    if (sub->count("--op")) c.op = f.op;
    if (sub->count("--bc")) c.bc = f.bc;
    if (sub->count("--l")) c.l = f.l;
    if (sub->count("--nx")) c.nx = f.nx;
    if (sub->count("--ny")) c.ny = f.ny;
    if (sub->count("--h-sweep")) c.h_sweep = f.h_sweep;
    if (sub->count("--seed")) c.seed = f.seed;
    if (sub->count("--cases")) c.cases = f.cases;
    if (sub->count("--eps")) c.eps = f.eps;
    if (sub->count("--quad-n")) c.quad_n = f.quad_n;
    if (sub->count("--eig-tol")) c.eig_tol = f.eig_tol;
    if (sub->count("--oracle")) c.oracle = f.oracle;
    if (sub->count("--out")) c.out_json = f.out_json;
    if (sub->count("--csv")) c.out_csv = f.out_csv;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  return kornlab::run(c, std::cout);
}
