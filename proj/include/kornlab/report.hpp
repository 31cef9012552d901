#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "kornlab/checks.hpp"
#include "kornlab/sweeps.hpp"

namespace kornlab {

// %.17g rendering, the shortest form that reparses bit-exactly and is stable
// across runs. Non-finite values render as JSON null.
std::string format_g17(double v);

// Insertion-ordered JSON tree with a canonical pretty printer: two-space
// indent, one key per line, doubles via format_g17. Built this way so that a
// rerun differs from the original in exactly one line (the timestamp) and the
// reports can be compared byte-wise.
struct Json {
  enum class Kind { Null, Bool, Int, UInt, Double, String, Array, Object };

  Kind kind = Kind::Null;
  bool b = false;
  long long i = 0;
  std::uint64_t u = 0;
  double d = 0.0;
  std::string s;
  std::vector<Json> items;
  std::vector<std::pair<std::string, Json>> fields;

  static Json object() { Json j; j.kind = Kind::Object; return j; }
  static Json array() { Json j; j.kind = Kind::Array; return j; }
  static Json str(std::string v) { Json j; j.kind = Kind::String; j.s = std::move(v); return j; }
  static Json num(double v) { Json j; j.kind = Kind::Double; j.d = v; return j; }
  static Json integer(long long v) { Json j; j.kind = Kind::Int; j.i = v; return j; }
  static Json uinteger(std::uint64_t v) { Json j; j.kind = Kind::UInt; j.u = v; return j; }
  static Json boolean(bool v) { Json j; j.kind = Kind::Bool; j.b = v; return j; }

  Json& set(const std::string& key, Json v);
  void push(Json v) { items.push_back(std::move(v)); }

  std::string dump() const;
};

// Full invocation state of the CLI; every field has a flag and a JSON key of
// the same name. Serialization round-trips byte-identically through
// config_from_json(config_to_text(c)).
struct RunConfig {
  std::string command = "verify";  // verify | korn-first | strong-ratio | solve | mesh-dump
  std::string check;               // verify subcommand: hardy|lemma21|lemma22|thm11|thm13|thm14|thm18
  std::string domain = "rect";     // rect | cosine-cap | curved-parallel
  std::string op = "laplace";      // laplace | random | flatten
  std::string bc = "dirichlet-ends";  // dirichlet-ends | periodic
  double l = 1.0;
  int nx = 8;
  int ny = 64;
  std::vector<double> h_sweep = {0.2, 0.1, 0.05, 0.025};
  std::uint64_t seed = 1234;
  int cases = 100;
  double eps = -1.0;  // hardy split; negative = draw per case
  int quad_n = 0;     // 0 = per-check default
  double eig_tol = 1e-9;
  bool oracle = false;  // cross-check eigensolves against the dense solver
  std::string out_json;
  std::string out_csv;
};

Json config_json(const RunConfig& c);
std::string config_to_text(const RunConfig& c);
// Throws ConfigError on malformed JSON, unknown keys, or wrong value types.
RunConfig config_from_json(const std::string& text);

// Everything a command produced. Records and sweeps carry their own verdicts;
// summary holds the headline scalars (fitted exponents, constants, gaps).
struct Report {
  RunConfig config;
  std::vector<InequalityReport> records;
  std::vector<SweepReport> sweeps;
  std::vector<NamedValue> summary;
  // When set (mesh-dump), written to out_csv instead of the sweep curves.
  std::string csv_override;

  // Unconverged records are excluded from the verdict (they are flagged in
  // the report instead).
  bool all_hold() const;
  Json to_json(const std::string& timestamp) const;
};

Json record_json(const InequalityReport& r);
Json sweep_json(const SweepReport& s);

// "h,lhs,rhs,ratio" header plus one %.17g row per sweep point, all sweeps
// concatenated in report order.
std::string report_csv(const Report& rep);

// UTC wall clock, ISO 8601. The single volatile field of a report.
std::string iso_timestamp();

// Throws ConfigError with the path in the message when the file cannot be
// opened or fully written.
void write_text_file(const std::string& path, const std::string& content);

}  // namespace kornlab
