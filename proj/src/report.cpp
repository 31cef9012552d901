#include "kornlab/report.hpp"

#include <Eigen/Core>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <set>

#include "json.hpp"
#include "kornlab/errors.hpp"

namespace kornlab {

std::string format_g17(double v) {
  if (!std::isfinite(v)) return "null";
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

Json& Json::set(const std::string& key, Json v) {
  fields.emplace_back(key, std::move(v));
  return *this;
}

namespace {

void escape_to(const std::string& s, std::string& out) {
  out += '"';
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof(buf), "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  out += '"';
}

void dump_to(const Json& j, int indent, std::string& out) {
  const std::string pad(static_cast<size_t>(indent) * 2, ' ');
  const std::string pad_in(static_cast<size_t>(indent + 1) * 2, ' ');
  switch (j.kind) {
    case Json::Kind::Null: out += "null"; return;
    case Json::Kind::Bool: out += j.b ? "true" : "false"; return;
    case Json::Kind::Int: out += std::to_string(j.i); return;
    case Json::Kind::UInt: out += std::to_string(j.u); return;
    case Json::Kind::Double: out += format_g17(j.d); return;
    case Json::Kind::String: escape_to(j.s, out); return;
    case Json::Kind::Array: {
      if (j.items.empty()) {
        out += "[]";
        return;
      }
      out += "[\n";
      for (size_t k = 0; k < j.items.size(); ++k) {
        out += pad_in;
        dump_to(j.items[k], indent + 1, out);
        if (k + 1 < j.items.size()) out += ',';
        out += '\n';
      }
      out += pad;
      out += ']';
      return;
    }
    case Json::Kind::Object: {
      if (j.fields.empty()) {
        out += "{}";
        return;
      }
      out += "{\n";
      for (size_t k = 0; k < j.fields.size(); ++k) {
        out += pad_in;
        escape_to(j.fields[k].first, out);
        out += ": ";
        dump_to(j.fields[k].second, indent + 1, out);
        if (k + 1 < j.fields.size()) out += ',';
        out += '\n';
      }
      out += pad;
      out += '}';
      return;
    }
  }
}

Json named_values_json(const std::vector<NamedValue>& vals) {
  Json obj = Json::object();
  for (const NamedValue& v : vals) obj.set(v.name, Json::num(v.value));
  return obj;
}

}  // namespace

std::string Json::dump() const {
  std::string out;
  dump_to(*this, 0, out);
  out += '\n';
  return out;
}

Json config_json(const RunConfig& c) {
  Json j = Json::object();
  j.set("command", Json::str(c.command));
  j.set("check", Json::str(c.check));
  j.set("domain", Json::str(c.domain));
  j.set("op", Json::str(c.op));
  j.set("bc", Json::str(c.bc));
  j.set("l", Json::num(c.l));
  j.set("nx", Json::integer(c.nx));
  j.set("ny", Json::integer(c.ny));
  Json hs = Json::array();
  for (double h : c.h_sweep) hs.push(Json::num(h));
  j.set("h_sweep", std::move(hs));
  j.set("seed", Json::uinteger(c.seed));
  j.set("cases", Json::integer(c.cases));
  j.set("eps", Json::num(c.eps));
  j.set("quad_n", Json::integer(c.quad_n));
  j.set("eig_tol", Json::num(c.eig_tol));
  j.set("oracle", Json::boolean(c.oracle));
  j.set("out_json", Json::str(c.out_json));
  j.set("out_csv", Json::str(c.out_csv));
  return j;
}

std::string config_to_text(const RunConfig& c) { return config_json(c).dump(); }

RunConfig config_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const std::exception& e) {
    throw ConfigError(std::string("config parse failed: ") + e.what());
  }
  if (!j.is_object()) throw ConfigError("config must be a JSON object");

  static const std::set<std::string> known = {
      "command", "check", "domain", "op",     "bc",      "l",        "nx",      "ny",
      "h_sweep", "seed",  "cases",  "eps",    "quad_n",  "eig_tol",  "oracle",  "out_json",
      "out_csv"};
  for (const auto& item : j.items())
    if (known.find(item.key()) == known.end())
      throw ConfigError("unknown config key: " + item.key());

  RunConfig c;
  try {
    if (j.contains("command")) c.command = j.at("command").get<std::string>();
    if (j.contains("check")) c.check = j.at("check").get<std::string>();
    if (j.contains("domain")) c.domain = j.at("domain").get<std::string>();
    if (j.contains("op")) c.op = j.at("op").get<std::string>();
    if (j.contains("bc")) c.bc = j.at("bc").get<std::string>();
    if (j.contains("l")) c.l = j.at("l").get<double>();
    if (j.contains("nx")) c.nx = j.at("nx").get<int>();
    if (j.contains("ny")) c.ny = j.at("ny").get<int>();
    if (j.contains("h_sweep")) c.h_sweep = j.at("h_sweep").get<std::vector<double>>();
    if (j.contains("seed")) c.seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("cases")) c.cases = j.at("cases").get<int>();
    if (j.contains("eps")) c.eps = j.at("eps").get<double>();
    if (j.contains("quad_n")) c.quad_n = j.at("quad_n").get<int>();
    if (j.contains("eig_tol")) c.eig_tol = j.at("eig_tol").get<double>();
    if (j.contains("oracle")) c.oracle = j.at("oracle").get<bool>();
    if (j.contains("out_json")) c.out_json = j.at("out_json").get<std::string>();
    if (j.contains("out_csv")) c.out_csv = j.at("out_csv").get<std::string>();
  } catch (const ConfigError&) {
    throw;
  } catch (const std::exception& e) {
    throw ConfigError(std::string("config field has wrong type: ") + e.what());
  }
  return c;
}

Json record_json(const InequalityReport& r) {
  Json j = Json::object();
  j.set("check", Json::str(r.check));
  j.set("params", named_values_json(r.params));
  j.set("lhs", Json::num(r.lhs));
  j.set("rhs", Json::num(r.rhs));
  j.set("margin", Json::num(r.margin));
  j.set("constants", named_values_json(r.constants));
  j.set("verdict", Json::str(r.holds ? "holds" : "fails"));
  j.set("converged", Json::boolean(r.converged));
  j.set("quad_drift", Json::num(r.quad_drift));
  j.set("quad_n", Json::integer(r.quad_n));
  j.set("seed", Json::uinteger(r.seed));
  return j;
}

Json sweep_json(const SweepReport& s) {
  Json j = Json::object();
  j.set("check", Json::str(s.check));
  j.set("params", named_values_json(s.params));
  Json rows = Json::array();
  for (const SweepRow& row : s.rows) {
    Json r = Json::object();
    r.set("h", Json::num(row.h));
    r.set("lhs", Json::num(row.lhs));
    r.set("rhs", Json::num(row.rhs));
    r.set("ratio", Json::num(row.ratio));
    rows.push(std::move(r));
  }
  j.set("rows", std::move(rows));
  Json fit = Json::object();
  fit.set("exponent", Json::num(s.fit.exponent));
  fit.set("log_constant", Json::num(s.fit.log_constant));
  fit.set("r2", Json::num(s.fit.r2));
  j.set("fit", std::move(fit));
  Json window = Json::array();
  window.push(Json::num(s.window_lo));
  window.push(Json::num(s.window_hi));
  j.set("window", std::move(window));
  j.set("verdict", Json::str(s.holds ? "holds" : "fails"));
  j.set("notes", named_values_json(s.notes));
  j.set("seed", Json::uinteger(s.seed));
  return j;
}

bool Report::all_hold() const {
  for (const InequalityReport& r : records)
    if (r.converged && !r.holds) return false;
  for (const SweepReport& s : sweeps)
    if (!s.holds) return false;
  return true;
}

Json Report::to_json(const std::string& timestamp) const {
  Json j = Json::object();
  j.set("schema_version", Json::integer(1));
  j.set("generated_at", Json::str(timestamp));
  j.set("config", config_json(config));

  Json env = Json::object();
  env.set("compiler", Json::str(__VERSION__));
  env.set("eigen", Json::str(std::to_string(EIGEN_WORLD_VERSION) + "." +
                             std::to_string(EIGEN_MAJOR_VERSION) + "." +
                             std::to_string(EIGEN_MINOR_VERSION)));
  j.set("environment", std::move(env));

  Json recs = Json::array();
  for (const InequalityReport& r : records) recs.push(record_json(r));
  j.set("records", std::move(recs));

  Json sws = Json::array();
  for (const SweepReport& s : sweeps) sws.push(sweep_json(s));
  j.set("sweeps", std::move(sws));

  int unconverged = 0;
  for (const InequalityReport& r : records)
    if (!r.converged) ++unconverged;
  Json sum = named_values_json(summary);
  sum.set("n_records", Json::integer(static_cast<long long>(records.size())));
  sum.set("n_sweeps", Json::integer(static_cast<long long>(sweeps.size())));
  sum.set("n_unconverged", Json::integer(unconverged));
  j.set("summary", std::move(sum));

  j.set("all_hold", Json::boolean(all_hold()));
  return j;
}

std::string report_csv(const Report& rep) {
  std::string out = "h,lhs,rhs,ratio\n";
  for (const SweepReport& s : rep.sweeps)
    for (const SweepRow& row : s.rows) {
      out += format_g17(row.h);
      out += ',';
      out += format_g17(row.lhs);
      out += ',';
      out += format_g17(row.rhs);
      out += ',';
      out += format_g17(row.ratio);
      out += '\n';
    }
  return out;
}

std::string iso_timestamp() {
  std::time_t now = std::time(nullptr);
  std::tm tm_utc;
  gmtime_r(&now, &tm_utc);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm_utc);
  return buf;
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out.is_open()) throw ConfigError("cannot open for writing: " + path);
  out << content;
  out.flush();
  if (!out.good()) throw ConfigError("write failed: " + path);
}

}  // namespace kornlab
