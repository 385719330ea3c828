#include "hyperlog/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

#include "hyperlog/analysis.hpp"
#include "hyperlog/errors.hpp"
#include "hyperlog/logtype.hpp"

namespace hyperlog {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double parse_double(const std::string& key, const std::string& v) {
  try {
    std::size_t used = 0;
    const double x = std::stod(v, &used);
    if (used == v.size() && std::isfinite(x)) return x;
  } catch (const std::exception&) {
  }
  throw UsageError("bad value for " + key + ": '" + v + "'");
}

// Flag values captured by CLI11; counts decide which ones override.
struct Flags {
  double c = 0, d = 0, a = 0, b = 0, p = 0, tol = 0;
  double x_lo = 0, x_hi = 0, s_lo = 0, s_hi = 0;
  int grid_n = 0;
  std::string config;
  bool timing = false;
  std::map<std::string, CLI::Option*> opts;

  void attach(CLI::App* app, bool with_grids) {
    opts["c"] = app->add_option("--c", c, "pair parameter c (or scalar c)");
    opts["d"] = app->add_option("--d", d, "pair parameter d");
    opts["a"] = app->add_option("--a", a, "exponent a");
    opts["b"] = app->add_option("--b", b, "exponent b");
    if (!with_grids) return;
    opts["p"] = app->add_option("--p", p, "power parameter");
    opts["grid_n"] = app->add_option("--grid-n", grid_n, "points on the primary grid");
    opts["tol"] = app->add_option("--tol", tol, "absolute margin slack");
    opts["x_lo"] = app->add_option("--x-lo", x_lo, "unit-interval grid start");
    opts["x_hi"] = app->add_option("--x-hi", x_hi, "unit-interval grid end");
    opts["s_lo"] = app->add_option("--s-lo", s_lo, "positive grid start");
    opts["s_hi"] = app->add_option("--s-hi", s_hi, "positive grid end");
    app->add_option("--config", config, "key = value file with the same keys");
    app->add_flag("--timing", timing, "fill runtime_ms in reports");
  }

  bool given(const char* k) const {
    const auto it = opts.find(k);
    return it != opts.end() && it->second->count() > 0;
  }

  CheckOptions options() const {
    CheckOptions o;
    if (!config.empty()) {
      std::ifstream in(config);
      if (!in) throw UsageError("cannot read config file " + config);
      read_config(in, o);
    }
    if (given("c")) o.c = c;
    if (given("d")) o.d = d;
    if (given("a")) o.a = a;
    if (given("b")) o.b = b;
    if (given("p")) o.p = p;
    if (given("grid_n")) o.grid_n = grid_n;
    if (given("tol")) o.tol = tol;
    if (given("x_lo")) o.x_lo = x_lo;
    if (given("x_hi")) o.x_hi = x_hi;
    if (given("s_lo")) o.s_lo = s_lo;
    if (given("s_hi")) o.s_hi = s_hi;
    if (o.grid_n && *o.grid_n < 5) throw UsageError("--grid-n must be at least 5");
    if (o.tol && !(*o.tol >= 0.0)) throw UsageError("--tol must be >= 0");
    return o;
  }
};

Json summary_of(const std::vector<VerificationReport>& reports, int code) {
  std::size_t pass = 0, fail = 0, expl = 0;
  for (const auto& r : reports) {
    if (r.status == Status::Pass) ++pass;
    if (r.status == Status::Fail) ++fail;
    if (r.status == Status::Exploratory) ++expl;
  }
  Json s = Json::object();
  s["total"] = reports.size();
  s["pass"] = pass;
  s["fail"] = fail;
  s["exploratory"] = expl;
  s["exit_code"] = code;
  return s;
}

int exit_for(const std::vector<VerificationReport>& reports) {
  for (const auto& r : reports) {
    if (r.status == Status::Fail) return kExitFail;
  }
  return kExitOk;
}

template <class F>
VerificationReport timed(bool timing, F&& f) {
  const auto t0 = std::chrono::steady_clock::now();
  VerificationReport r = f();
  if (timing) {
    r.runtime_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - t0)
                       .count();
  }
  return r;
}

int cmd_check(const std::string& id, const Flags& f, std::ostream& out) {
  const CheckOptions o = f.options();
  std::vector<VerificationReport> reports;
  if (id == "all") {
    for (const auto& info : check_catalog()) {
      reports.push_back(timed(f.timing, [&] { return run_check(info.id, o); }));
    }
  } else {
    if (!canonical_check_id(id)) throw UsageError("unknown check id: " + id);
    reports.push_back(timed(f.timing, [&] { return run_check(id, o); }));
  }
  const int code = exit_for(reports);
  Json doc = Json::object();
  doc["command"] = "check";
  Json arr = Json::array();
  for (const auto& r : reports) arr.push_back(to_json(r));
  doc["reports"] = std::move(arr);
  doc["summary"] = summary_of(reports, code);
  out << doc.dump(2) << '\n';
  return code;
}

int cmd_root(const std::string& name, const Flags& f, std::ostream& out,
             std::ostream& err) {
  Json root = Json::object();
  root["name"] = name;
  Json params = Json::object();
  const double c = f.given("c") ? f.c : 1.0;
  const double d = f.given("d") ? f.d : 1.0;
  const double a = f.given("a") ? f.a : 1.0;
  const double b = f.given("b") ? f.b : 1.0;
  if (name != "gamma" && name != "x0" && name != "beta") {
    throw UsageError("unknown root: " + name + " (gamma, x0, beta)");
  }
  if (name != "x0" && !(c > 0.0 && d > 0.0)) {
    throw UsageError("--c and --d must be positive");
  }
  Json doc = Json::object();
  doc["command"] = "root";
  try {
    double value = 0.0, residual = 0.0;
    if (name == "x0") {
      value = x0_root();
      residual = s_fn(value) - 1.0;
    } else {
      const ZeroBalancedPair zb(c, d);
      params["c"] = c;
      params["d"] = d;
      if (name == "gamma") {
        value = gamma_root(zb);
        residual = g_logistic(zb, std::log(value)) - 1.0;
      } else {
        const PhiExponents e(a, b);
        params["a"] = a;
        params["b"] = b;
        value = beta_root(zb, e);
        const double lo = std::log(value) - std::log1p(-value);
        residual = g_logistic(zb, lo <= 0.0 ? lo / a : lo / b) - 1.0;
      }
    }
    root["value"] = value;
    root["params"] = params;
    root["residual"] = residual;
    doc["root"] = root;
    out << doc.dump(2) << '\n';
    return kExitOk;
  } catch (const BracketError& e) {
    root["params"] = params;
    root["error"] = e.what();
    if (name != "x0") root["g_half"] = g_fn(ZeroBalancedPair(c, d), 0.5);
    doc["root"] = root;
    out << doc.dump(2) << '\n';
    err << "hyperlog: " << e.what() << '\n';
    return kExitBracket;
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
}

int cmd_sweep(const std::string& name, const std::string& path, const Flags& f,
              std::ostream& out, std::ostream& err) {
  const CheckOptions o = f.options();
  const auto& cat = sweep_catalog();
  if (std::none_of(cat.begin(), cat.end(), [&](const CheckInfo& i) { return i.id == name; })) {
    throw UsageError("unknown sweep: " + name);
  }
  std::ofstream csv(path, std::ios::trunc);
  if (!csv) {
    err << "hyperlog: cannot write " << path << '\n';
    return kExitUnwritable;
  }
  SweepResult res;
  res.report = timed(f.timing, [&] {
    res = run_sweep(name, o);
    return res.report;
  });
  write_csv(res, csv);
  csv.flush();
  if (!csv) {
    err << "hyperlog: failed writing " << path << '\n';
    return kExitUnwritable;
  }
  const std::vector<VerificationReport> reports = {res.report};
  const int code = exit_for(reports);
  Json doc = Json::object();
  doc["command"] = "sweep";
  doc["csv"] = path;
  doc["rows"] = res.rows.size();
  doc["reports"] = Json::array({to_json(res.report)});
  doc["summary"] = summary_of(reports, code);
  out << doc.dump(2) << '\n';
  return code;
}

int cmd_list(std::ostream& out) {
  Json doc = Json::object();
  doc["command"] = "list";
  Json checks = Json::array();
  for (const auto& c : check_catalog()) {
    checks.push_back({{"id", c.id}, {"title", c.title}, {"exploratory", c.exploratory}});
  }
  Json sweeps = Json::array();
  for (const auto& c : sweep_catalog()) {
    sweeps.push_back({{"id", c.id}, {"title", c.title}});
  }
  doc["checks"] = checks;
  doc["aliases"] = {{"ssthm4", "2ndmain"}};
  doc["sweeps"] = sweeps;
  out << doc.dump(2) << '\n';
  return kExitOk;
}

}  // namespace

void read_config(std::istream& in, CheckOptions& o) {
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto h = line.find('#'); h != std::string::npos) line.resize(h);
    line = trim(line);
    if (line.empty() || line.front() == '[') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw UsageError("config line " + std::to_string(lineno) + ": expected key = value");
    }
    std::string key = trim(line.substr(0, eq));
    const std::string val = trim(line.substr(eq + 1));
    std::replace(key.begin(), key.end(), '-', '_');
    if (key == "grid_n") {
      const double v = parse_double(key, val);
      if (v != std::floor(v) || v < 5 || v > 1e8) throw UsageError("bad grid_n: " + val);
      o.grid_n = static_cast<int>(v);
      continue;
    }
    std::optional<double>* slot = nullptr;
    if (key == "c") slot = &o.c;
    if (key == "d") slot = &o.d;
    if (key == "a") slot = &o.a;
    if (key == "b") slot = &o.b;
    if (key == "p") slot = &o.p;
    if (key == "tol") slot = &o.tol;
    if (key == "x_lo") slot = &o.x_lo;
    if (key == "x_hi") slot = &o.x_hi;
    if (key == "s_lo") slot = &o.s_lo;
    if (key == "s_hi") slot = &o.s_hi;
    if (!slot) throw UsageError("config: unknown key '" + key + "'");
    *slot = parse_double(key, val);
  }
}

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Numerical checks of log-type inequalities for zero-balanced 2F1"};
  app.name("hyperlog");
  app.require_subcommand(1);

  Flags fc, fr, fs;
  std::string check_id, root_name, sweep_name, out_path;
  auto* check = app.add_subcommand("check", "run a check by id, or all");
  check->add_option("id", check_id, "check id or 'all'")->required();
  fc.attach(check, true);
  auto* root = app.add_subcommand("root", "solve for gamma, x0 or beta");
  root->add_option("name", root_name, "gamma | x0 | beta")->required();
  fr.attach(root, false);
  auto* sweep = app.add_subcommand("sweep", "tabulate a sweep to CSV");
  sweep->add_option("name", sweep_name, "myq3 | my44 | my46 | omega")->required();
  sweep->add_option("--out", out_path, "CSV output path")->required();
  fs.attach(sweep, true);
  app.add_subcommand("list", "list check ids and sweeps");

  std::vector<std::string> store = {"hyperlog"};
  store.insert(store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : store) argv.push_back(s.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (check->parsed()) return cmd_check(check_id, fc, out);
    if (root->parsed()) return cmd_root(root_name, fr, out, err);
    if (sweep->parsed()) return cmd_sweep(sweep_name, out_path, fs, out, err);
    return cmd_list(out);
  } catch (const UsageError& e) {
    err << "hyperlog: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace hyperlog
