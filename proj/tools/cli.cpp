#include "cli.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <memory>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "report.hpp"
#include "zetagap/zetagap.h"

namespace zetagap::cli {

using nlohmann::json;

const std::vector<CommandInfo>& commands() {
  static const std::vector<CommandInfo> kCommands = {
      {"eval-h", {"h_plus", "h_minus", "integrate", "certified_h_plus_upper", "exp_integral_e1"}},
      {"table", {"build_table", "find_large_gap_c", "find_small_gap_c", "h_plus", "h_minus"}},
      {"optimize-theta",
       {"chord_slopes", "theta_objective", "optimize_theta", "golden_max", "exp_integral_e1"}},
      {"optimize-vartheta",
       {"chord_slopes", "vartheta_objective", "optimize_vartheta", "golden_max",
        "exp_integral_e1"}},
      {"asymptotic",
       {"asymptotic_objective", "asymptotic_integral_closed", "asymptotic_integral",
        "integrate_semi_infinite", "tail_E", "optimize_B", "golden_max", "h_plus_large_r",
        "h_minus_large_r", "finite_r_correction", "negligible_correction_r"}},
      {"discrete",
       {"sieve_tables", "h_discrete", "d_ell", "liouville", "von_mangoldt", "g_kernel"}},
      {"zeros-stats", {"load_zeros", "normalized_gap", "gap_report"}},
      {"counting", {"load_zeros", "counting_check"}},
  };
  return kCommands;
}

namespace {

struct Failure : std::runtime_error {
  Failure(zg_status s, const std::string& what, std::size_t l = 0)
      : std::runtime_error(what), status(s), line(l) {}
  zg_status status;
  std::size_t line;
};

void check(zg_status status) {
  if (status != ZG_OK) throw Failure(status, zg_last_error(), zg_last_error_line());
}

[[noreturn]] void domain(const std::string& what) { throw Failure(ZG_ERR_DOMAIN, what); }

struct SieveDeleter {
  void operator()(zg_sieve* s) const { zg_sieve_destroy(s); }
};
struct TableDeleter {
  void operator()(zg_zero_table* t) const { zg_zeros_destroy(t); }
};
using SievePtr = std::unique_ptr<zg_sieve, SieveDeleter>;
using TablePtr = std::unique_ptr<zg_zero_table, TableDeleter>;

TablePtr load_table(const std::string& path) {
  zg_zero_table* raw = nullptr;
  check(zg_zeros_load_file(path.c_str(), &raw));
  return TablePtr(raw);
}

std::size_t sieve_budget() {
  const char* env = std::getenv(kSieveBudgetEnv);
  if (env == nullptr || *env == '\0') return 0;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(env, &end, 10);
  if (end == env || *end != '\0' || v == 0) {
    domain(std::string(kSieveBudgetEnv) + " must be a positive byte count");
  }
  return static_cast<std::size_t>(v);
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(text);
  while (std::getline(in, cur, sep)) {
    if (!cur.empty()) out.push_back(cur);
  }
  return out;
}

double parse_double(const std::string& s) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    domain("not a number: '" + s + "'");
  }
  if (used != s.size()) domain("not a number: '" + s + "'");
  return v;
}

int parse_int(const std::string& s) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(s, &used);
  } catch (const std::exception&) {
    domain("not an integer: '" + s + "'");
  }
  if (used != s.size()) domain("not an integer: '" + s + "'");
  return v;
}

zg_bound_mode resolve_mode(const std::string& mode, int k, int printed_k) {
  if (mode == "as_printed") return ZG_MODE_AS_PRINTED;
  if (mode == "rigorous") return ZG_MODE_RIGOROUS;
  return k == printed_k ? ZG_MODE_AS_PRINTED : ZG_MODE_RIGOROUS;
}

struct Options {
  std::string format = "json";
  std::string output;
  double abs_tol = 1e-9;
  int max_subdivisions = 10000;

  // eval-h / table
  std::string kind = "plus";
  double c = 0.0;
  double ell = 1.0;
  double delta = 0.0;
  int bound_k = 0;
  std::string bound_mode = "auto";
  std::string rows;

  // optimize-*
  std::string ks;
  std::string mode = "auto";
  double b_min = 0.0;
  double b_max = 0.0;
  double at = 0.0;
  bool slopes = false;

  // asymptotic
  bool optimize = false;
  double B = 0.0;
  double r_real = 0.0;
  double theta = 0.0;
  double vartheta = 0.0;
  double threshold_tol = 0.0;

  // discrete
  std::uint64_t X = 0;
  double logT = 0.0;
  int ell_int = 1;
  std::string sign = "plus";
  std::uint64_t query = 0;

  // zeros
  std::string input;
  int r = 1;
  std::size_t gap_index = 0;
  double T = 0.0;
};

zg_quad quad_of(const Options& o) { return zg_quad{o.abs_tol, o.max_subdivisions}; }

Report cmd_eval_h(const Options& o, const CLI::App& sub) {
  if (o.kind != "plus" && o.kind != "minus") domain("--kind must be plus or minus");
  const zg_quad q = quad_of(o);
  double h = 0.0;
  check(o.kind == "plus" ? zg_h_plus(o.c, o.ell, o.delta, &q, &h)
                         : zg_h_minus(o.c, o.ell, o.delta, &q, &h));
  json j{{"kind", o.kind}, {"c", number(o.c)}, {"ell", number(o.ell)},
         {"delta", number(o.delta)}, {"h", number(h)}};
  if (sub.count("--bound-k") > 0) {
    if (o.kind != "plus") domain("the certified bound is defined for h+ only");
    const zg_scheme scheme{o.bound_k, resolve_mode(o.bound_mode, o.bound_k, 2)};
    double upper = 0.0;
    check(zg_certified_h_plus_upper(o.c, o.ell, o.delta, scheme, &upper));
    j["certified_upper"] = number(upper);
    j["bound_k"] = o.bound_k;
    j["bound_scheme"] = mode_name(scheme.mode);
  }
  return single(std::move(j));
}

Report cmd_table(const Options& o) {
  if (o.kind != "plus" && o.kind != "minus") domain("--kind must be plus or minus");
  std::vector<int> rs;
  std::vector<double> ells;
  for (const auto& item : split(o.rows, ',')) {
    const auto colon = item.find(':');
    if (colon == std::string::npos) domain("row '" + item + "' is not of the form r:ell");
    rs.push_back(parse_int(item.substr(0, colon)));
    ells.push_back(parse_double(item.substr(colon + 1)));
  }
  std::vector<zg_table_row> out(rs.size());
  if (!rs.empty()) {
    const zg_quad q = quad_of(o);
    check(zg_build_table(o.kind == "plus" ? ZG_KIND_PLUS : ZG_KIND_MINUS, rs.data(), ells.data(),
                         rs.size(), o.delta, &q, out.data()));
  }
  return table(out);
}

Report cmd_optimize(const Options& o, const CLI::App& sub, bool large) {
  const int printed_k = large ? 2 : 1;
  std::vector<int> ks;
  for (const auto& item : split(o.ks.empty() ? std::to_string(printed_k) : o.ks, ',')) {
    ks.push_back(parse_int(item));
  }
  const double lo = sub.count("--b-min") ? o.b_min : 3.0;
  const double hi = sub.count("--b-max") ? o.b_max : (large ? 8.0 : 9.0);

  if (sub.count("--at") > 0) {
    if (ks.size() != 1) domain("--at evaluates a single scheme");
    const zg_scheme scheme{ks.front(), resolve_mode(o.mode, ks.front(), printed_k)};
    double value = 0.0;
    check(large ? zg_theta_objective(o.at, scheme, &value)
                : zg_vartheta_objective(o.at, scheme, &value));
    return single(json{{"scheme", mode_name(scheme.mode)},
                       {"k", scheme.k},
                       {"b", number(o.at)},
                       {"value", number(value)}});
  }

  std::vector<zg_theta_result> results;
  for (int k : ks) {
    const zg_scheme scheme{k, resolve_mode(o.mode, k, printed_k)};
    zg_theta_result res{};
    check(large ? zg_optimize_theta(scheme, lo, hi, &res)
                : zg_optimize_vartheta(scheme, lo, hi, &res));
    results.push_back(res);
  }
  Report rep = theta_results(results);
  if (o.slopes && results.size() == 1) {
    const int k = results.front().scheme.k;
    std::vector<double> s(static_cast<std::size_t>(k));
    check(zg_chord_slopes(k, s.data()));
    json arr = json::array();
    for (double v : s) arr.push_back(number(v));
    rep.json["slopes"] = arr;
  }
  return rep;
}

Report cmd_asymptotic(const Options& o, const CLI::App& sub) {
  const zg_quad q = quad_of(o);
  if (sub.count("--B") == 0) {
    const double lo = sub.count("--b-min") ? o.b_min : 0.5;
    const double hi = sub.count("--b-max") ? o.b_max : 4.0;
    zg_opt_result res{};
    check(zg_optimize_b(lo, hi, &res));
    return single(json{{"B_star", number(res.arg_star)},
                       {"theta", number(res.val_star)},
                       {"bracket_lo", number(res.bracket_lo)},
                       {"bracket_hi", number(res.bracket_hi)},
                       {"boundary_warning", res.boundary_warning != 0}});
  }
  double objective = 0.0;
  double closed = 0.0;
  double quad_value = 0.0;
  check(zg_asymptotic_objective(o.B, &objective));
  check(zg_asymptotic_integral_closed(o.B, o.delta, &closed));
  check(zg_asymptotic_integral(o.B, o.delta, &q, &quad_value));
  json j{{"B", number(o.B)},
         {"delta", number(o.delta)},
         {"objective", number(objective)},
         {"integral_closed", number(closed)},
         {"integral_quadrature", number(quad_value)}};
  if (sub.count("--r") > 0) {
    double tail = 0.0;
    double upper = 0.0;
    double lower = 0.0;
    double correction = 0.0;
    check(zg_tail_e(o.r_real, o.B, o.delta, &q, &tail));
    check(zg_h_plus_large_r(o.r_real, o.B, o.delta, o.theta, &q, &upper));
    check(zg_h_minus_large_r(o.r_real, o.B, o.delta, o.vartheta, &q, &lower));
    check(zg_finite_r_correction(o.r_real, o.B, o.delta, &q, &correction));
    j["r"] = number(o.r_real);
    j["theta"] = number(o.theta);
    j["vartheta"] = number(o.vartheta);
    j["tail_E"] = number(tail);
    j["h_plus_large_r"] = number(upper);
    j["h_minus_large_r"] = number(lower);
    j["finite_r_correction"] = number(correction);
  }
  if (sub.count("--threshold-tol") > 0) {
    double r0 = 0.0;
    check(zg_negligible_correction_r(o.B, o.delta, o.threshold_tol, &q, &r0));
    j["negligible_correction_r"] = number(r0);
  }
  return single(std::move(j));
}

Report cmd_discrete(const Options& o, const CLI::App& sub) {
  if (o.sign != "plus" && o.sign != "minus") domain("--sign must be plus or minus");
  if (o.X < 1) domain("--X must be >= 1");
  double logT = o.logT;
  if (sub.count("--logT") == 0) {
    if (!(o.delta >= 0.0 && o.delta < 1.0)) domain("--delta must lie in [0, 1)");
    logT = std::log(static_cast<double>(o.X)) / (1.0 - o.delta);
    if (logT <= 0.0) domain("X = 1 needs an explicit --logT");
  }
  zg_sieve* raw = nullptr;
  check(zg_sieve_create(o.X, sieve_budget(), &raw));
  SievePtr sieve(raw);

  const zg_discrete_params params{o.X, logT, o.ell_int,
                                  o.sign == "plus" ? ZG_KIND_PLUS : ZG_KIND_MINUS, o.c};
  zg_discrete_result res{};
  check(zg_h_discrete(sieve.get(), &params, &res));
  std::uint64_t primes = 0;
  check(zg_sieve_prime_count(sieve.get(), &primes));

  json j{{"X", o.X},          {"logT", number(logT)},
         {"ell", o.ell_int},  {"sign", o.sign},
         {"c", number(o.c)},  {"h", number(res.h)},
         {"numerator", number(res.numerator)},
         {"denominator", number(res.denominator)},
         {"prime_count", primes}};
  if (sub.count("--query") > 0) {
    std::uint64_t d = 0;
    int lambda = 0;
    double vm = 0.0;
    std::uint32_t spf = 0;
    check(zg_d_ell(sieve.get(), o.query, o.ell_int, &d));
    check(zg_liouville(sieve.get(), o.query, &lambda));
    check(zg_von_mangoldt(sieve.get(), o.query, &vm));
    check(zg_smallest_prime_factor(sieve.get(), o.query, &spf));
    j["query_n"] = o.query;
    j["query_d_ell"] = d;
    j["query_liouville"] = lambda;
    j["query_von_mangoldt"] = number(vm);
    j["query_spf"] = spf;
    if (o.query >= 2) {
      double g = 0.0;
      check(zg_g_kernel(o.query, o.c, logT, &g));
      j["query_g_kernel"] = number(g);
    }
  }
  return single(std::move(j));
}

Report cmd_zeros_stats(const Options& o, const CLI::App& sub) {
  const auto table = load_table(o.input);
  const double theta = sub.count("--theta") ? o.theta : zg_default_theta();
  const double vartheta = sub.count("--vartheta") ? o.vartheta : zg_default_vartheta();
  zg_gap_report rep{};
  check(zg_gap_report_compute(table.get(), o.r, theta, vartheta, &rep));
  Report out = gap_report(rep);
  if (sub.count("--gap-index") > 0) {
    double g = 0.0;
    check(zg_normalized_gap(table.get(), o.gap_index, o.r, &g));
    json j = out.json;
    j["gap_index"] = o.gap_index;
    j["normalized_gap"] = number(g);
    out = single(std::move(j));
  }
  return out;
}

Report cmd_counting(const Options& o) {
  const auto table = load_table(o.input);
  zg_counting res{};
  check(zg_counting_check(table.get(), o.T, &res));
  return counting(res);
}

void write_output(const std::string& path, const std::string& bytes) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw Failure(ZG_ERR_IO, "cannot write " + tmp.string());
    f.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    if (!f) throw Failure(ZG_ERR_IO, "write failed for " + tmp.string());
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw Failure(ZG_ERR_IO, "cannot move output into " + path);
  }
}

void add_common(CLI::App* sub, Options& o) {
  sub->add_option("--format", o.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  sub->add_option("--output", o.output, "write the report to this path instead of stdout");
}

void add_quad(CLI::App* sub, Options& o) {
  sub->add_option("--abs-tol", o.abs_tol, "quadrature absolute tolerance");
  sub->add_option("--max-subdivisions", o.max_subdivisions, "quadrature bisection budget");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Zeta-zero gap bound engine", "zetagap"};
  app.require_subcommand(1, 1);

  auto* eval_h = app.add_subcommand("eval-h", "evaluate h+ or h- from the integral form");
  add_common(eval_h, o);
  add_quad(eval_h, o);
  eval_h->add_option("--kind", o.kind, "plus or minus");
  eval_h->add_option("--c", o.c, "gap length c")->required();
  eval_h->add_option("--ell", o.ell, "exponent ell")->required();
  eval_h->add_option("--delta", o.delta, "shortfall delta");
  eval_h->add_option("--bound-k", o.bound_k, "also report the k-piece certified upper bound");
  eval_h->add_option("--bound-mode", o.bound_mode, "auto, as_printed or rigorous");

  auto* table_cmd = app.add_subcommand("table", "certified c values for (r, ell) rows");
  add_common(table_cmd, o);
  add_quad(table_cmd, o);
  table_cmd->add_option("--kind", o.kind, "plus (large gaps) or minus (small gaps)");
  table_cmd->add_option("--rows", o.rows, "comma-separated r:ell pairs")->required();
  table_cmd->add_option("--delta", o.delta, "shortfall delta");

  for (int i = 0; i < 2; ++i) {
    const bool large = i == 0;
    auto* sub = app.add_subcommand(large ? "optimize-theta" : "optimize-vartheta",
                                   large ? "maximize the large-gap constant over b"
                                         : "maximize the small-gap constant over b");
    add_common(sub, o);
    sub->add_option("--k", o.ks, "piece count, or a comma-separated list");
    sub->add_option("--mode", o.mode, "auto, as_printed or rigorous")
        ->check(CLI::IsMember({"auto", "as_printed", "rigorous"}));
    sub->add_option("--b-min", o.b_min, "lower end of the b bracket");
    sub->add_option("--b-max", o.b_max, "upper end of the b bracket");
    sub->add_option("--at", o.at, "evaluate the objective at this b instead");
    sub->add_flag("--slopes", o.slopes, "include the chord slopes");
  }

  auto* asym = app.add_subcommand("asymptotic", "large-r constants");
  add_common(asym, o);
  add_quad(asym, o);
  asym->add_flag("--optimize", o.optimize, "maximize over B (default when --B is absent)");
  asym->add_option("--b-min", o.b_min, "lower end of the B bracket");
  asym->add_option("--b-max", o.b_max, "upper end of the B bracket");
  asym->add_option("--B", o.B, "evaluate at this B");
  asym->add_option("--delta", o.delta, "shortfall delta");
  asym->add_option("--r", o.r_real, "also evaluate the finite-r bounds at this r");
  asym->add_option("--theta", o.theta, "large-gap constant for --r");
  asym->add_option("--vartheta", o.vartheta, "small-gap constant for --r");
  asym->add_option("--threshold-tol", o.threshold_tol,
                   "report the r where tail and finite-r corrections fall below this");

  auto* disc = app.add_subcommand("discrete", "finite Dirichlet-polynomial functional");
  add_common(disc, o);
  disc->add_option("--X", o.X, "coefficient cutoff")->required();
  disc->add_option("--logT", o.logT, "log of the height T");
  disc->add_option("--delta", o.delta, "set log T = log X / (1 - delta) when --logT is absent");
  disc->add_option("--ell", o.ell_int, "integer exponent ell");
  disc->add_option("--sign", o.sign, "plus or minus");
  disc->add_option("--c", o.c, "gap length c");
  disc->add_option("--query", o.query, "also report arithmetic functions at n");

  auto* zstats = app.add_subcommand("zeros-stats", "normalized r-gap statistics of a zero table");
  add_common(zstats, o);
  zstats->add_option("--input", o.input, "zero table file")->required();
  zstats->add_option("--r", o.r, "gap multiplicity r");
  zstats->add_option("--theta", o.theta, "large-gap constant");
  zstats->add_option("--vartheta", o.vartheta, "small-gap constant");
  zstats->add_option("--gap-index", o.gap_index, "also report the normalized gap at n");

  auto* count = app.add_subcommand("counting", "compare N(T) with its main terms");
  add_common(count, o);
  count->add_option("--input", o.input, "zero table file")->required();
  count->add_option("--T", o.T, "height T")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << json{{"error", {{"code", "usage"}, {"message", e.what()}}}}.dump() << "\n";
    return kExitUsage;
  }

  try {
    Report report;
    const CLI::App* sub = app.get_subcommands().front();
    const std::string name = sub->get_name();
    if (name == "eval-h") {
      report = cmd_eval_h(o, *sub);
    } else if (name == "table") {
      report = cmd_table(o);
    } else if (name == "optimize-theta") {
      report = cmd_optimize(o, *sub, true);
    } else if (name == "optimize-vartheta") {
      report = cmd_optimize(o, *sub, false);
    } else if (name == "asymptotic") {
      report = cmd_asymptotic(o, *sub);
    } else if (name == "discrete") {
      report = cmd_discrete(o, *sub);
    } else if (name == "zeros-stats") {
      report = cmd_zeros_stats(o, *sub);
    } else {
      report = cmd_counting(o);
    }
    const std::string bytes = emit(report, o.format == "csv" ? Format::kCsv : Format::kJson);
    if (o.output.empty()) {
      out << bytes;
      out.flush();
      if (!out) throw Failure(ZG_ERR_IO, "cannot write to standard output");
    } else {
      write_output(o.output, bytes);
    }
    return kExitOk;
  } catch (const Failure& f) {
    json e{{"code", zg_status_name(f.status)}, {"message", f.what()}};
    if (f.line > 0) e["line"] = f.line;
    err << json{{"error", e}}.dump() << "\n";
    return f.status == ZG_ERR_IO ? kExitIo : kExitDomain;
  }
}

}  // namespace zetagap::cli
