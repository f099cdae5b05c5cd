#include "qlcm/cli.hpp"

#include <omp.h>

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "qlcm/bounds.hpp"
#include "qlcm/lcm_engine.hpp"
#include "qlcm/qcalc.hpp"

namespace qlcm::cli {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::int64_t parse_int(std::string_view text, std::string_view what) {
  std::int64_t value = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (!text.empty() && text.front() == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || first == last) {
    throw UsageError("invalid integer for " + std::string(what) + ": '" + std::string(text) + "'");
  }
  return value;
}

struct Config {
  std::string format = "text";
  std::string out_path;
  std::optional<int> jobs;
  bool fail_fast = false;
  std::optional<std::int64_t> n_max;
  std::string q, r, u0;
  bool full_values = false;
  bool diagnostics = false;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> sample;
  std::vector<std::string> suites;
  bool no_gcd_filter = false;
  std::vector<std::string> eval_args;
};

int resolve_jobs(const Config& cfg) {
  if (cfg.jobs) {
    if (*cfg.jobs < 1) throw UsageError("--jobs must be >= 1");
    return *cfg.jobs;
  }
  if (const char* env = std::getenv("QLCM_JOBS"); env != nullptr && *env != '\0') {
    const std::int64_t v = parse_int(env, "QLCM_JOBS");
    if (v < 1 || v > 4096) throw UsageError("QLCM_JOBS must be a positive integer");
    return static_cast<int>(v);
  }
  return std::max(1, omp_get_max_threads());
}

std::int64_t require_single(const std::string& text, const char* flag) {
  if (text.empty()) throw UsageError(std::string(flag) + " is required");
  const IntRange range = parse_range(text);
  if (range.lo != range.hi) throw UsageError(std::string(flag) + " takes a single value here");
  return range.lo;
}

IntRange require_range(const std::string& text, const char* flag) {
  if (text.empty()) throw UsageError(std::string(flag) + " is required");
  return parse_range(text);
}

std::int64_t require_n_max(const Config& cfg) {
  if (!cfg.n_max) throw UsageError("--n-max is required");
  if (*cfg.n_max < 1) throw UsageError("--n-max must be >= 1");
  return *cfg.n_max;
}

void emit_table(std::ostream& os, const Table& table, Format format) {
  switch (format) {
    case Format::Text: write_text(os, table); break;
    case Format::Csv: write_csv(os, table); break;
    case Format::Json: os << to_json(table).dump(2) << '\n'; break;
  }
}

int cmd_eval(const Config& cfg, std::ostream& out) {
  if (cfg.eval_args.empty()) throw UsageError("eval: expected qint | qfact | qbinom");
  const std::string& fn = cfg.eval_args.front();
  const QBase q(require_single(cfg.q, "--q"));
  auto arg = [&](std::size_t i) {
    if (i >= cfg.eval_args.size()) throw UsageError("eval " + fn + ": missing argument");
    return parse_int(cfg.eval_args[i], "eval argument");
  };
  auto expect_count = [&](std::size_t n) {
    if (cfg.eval_args.size() != n + 1) throw UsageError("eval " + fn + ": expected " + std::to_string(n) + " argument(s)");
  };
  Integer value;
  if (fn == "qint") {
    expect_count(1);
    value = q_int(arg(1), q);
  } else if (fn == "qfact") {
    expect_count(1);
    value = q_factorial(arg(1), q);
  } else if (fn == "qbinom") {
    expect_count(2);
    value = q_binomial(arg(1), arg(2), q);
  } else {
    throw UsageError("eval: unknown function '" + fn + "' (expected qint | qfact | qbinom)");
  }
  out << to_decimal(value) << '\n';
  return kExitOk;
}

int cmd_verify(const Config& cfg, Format format, std::ostream& out, std::ostream& err) {
  SweepGrid grid;
  grid.q = require_range(cfg.q, "--q");
  grid.r = require_range(cfg.r, "--r");
  grid.u0 = require_range(cfg.u0, "--u0");
  grid.n_max = require_n_max(cfg);
  if (cfg.sample) {
    grid.sample_count = *cfg.sample;
    grid.sample_seed = cfg.seed.value_or(0);
  }

  SweepOptions options;
  if (!cfg.suites.empty() && !(cfg.suites.size() == 1 && cfg.suites.front() == "all")) {
    options.suites.clear();
    for (const std::string& name : cfg.suites) {
      const auto suite = parse_suite(name);
      if (!suite) throw UsageError("unknown suite '" + name + "'");
      options.suites.insert(*suite);
    }
  }
  options.jobs = resolve_jobs(cfg);
  options.fail_fast = cfg.fail_fast;
  options.gcd_filter = !cfg.no_gcd_filter;

  const SweepResult result = run_sweep(grid, options);
  switch (format) {
    case Format::Text: write_summary_text(out, result.summary); break;
    case Format::Csv:
      write_csv(out, records_table(result.records));
      write_summary_text(err, result.summary);
      break;
    case Format::Json: out << to_json(result).dump(2) << '\n'; break;
  }
  if (result.summary.first_failure) {
    const Counterexample& c = *result.summary.first_failure;
    err << "counterexample: suite=" << to_string(c.suite) << " q=" << c.q << " r=" << c.r << " u0=" << c.u0
        << " limit=" << c.limit << ": " << c.detail << '\n';
    return kExitCounterexample;
  }
  return kExitOk;
}

int cmd_table(const Config& cfg, Format format, std::ostream& out) {
  const Progression p = make_progression(require_single(cfg.q, "--q"), require_single(cfg.r, "--r"),
                                         require_single(cfg.u0, "--u0"));
  const Table table = build_table(p, require_n_max(cfg), cfg.full_values, cfg.diagnostics);
  emit_table(out, table, format);
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (table.headers[i].ends_with("_holds") && std::holds_alternative<bool>(row[i]) && !std::get<bool>(row[i])) {
        return kExitCounterexample;
      }
    }
  }
  return kExitOk;
}

int cmd_examples(const Config& cfg, Format format, std::ostream& out) {
  const Table table = build_examples_table(require_n_max(cfg), cfg.full_values);
  bool all = true;
  for (const auto& row : table.rows) all = all && std::get<bool>(row[4]);
  emit_table(out, table, format);
  if (format == Format::Text) out << (all ? "all checks hold" : "COUNTEREXAMPLE FOUND") << '\n';
  return all ? kExitOk : kExitCounterexample;
}

}  // namespace

IntRange parse_range(std::string_view text) {
  const auto dots = text.find("..");
  if (dots == std::string_view::npos) {
    const std::int64_t v = parse_int(text, "range");
    return {v, v};
  }
  const IntRange range{parse_int(text.substr(0, dots), "range"), parse_int(text.substr(dots + 2), "range")};
  if (range.lo > range.hi) throw UsageError("empty range '" + std::string(text) + "'");
  return range;
}

Format parse_format(std::string_view text) {
  if (text == "text") return Format::Text;
  if (text == "csv") return Format::Csv;
  if (text == "json") return Format::Json;
  throw UsageError("unknown format '" + std::string(text) + "'");
}

Table build_table(const Progression& p, std::int64_t n_max, bool full_values, bool diagnostics) {
  if (n_max < 1) throw DomainError("build_table: n_max must be >= 1");
  const bool geometric = p.q() >= 2;
  Table table;
  table.headers = {"n", "u_n", "lcm_bits", "k_n", "ell_n", "C_ell_log2"};
  if (geometric) {
    table.headers.insert(table.headers.end(), {"t2_bound_log2", "t3_bound_log2", "t2_holds", "t3_holds"});
  } else {
    table.headers.insert(table.headers.end(), {"hf_bound_log2", "hf_holds"});
  }
  table.headers.emplace_back("slack_log2");
  if (full_values) table.headers.emplace_back("lcm");
  if (diagnostics) table.headers.insert(table.headers.end(), {"conjectured_ratio_log2", "sqrt_product_ratio_log2"});

  PrefixLcmStream stream(p);
  for (std::int64_t n = 1; n <= n_max; ++n) {
    const PrefixLcmStep& step = stream.next();
    std::vector<Cell> row{n, to_decimal(step.term), static_cast<std::int64_t>(bit_length(step.lcm))};
    if (geometric) {
      const std::int64_t kn = k_index(p, n);
      const std::int64_t ln = std::max<std::int64_t>(1, kn);
      row.insert(row.end(), {kn, ln, log2_of(cnk(p, n, ln).value)});
      const BoundCertificate t2 = bound_holds(p, n, BoundKind::Theorem2, step.lcm);
      const BoundCertificate t3 = bound_holds(p, n, BoundKind::Theorem3, step.lcm);
      row.insert(row.end(), {t2.bound_log2, t3.bound_log2, t2.holds, t3.holds, std::min(t2.slack_log2, t3.slack_log2)});
    } else {
      const BoundCertificate hf = bound_holds(p, n, BoundKind::HongFeng, step.lcm);
      row.insert(row.end(), {Cell{}, Cell{}, Cell{}, hf.bound_log2, hf.holds, hf.slack_log2});
    }
    if (full_values) row.emplace_back(to_decimal(step.lcm));
    if (diagnostics) {
      const GrowthDiagnostics d = growth_diagnostics(p, n);
      row.insert(row.end(), {d.conjectured_ratio_log2, d.sqrt_product_ratio_log2});
    }
    table.rows.push_back(std::move(row));
  }
  return table;
}

Table build_examples_table(std::int64_t n_max, bool full_values) {
  if (n_max < 1) throw DomainError("build_examples_table: n_max must be >= 1");
  Table table;
  table.headers = {"example", "n", "lcm_bits", "bound_log2", "holds", "slack_log2"};
  if (full_values) table.headers.emplace_back("lcm");
  for (WorkedExample which :
       {WorkedExample::MersenneMinusOne, WorkedExample::TwoPowerPlusOne, WorkedExample::ThreePowerPlusOne}) {
    for (std::int64_t n = 1; n <= n_max; ++n) {
      const WorkedExampleCheck c = check_worked_example(which, n);
      std::vector<Cell> row{std::string(to_string(which)), n, static_cast<std::int64_t>(bit_length(c.lcm)), c.bound_log2,
                            c.holds, c.slack_log2};
      if (full_values) row.emplace_back(to_decimal(c.lcm));
      table.rows.push_back(std::move(row));
    }
  }
  return table;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact lcm bounds for q-arithmetic progressions u_n = r [n]_q + u0", "qlcm"};
  app.fallthrough();
  app.require_subcommand(1);

  Config cfg;
  app.add_option("--format", cfg.format, "Output format: text, csv or json");
  app.add_option("--out", cfg.out_path, "Write the report to PATH instead of standard output");
  app.add_option("--jobs", cfg.jobs, "Worker threads (default: QLCM_JOBS, then all cores)");
  app.add_flag("--fail-fast", cfg.fail_fast, "Stop at the first counterexample");
  app.add_option("--n-max", cfg.n_max, "Largest index n");
  app.add_option("--q", cfg.q, "Base q (value or a..b)");
  app.add_option("--r", cfg.r, "Step r (value or a..b)");
  app.add_option("--u0", cfg.u0, "Initial term u0 (value or a..b)");
  app.add_flag("--full-values", cfg.full_values, "Print the full decimal lcm");
  app.add_flag("--diagnostics", cfg.diagnostics, "Append growth-ratio diagnostics to tables");
  app.add_option("--seed", cfg.seed, "Seed for --sample");
  app.add_option("--sample", cfg.sample, "Verify only this many randomly chosen grid points");
  app.add_option("--suite", cfg.suites, "Suites to run (default all)")->delimiter(',');
  app.add_flag("--no-gcd-filter", cfg.no_gcd_filter,
               "Keep triples that violate the gcd hypotheses (exercises the counterexample path)");

  auto* eval = app.add_subcommand("eval", "Evaluate qint N | qfact N | qbinom N K at base --q");
  eval->add_option("args", cfg.eval_args, "Function name and integer arguments");
  auto* verify = app.add_subcommand("verify", "Run the verification suites over a parameter grid");
  auto* table = app.add_subcommand("table", "Per-n bound table for one progression");
  auto* examples = app.add_subcommand("examples", "Reproduce the 2^n-1, 2^n+1 and 3^n+1 inequalities");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "qlcm: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    const Format format = parse_format(cfg.format);
    std::ofstream file;
    if (!cfg.out_path.empty()) {
      file.open(cfg.out_path, std::ios::binary);
      if (!file) throw UsageError("cannot open output file '" + cfg.out_path + "'");
    }
    std::ostream& sink = cfg.out_path.empty() ? out : file;

    if (eval->parsed()) return cmd_eval(cfg, sink);
    if (verify->parsed()) return cmd_verify(cfg, format, sink, err);
    if (table->parsed()) return cmd_table(cfg, format, sink);
    if (examples->parsed()) return cmd_examples(cfg, format, sink);
    throw UsageError("no subcommand");
  } catch (const UsageError& e) {
    err << "qlcm: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "qlcm: domain error: " << e.what() << '\n';
    return kExitUsage;
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("qlcm");
  for (const std::string& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace qlcm::cli
