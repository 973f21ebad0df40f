#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <iomanip>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "melzak/combinatorics.hpp"
#include "melzak/errors.hpp"
#include "melzak/transforms.hpp"
#include "melzak/verifier.hpp"

namespace melzak::cli {
namespace {

using Clock = std::chrono::steady_clock;

enum class Format { kText, kJson };

const std::map<std::string, Format> kFormats = {{"text", Format::kText},
                                                {"json", Format::kJson}};

struct EvalFlags {
  std::string identity;
  std::optional<std::string> poly;
  std::optional<unsigned long> n;
  std::optional<std::string> lambda, x, y, z;
  std::optional<unsigned> r;
  std::optional<unsigned long> p;
  Format format = Format::kText;
};

struct VerifyFlags {
  std::string identity;
  std::uint64_t seed = 42;
  std::size_t trials = 100;
  SuiteBounds bounds;
  std::optional<unsigned> r;
  bool fixtures = false;
  bool timing = false;
  bool perturb = false;
  unsigned threads = 0;
};

struct TableFlags {
  unsigned long max_p = 10;
  unsigned long max_n = 10;
  Format format = Format::kText;
};

struct SeriesFlags {
  unsigned long n = 1;
  std::string lambda = "2";
  std::optional<unsigned long> max_terms;
  Format format = Format::kText;
};

struct BenchFlags {
  unsigned long n = 100;
  std::optional<unsigned long> degree;
  unsigned repeats = 3;
  std::uint64_t seed = 1;
  Format format = Format::kText;
};

int EvalCommand(const EvalFlags& flags, std::ostream& out) {
  const IdentityId id = ParseIdentityId(flags.identity);
  TrialParams params;
  if (!flags.n) throw ArgumentError("eval needs --n");
  params.n = *flags.n;
  if (flags.poly) params.f = Polynomial::Parse(*flags.poly);
  if (flags.lambda) params.lambda = Rational::Parse(*flags.lambda);
  if (flags.x) params.x = Rational::Parse(*flags.x);
  if (flags.y) params.y = Rational::Parse(*flags.y);
  if (flags.z) params.z = Rational::Parse(*flags.z);
  params.r = flags.r;
  params.p = flags.p;

  const IdentityReport report = VerifyIdentity(id, params);
  if (flags.format == Format::kJson) {
    out << ToJsonLine(report) << '\n';
  } else {
    out << "identity: " << ToString(id) << '\n'
        << "lhs: " << report.lhs << '\n'
        << "rhs: " << report.rhs << '\n'
        << "equal: " << (report.equal ? "true" : "false") << '\n';
    if (!report.note.empty()) out << "note: " << report.note << '\n';
  }
  return report.equal ? kExitOk : kExitMismatch;
}

int VerifyCommand(const VerifyFlags& flags, std::ostream& out,
                  std::ostream& err) {
  std::vector<IdentityReport> reports;
  std::string label;
  if (flags.fixtures) {
    reports = FixtureSuite();
    label = "fixtures";
  } else {
    if (flags.identity.empty()) {
      throw ArgumentError("verify needs an identity or --fixtures");
    }
    const IdentityId id = ParseIdentityId(flags.identity);
    SuiteBounds bounds = flags.bounds;
    bounds.r = flags.r;
    SuiteOptions options;
    options.timing = flags.timing;
    options.perturb_rhs = flags.perturb;
    options.threads = flags.threads;
    reports = RandomSuite(id, flags.seed, flags.trials, bounds, options);
    label = std::string(ToString(id));
  }
  std::size_t equal = 0;
  for (const auto& report : reports) {
    out << ToJsonLine(report) << '\n';
    if (report.equal) ++equal;
  }
  err << label << ": " << equal << "/" << reports.size() << " equal\n";
  return equal == reports.size() ? kExitOk : kExitMismatch;
}

int TableCommand(const TableFlags& flags, std::ostream& out) {
  if (flags.max_p > kTableCeiling || flags.max_n > kTableCeiling) {
    throw ArgumentError("table bounds are limited to " +
                        std::to_string(kTableCeiling));
  }
  const StirlingTable table(flags.max_p, flags.max_n);
  if (flags.format == Format::kJson) {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (std::size_t p = 0; p <= flags.max_p; ++p) {
      for (std::size_t n = 0; n <= flags.max_n; ++n) {
        nlohmann::ordered_json row;
        row["p"] = p;
        row["n"] = n;
        row["value"] = table(p, n).get_str();
        rows.push_back(std::move(row));
      }
    }
    out << rows.dump() << '\n';
    return kExitOk;
  }

  // Column widths: header "p\n" then one column per n.
  std::vector<std::size_t> widths(flags.max_n + 1);
  for (std::size_t n = 0; n <= flags.max_n; ++n) {
    widths[n] = std::to_string(n).size();
    for (std::size_t p = 0; p <= flags.max_p; ++p) {
      widths[n] = std::max(widths[n], table(p, n).get_str().size());
    }
  }
  const std::size_t label_width =
      std::max<std::size_t>(3, std::to_string(flags.max_p).size());
  out << std::setw(static_cast<int>(label_width)) << "p\\n";
  for (std::size_t n = 0; n <= flags.max_n; ++n) {
    out << ' ' << std::setw(static_cast<int>(widths[n])) << n;
  }
  out << '\n';
  for (std::size_t p = 0; p <= flags.max_p; ++p) {
    out << std::setw(static_cast<int>(label_width)) << p;
    for (std::size_t n = 0; n <= flags.max_n; ++n) {
      out << ' ' << std::setw(static_cast<int>(widths[n]))
          << table(p, n).get_str();
    }
    out << '\n';
  }
  return kExitOk;
}

int SeriesCommand(const SeriesFlags& flags, std::ostream& out,
                  std::ostream& err) {
  const Rational lambda = Rational::Parse(flags.lambda);
  if (lambda.is_zero()) throw ZeroError("series needs lambda != 0");
  const unsigned long max_terms = flags.max_terms.value_or(flags.n + 20);
  if (lambda.abs() <= Rational(flags.n)) {
    err << "warning: |lambda| <= n; convergence is only guaranteed for "
           "|lambda| > n\n";
  }
  const std::vector<Rational> partials =
      SeriesTPartialSums(flags.n, lambda, max_terms);
  std::optional<Rational> closed;
  if (!IsIndexInRange(lambda, flags.n)) {
    closed = PoleSumClosedForm(flags.n).Evaluate(lambda);
  } else {
    err << "warning: lambda is a pole of the closed form; no error column\n";
  }

  const Rational threshold(BigInt(1), BigInt(1000000000));
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  std::optional<Rational> last_error;
  for (std::size_t i = 0; i < partials.size(); ++i) {
    const unsigned long m = flags.n + i;
    std::optional<Rational> error;
    if (closed) error = (partials[i] - *closed).abs();
    last_error = error;
    if (flags.format == Format::kJson) {
      nlohmann::ordered_json row;
      row["M"] = m;
      row["partial"] = partials[i].ToString();
      row["closed"] = closed ? closed->ToString() : "pole";
      row["abs_error"] = error ? error->ToString() : "n/a";
      row["abs_error_decimal"] = error ? error->ToScientific(12) : "n/a";
      rows.push_back(std::move(row));
    } else {
      out << m << '\t' << partials[i] << '\t'
          << (closed ? closed->ToString() : "pole") << '\t'
          << (error ? error->ToScientific(12) : "n/a") << '\n';
    }
  }
  if (flags.format == Format::kJson) {
    out << rows.dump() << '\n';
  } else if (last_error) {
    out << "final abs error < 1e-9: "
        << (*last_error < threshold ? "yes" : "no") << '\n';
  }
  return kExitOk;
}

unsigned long BenchCeiling() {
  if (const char* env = std::getenv("MELZAK_MAX_N")) {
    try {
      return std::max(kBenchCeiling, std::stoul(env));
    } catch (const std::exception&) {
      throw ArgumentError("MELZAK_MAX_N is not a nonnegative integer");
    }
  }
  return kBenchCeiling;
}

int BenchCommand(const BenchFlags& flags, std::ostream& out,
                 std::ostream& err) {
  if (flags.n > BenchCeiling()) {
    throw ArgumentError("bench n = " + std::to_string(flags.n) +
                        " exceeds ceiling " + std::to_string(BenchCeiling()) +
                        " (raise with MELZAK_MAX_N)");
  }
  if (flags.repeats == 0) throw ArgumentError("repeats must be >= 1");
  const unsigned long degree =
      flags.degree.value_or(std::min<unsigned long>(flags.n, 50));
  if (degree > flags.n) {
    throw DegreeError("bench degree " + std::to_string(degree) +
                      " exceeds n = " + std::to_string(flags.n));
  }

  TrialRng rng(flags.seed);
  std::vector<Rational> coefficients(degree + 1);
  for (auto& c : coefficients) c = Rational(rng.UniformInt(-9, 9));
  while (coefficients.back().is_zero()) {
    coefficients.back() = Rational(rng.UniformInt(-9, 9));
  }
  const Polynomial f(std::move(coefficients));
  const Rational x(BigInt(1), BigInt(2));
  const Rational y(BigInt(2), BigInt(3));

  auto time_us = [&](auto&& fn, Rational& value) {
    std::int64_t best = -1;
    for (unsigned i = 0; i < flags.repeats; ++i) {
      const auto start = Clock::now();
      value = fn();
      const auto us = std::chrono::duration_cast<std::chrono::microseconds>(
                          Clock::now() - start)
                          .count();
      if (best < 0 || us < best) best = us;
    }
    return best;
  };
  Rational direct;
  Rational closed;
  const std::int64_t direct_us =
      time_us([&] { return ClassicLhs(f, flags.n, x, y); }, direct);
  const std::int64_t closed_us =
      time_us([&] { return MelzakClassicRhs(f, flags.n, x, y); }, closed);
  const bool equal = direct == closed;
  const double speedup = static_cast<double>(std::max<std::int64_t>(direct_us, 1)) /
                         static_cast<double>(std::max<std::int64_t>(closed_us, 1));

  if (flags.format == Format::kJson) {
    nlohmann::ordered_json j;
    j["n"] = flags.n;
    j["degree"] = degree;
    j["repeats"] = flags.repeats;
    j["seed"] = flags.seed;
    j["x"] = x.ToString();
    j["y"] = y.ToString();
    j["direct_us"] = direct_us;
    j["closed_us"] = closed_us;
    j["speedup"] = speedup;
    j["equal"] = equal;
    j["value"] = closed.ToString();
    out << j.dump() << '\n';
  } else {
    std::ostringstream ratio;
    ratio << std::fixed << std::setprecision(1) << speedup;
    out << "n: " << flags.n << "  degree: " << degree
        << "  repeats: " << flags.repeats << '\n'
        << "direct sum:   " << direct_us << " us (best)\n"
        << "closed form:  " << closed_us << " us (best)\n"
        << "speedup:      " << ratio.str() << "x\n"
        << "equal:        " << (equal ? "true" : "false") << '\n'
        << "value:        " << closed.numerator().get_str().size()
        << "-digit numerator / " << closed.denominator().get_str().size()
        << "-digit denominator (full value with --format json)\n";
  }
  if (!equal) {
    err << "bench: direct sum " << direct << " != closed form " << closed
        << '\n';
    return kExitMismatch;
  }
  return kExitOk;
}

void AddFormat(CLI::App* cmd, Format& format) {
  cmd->add_option("--format", format, "Output format: text or json")
      ->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case));
}

}  // namespace

int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Exact binomial-transform identities with simple poles"};
  app.require_subcommand(1);

  EvalFlags eval;
  auto* eval_cmd =
      app.add_subcommand("eval", "Evaluate both sides of one identity");
  eval_cmd->add_option("identity", eval.identity, "Identity key")->required();
  eval_cmd->add_option("--poly", eval.poly,
                       "Coefficients, lowest degree first (e.g. 1,0,2)");
  eval_cmd->add_option("--n", eval.n, "Upper summation index");
  eval_cmd->add_option("--lambda", eval.lambda, "Pole location p/q");
  eval_cmd->add_option("--x", eval.x, "Shift x");
  eval_cmd->add_option("--y", eval.y, "Pole offset y");
  eval_cmd->add_option("--z", eval.z, "Second pole offset z");
  eval_cmd->add_option("--r", eval.r, "Pole order")->check(CLI::PositiveNumber);
  eval_cmd->add_option("--p", eval.p, "Power p (stirling_crosscheck)");
  AddFormat(eval_cmd, eval.format);

  VerifyFlags verify;
  auto* verify_cmd =
      app.add_subcommand("verify", "Run a seeded random suite or the fixtures");
  verify_cmd->add_option("identity", verify.identity, "Identity key");
  verify_cmd->add_option("--seed", verify.seed, "RNG seed");
  verify_cmd->add_option("--trials", verify.trials, "Number of trials")
      ->check(CLI::PositiveNumber);
  verify_cmd->add_option("--n-min", verify.bounds.n_min, "Smallest n");
  verify_cmd->add_option("--n-max", verify.bounds.n_max, "Largest n");
  verify_cmd->add_option("--degree-extra", verify.bounds.degree_extra,
                         "deg f <= n + this");
  verify_cmd->add_option("--coeff-bound", verify.bounds.coefficient_bound,
                         "Coefficients in [-b, b]")
      ->check(CLI::NonNegativeNumber);
  verify_cmd->add_option("--num-bound", verify.bounds.numerator_bound,
                         "Rational numerators in [-b, b]")
      ->check(CLI::NonNegativeNumber);
  verify_cmd->add_option("--den-bound", verify.bounds.denominator_bound,
                         "Rational denominators in [1, b]")
      ->check(CLI::PositiveNumber);
  verify_cmd->add_option("--r", verify.r, "Fixed pole order for higher_order")
      ->check(CLI::PositiveNumber);
  verify_cmd->add_option("--max-p", verify.bounds.max_p,
                         "Largest p for stirling_crosscheck");
  verify_cmd->add_option("--threads", verify.threads, "Worker threads");
  verify_cmd->add_flag("--fixtures", verify.fixtures, "Run the named cases");
  verify_cmd->add_flag("--timing", verify.timing, "Record elapsed_us");
  verify_cmd->add_flag("--perturb-rhs", verify.perturb,
                       "Add 1 to every closed form (harness self-check)");

  TableFlags table;
  auto* table_cmd =
      app.add_subcommand("table", "Stirling numbers of the second kind");
  table_cmd->add_option("--max-p", table.max_p, "Largest p");
  table_cmd->add_option("--max-n", table.max_n, "Largest n");
  AddFormat(table_cmd, table.format);

  SeriesFlags series;
  auto* series_cmd = app.add_subcommand(
      "series", "Partial sums of the Stirling series for the pole sum");
  series_cmd->add_option("--n", series.n, "n");
  series_cmd->add_option("--lambda", series.lambda, "lambda p/q");
  series_cmd->add_option("--max-terms", series.max_terms,
                         "Last M (default n + 20)");
  AddFormat(series_cmd, series.format);

  BenchFlags bench;
  auto* bench_cmd = app.add_subcommand(
      "bench", "Time the direct sum against the closed form");
  bench_cmd->add_option("--n", bench.n, "n");
  bench_cmd->add_option("--degree", bench.degree, "deg f (default min(n, 50))");
  bench_cmd->add_option("--repeats", bench.repeats, "Timing repeats");
  bench_cmd->add_option("--seed", bench.seed, "Seed for the coefficients");
  AddFormat(bench_cmd, bench.format);

  std::vector<const char*> argv;
  argv.push_back("melzak");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (*eval_cmd) return EvalCommand(eval, out);
    if (*verify_cmd) return VerifyCommand(verify, out, err);
    if (*table_cmd) return TableCommand(table, out);
    if (*series_cmd) return SeriesCommand(series, out, err);
    if (*bench_cmd) return BenchCommand(bench, out, err);
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitMismatch;
  } catch (const PoleError& e) {
    err << "pole: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace melzak::cli
