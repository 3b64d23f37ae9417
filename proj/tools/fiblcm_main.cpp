// fiblcm: exact asymptotic constants for least common multiples of shifted
// Fibonacci numbers, with brute-force verification and a random-sign model.
//
// Exit codes: 0 success, 1 usage or validation error, 2 internal failure.

#include <CLI11.hpp>
#include <json.hpp>

#include <cinttypes>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <fiblcm/constants.hpp>
#include <fiblcm/lcm_oracle.hpp>
#include <fiblcm/primitive_parts.hpp>
#include <fiblcm/progression_cover.hpp>
#include <fiblcm/random_signs.hpp>
#include <fiblcm/sign_patterns.hpp>
#include <fiblcm/totient_sums.hpp>

namespace {

using json = nlohmann::ordered_json;

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

json fraction_json(const fiblcm::Rational& q) {
  json j;
  const mpz_class& num = q.get_num();
  const mpz_class& den = q.get_den();
  if (num.fits_slong_p())
    j["num"] = num.get_si();
  else
    j["num"] = num.get_str();
  if (den.fits_slong_p())
    j["den"] = den.get_si();
  else
    j["den"] = den.get_str();
  return j;
}

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path);
  if (!out)
    throw std::invalid_argument("cannot open output file: " + path);
  return out;
}

struct ConstantOptions {
  std::string pattern;
};

int run_constant(const ConstantOptions& opt) {
  fiblcm::SignPattern p = fiblcm::parse_pattern(opt.pattern);
  fiblcm::Rational c = fiblcm::pattern_constant(p);
  json j;
  j["pattern"] = p.text();
  j.update(fraction_json(c));
  std::cout << j.dump() << "\n";
  return 0;
}

struct TableOptions {
  int period = 5;
  bool all = false;
  std::string format = "text";
};

int run_table(const TableOptions& opt) {
  auto results = fiblcm::enumerate_pattern_constants(opt.period);
  fiblcm::Rational half = fiblcm::make_rational(1, 2);
  bool csv = (opt.format == "csv");
  if (csv) std::cout << "pattern,constant\n";
  for (const auto& [p, c] : results) {
    if (!opt.all && c == half) continue;
    if (csv)
      std::cout << p.text() << "," << fiblcm::fraction_string(c) << "\n";
    else
      std::cout << p.text() << "  " << fiblcm::fraction_string(c) << "\n";
  }
  return 0;
}

struct VerifyOptions {
  std::string pattern;
  long n = 2000;
  long start = 3;
  bool baseline = false;
  std::string csv_path;
};

int run_verify(const VerifyOptions& opt) {
  std::vector<long> checkpoints;
  for (long divisor : {8L, 4L, 2L, 1L}) {
    long cp = opt.n / divisor;
    long least = opt.baseline ? 1 : opt.start;
    if (cp < least) cp = least;
    if (checkpoints.empty() || cp > checkpoints.back())
      checkpoints.push_back(cp);
  }

  double constant = 1.0;
  std::vector<fiblcm::LcmRun> runs;
  std::string label;
  if (opt.baseline) {
    label = "lcm(F_1..F_n)";
    for (long cp : checkpoints) runs.push_back(fiblcm::lcm_fibonacci(cp));
  } else {
    fiblcm::SignPattern p = fiblcm::parse_pattern(opt.pattern);
    label = "pattern " + p.text();
    constant = fiblcm::to_double(fiblcm::pattern_constant(p));
    runs = fiblcm::lcm_checkpoints(p, checkpoints, opt.start);
  }

  std::string csv = "n,log_lcm,predicted,ratio\n";
  std::printf("# %s, start %ld, constant %s\n", label.c_str(),
              opt.baseline ? 1L : opt.start,
              opt.baseline ? "1 (unshifted)" : format_double(constant).c_str());
  std::printf("%10s %18s %18s %10s\n", "n", "log_lcm", "predicted", "ratio");
  for (const fiblcm::LcmRun& run : runs) {
    double predicted =
        fiblcm::kLcmSlope * constant * static_cast<double>(run.n) * run.n;
    double ratio = run.log_lcm / predicted;
    std::printf("%10ld %18s %18s %10s\n", run.n,
                format_double(run.log_lcm).c_str(),
                format_double(predicted).c_str(),
                format_double(ratio).c_str());
    csv += std::to_string(run.n) + "," + format_double(run.log_lcm) + "," +
           format_double(predicted) + "," + format_double(ratio) + "\n";
  }
  if (!opt.csv_path.empty()) open_output(opt.csv_path) << csv;
  return 0;
}

struct SetsOptions {
  std::string pattern;
  long n = 40;
};

int run_sets(const SetsOptions& opt) {
  fiblcm::SignPattern p = fiblcm::parse_pattern(opt.pattern);
  if (opt.n < 4) throw std::invalid_argument("sets: need --n >= 4");
  fiblcm::ResidueSets rs = fiblcm::residue_sets(p);
  json j;
  j["pattern"] = p.text();
  j["n"] = opt.n;
  j["f_set"] = fiblcm::fib_indices(p, opt.n);
  j["l_set"] = fiblcm::lucas_indices(p, opt.n);
  j["m_set"] = fiblcm::phi_index_set(p, opt.n);
  j["residue_sets"] = {{"modulus", rs.modulus},
                       {"fib", rs.fib_residues},
                       {"lucas", rs.lucas_residues}};
  std::cout << j.dump() << "\n";
  return 0;
}

struct PhiOptions {
  long max = 30;
};

int run_phi(const PhiOptions& opt) {
  fiblcm::PhiTable table(opt.max);
  std::cout << "d,Phi_d,euler_phi\n";
  for (long d = 1; d <= opt.max; ++d)
    std::cout << d << "," << table.value(d).get_str() << ","
              << fiblcm::euler_phi(d) << "\n";
  return 0;
}

struct SumsOptions {
  long r = 1;
  long m = 1;
  double x = 1000;
  double z = 0;  // 0 = unweighted
};

int run_sums(const SumsOptions& opt) {
  if (!(opt.x >= 1 && opt.x <= 1e8))
    throw std::invalid_argument("sums: need 1 <= --x <= 1e8");
  fiblcm::TotientSieve sieve(static_cast<std::size_t>(opt.x));
  if (opt.z == 0) {
    fiblcm::SumCheckReport rep =
        fiblcm::check_progression_sum(sieve, opt.r, opt.m, opt.x);
    std::printf("exact          %s\n", rep.exact_sum.get_str().c_str());
    std::printf("predicted      %s\n", format_double(rep.predicted).c_str());
    std::printf("relative_error %s\n",
                format_double(rep.relative_error).c_str());
  } else {
    fiblcm::WeightedSumCheckReport rep = fiblcm::check_weighted_progression_sum(
        sieve, opt.r, opt.m, opt.x, opt.z);
    std::printf("exact          %s\n", format_double(rep.exact_sum).c_str());
    std::printf("predicted      %s\n", format_double(rep.predicted).c_str());
    std::printf("relative_error %s\n",
                format_double(rep.relative_error).c_str());
  }
  return 0;
}

struct RandomOptions {
  long n = 1500;
  long trials = 30;
  std::uint64_t seed = 1;
  std::string csv_path;
};

int run_random(const RandomOptions& opt) {
  fiblcm::MonteCarloSummary s = fiblcm::monte_carlo(opt.n, opt.trials, opt.seed);
  std::printf("# generator mt19937_64, per-trial seeds via splitmix64\n");
  std::printf("%8s %22s %18s\n", "trial", "seed", "log_lcm");
  std::string csv = "trial,seed,log_lcm\n";
  for (long t = 0; t < s.trials; ++t) {
    std::uint64_t trial_seed = fiblcm::RandomSignSource::trial_seed(s.seed, t);
    std::printf("%8ld %22" PRIu64 " %18s\n", t, trial_seed,
                format_double(s.trial_logs[t]).c_str());
    csv += std::to_string(t) + "," + std::to_string(trial_seed) + "," +
           format_double(s.trial_logs[t]) + "\n";
  }
  std::printf("mean_log_lcm %s\n", format_double(s.mean_log_lcm).c_str());
  std::printf("std_error    %s\n", format_double(s.std_error).c_str());
  std::printf("closed_form  %s\n", format_double(s.closed_form).c_str());
  std::printf("limit_slope  %s\n", format_double(s.limit_slope).c_str());
  if (!opt.csv_path.empty()) open_output(opt.csv_path) << csv;
  return 0;
}

struct ExpectOptions {
  long n = 1500;
};

int run_expect(const ExpectOptions& opt) {
  double value = fiblcm::closed_form_expectation(opt.n);
  std::printf("expected_log_lcm %s\n", format_double(value).c_str());
  std::printf("per_n_squared    %s\n",
              format_double(value / (static_cast<double>(opt.n) * opt.n)).c_str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "exact asymptotic constants for lcm(F_3 + s_3, ..., F_n + s_n) over "
      "periodic and random sign sequences"};
  app.require_subcommand(1);

  ConstantOptions constant_opt;
  CLI::App* constant =
      app.add_subcommand("constant", "constant of one pattern as JSON");
  constant->add_option("--pattern", constant_opt.pattern, "sign pattern, e.g. ----+")
      ->required();

  TableOptions table_opt;
  CLI::App* table =
      app.add_subcommand("table", "constants for all patterns of one period");
  table->add_option("--period", table_opt.period, "pattern period")
      ->required()
      ->check(CLI::Range(1, 20));
  table->add_flag("--all", table_opt.all,
                  "include patterns with constant 1/2 (default: flagged only)");
  table->add_option("--format", table_opt.format, "text or csv")
      ->check(CLI::IsMember({"text", "csv"}));

  VerifyOptions verify_opt;
  CLI::App* verify = app.add_subcommand(
      "verify", "brute-force lcm at geometric checkpoints vs. prediction");
  verify->add_option("--pattern", verify_opt.pattern, "sign pattern");
  verify->add_option("--n", verify_opt.n, "largest index")
      ->required()
      ->check(CLI::Range(8L, 1000000L));
  verify->add_option("--start", verify_opt.start, "first shifted index (3 or 5)")
      ->check(CLI::IsMember({3, 5}));
  verify->add_flag("--baseline", verify_opt.baseline,
                   "verify the unshifted lcm(F_1..F_n) instead");
  verify->add_option("--csv", verify_opt.csv_path, "also write rows to a file");

  SetsOptions sets_opt;
  CLI::App* sets =
      app.add_subcommand("sets", "index and residue sets of a pattern as JSON");
  sets->add_option("--pattern", sets_opt.pattern, "sign pattern")->required();
  sets->add_option("--n", sets_opt.n, "range bound")->required();

  PhiOptions phi_opt;
  CLI::App* phi = app.add_subcommand(
      "phi", "primitive parts Phi_d and totients as CSV");
  phi->add_option("--max", phi_opt.max, "table bound")
      ->required()
      ->check(CLI::Range(1L, 100000L));

  SumsOptions sums_opt;
  CLI::App* sums = app.add_subcommand(
      "sums", "totient sums over a progression vs. their prediction");
  sums->add_option("--r", sums_opt.r, "residue")->required();
  sums->add_option("--m", sums_opt.m, "modulus")->required();
  sums->add_option("--x", sums_opt.x, "range bound")->required();
  sums->add_option("--z", sums_opt.z, "weight base in (0,1); omit for exact sum")
      ->check(CLI::Range(1e-9, 0.999999999));

  RandomOptions random_opt;
  CLI::App* random = app.add_subcommand(
      "random", "seeded Monte Carlo estimate of E[log lcm] vs. closed form");
  random->add_option("--n", random_opt.n, "largest index")->required();
  random->add_option("--trials", random_opt.trials, "number of trials")
      ->required()
      ->check(CLI::Range(2L, 1000000L));
  random->add_option("--seed", random_opt.seed, "master seed")->required();
  random->add_option("--csv", random_opt.csv_path, "also write rows to a file");

  ExpectOptions expect_opt;
  CLI::App* expect = app.add_subcommand(
      "expect", "closed-form E[log lcm] under fair random signs");
  expect->add_option("--n", expect_opt.n, "largest index")
      ->required()
      ->check(CLI::Range(1L, 10000000L));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);  // help text, exit 0
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n"
              << "run with --help for usage\n";
    return 1;
  }

  try {
    if (constant->parsed()) return run_constant(constant_opt);
    if (table->parsed()) return run_table(table_opt);
    if (verify->parsed()) {
      if (!verify_opt.baseline && verify_opt.pattern.empty())
        throw std::invalid_argument("verify: need --pattern or --baseline");
      return run_verify(verify_opt);
    }
    if (sets->parsed()) return run_sets(sets_opt);
    if (phi->parsed()) return run_phi(phi_opt);
    if (sums->parsed()) return run_sums(sums_opt);
    if (random->parsed()) return run_random(random_opt);
    if (expect->parsed()) return run_expect(expect_opt);
    std::cerr << "no subcommand selected\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
}
