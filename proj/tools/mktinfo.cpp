// Copyright 2026 The mktinfo Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "mktinfo/asymptotic.hpp"
#include "mktinfo/efficiency_test.hpp"
#include "mktinfo/error.hpp"
#include "mktinfo/exact_dist.hpp"
#include "mktinfo/figures.hpp"
#include "mktinfo/io.hpp"
#include "mktinfo/montecarlo.hpp"
#include "mktinfo/rolling.hpp"
#include "mktinfo/symbolic.hpp"

namespace {

using namespace mktinfo;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitData = 2;
constexpr int kExitNumerical = 3;

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kUsage:
    case ErrorKind::kDomain:
      return kExitUsage;
    case ErrorKind::kRange:
    case ErrorKind::kBudgetExceeded:
      return kExitNumerical;
    default:
      return kExitData;
  }
}

// Writes to --out when given, otherwise stdout.
class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_ = std::make_unique<std::ofstream>(path, std::ios::binary);
      if (!*file_) throw Error(ErrorKind::kUsage, "cannot write '" + path + "'");
    }
  }
  std::ostream& stream() { return file_ ? *file_ : std::cout; }

 private:
  std::unique_ptr<std::ofstream> file_;
};

template <typename T>
std::vector<T> parse_list(const std::string& text) {
  std::vector<T> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::stringstream is(item);
    T value{};
    if (!(is >> value) || !(is >> std::ws).eof()) {
      throw Error(ErrorKind::kUsage, "cannot parse list item '" + item + "'");
    }
    out.push_back(value);
  }
  if (out.empty()) throw Error(ErrorKind::kUsage, "empty list");
  return out;
}

GeneratorSpec parse_generator(const std::string& text, std::uint64_t n) {
  if (text == "fair") return GeneratorSpec::fair_coin(n);
  const auto colon = text.find(':');
  const std::string kind = text.substr(0, colon);
  const std::string args = colon == std::string::npos ? "" : text.substr(colon + 1);
  if (kind == "biased" && !args.empty()) {
    const auto v = parse_list<double>(args);
    if (v.size() == 1) return GeneratorSpec::biased_coin(v[0], n);
  } else if (kind == "markov" && !args.empty()) {
    const auto v = parse_list<double>(args);
    if (v.size() == 2) return GeneratorSpec::markov(v[0], v[1], n);
  }
  throw Error(ErrorKind::kUsage,
              "generator must be fair, biased:P or markov:PI0,PI1");
}

void print_test(std::ostream& out, const TestResult& r, bool csv) {
  std::vector<double> crit;
  for (double alpha : kSignificanceLevels) {
    crit.push_back(critical_value(alpha, r.params));
  }
  if (csv) {
    out << "L,N,info,p_value,shape,scale,crit95,crit99,crit999,reject95,"
           "reject99,reject999,small_sample\n";
    out << r.estimate.length << ',' << r.estimate.total << ','
        << format_real(r.estimate.info) << ',' << format_real(r.p_value) << ','
        << r.params.shape << ',' << format_real(r.params.scale);
    for (double c : crit) out << ',' << format_real(c);
    out << ',' << r.reject_95 << ',' << r.reject_99 << ',' << r.reject_999
        << ',' << r.small_sample_warning << '\n';
    return;
  }
  out << "L            " << r.estimate.length << '\n'
      << "N            " << r.estimate.total << '\n'
      << "info         " << format_real(r.estimate.info) << " bits\n"
      << "gamma shape  " << r.params.shape << '\n'
      << "gamma scale  " << format_real(r.params.scale) << '\n'
      << "p_value      " << format_real(r.p_value) << '\n';
  const char* names[] = {"95%", "99%", "99.9%"};
  const bool flags[] = {r.reject_95, r.reject_99, r.reject_999};
  for (std::size_t k = 0; k < 3; ++k) {
    out << "level " << names[k] << (k == 2 ? "  " : "    ") << "critical "
        << format_real(crit[k]) << "  " << (flags[k] ? "REJECT" : "keep")
        << '\n';
  }
  if (r.small_sample_warning) {
    out << "warning: N < " << kSmallSampleThreshold
        << ", the gamma approximation may be inaccurate\n";
  }
}

void print_simulation_summary(std::ostream& err, const SimulationReport& r) {
  err << "trials " << r.trials << ", retained " << r.samples.size()
      << ", unobserved_prefix " << r.unobserved << '\n';
  if (r.ks_statistic) {
    err << "ks_stat " << format_real(*r.ks_statistic) << ", ks_pvalue "
        << format_real(*r.ks_pvalue) << '\n';
  }
  for (const auto& [level, rate] : r.rejection_rates) {
    err << "rejection_rate " << format_real(level) << ' ' << format_real(rate)
        << '\n';
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Market information of binary price-return series and an "
               "entropy test of weak-form market efficiency"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string out_path;
  app.add_option("--out", out_path, "Write CSV output here instead of stdout");

  // encode
  auto* encode = app.add_subcommand("encode", "Price CSV -> increase indicators");
  std::string input;
  encode->add_option("--input", input, "date,price CSV")->required();

  // test
  auto* test = app.add_subcommand("test", "Efficiency test on one sample");
  std::string bit_string;
  int length = 1;
  std::size_t window = 0;
  bool as_csv = false;
  auto* test_input = test->add_option("--input", input, "date,price CSV");
  auto* test_bits = test->add_option("--bits", bit_string, "String of 0/1");
  test_input->excludes(test_bits);
  test->add_option("-L,--L", length, "Prefix length")->capture_default_str();
  test->add_option("--window", window,
                   "Use only the last WINDOW returns of the price file");
  test->add_flag("--csv", as_csv, "Machine-readable output");

  // roll
  auto* roll = app.add_subcommand("roll", "Rolling-window test over a price CSV");
  RollingConfig roll_cfg;
  std::string summary_path;
  roll->add_option("--input", input, "date,price CSV")->required();
  roll->add_option("--window", roll_cfg.window, "Returns per window")
      ->capture_default_str();
  roll->add_option("-L,--L", roll_cfg.length, "Prefix length")
      ->capture_default_str();
  roll->add_option("--step", roll_cfg.step, "Rows between windows")
      ->capture_default_str();
  roll->add_option("--workers", roll_cfg.workers, "Worker threads")
      ->capture_default_str();
  roll->add_option("--summary", summary_path,
                   "Write the rejection summary here (default: stderr)");

  // simulate
  auto* sim = app.add_subcommand("simulate", "Monte Carlo draws of the statistic");
  std::string generator = "fair";
  std::uint64_t n = 100;
  std::uint64_t trials = kDefaultTrials;
  std::uint64_t seed = 0;
  unsigned workers = 1;
  sim->add_option("--generator", generator, "fair | biased:P | markov:PI0,PI1")
      ->capture_default_str();
  sim->add_option("--n", n, "Bits per trajectory")->capture_default_str();
  sim->add_option("-L,--L", length, "Prefix length")->capture_default_str();
  sim->add_option("--trials", trials, "Trajectories")->capture_default_str();
  sim->add_option("--seed", seed, "RNG seed")->required();
  sim->add_option("--workers", workers, "Worker threads")->capture_default_str();

  // calibrate
  auto* cal = app.add_subcommand("calibrate", "KS distance to the gamma law vs n");
  std::string grid_text = "25,50,100,200,400";
  cal->add_option("-L,--L", length, "Prefix length")->capture_default_str();
  cal->add_option("--grid", grid_text, "Comma-separated n values")
      ->capture_default_str();
  cal->add_option("--trials", trials, "Trajectories per n")->capture_default_str();
  cal->add_option("--seed", seed, "RNG seed")->required();
  cal->add_option("--workers", workers, "Worker threads")->capture_default_str();

  // figures
  auto* fig = app.add_subcommand("figures", "Plot data");
  std::string which;
  std::optional<std::uint64_t> fig_seed;
  fig->add_option("--which", which, "bound | distribution | calibration | critical")
      ->required()
      ->check(CLI::IsMember({"bound", "distribution", "calibration", "critical"}));
  fig->add_option("-L,--L", length, "Prefix length")->capture_default_str();
  fig->add_option("--n", n, "Bits per trajectory (distribution)")
      ->capture_default_str();
  fig->add_option("--trials", trials, "Trajectories")->capture_default_str();
  fig->add_option("--seed", fig_seed, "RNG seed (distribution, calibration)");
  fig->add_option("--workers", workers, "Worker threads")->capture_default_str();

  // exact
  auto* exact = app.add_subcommand("exact", "Exact conditional law of the statistic");
  std::string counts_text;
  std::string what = "summary";
  int order = 1;
  double t = 1.0;
  std::uint64_t budget = kDefaultTermBudget;
  exact->add_option("--counts", counts_text, "Prefix counts n_i, comma-separated")
      ->required();
  exact->add_option("--what", what, "summary | mean | moment | mgf | pmf")
      ->check(CLI::IsMember({"summary", "mean", "moment", "mgf", "pmf"}))
      ->capture_default_str();
  exact->add_option("--r", order, "Moment order")->capture_default_str();
  exact->add_option("--t", t, "MGF argument")->capture_default_str();
  exact->add_option("--budget", budget, "Max tuples in nested sums")
      ->capture_default_str();

  // bound
  auto* bound = app.add_subcommand("bound", "Remainder bound curves n,q2..q5");
  BoundCurveConfig bound_cfg;
  bound->add_option("--t", bound_cfg.t, "MGF argument")->capture_default_str();
  bound->add_option("--p", bound_cfg.p, "Prefix probability")->capture_default_str();
  bound->add_option("--epsilon", bound_cfg.epsilon, "Scale constant")->capture_default_str();
  bound->add_option("--nmin", bound_cfg.n_min, "Smallest prefix count")->capture_default_str();
  bound->add_option("--nmax", bound_cfg.n_max, "Largest prefix count")->capture_default_str();
  bound->add_option("--points", bound_cfg.points, "Log-spaced grid points")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    Output output(out_path);
    auto& out = output.stream();

    if (*encode) {
      const auto series = read_price_csv_file(input);
      const auto bits = encode_returns(series);
      out << "date,bit\n";
      for (std::size_t i = 0; i < bits.size(); ++i) {
        out << format_date(series.dates()[i + 1]) << ','
            << static_cast<int>(bits.bits[i]) << '\n';
      }
    } else if (*test) {
      BinarySequence bits;
      if (!input.empty()) {
        const auto series = read_price_csv_file(input);
        bits = encode_returns(series);
        if (window > 0) {
          if (window > bits.size()) {
            throw Error(ErrorKind::kInputTooShort,
                        "file holds fewer returns than --window");
          }
          bits.bits.erase(bits.bits.begin(),
                          bits.bits.end() - static_cast<std::ptrdiff_t>(window));
        }
      } else {
        bits = BinarySequence::from_string(bit_string);
      }
      if (bits.size() == 0) {
        throw Error(ErrorKind::kUsage, "test needs --input or a non-empty --bits");
      }
      const auto result = test_efficiency(bits, length);
      print_test(out, result, as_csv);
    } else if (*roll) {
      const auto series = read_price_csv_file(input);
      const auto result = run_roll(series, roll_cfg);
      write_rolling_csv(out, result, roll_cfg);
      if (summary_path.empty()) {
        write_rolling_summary(std::cerr, result);
      } else {
        std::ofstream summary(summary_path, std::ios::binary);
        if (!summary) throw Error(ErrorKind::kUsage, "cannot write summary");
        write_rolling_summary(summary, result);
      }
    } else if (*sim) {
      const auto report =
          simulate(parse_generator(generator, n), length, trials, seed, workers);
      write_simulation_csv(out, report);
      print_simulation_summary(std::cerr, report);
    } else if (*cal) {
      const auto grid = parse_list<std::uint64_t>(grid_text);
      const auto curve = calibration_curve(length, grid, trials, seed, workers);
      write_calibration_csv(out, curve);
      for (const auto& point : curve) {
        if (point.unobserved > 0) {
          std::cerr << "n=" << point.n << ": " << point.unobserved
                    << " trial(s) with an unobserved prefix dropped\n";
        }
      }
    } else if (*fig) {
      if (which == "bound") {
        write_bound_csv(out, BoundCurveConfig{});
      } else if (which == "critical") {
        std::vector<std::uint64_t> grid;
        for (std::uint64_t v = 50; v <= 1000; v += 10) grid.push_back(v);
        write_critical_csv(out, length, grid);
      } else {
        if (!fig_seed) {
          throw Error(ErrorKind::kUsage, "--seed is required for " + which);
        }
        if (which == "distribution") {
          const auto report = simulate(GeneratorSpec::fair_coin(n), length,
                                       trials, *fig_seed, workers);
          write_distribution_csv(out, report);
          print_simulation_summary(std::cerr, report);
        } else {
          const auto curve = calibration_curve(length, kDefaultCalibrationGrid,
                                               trials, *fig_seed, workers);
          write_calibration_figure_csv(out, curve, trials);
        }
      }
    } else if (*exact) {
      const auto setup =
          ConditionalSetup::from_counts(parse_list<std::uint64_t>(counts_text));
      if (what == "mean") {
        out << "mean\n" << format_real(mean_exact(setup)) << '\n';
      } else if (what == "moment") {
        out << "r,moment\n"
            << order << ',' << format_real(moment_exact(order, setup, budget))
            << '\n';
      } else if (what == "mgf") {
        out << "t,mgf\n"
            << format_real(t) << ',' << format_real(mgf_exact(t, setup)) << '\n';
      } else if (what == "pmf") {
        const auto pmf = enumerate_pmf(setup, budget);
        out << "value,probability\n";
        for (const auto& atom : pmf.atoms) {
          out << format_real(atom.value) << ',' << format_real(atom.probability)
              << '\n';
        }
      } else {
        const double mean = mean_exact(setup);
        const double second = moment_exact(2, setup, budget);
        const auto params = gamma_params(setup.length(), [&] {
          std::uint64_t total = 0;
          for (auto c : setup.counts()) total += c;
          return total;
        }());
        out << "L,N,mean,variance,gamma_mean,gamma_variance\n"
            << setup.length() << ',' << params.total << ',' << format_real(mean)
            << ',' << format_real(second - mean * mean) << ','
            << format_real(params.mean()) << ','
            << format_real(params.mean() * params.scale) << '\n';
      }
    } else if (*bound) {
      write_bound_csv(out, bound_cfg);
    }
    out.flush();
  } catch (const Error& e) {
    std::cerr << "error (" << to_string(e.kind()) << "): " << e.what() << '\n';
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitNumerical;
  }
  return kExitOk;
}
