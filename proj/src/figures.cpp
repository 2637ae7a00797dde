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

#include "mktinfo/figures.hpp"

#include <algorithm>
#include <cmath>

#include "mktinfo/asymptotic.hpp"
#include "mktinfo/efficiency_test.hpp"
#include "mktinfo/error.hpp"
#include "mktinfo/io.hpp"

namespace mktinfo {

void write_bound_csv(std::ostream& out, const BoundCurveConfig& config) {
  if (config.points < 2 || !(config.n_min > 0.0) ||
      !(config.n_max > config.n_min)) {
    throw Error(ErrorKind::kDomain, "bound grid needs 0 < n_min < n_max and >= 2 points");
  }
  out << "n,q2,q3,q4,q5\n";
  const double lo = std::log10(config.n_min);
  const double hi = std::log10(config.n_max);
  for (int i = 0; i < config.points; ++i) {
    const double n = std::pow(10.0, lo + (hi - lo) * i / (config.points - 1));
    out << format_real(n);
    for (int q = 2; q <= 5; ++q) {
      out << ',' << format_real(error_bound({config.t, config.p, q, config.epsilon, n}));
    }
    out << '\n';
  }
}

void write_critical_csv(std::ostream& out, int length,
                        std::span<const std::uint64_t> n_grid) {
  out << "n,crit05,crit01,crit001\n";
  for (auto n : n_grid) {
    const auto params = gamma_params(length, n);
    out << n;
    for (double alpha : kSignificanceLevels) {
      out << ',' << format_real(critical_value(alpha, params));
    }
    out << '\n';
  }
}

void write_distribution_csv(std::ostream& out, const SimulationReport& report) {
  std::vector<double> sorted = report.samples;
  std::sort(sorted.begin(), sorted.end());
  const auto m = static_cast<double>(sorted.size());
  out << "x,empirical_cdf,gamma_cdf\n";
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    out << format_real(sorted[i]) << ','
        << format_real(static_cast<double>(i + 1) / m) << ','
        << format_real(cdf(std::max(sorted[i], 0.0), report.params)) << '\n';
  }
}

void write_simulation_csv(std::ostream& out, const SimulationReport& report) {
  out << "trial,info,p_value\n";
  for (const auto& r : report.records) {
    out << r.trial << ',' << format_real(r.info) << ',' << format_real(r.p_value)
        << '\n';
  }
}

void write_calibration_csv(std::ostream& out,
                           std::span<const CalibrationPoint> curve) {
  out << "n,ks_stat,ks_pvalue\n";
  for (const auto& point : curve) {
    out << point.n << ',' << format_real(point.ks_statistic) << ','
        << format_real(point.ks_pvalue) << '\n';
  }
}

void write_calibration_figure_csv(std::ostream& out,
                                  std::span<const CalibrationPoint> curve,
                                  std::uint64_t trials) {
  std::vector<std::string> thresholds;
  for (double alpha : kSignificanceLevels) {
    thresholds.push_back(format_real(ks_critical_value(alpha, trials)));
  }
  out << "n,ks_stat,ks_pvalue,thr05,thr01,thr001\n";
  for (const auto& point : curve) {
    out << point.n << ',' << format_real(point.ks_statistic) << ','
        << format_real(point.ks_pvalue);
    for (const auto& t : thresholds) out << ',' << t;
    out << '\n';
  }
}

}  // namespace mktinfo
