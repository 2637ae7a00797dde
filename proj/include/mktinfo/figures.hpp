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

#ifndef MKTINFO_FIGURES_HPP_
#define MKTINFO_FIGURES_HPP_

#include <cstdint>
#include <ostream>
#include <span>
#include <vector>

#include "mktinfo/montecarlo.hpp"

namespace mktinfo {

/// n grid used by the Kolmogorov-Smirnov calibration curve.
inline const std::vector<std::uint64_t> kDefaultCalibrationGrid = {
    25, 50, 75, 100, 150, 200, 300, 400, 600, 800, 1000};

struct BoundCurveConfig {
  double t = 1.0;
  double p = 0.5;
  double epsilon = 1.0;
  double n_min = 1e2;
  double n_max = 1e6;
  int points = 41;  // log-spaced
};

/// `n,q2,q3,q4,q5`.
void write_bound_csv(std::ostream& out, const BoundCurveConfig& config);

/// `n,crit05,crit01,crit001`: information at p-values 5%, 1%, 0.1% against
/// the number of (L+1)-grams.
void write_critical_csv(std::ostream& out, int length,
                        std::span<const std::uint64_t> n_grid);

/// `x,empirical_cdf,gamma_cdf` at each sorted simulated sample.
void write_distribution_csv(std::ostream& out, const SimulationReport& report);

/// `trial,info,p_value`.
void write_simulation_csv(std::ostream& out, const SimulationReport& report);

/// `n,ks_stat,ks_pvalue`.
void write_calibration_csv(std::ostream& out,
                           std::span<const CalibrationPoint> curve);

/// `n,ks_stat,ks_pvalue,thr05,thr01,thr001`, with the Kolmogorov critical
/// distances for `trials` samples.
void write_calibration_figure_csv(std::ostream& out,
                                  std::span<const CalibrationPoint> curve,
                                  std::uint64_t trials);

}  // namespace mktinfo

#endif  // MKTINFO_FIGURES_HPP_
