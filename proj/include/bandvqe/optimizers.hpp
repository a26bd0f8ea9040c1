// Copyright 2026 The bandvqe Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace bandvqe {

using Objective = std::function<double(std::span<const double>)>;

/// Receives every evaluation an optimizer reports as an iterate.
using TraceSink = std::function<void(std::span<const double> params, double value)>;

/// Gains a_k = a / (k + stability)^alpha and c_k = c / k^gamma.
struct SpsaSettings {
  double a = 0.1;
  double c = 0.15;
  double stability = 100.0;
  double alpha = 0.602;
  double gamma = 0.101;
};

struct SimplexSettings {
  double initial_step = 0.3;
  /// Restart around the best vertex once the simplex collapses below this.
  double collapse_tolerance = 1e-7;
};

struct OptimizerResult {
  std::vector<double> best_params;
  double best_value = 0.0;
  std::vector<double> last_params;
  int iterations = 0;   // trace rows emitted
  int evaluations = 0;  // objective calls, including SPSA gradient probes
};

/// Simultaneous-perturbation stochastic approximation. Each iteration probes
/// theta +/- c_k Delta, steps, then evaluates and reports the new iterate; the
/// starting point is reported first. Emits at most `max_iters` trace rows.
OptimizerResult spsa_minimize(const Objective& f, std::vector<double> init, const SpsaSettings& settings,
                              int max_iters, std::uint64_t seed, const TraceSink& sink);

/// Nelder-Mead direct search with restarts on collapse. Every evaluation is
/// reported, and at most `max_evals` are made.
OptimizerResult nelder_mead_minimize(const Objective& f, std::vector<double> init, const SimplexSettings& settings,
                                     int max_evals, const TraceSink& sink);

}  // namespace bandvqe
