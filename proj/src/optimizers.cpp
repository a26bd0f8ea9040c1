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

#include "bandvqe/optimizers.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "bandvqe/errors.hpp"
#include "bandvqe/rng.hpp"

namespace bandvqe {
namespace {

// Best-seen bookkeeping shared by both optimizers.
class Tracker {
 public:
  Tracker(const Objective& f, const TraceSink& sink, OptimizerResult& result) : f_(f), sink_(sink), r_(result) {}

  double probe(std::span<const double> x) {
    ++r_.evaluations;
    return f_(x);
  }

  double record(std::span<const double> x) {
    const double v = probe(x);
    ++r_.iterations;
    if (sink_) sink_(x, v);
    if (r_.iterations == 1 || v < r_.best_value) {
      r_.best_value = v;
      r_.best_params.assign(x.begin(), x.end());
    }
    r_.last_params.assign(x.begin(), x.end());
    return v;
  }

 private:
  const Objective& f_;
  const TraceSink& sink_;
  OptimizerResult& r_;
};

void require_budget(int budget) {
  if (budget < 1) throw ContractError("optimizer budget must be >= 1");
}

}  // namespace

OptimizerResult spsa_minimize(const Objective& f, std::vector<double> theta, const SpsaSettings& s, int max_iters,
                              std::uint64_t seed, const TraceSink& sink) {
  require_budget(max_iters);
  OptimizerResult result;
  Tracker tracker(f, sink, result);
  tracker.record(theta);
  if (theta.empty()) return result;

  SplitMix64 rng(seed);
  const std::size_t dim = theta.size();
  std::vector<double> delta(dim);
  std::vector<double> plus(dim);
  std::vector<double> minus(dim);
  for (int k = 1; k < max_iters; ++k) {
    const double ak = s.a / std::pow(k + s.stability, s.alpha);
    const double ck = s.c / std::pow(static_cast<double>(k), s.gamma);
    for (std::size_t i = 0; i < dim; ++i) {
      delta[i] = (rng() >> 63) ? 1.0 : -1.0;
      plus[i] = theta[i] + ck * delta[i];
      minus[i] = theta[i] - ck * delta[i];
    }
    const double diff = tracker.probe(plus) - tracker.probe(minus);
    for (std::size_t i = 0; i < dim; ++i) theta[i] -= ak * diff / (2.0 * ck * delta[i]);
    tracker.record(theta);
  }
  return result;
}

OptimizerResult nelder_mead_minimize(const Objective& f, std::vector<double> init, const SimplexSettings& s,
                                     int max_evals, const TraceSink& sink) {
  require_budget(max_evals);
  OptimizerResult result;
  Tracker tracker(f, sink, result);
  const std::size_t dim = init.size();
  if (dim == 0) {
    tracker.record(init);
    return result;
  }
  auto budget_left = [&] { return result.iterations < max_evals; };

  std::vector<std::vector<double>> pts;
  std::vector<double> vals;
  double step = s.initial_step;
  std::vector<double> centre = std::move(init);

  auto build_simplex = [&] {
    pts.assign(1, centre);
    vals.assign(1, tracker.record(centre));
    for (std::size_t i = 0; i < dim && budget_left(); ++i) {
      std::vector<double> p = centre;
      p[i] += step;
      vals.push_back(tracker.record(p));
      pts.push_back(std::move(p));
    }
  };

  build_simplex();
  std::vector<std::size_t> order(dim + 1);
  while (budget_left() && pts.size() == dim + 1) {
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return vals[a] < vals[b]; });
    const std::size_t best = order.front();
    const std::size_t worst = order.back();
    const std::size_t second = order[dim - 1];

    double size = 0.0;
    for (const auto& p : pts) {
      for (std::size_t i = 0; i < dim; ++i) size = std::max(size, std::abs(p[i] - pts[best][i]));
    }
    if (size < s.collapse_tolerance) {
      centre = pts[best];
      step = std::max(0.1 * step, 10.0 * s.collapse_tolerance);
      build_simplex();
      continue;
    }

    std::vector<double> centroid(dim, 0.0);
    for (std::size_t j = 0; j <= dim; ++j) {
      if (j == worst) continue;
      for (std::size_t i = 0; i < dim; ++i) centroid[i] += pts[j][i] / static_cast<double>(dim);
    }
    auto along = [&](double t) {
      std::vector<double> p(dim);
      for (std::size_t i = 0; i < dim; ++i) p[i] = centroid[i] + t * (pts[worst][i] - centroid[i]);
      return p;
    };

    std::vector<double> xr = along(-1.0);
    const double fr = tracker.record(xr);
    if (fr < vals[best]) {
      if (!budget_left()) break;
      std::vector<double> xe = along(-2.0);
      const double fe = tracker.record(xe);
      if (fe < fr) {
        pts[worst] = std::move(xe);
        vals[worst] = fe;
      } else {
        pts[worst] = std::move(xr);
        vals[worst] = fr;
      }
      continue;
    }
    if (fr < vals[second]) {
      pts[worst] = std::move(xr);
      vals[worst] = fr;
      continue;
    }
    if (!budget_left()) break;
    const bool outside = fr < vals[worst];
    std::vector<double> xc = along(outside ? -0.5 : 0.5);
    const double fc = tracker.record(xc);
    if (fc < (outside ? fr : vals[worst])) {
      pts[worst] = std::move(xc);
      vals[worst] = fc;
      continue;
    }
    // Shrink towards the best vertex.
    for (std::size_t j = 0; j <= dim && budget_left(); ++j) {
      if (j == best) continue;
      for (std::size_t i = 0; i < dim; ++i) pts[j][i] = pts[best][i] + 0.5 * (pts[j][i] - pts[best][i]);
      vals[j] = tracker.record(pts[j]);
    }
  }
  return result;
}

}  // namespace bandvqe
