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
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bandvqe/circuit.hpp"
#include "bandvqe/encodings.hpp"
#include "bandvqe/hamiltonian.hpp"
#include "bandvqe/measurement.hpp"
#include "bandvqe/optimizers.hpp"
#include "bandvqe/pauli.hpp"

namespace bandvqe {

enum class OptimizerKind { Auto, Spsa, Simplex };
enum class EvaluatorKind { Exact, Sampled, Noisy };

std::string_view to_string(OptimizerKind kind);
OptimizerKind parse_optimizer_kind(std::string_view text);
std::string_view to_string(EvaluatorKind kind);

/// Parses "1,3,5,7" into a strictly increasing list of band values.
std::vector<int> parse_schedule(std::string_view text);

struct VqeConfig {
  EncodingKind encoding = EncodingKind::Gray;
  int layers = 3;
  OptimizerKind optimizer = OptimizerKind::Auto;
  /// Trace rows per warm-start segment.
  int max_iters = 1000;
  /// Shots per measurement group; 0 means exact expectation values.
  int shots = 0;
  std::optional<NoiseModel> noise;
  std::uint64_t seed = 1;
  /// Band values visited in order; empty means a single segment at K = N - 1.
  std::vector<int> k_schedule;
  SpsaSettings spsa;
  SimplexSettings simplex;

  EvaluatorKind evaluator() const;
  /// Auto picks the simplex search for exact evaluation and SPSA otherwise.
  OptimizerKind resolved_optimizer() const;
  std::vector<int> schedule_for(int n_states) const;
  void validate(int n_states) const;
};

/// Energy of an ansatz state under one of the three evaluation modes.
class EnergyEvaluator {
 public:
  EnergyEvaluator(const PauliSum& observable, const Ansatz& ansatz, const VqeConfig& config);

  EvaluatorKind kind() const { return kind_; }
  double operator()(std::span<const double> params, std::uint64_t seed) const;
  double exact(std::span<const double> params) const;

 private:
  PauliSum observable_;
  Ansatz ansatz_;
  MeasurementPlan plan_;
  EvaluatorKind kind_;
  int shots_;
  NoiseModel noise_;
};

struct TraceEntry {
  int segment_k = 0;
  int iteration = 0;  // 1-based, cumulative across segments
  double energy = 0.0;
  std::vector<double> params;
};

struct Segment {
  int k = 0;
  double exact_energy = 0.0;  // lowest eigenvalue of the band-truncated matrix
  std::vector<TraceEntry> trace;
  std::vector<double> best_params;
  double best_energy = 0.0;
  int evaluations = 0;
};

struct RunSummary {
  double mean = 0.0;
  double std = 0.0;  // population standard deviation
  int count = 0;
};

struct VqeRun {
  VqeConfig config;
  std::vector<TraceEntry> trace;
  std::vector<Segment> segments;
  std::vector<double> final_params;
  double final_energy = 0.0;
  std::optional<double> nr_value;
  RunSummary summary;
};

/// Runs the configured optimizer on one observable. Trace iterations are
/// numbered from `first_iteration`; `segment_index` separates random streams
/// of successive segments.
Segment minimize(const PauliSum& observable, const Ansatz& ansatz, const EnergyEvaluator& evaluator,
                 const VqeConfig& config, std::span<const double> init_params, int segment_k = 0,
                 int segment_index = 0, int first_iteration = 1);

Ansatz make_ansatz(const VqeConfig& config, int n_states);

/// Trains at each band of the schedule in turn, starting every segment from
/// the best parameters of the previous one (all zeros for the first).
VqeRun warm_start_run(const BandedHamiltonian& h, const VqeConfig& config);

/// Exact energy at `params` of the band-k observable on the noiseless ansatz.
double noise_resilient_value(const BandedHamiltonian& h, int k, const VqeConfig& config,
                             std::span<const double> params);

struct NrEstimate {
  double mean = 0.0;
  double std = 0.0;  // sample standard deviation (n - 1)
  std::vector<double> values;
};

/// Repeats the training `repeats` times with derived seeds and reports the
/// spread of the resulting noise-resilient values. Repeats run concurrently;
/// the reduction order is fixed.
NrEstimate nr_error_estimate(const BandedHamiltonian& h, int k, const VqeConfig& config, int repeats);

/// Mean and population std over the last min(100, n) trace energies.
RunSummary summarize_run(const VqeRun& run, int tail = 100);
RunSummary summarize_energies(std::span<const double> energies, int tail = 100);

/// CSV with header "segment_K,iteration,energy_mev", full precision.
void write_trace_csv(std::ostream& out, const VqeRun& run);

}  // namespace bandvqe
