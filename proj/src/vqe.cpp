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

#include "bandvqe/vqe.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <future>
#include <ostream>
#include <thread>

#include "bandvqe/errors.hpp"
#include "bandvqe/rng.hpp"
#include "bandvqe/statevector.hpp"

namespace bandvqe {
namespace {

constexpr std::uint64_t kEvaluationStream = 0x45;
constexpr std::uint64_t kOptimizerStream = 0x4f;
constexpr std::uint64_t kRepeatStream = 0x52;

std::string lowercase(std::string_view text) {
  std::string out;
  for (char c : text) out += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

}  // namespace

std::string_view to_string(OptimizerKind kind) {
  switch (kind) {
    case OptimizerKind::Auto: return "auto";
    case OptimizerKind::Spsa: return "spsa";
    case OptimizerKind::Simplex: return "simplex";
  }
  return "auto";
}

OptimizerKind parse_optimizer_kind(std::string_view text) {
  const std::string t = lowercase(text);
  if (t == "auto") return OptimizerKind::Auto;
  if (t == "spsa") return OptimizerKind::Spsa;
  if (t == "simplex" || t == "nelder-mead" || t == "neldermead") return OptimizerKind::Simplex;
  throw ContractError("unknown optimizer '" + std::string(text) + "' (expected auto, spsa or simplex)");
}

std::string_view to_string(EvaluatorKind kind) {
  switch (kind) {
    case EvaluatorKind::Exact: return "exact";
    case EvaluatorKind::Sampled: return "sampled";
    case EvaluatorKind::Noisy: return "noisy";
  }
  return "exact";
}

std::vector<int> parse_schedule(std::string_view text) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    std::string item(text.substr(pos, comma - pos));
    item.erase(0, item.find_first_not_of(" \t"));
    item.erase(item.find_last_not_of(" \t") + 1);
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (item.empty() || used != item.size()) throw ContractError("invalid schedule entry '" + item + "'");
    if (!out.empty() && v <= out.back()) throw ContractError("schedule must be strictly increasing");
    out.push_back(v);
    pos = comma + 1;
  }
  return out;
}

EvaluatorKind VqeConfig::evaluator() const {
  if (noise) return EvaluatorKind::Noisy;
  return shots > 0 ? EvaluatorKind::Sampled : EvaluatorKind::Exact;
}

OptimizerKind VqeConfig::resolved_optimizer() const {
  if (optimizer != OptimizerKind::Auto) return optimizer;
  return evaluator() == EvaluatorKind::Exact ? OptimizerKind::Simplex : OptimizerKind::Spsa;
}

std::vector<int> VqeConfig::schedule_for(int n_states) const {
  return k_schedule.empty() ? std::vector<int>{n_states - 1} : k_schedule;
}

void VqeConfig::validate(int n_states) const {
  if (max_iters < 1) throw ContractError("max_iters must be >= 1");
  if (shots < 0) throw ContractError("shots must be >= 0");
  if (encoding == EncodingKind::Gray && layers < 1) throw ContractError("layers must be >= 1");
  if (noise) {
    noise->validate();
    if (shots < 1) throw ContractError("noisy evaluation needs shots >= 1");
  }
  const std::vector<int> schedule = schedule_for(n_states);
  for (std::size_t i = 0; i < schedule.size(); ++i) {
    if (schedule[i] < 0 || schedule[i] > n_states - 1) {
      throw ContractError("schedule value K=" + std::to_string(schedule[i]) + " outside [0, " +
                          std::to_string(n_states - 1) + "]");
    }
    if (i > 0 && schedule[i] <= schedule[i - 1]) throw ContractError("schedule must be strictly increasing");
  }
}

EnergyEvaluator::EnergyEvaluator(const PauliSum& observable, const Ansatz& ansatz, const VqeConfig& config)
    : observable_(observable),
      ansatz_(ansatz),
      plan_(observable),
      kind_(config.evaluator()),
      shots_(config.shots),
      noise_(config.noise.value_or(NoiseModel::noiseless())) {
  if (static_cast<int>(observable.num_qubits()) != ansatz.num_qubits()) {
    throw ContractError("observable and ansatz qubit counts differ");
  }
}

double EnergyEvaluator::exact(std::span<const double> params) const {
  return expectation_exact(apply(ansatz_.circuit(params), StateVector(ansatz_.num_qubits())), observable_);
}

double EnergyEvaluator::operator()(std::span<const double> params, std::uint64_t seed) const {
  double e = 0.0;
  switch (kind_) {
    case EvaluatorKind::Exact: e = exact(params); break;
    case EvaluatorKind::Sampled:
      e = plan_.sampled(apply(ansatz_.circuit(params), StateVector(ansatz_.num_qubits())), shots_, seed);
      break;
    case EvaluatorKind::Noisy: e = plan_.noisy(ansatz_.circuit(params), noise_, shots_, seed); break;
  }
  if (!std::isfinite(e)) throw NumericalError("energy evaluation is not finite");
  return e;
}

Segment minimize(const PauliSum& observable, const Ansatz& ansatz, const EnergyEvaluator& evaluator,
                 const VqeConfig& config, std::span<const double> init_params, int segment_k, int segment_index,
                 int first_iteration) {
  if (static_cast<int>(init_params.size()) != ansatz.parameter_count()) {
    throw ContractError("expected " + std::to_string(ansatz.parameter_count()) + " initial parameters, got " +
                        std::to_string(init_params.size()));
  }
  if (static_cast<int>(observable.num_qubits()) != ansatz.num_qubits()) {
    throw ContractError("observable and ansatz qubit counts differ");
  }
  Segment seg;
  seg.k = segment_k;
  const auto stream = static_cast<std::uint64_t>(segment_index);
  std::uint64_t calls = 0;
  Objective objective = [&](std::span<const double> x) {
    const std::uint64_t call = calls++;
    try {
      return evaluator(x, stream_seed(config.seed, kEvaluationStream, stream, call));
    } catch (const ContractError& e) {
      throw ContractError("evaluation " + std::to_string(call + 1) + ": " + e.what());
    } catch (const std::exception& e) {
      throw NumericalError("evaluation " + std::to_string(call + 1) + ": " + e.what());
    }
  };
  TraceSink sink = [&](std::span<const double> x, double value) {
    seg.trace.push_back(
        {segment_k, first_iteration + static_cast<int>(seg.trace.size()), value, std::vector<double>(x.begin(), x.end())});
  };
  std::vector<double> init(init_params.begin(), init_params.end());
  OptimizerResult r = config.resolved_optimizer() == OptimizerKind::Spsa
                          ? spsa_minimize(objective, std::move(init), config.spsa, config.max_iters,
                                          stream_seed(config.seed, kOptimizerStream, stream), sink)
                          : nelder_mead_minimize(objective, std::move(init), config.simplex, config.max_iters, sink);
  seg.best_params = std::move(r.best_params);
  seg.best_energy = r.best_value;
  seg.evaluations = r.evaluations;
  return seg;
}

Ansatz make_ansatz(const VqeConfig& config, int n_states) {
  return config.encoding == EncodingKind::OneHot ? Ansatz::onehot(n_states)
                                                 : Ansatz::gray(gray_qubit_count(n_states), config.layers);
}

VqeRun warm_start_run(const BandedHamiltonian& h, const VqeConfig& config) {
  config.validate(h.dim());
  VqeRun run;
  run.config = config;
  const Ansatz ansatz = make_ansatz(config, h.dim());
  std::vector<double> params(static_cast<std::size_t>(ansatz.parameter_count()), 0.0);
  const std::vector<int> schedule = config.schedule_for(h.dim());
  for (std::size_t j = 0; j < schedule.size(); ++j) {
    const BandedHamiltonian hk = truncate_band(h, schedule[j]);
    const PauliSum observable = encode(hk, config.encoding);
    const EnergyEvaluator evaluator(observable, ansatz, config);
    Segment seg = minimize(observable, ansatz, evaluator, config, params, schedule[j], static_cast<int>(j),
                           static_cast<int>(run.trace.size()) + 1);
    seg.exact_energy = lowest_eigenpair(hk).energy;
    run.trace.insert(run.trace.end(), seg.trace.begin(), seg.trace.end());
    params = seg.best_params;
    run.segments.push_back(std::move(seg));
  }
  run.final_params = params;
  run.final_energy = run.segments.back().best_energy;
  if (config.noise) run.nr_value = noise_resilient_value(h, schedule.back(), config, run.final_params);
  run.summary = summarize_run(run);
  return run;
}

double noise_resilient_value(const BandedHamiltonian& h, int k, const VqeConfig& config,
                             std::span<const double> params) {
  const Ansatz ansatz = make_ansatz(config, h.dim());
  if (static_cast<int>(params.size()) != ansatz.parameter_count()) {
    throw ContractError("expected " + std::to_string(ansatz.parameter_count()) + " parameters, got " +
                        std::to_string(params.size()));
  }
  const PauliSum observable = encode(truncate_band(h, k), config.encoding);
  return expectation_exact(apply(ansatz.circuit(params), StateVector(ansatz.num_qubits())), observable);
}

NrEstimate nr_error_estimate(const BandedHamiltonian& h, int k, const VqeConfig& config, int repeats) {
  if (repeats < 2) throw ContractError("nr_error_estimate needs repeats >= 2");
  config.validate(h.dim());
  NrEstimate out;
  out.values.assign(static_cast<std::size_t>(repeats), 0.0);
  auto one = [&](int i) {
    VqeConfig c = config;
    c.seed = stream_seed(config.seed, kRepeatStream, static_cast<std::uint64_t>(i));
    const VqeRun run = warm_start_run(h, c);
    out.values[static_cast<std::size_t>(i)] = noise_resilient_value(h, k, c, run.final_params);
  };
  const int workers = std::max(1, std::min<int>(repeats, static_cast<int>(std::thread::hardware_concurrency())));
  for (int start = 0; start < repeats; start += workers) {
    std::vector<std::future<void>> batch;
    for (int i = start; i < std::min(repeats, start + workers); ++i) batch.push_back(std::async(std::launch::async, one, i));
    for (auto& f : batch) f.get();
  }
  double sum = 0.0;
  for (double v : out.values) sum += v;
  out.mean = sum / repeats;
  double ss = 0.0;
  for (double v : out.values) ss += (v - out.mean) * (v - out.mean);
  out.std = std::sqrt(ss / (repeats - 1));
  return out;
}

RunSummary summarize_energies(std::span<const double> energies, int tail) {
  if (energies.empty()) throw ContractError("cannot summarize an empty trace");
  const std::size_t count = std::min(energies.size(), static_cast<std::size_t>(std::max(tail, 1)));
  const auto last = energies.subspan(energies.size() - count);
  double sum = 0.0;
  for (double e : last) sum += e;
  const double mean = sum / static_cast<double>(count);
  double ss = 0.0;
  for (double e : last) ss += (e - mean) * (e - mean);
  return {mean, std::sqrt(ss / static_cast<double>(count)), static_cast<int>(count)};
}

RunSummary summarize_run(const VqeRun& run, int tail) {
  std::vector<double> energies;
  energies.reserve(run.trace.size());
  for (const TraceEntry& e : run.trace) energies.push_back(e.energy);
  return summarize_energies(energies, tail);
}

void write_trace_csv(std::ostream& out, const VqeRun& run) {
  out << "segment_K,iteration,energy_mev\n";
  char buf[64];
  for (const TraceEntry& e : run.trace) {
    std::snprintf(buf, sizeof buf, "%d,%d,%.17g\n", e.segment_k, e.iteration, e.energy);
    out << buf;
  }
}

}  // namespace bandvqe
