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

#include "bandvqe/measurement.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include "bandvqe/errors.hpp"
#include "bandvqe/rng.hpp"

namespace bandvqe {
namespace {

constexpr std::uint64_t kOutcomeStream = 0;
constexpr std::uint64_t kGateNoiseStream = 1;
constexpr std::uint64_t kReadoutStream = 2;

struct NoiseEvent {
  std::uint32_t gate;
  int qubit;
  char letter;
  auto operator<=>(const NoiseEvent&) const = default;
};
using NoisePattern = std::vector<NoiseEvent>;

char random_pauli(SplitMix64& rng) {
  static constexpr char kPaulis[3] = {'X', 'Y', 'Z'};
  return kPaulis[static_cast<int>(rng.uniform() * 3.0)];
}

NoisePattern draw_noise(const Circuit& circuit, const NoiseModel& noise, SplitMix64& rng) {
  NoisePattern events;
  const auto& gates = circuit.gates();
  for (std::uint32_t i = 0; i < gates.size(); ++i) {
    const Gate& g = gates[i];
    const double u = rng.uniform();
    if (g.two_qubit()) {
      if (u < noise.p2) {
        events.push_back({i, g.control, random_pauli(rng)});
        events.push_back({i, g.target, random_pauli(rng)});
      }
    } else if (u < noise.p1) {
      events.push_back({i, g.target, random_pauli(rng)});
    }
  }
  return events;
}

StateVector run_with_noise(const Circuit& circuit, const NoisePattern& events) {
  StateVector s(circuit.num_qubits());
  auto next = events.begin();
  const auto& gates = circuit.gates();
  for (std::uint32_t i = 0; i < gates.size(); ++i) {
    s.apply(gates[i]);
    for (; next != events.end() && next->gate == i; ++next) s.apply_pauli(next->letter, next->qubit);
  }
  return s;
}

// Maps each measured qubit's basis onto Z: H for X, H S^dagger for Y.
void rotate_to_basis(StateVector& s, const std::string& basis) {
  const double r = 1.0 / std::sqrt(2.0);
  const std::array<Complex, 4> h{Complex(r), Complex(r), Complex(r), Complex(-r)};
  const std::array<Complex, 4> hsdg{Complex(r), Complex(0.0, -r), Complex(r), Complex(0.0, r)};
  for (std::size_t q = 0; q < basis.size(); ++q) {
    if (basis[q] == 'X') s.apply_single(h, static_cast<int>(q));
    if (basis[q] == 'Y') s.apply_single(hsdg, static_cast<int>(q));
  }
}

std::vector<double> cumulative_distribution(const StateVector& s) {
  std::vector<double> cdf = s.probabilities();
  for (std::size_t i = 1; i < cdf.size(); ++i) cdf[i] += cdf[i - 1];
  return cdf;
}

std::uint64_t draw_outcome(const std::vector<double>& cdf, double u) {
  const double target = u * cdf.back();
  auto it = std::upper_bound(cdf.begin(), cdf.end(), target);
  if (it == cdf.end()) --it;
  return static_cast<std::uint64_t>(it - cdf.begin());
}

std::uint64_t flip_readout(std::uint64_t outcome, int num_qubits, double p, std::uint64_t seed) {
  if (p <= 0.0) return outcome;
  SplitMix64 rng(seed);
  for (int b = 0; b < num_qubits; ++b) {
    if (rng.uniform() < p) outcome ^= std::uint64_t{1} << b;
  }
  return outcome;
}

void require_shots(int shots) {
  if (shots < 1) throw ContractError("shot count must be >= 1");
}

}  // namespace

bool qubitwise_commute(std::string_view a, std::string_view b) {
  if (a.size() != b.size()) throw ContractError("qubit count mismatch");
  for (std::size_t q = 0; q < a.size(); ++q) {
    if (a[q] != 'I' && b[q] != 'I' && a[q] != b[q]) return false;
  }
  return true;
}

std::vector<MeasurementGroup> group_commuting(const PauliSum& observable) {
  const std::string identity(observable.num_qubits(), 'I');
  std::vector<PauliTerm> order;
  for (const auto& [letters, c] : observable.terms()) {
    if (letters != identity) order.push_back({c, letters});
  }
  std::stable_sort(order.begin(), order.end(), [](const PauliTerm& a, const PauliTerm& b) {
    return std::abs(a.coefficient) > std::abs(b.coefficient);
  });
  std::vector<MeasurementGroup> groups;
  for (PauliTerm& term : order) {
    auto fit = std::find_if(groups.begin(), groups.end(),
                            [&](const MeasurementGroup& g) { return qubitwise_commute(g.basis, term.letters); });
    if (fit == groups.end()) {
      groups.push_back({identity, {}});
      fit = std::prev(groups.end());
    }
    for (std::size_t q = 0; q < identity.size(); ++q) {
      if (term.letters[q] != 'I') fit->basis[q] = term.letters[q];
    }
    fit->terms.push_back(std::move(term));
  }
  return groups;
}

void NoiseModel::validate() const {
  for (double p : {p1, p2, p_readout}) {
    if (!(p >= 0.0 && p <= 1.0)) throw ContractError("noise probabilities must lie in [0, 1]");
  }
}

MeasurementPlan::MeasurementPlan(const PauliSum& observable)
    : num_qubits_(static_cast<int>(observable.num_qubits())), identity_(0.0), groups_(group_commuting(observable)) {
  if (!observable.hermitian()) throw ContractError("measurement requires a Hermitian observable");
  identity_ = observable.coefficient(std::string(observable.num_qubits(), 'I')).real();
  for (const MeasurementGroup& g : groups_) {
    std::vector<CompiledTerm> terms;
    for (const PauliTerm& t : g.terms) {
      const PauliMasks m = pauli_masks(t.letters);
      terms.push_back({t.coefficient.real(), m.x | m.z});
    }
    compiled_.push_back(std::move(terms));
  }
}

namespace {

// Runs `shots` readouts of one group and returns its energy contribution.
// `outcome_for_shot(s)` supplies the (possibly noisy) readout of shot s.
template <typename OutcomeFn>
double estimate_group(const std::vector<std::pair<double, std::uint64_t>>& terms, int shots,
                      OutcomeFn&& outcome_for_shot) {
  std::vector<long long> sums(terms.size(), 0);
  for (int s = 0; s < shots; ++s) {
    const std::uint64_t outcome = outcome_for_shot(s);
    for (std::size_t t = 0; t < terms.size(); ++t) {
      sums[t] += (std::popcount(outcome & terms[t].second) & 1) ? -1 : 1;
    }
  }
  double total = 0.0;
  for (std::size_t t = 0; t < terms.size(); ++t) {
    total += terms[t].first * (static_cast<double>(sums[t]) / static_cast<double>(shots));
  }
  return total;
}

}  // namespace

double MeasurementPlan::sampled(const StateVector& state, int shots, std::uint64_t seed) const {
  require_shots(shots);
  if (state.num_qubits() != num_qubits_) throw ContractError("observable and state qubit counts differ");
  double total = identity_;
  for (std::size_t g = 0; g < groups_.size(); ++g) {
    StateVector rotated = state;
    rotate_to_basis(rotated, groups_[g].basis);
    const std::vector<double> cdf = cumulative_distribution(rotated);
    std::vector<std::pair<double, std::uint64_t>> terms;
    for (const CompiledTerm& t : compiled_[g]) terms.emplace_back(t.coefficient, t.support);
    total += estimate_group(terms, shots, [&](int s) {
      SplitMix64 rng(stream_seed(seed, g, static_cast<std::uint64_t>(s), kOutcomeStream));
      return draw_outcome(cdf, rng.uniform());
    });
  }
  return total;
}

double MeasurementPlan::noisy(const Circuit& circuit, const NoiseModel& noise, int shots, std::uint64_t seed) const {
  require_shots(shots);
  noise.validate();
  if (circuit.num_qubits() != num_qubits_) throw ContractError("circuit and observable qubit counts differ");
  const bool gate_noise = noise.p1 > 0.0 || noise.p2 > 0.0;
  const StateVector clean = apply(circuit, StateVector(num_qubits_));
  // Trajectories with identical error patterns share a state; the cache only
  // saves work and never changes a result.
  std::map<NoisePattern, StateVector> prepared;
  double total = identity_;
  for (std::size_t g = 0; g < groups_.size(); ++g) {
    StateVector rotated = clean;
    rotate_to_basis(rotated, groups_[g].basis);
    const std::vector<double> clean_cdf = cumulative_distribution(rotated);
    std::map<NoisePattern, std::vector<double>> noisy_cdfs;
    std::vector<std::pair<double, std::uint64_t>> terms;
    for (const CompiledTerm& t : compiled_[g]) terms.emplace_back(t.coefficient, t.support);
    total += estimate_group(terms, shots, [&](int s) {
      const auto shot = static_cast<std::uint64_t>(s);
      const std::vector<double>* cdf = &clean_cdf;
      if (gate_noise) {
        SplitMix64 rng(stream_seed(seed, g, shot, kGateNoiseStream));
        NoisePattern events = draw_noise(circuit, noise, rng);
        if (!events.empty()) {
          auto it = noisy_cdfs.find(events);
          if (it == noisy_cdfs.end()) {
            auto pit = prepared.find(events);
            if (pit == prepared.end()) pit = prepared.emplace(events, run_with_noise(circuit, events)).first;
            StateVector r = pit->second;
            rotate_to_basis(r, groups_[g].basis);
            it = noisy_cdfs.emplace(std::move(events), cumulative_distribution(r)).first;
          }
          cdf = &it->second;
        }
      }
      SplitMix64 rng(stream_seed(seed, g, shot, kOutcomeStream));
      const std::uint64_t outcome = draw_outcome(*cdf, rng.uniform());
      return flip_readout(outcome, num_qubits_, noise.p_readout, stream_seed(seed, g, shot, kReadoutStream));
    });
  }
  return total;
}

double MeasurementPlan::standard_error(const StateVector& state, int shots) const {
  require_shots(shots);
  double variance = 0.0;
  for (std::size_t g = 0; g < groups_.size(); ++g) {
    StateVector rotated = state;
    rotate_to_basis(rotated, groups_[g].basis);
    const std::vector<double> p = rotated.probabilities();
    double mean = 0.0;
    double second = 0.0;
    for (std::uint64_t b = 0; b < p.size(); ++b) {
      if (p[b] == 0.0) continue;
      double v = 0.0;
      for (const CompiledTerm& t : compiled_[g]) v += (std::popcount(b & t.support) & 1) ? -t.coefficient : t.coefficient;
      mean += p[b] * v;
      second += p[b] * v * v;
    }
    variance += std::max(0.0, second - mean * mean) / shots;
  }
  return std::sqrt(variance);
}

double expectation_sampled(const StateVector& state, const PauliSum& observable, int shots, std::uint64_t seed) {
  return MeasurementPlan(observable).sampled(state, shots, seed);
}

double run_noisy(const Circuit& circuit, const NoiseModel& noise, const PauliSum& observable, int shots,
                 std::uint64_t seed) {
  return MeasurementPlan(observable).noisy(circuit, noise, shots, seed);
}

double sampled_standard_error(const StateVector& state, const PauliSum& observable, int shots) {
  return MeasurementPlan(observable).standard_error(state, shots);
}

std::map<std::uint64_t, int> noisy_readout_counts(const Circuit& circuit, const NoiseModel& noise, int shots,
                                                  std::uint64_t seed) {
  require_shots(shots);
  noise.validate();
  const int n = circuit.num_qubits();
  const std::vector<double> clean_cdf = cumulative_distribution(apply(circuit, StateVector(n)));
  std::map<std::uint64_t, int> counts;
  for (int s = 0; s < shots; ++s) {
    const auto shot = static_cast<std::uint64_t>(s);
    SplitMix64 noise_rng(stream_seed(seed, 0, shot, kGateNoiseStream));
    const NoisePattern events = draw_noise(circuit, noise, noise_rng);
    SplitMix64 rng(stream_seed(seed, 0, shot, kOutcomeStream));
    const double u = rng.uniform();
    std::uint64_t outcome = events.empty() ? draw_outcome(clean_cdf, u)
                                           : draw_outcome(cumulative_distribution(run_with_noise(circuit, events)), u);
    ++counts[flip_readout(outcome, n, noise.p_readout, stream_seed(seed, 0, shot, kReadoutStream))];
  }
  return counts;
}

}  // namespace bandvqe
