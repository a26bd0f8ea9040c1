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
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "bandvqe/circuit.hpp"
#include "bandvqe/pauli.hpp"
#include "bandvqe/statevector.hpp"

namespace bandvqe {

/// Terms that share one per-qubit measurement basis. `basis[q]` is the
/// letter every member uses on qubit q, or 'I' if none touches it.
struct MeasurementGroup {
  std::string basis;
  std::vector<PauliTerm> terms;
};

/// True iff at every position the letters agree or one of them is I.
bool qubitwise_commute(std::string_view a, std::string_view b);

/// Greedy first-fit partition into qubit-wise commuting groups, visiting terms
/// by descending |coefficient| (ties by letters). The identity term is not
/// measured and is left out.
std::vector<MeasurementGroup> group_commuting(const PauliSum& observable);

/// Stochastic Pauli channel parameters.
///  p1: after each single-qubit gate, a uniformly random X/Y/Z on its qubit.
///  p2: after each two-qubit gate, an independent random X/Y/Z on both qubits.
///  p_readout: independent bit flip of each measured qubit.
struct NoiseModel {
  double p1 = 1e-3;
  double p2 = 1e-2;
  double p_readout = 2e-2;

  static NoiseModel noiseless() { return {0.0, 0.0, 0.0}; }
  bool is_noiseless() const { return p1 == 0.0 && p2 == 0.0 && p_readout == 0.0; }
  void validate() const;
};

/// Grouped, precompiled form of a Hermitian observable for shot-based
/// estimation.
///
/// Random streams: shot s of group g draws its outcome from stream
/// (seed, g, s, 0), its gate errors from (seed, g, s, 1) and its readout flips
/// from (seed, g, s, 2). A noiseless trajectory therefore reproduces
/// `sampled` exactly for the same seed, and results do not depend on the
/// order in which shots are processed.
class MeasurementPlan {
 public:
  explicit MeasurementPlan(const PauliSum& observable);

  int num_qubits() const { return num_qubits_; }
  const std::vector<MeasurementGroup>& groups() const { return groups_; }
  double identity_offset() const { return identity_; }

  /// Shot estimate from a prepared state; `shots` per group.
  double sampled(const StateVector& state, int shots, std::uint64_t seed) const;

  /// Shot estimate where every shot re-runs `circuit` under `noise`.
  double noisy(const Circuit& circuit, const NoiseModel& noise, int shots, std::uint64_t seed) const;

  /// Analytic standard error of `sampled` for this state and shot count.
  double standard_error(const StateVector& state, int shots) const;

 private:
  struct CompiledTerm {
    double coefficient;
    std::uint64_t support;
  };

  int num_qubits_;
  double identity_;
  std::vector<MeasurementGroup> groups_;
  std::vector<std::vector<CompiledTerm>> compiled_;
};

double expectation_sampled(const StateVector& state, const PauliSum& observable, int shots, std::uint64_t seed);
double run_noisy(const Circuit& circuit, const NoiseModel& noise, const PauliSum& observable, int shots,
                 std::uint64_t seed);
double sampled_standard_error(const StateVector& state, const PauliSum& observable, int shots);

/// Computational-basis readout histogram of `circuit` under `noise`.
std::map<std::uint64_t, int> noisy_readout_counts(const Circuit& circuit, const NoiseModel& noise, int shots,
                                                  std::uint64_t seed);

}  // namespace bandvqe
