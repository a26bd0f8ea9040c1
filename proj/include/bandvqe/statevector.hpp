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

#include <array>
#include <cstdint>
#include <vector>

#include "bandvqe/circuit.hpp"
#include "bandvqe/pauli.hpp"

namespace bandvqe {

/// Dense 2^n amplitude vector. Basis index bit (n-1-q) holds qubit q, so
/// qubit 0 is the most significant bit.
class StateVector {
 public:
  /// |0...0> on `num_qubits` qubits.
  explicit StateVector(int num_qubits);
  StateVector(int num_qubits, std::vector<Complex> amplitudes);

  int num_qubits() const { return num_qubits_; }
  std::size_t dim() const { return amps_.size(); }
  const std::vector<Complex>& amplitudes() const { return amps_; }
  Complex operator[](std::size_t i) const { return amps_[i]; }

  double norm_squared() const;
  std::vector<double> probabilities() const;

  void apply(const Gate& gate);
  /// Applies the Pauli named by `letter` ('I', 'X', 'Y', 'Z') to qubit q.
  void apply_pauli(char letter, int q);
  /// Applies an arbitrary 2x2 unitary {u00, u01, u10, u11} to qubit q.
  void apply_single(const std::array<Complex, 4>& u, int q);

 private:
  std::uint64_t mask(int q) const { return std::uint64_t{1} << (num_qubits_ - 1 - q); }
  void check_qubit(int q) const;

  int num_qubits_;
  std::vector<Complex> amps_;
};

StateVector apply(const Circuit& circuit, StateVector state);

/// <psi|P|psi> for a single Pauli string, evaluated without building P.
Complex pauli_expectation(const StateVector& state, const PauliMasks& masks);

/// <psi|O|psi> computed term by term. Throws ContractError for a
/// non-Hermitian observable or mismatched width.
double expectation_exact(const StateVector& state, const PauliSum& observable);

}  // namespace bandvqe
