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

#include "bandvqe/statevector.hpp"

#include <bit>
#include <cmath>

#include "bandvqe/errors.hpp"

namespace bandvqe {

StateVector::StateVector(int num_qubits) : num_qubits_(num_qubits) {
  if (num_qubits < 1 || num_qubits > 30) throw ContractError("state vector needs 1..30 qubits");
  amps_.assign(std::size_t{1} << num_qubits, Complex{});
  amps_[0] = 1.0;
}

StateVector::StateVector(int num_qubits, std::vector<Complex> amplitudes)
    : num_qubits_(num_qubits), amps_(std::move(amplitudes)) {
  if (num_qubits < 1 || num_qubits > 30) throw ContractError("state vector needs 1..30 qubits");
  if (amps_.size() != (std::size_t{1} << num_qubits)) throw ContractError("amplitude count must be 2^n");
}

double StateVector::norm_squared() const {
  double s = 0.0;
  for (const Complex& a : amps_) s += std::norm(a);
  return s;
}

std::vector<double> StateVector::probabilities() const {
  std::vector<double> p(amps_.size());
  for (std::size_t i = 0; i < amps_.size(); ++i) p[i] = std::norm(amps_[i]);
  return p;
}

void StateVector::check_qubit(int q) const {
  if (q < 0 || q >= num_qubits_) {
    throw ContractError("qubit index " + std::to_string(q) + " out of range for " + std::to_string(num_qubits_) +
                        " qubits");
  }
}

void StateVector::apply_single(const std::array<Complex, 4>& u, int q) {
  check_qubit(q);
  const std::uint64_t m = mask(q);
  for (std::uint64_t i = 0; i < amps_.size(); ++i) {
    if (i & m) continue;
    const Complex a0 = amps_[i];
    const Complex a1 = amps_[i | m];
    amps_[i] = u[0] * a0 + u[1] * a1;
    amps_[i | m] = u[2] * a0 + u[3] * a1;
  }
}

void StateVector::apply(const Gate& gate) {
  check_qubit(gate.target);
  const std::uint64_t t = mask(gate.target);
  switch (gate.kind) {
    case GateKind::X:
      for (std::uint64_t i = 0; i < amps_.size(); ++i) {
        if (!(i & t)) std::swap(amps_[i], amps_[i | t]);
      }
      break;
    case GateKind::RotY:
    case GateKind::ControlledRotY: {
      std::uint64_t c = 0;
      if (gate.kind == GateKind::ControlledRotY) {
        check_qubit(gate.control);
        c = mask(gate.control);
      }
      const double cs = std::cos(0.5 * gate.angle);
      const double sn = std::sin(0.5 * gate.angle);
      for (std::uint64_t i = 0; i < amps_.size(); ++i) {
        if ((i & t) || (i & c) != c) continue;
        const Complex a0 = amps_[i];
        const Complex a1 = amps_[i | t];
        amps_[i] = cs * a0 - sn * a1;
        amps_[i | t] = sn * a0 + cs * a1;
      }
      break;
    }
    case GateKind::CNOT: {
      check_qubit(gate.control);
      const std::uint64_t c = mask(gate.control);
      for (std::uint64_t i = 0; i < amps_.size(); ++i) {
        if (!(i & t) && (i & c)) std::swap(amps_[i], amps_[i | t]);
      }
      break;
    }
  }
}

void StateVector::apply_pauli(char letter, int q) {
  check_qubit(q);
  const std::uint64_t m = mask(q);
  switch (letter) {
    case 'I': return;
    case 'X':
      for (std::uint64_t i = 0; i < amps_.size(); ++i) {
        if (!(i & m)) std::swap(amps_[i], amps_[i | m]);
      }
      return;
    case 'Y':
      // Y|0> = i|1>, Y|1> = -i|0>
      for (std::uint64_t i = 0; i < amps_.size(); ++i) {
        if (i & m) continue;
        const Complex a0 = amps_[i];
        const Complex a1 = amps_[i | m];
        amps_[i] = Complex(0.0, -1.0) * a1;
        amps_[i | m] = Complex(0.0, 1.0) * a0;
      }
      return;
    case 'Z':
      for (std::uint64_t i = 0; i < amps_.size(); ++i) {
        if (i & m) amps_[i] = -amps_[i];
      }
      return;
    default: throw ContractError(std::string("invalid Pauli letter '") + letter + "'");
  }
}

StateVector apply(const Circuit& circuit, StateVector state) {
  if (circuit.num_qubits() != state.num_qubits()) throw ContractError("circuit and state qubit counts differ");
  for (const Gate& g : circuit.gates()) state.apply(g);
  return state;
}

Complex pauli_expectation(const StateVector& state, const PauliMasks& masks) {
  static const Complex kIPowers[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  const auto& a = state.amplitudes();
  Complex acc{};
  for (std::uint64_t i = 0; i < a.size(); ++i) {
    const Complex v = std::conj(a[i ^ masks.x]) * a[i];
    acc += (std::popcount(i & masks.z) & 1) ? -v : v;
  }
  return acc * kIPowers[masks.y_count % 4];
}

double expectation_exact(const StateVector& state, const PauliSum& observable) {
  if (static_cast<int>(observable.num_qubits()) != state.num_qubits()) {
    throw ContractError("observable and state qubit counts differ");
  }
  if (!observable.hermitian()) throw ContractError("expectation_exact requires a Hermitian observable");
  double total = 0.0;
  for (const auto& [letters, coeff] : observable.terms()) {
    total += coeff.real() * pauli_expectation(state, pauli_masks(letters)).real();
  }
  return total;
}

}  // namespace bandvqe
