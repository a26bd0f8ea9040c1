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

#include "bandvqe/circuit.hpp"

#include <algorithm>
#include <cstdio>

#include "bandvqe/errors.hpp"

namespace bandvqe {
namespace {

void require_param_count(std::span<const double> theta, std::size_t expected, const char* who) {
  if (theta.size() != expected) {
    throw ContractError(std::string(who) + ": expected " + std::to_string(expected) + " parameters, got " +
                        std::to_string(theta.size()));
  }
}

}  // namespace

Circuit::Circuit(int num_qubits) : num_qubits_(num_qubits) {
  if (num_qubits < 1) throw ContractError("circuit needs at least one qubit");
}

int Circuit::two_qubit_gate_count() const {
  return static_cast<int>(std::count_if(gates_.begin(), gates_.end(), [](const Gate& g) { return g.two_qubit(); }));
}

void Circuit::check_qubit(int q) const {
  if (q < 0 || q >= num_qubits_) {
    throw ContractError("qubit index " + std::to_string(q) + " out of range for " + std::to_string(num_qubits_) +
                        " qubits");
  }
}

Circuit& Circuit::push(Gate g) {
  check_qubit(g.target);
  if (g.two_qubit()) {
    check_qubit(g.control);
    if (g.control == g.target) throw ContractError("two-qubit gate with control == target");
  }
  gates_.push_back(g);
  return *this;
}

Circuit& Circuit::x(int target) { return push({GateKind::X, target, -1, 0.0}); }
Circuit& Circuit::ry(double angle, int target) { return push({GateKind::RotY, target, -1, angle}); }
Circuit& Circuit::cnot(int control, int target) { return push({GateKind::CNOT, target, control, 0.0}); }
Circuit& Circuit::cry(double angle, int control, int target) {
  return push({GateKind::ControlledRotY, target, control, angle});
}

Circuit& Circuit::ry_param(double theta, int target) {
  ry(2.0 * theta, target);
  slots_.push_back({gates_.size() - 1, 2.0});
  return *this;
}

Circuit& Circuit::cry_param(double theta, int control, int target) {
  cry(2.0 * theta, control, target);
  slots_.push_back({gates_.size() - 1, 2.0});
  return *this;
}

void Circuit::bind(std::span<const double> theta) {
  require_param_count(theta, slots_.size(), "Circuit::bind");
  for (std::size_t k = 0; k < slots_.size(); ++k) gates_[slots_[k].gate_index].angle = slots_[k].scale * theta[k];
}

std::string Circuit::to_text() const {
  std::string out;
  char buf[96];
  for (const Gate& g : gates_) {
    switch (g.kind) {
      case GateKind::X: std::snprintf(buf, sizeof buf, "X %d\n", g.target); break;
      case GateKind::RotY: std::snprintf(buf, sizeof buf, "RY %d %.17g\n", g.target, g.angle); break;
      case GateKind::CNOT: std::snprintf(buf, sizeof buf, "CNOT %d %d\n", g.control, g.target); break;
      case GateKind::ControlledRotY:
        std::snprintf(buf, sizeof buf, "CRY %d %d %.17g\n", g.control, g.target, g.angle);
        break;
    }
    out += buf;
  }
  return out;
}

Circuit build_onehot_ansatz(int n_states, std::span<const double> theta) {
  if (n_states < 1) throw ContractError("one-hot ansatz needs N >= 1");
  require_param_count(theta, static_cast<std::size_t>(n_states - 1), "build_onehot_ansatz");
  Circuit c(n_states);
  c.x(0);
  for (int i = 1; i < n_states; ++i) {
    const double t = theta[static_cast<std::size_t>(i - 1)];
    // Qubit 0 is |1> with certainty at step one, so its controlled rotation
    // reduces to a plain RotY.
    if (i == 1) {
      c.ry_param(t, 1);
    } else {
      c.cry_param(t, i - 1, i);
    }
    c.cnot(i, i - 1);
  }
  return c;
}

Circuit build_gray_ansatz(int num_qubits, int layers, std::span<const double> theta) {
  if (num_qubits < 1 || layers < 1) throw ContractError("Gray ansatz needs n >= 1 and layers >= 1");
  require_param_count(theta, static_cast<std::size_t>(num_qubits * layers), "build_gray_ansatz");
  Circuit c(num_qubits);
  for (int l = 0; l < layers; ++l) {
    for (int q = 0; q < num_qubits; ++q) c.ry_param(theta[static_cast<std::size_t>(l * num_qubits + q)], q);
    for (int q = 0; q + 1 < num_qubits; ++q) c.cnot(q, q + 1);
  }
  return c;
}

Ansatz Ansatz::onehot(int n_states) {
  if (n_states < 1) throw ContractError("one-hot ansatz needs N >= 1");
  return Ansatz(true, n_states, 0, n_states - 1);
}

Ansatz Ansatz::gray(int num_qubits, int layers) {
  if (num_qubits < 1 || layers < 1) throw ContractError("Gray ansatz needs n >= 1 and layers >= 1");
  return Ansatz(false, num_qubits, layers, num_qubits * layers);
}

Circuit Ansatz::circuit(std::span<const double> theta) const {
  return onehot_ ? build_onehot_ansatz(num_qubits_, theta) : build_gray_ansatz(num_qubits_, layers_, theta);
}

}  // namespace bandvqe
