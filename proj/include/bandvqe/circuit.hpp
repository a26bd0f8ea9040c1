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

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace bandvqe {

enum class GateKind { RotY, CNOT, X, ControlledRotY };

/// One gate. `angle` is the full rotation angle of RotY / ControlledRotY,
/// RotY(angle) = exp(-i angle Y / 2); ansatz parameters enter as angle = 2 theta.
struct Gate {
  GateKind kind = GateKind::X;
  int target = 0;
  int control = -1;
  double angle = 0.0;

  bool two_qubit() const { return kind == GateKind::CNOT || kind == GateKind::ControlledRotY; }
};

/// Marks gates[gate_index].angle = scale * theta[k] for the k-th parameter.
struct ParamSlot {
  std::size_t gate_index = 0;
  double scale = 2.0;
};

class Circuit {
 public:
  explicit Circuit(int num_qubits);

  int num_qubits() const { return num_qubits_; }
  const std::vector<Gate>& gates() const { return gates_; }
  const std::vector<ParamSlot>& param_slots() const { return slots_; }
  int parameter_count() const { return static_cast<int>(slots_.size()); }
  int two_qubit_gate_count() const;

  Circuit& x(int target);
  Circuit& ry(double angle, int target);
  Circuit& cnot(int control, int target);
  Circuit& cry(double angle, int control, int target);

  /// Appends RotY(2 theta) and registers it as the next free parameter.
  Circuit& ry_param(double theta, int target);
  Circuit& cry_param(double theta, int control, int target);

  /// Rewrites every parameterized angle from `theta`.
  void bind(std::span<const double> theta);

  /// One gate per line: "KIND q_indices [angle]".
  std::string to_text() const;

 private:
  void check_qubit(int q) const;
  Circuit& push(Gate g);

  int num_qubits_;
  std::vector<Gate> gates_;
  std::vector<ParamSlot> slots_;
};

/// Chain ansatz over the one-hot states of N qubits. Prepares
/// cos(t1)|e0> + sin(t1)cos(t2)|e1> + ... with N - 1 parameters and 2N - 3
/// two-qubit gates (N >= 2).
Circuit build_onehot_ansatz(int n_states, std::span<const double> theta);

/// Layered ansatz on n qubits: per layer RotY(2 theta) on every qubit, then a
/// CNOT ladder (0,1), (1,2), ..., (n-2, n-1). Parameters are layer-major.
Circuit build_gray_ansatz(int num_qubits, int layers, std::span<const double> theta);

/// Shape of an ansatz family; builds circuits for concrete parameters.
class Ansatz {
 public:
  static Ansatz onehot(int n_states);
  static Ansatz gray(int num_qubits, int layers);

  int num_qubits() const { return num_qubits_; }
  int parameter_count() const { return parameter_count_; }
  Circuit circuit(std::span<const double> theta) const;

 private:
  Ansatz(bool onehot, int num_qubits, int layers, int params)
      : onehot_(onehot), num_qubits_(num_qubits), layers_(layers), parameter_count_(params) {}

  bool onehot_;
  int num_qubits_;
  int layers_;
  int parameter_count_;
};

}  // namespace bandvqe
