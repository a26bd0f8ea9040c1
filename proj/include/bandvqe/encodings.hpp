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
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "bandvqe/hamiltonian.hpp"
#include "bandvqe/pauli.hpp"

namespace bandvqe {

enum class EncodingKind { OneHot, Gray };

std::string_view to_string(EncodingKind kind);
/// Accepts "onehot"/"one-hot" and "gray" (case-insensitive).
EncodingKind parse_encoding_kind(std::string_view text);

/// Qubit count of the Gray encoding: ceil(log2 N), and 1 for N = 1.
int gray_qubit_count(int n_states);

/// First N words of the binary reflected Gray code, bit-reversed so that the
/// least significant changing bit is written leftmost. For N = 8 this is
/// 000 100 110 010 011 111 101 001.
std::vector<std::string> gray_code(int n_states);

/// State-to-bitstring map for one encoding of N basis states.
struct Encoding {
  EncodingKind kind = EncodingKind::Gray;
  int num_qubits = 0;
  std::vector<std::string> code;

  static Encoding make(EncodingKind kind, int n_states);

  int num_states() const { return static_cast<int>(code.size()); }
  /// Computational-basis index of code[m] (leftmost bit most significant).
  std::uint64_t basis_index(int m) const;
};

/// Reads a bitstring as a binary integer, leftmost bit most significant.
std::uint64_t bits_to_index(std::string_view bits);

/// One-hot observable on N qubits: diagonal elements as (I_m - Z_m)/2 and each
/// in-band pair as (X_m X_{m+k} + Y_m Y_{m+k})/2.
PauliSum encode_onehot(const BandedHamiltonian& h);

/// Gray observable on ceil(log2 N) qubits: each element <m+k|H|m> attached to
/// |code[m+k]><code[m]| and its adjoint. Unused code words stay inert.
PauliSum encode_gray(const BandedHamiltonian& h);

PauliSum encode(const BandedHamiltonian& h, EncodingKind kind);

struct EncodingReport {
  EncodingKind kind = EncodingKind::Gray;
  int num_states = 0;
  int band = 0;
  int num_qubits = 0;
  int layers = 0;  // Gray only
  std::size_t pauli_term_count = 0;
  int parameter_count = 0;
  int ansatz_two_qubit_gate_count = 0;
  std::size_t measurement_group_count = 0;

  /// Flat key=value block.
  std::string to_text() const;
};

EncodingReport encoding_report(const BandedHamiltonian& h, const Encoding& encoding, int layers = 3);

}  // namespace bandvqe
