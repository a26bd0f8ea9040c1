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

#include <complex>
#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>

#include <Eigen/Dense>

namespace bandvqe {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;

/// Merged coefficients with magnitude below this are dropped from a PauliSum.
inline constexpr double kPruneThreshold = 1e-14;

/// Largest qubit count accepted by `to_matrix`.
inline constexpr std::size_t kMaxDenseQubits = 12;

/// A weighted tensor product of single-qubit Paulis.
///
/// `letters[q]` is the Pauli on qubit q, drawn from "IXYZ". Qubit 0 is the
/// leftmost character and the most significant bit of a basis-state index.
struct PauliTerm {
  Complex coefficient{1.0, 0.0};
  std::string letters;

  std::size_t num_qubits() const { return letters.size(); }
};

/// Throws ContractError unless every character is one of I, X, Y, Z.
void validate_letters(std::string_view letters);

/// Operator product a·b with the phase folded into the coefficient.
PauliTerm term_product(const PauliTerm& a, const PauliTerm& b);

/// Bit masks of a Pauli string in the basis-index convention: bit (n-1-q)
/// belongs to qubit q.
struct PauliMasks {
  std::uint64_t x = 0;  // X or Y: flips the bit
  std::uint64_t z = 0;  // Z or Y: contributes a sign
  int y_count = 0;
};

PauliMasks pauli_masks(std::string_view letters);

/// A sum of Pauli strings on a fixed number of qubits, keyed by letters.
/// Identical letters are always merged; near-zero entries are pruned.
class PauliSum {
 public:
  using TermMap = std::map<std::string, Complex>;

  explicit PauliSum(std::size_t num_qubits) : num_qubits_(num_qubits) {}

  std::size_t num_qubits() const { return num_qubits_; }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }

  /// Coefficient of `letters`, zero when absent.
  Complex coefficient(std::string_view letters) const;

  PauliSum& add(const PauliTerm& term);
  PauliSum& add(const PauliSum& other);
  PauliSum& operator+=(const PauliTerm& term) { return add(term); }
  PauliSum& operator+=(const PauliSum& other) { return add(other); }

  PauliSum scaled(Complex factor) const;
  PauliSum adjoint() const;

  /// True iff every coefficient is real to within `tol`.
  bool hermitian(double tol = 1e-12) const;

  /// Debug text: one "re im LETTERS" line per term, sorted by LETTERS.
  std::string to_text() const;

  /// Inverse of to_text. `num_qubits` fixes the width of an empty sum.
  static PauliSum from_text(std::string_view text, std::size_t num_qubits);

  friend bool operator==(const PauliSum&, const PauliSum&) = default;

 private:
  std::size_t num_qubits_;
  TermMap terms_;
};

PauliSum operator+(PauliSum sum, const PauliTerm& term);
PauliSum operator+(PauliSum lhs, const PauliSum& rhs);

/// Product of two sums, expanded term by term.
PauliSum sum_product(const PauliSum& a, const PauliSum& b);

/// Exact Pauli expansion of |row><col| for equal-length bitstrings.
PauliSum outer_product_to_paulis(std::string_view row_bits, std::string_view col_bits);

/// Dense 2^n x 2^n matrix of the sum; qubit 0 is the leftmost Kronecker factor.
ComplexMatrix to_matrix(const PauliSum& sum);

/// Largest coefficient-wise distance between two sums on the same qubits.
double max_coefficient_distance(const PauliSum& a, const PauliSum& b);

}  // namespace bandvqe
