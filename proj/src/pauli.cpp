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

#include "bandvqe/pauli.hpp"

#include <bit>
#include <cstdio>
#include <sstream>

#include "bandvqe/errors.hpp"

namespace bandvqe {
namespace {

int letter_index(char c) {
  switch (c) {
    case 'I': return 0;
    case 'X': return 1;
    case 'Y': return 2;
    case 'Z': return 3;
    default: throw ContractError(std::string("invalid Pauli letter '") + c + "'");
  }
}

constexpr char kLetters[] = {'I', 'X', 'Y', 'Z'};

// Single-qubit product a·b = phase · result.
struct LetterProduct {
  Complex phase;
  char result;
};

LetterProduct multiply_letters(char a, char b) {
  int ia = letter_index(a);
  int ib = letter_index(b);
  if (ia == 0) return {1.0, b};
  if (ib == 0) return {1.0, a};
  if (ia == ib) return {1.0, 'I'};
  char third = kLetters[6 - ia - ib];
  // X->Y->Z->X is the positive cycle.
  bool cyclic = (ib - ia + 3) % 3 == 1;
  return {cyclic ? Complex(0.0, 1.0) : Complex(0.0, -1.0), third};
}

void require_same_width(std::size_t a, std::size_t b) {
  if (a != b) {
    throw ContractError("qubit count mismatch: " + std::to_string(a) + " vs " + std::to_string(b));
  }
}

}  // namespace

void validate_letters(std::string_view letters) {
  for (char c : letters) letter_index(c);
}

PauliTerm term_product(const PauliTerm& a, const PauliTerm& b) {
  require_same_width(a.num_qubits(), b.num_qubits());
  PauliTerm out{a.coefficient * b.coefficient, std::string(a.num_qubits(), 'I')};
  for (std::size_t q = 0; q < a.num_qubits(); ++q) {
    LetterProduct p = multiply_letters(a.letters[q], b.letters[q]);
    out.coefficient *= p.phase;
    out.letters[q] = p.result;
  }
  return out;
}

PauliMasks pauli_masks(std::string_view letters) {
  PauliMasks m;
  const std::size_t n = letters.size();
  for (std::size_t q = 0; q < n; ++q) {
    std::uint64_t bit = std::uint64_t{1} << (n - 1 - q);
    switch (letters[q]) {
      case 'I': break;
      case 'X': m.x |= bit; break;
      case 'Y': m.x |= bit; m.z |= bit; ++m.y_count; break;
      case 'Z': m.z |= bit; break;
      default: throw ContractError(std::string("invalid Pauli letter '") + letters[q] + "'");
    }
  }
  return m;
}

Complex PauliSum::coefficient(std::string_view letters) const {
  auto it = terms_.find(std::string(letters));
  return it == terms_.end() ? Complex{} : it->second;
}

PauliSum& PauliSum::add(const PauliTerm& term) {
  require_same_width(num_qubits_, term.num_qubits());
  validate_letters(term.letters);
  auto [it, inserted] = terms_.try_emplace(term.letters, term.coefficient);
  if (!inserted) it->second += term.coefficient;
  if (std::abs(it->second) < kPruneThreshold) terms_.erase(it);
  return *this;
}

PauliSum& PauliSum::add(const PauliSum& other) {
  require_same_width(num_qubits_, other.num_qubits_);
  for (const auto& [letters, c] : other.terms_) add(PauliTerm{c, letters});
  return *this;
}

PauliSum PauliSum::scaled(Complex factor) const {
  PauliSum out(num_qubits_);
  for (const auto& [letters, c] : terms_) out.add(PauliTerm{c * factor, letters});
  return out;
}

PauliSum PauliSum::adjoint() const {
  PauliSum out(num_qubits_);
  for (const auto& [letters, c] : terms_) out.terms_.emplace(letters, std::conj(c));
  return out;
}

bool PauliSum::hermitian(double tol) const {
  for (const auto& [letters, c] : terms_) {
    if (std::abs(c.imag()) > tol) return false;
  }
  return true;
}

std::string PauliSum::to_text() const {
  std::string out;
  char buf[96];
  for (const auto& [letters, c] : terms_) {
    std::snprintf(buf, sizeof buf, "%.17g %.17g ", c.real(), c.imag());
    out += buf;
    out += letters;
    out += '\n';
  }
  return out;
}

PauliSum PauliSum::from_text(std::string_view text, std::size_t num_qubits) {
  PauliSum out(num_qubits);
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos || line[0] == '#') continue;
    std::istringstream fields(line);
    double re = 0.0;
    double im = 0.0;
    std::string letters;
    if (!(fields >> re >> im >> letters)) throw ParseError("expected 're im LETTERS'", line_no);
    if (letters.size() != num_qubits) {
      throw ParseError("term width " + std::to_string(letters.size()) + " != " +
                           std::to_string(num_qubits),
                       line_no);
    }
    try {
      out.add(PauliTerm{{re, im}, letters});
    } catch (const ContractError& e) {
      throw ParseError(e.what(), line_no);
    }
  }
  return out;
}

PauliSum operator+(PauliSum sum, const PauliTerm& term) { return std::move(sum.add(term)); }

PauliSum operator+(PauliSum lhs, const PauliSum& rhs) { return std::move(lhs.add(rhs)); }

PauliSum sum_product(const PauliSum& a, const PauliSum& b) {
  require_same_width(a.num_qubits(), b.num_qubits());
  PauliSum out(a.num_qubits());
  for (const auto& [la, ca] : a.terms()) {
    for (const auto& [lb, cb] : b.terms()) {
      out.add(term_product(PauliTerm{ca, la}, PauliTerm{cb, lb}));
    }
  }
  return out;
}

PauliSum outer_product_to_paulis(std::string_view row_bits, std::string_view col_bits) {
  if (row_bits.size() != col_bits.size()) {
    throw ContractError("bitstring length mismatch: " + std::string(row_bits) + " vs " +
                        std::string(col_bits));
  }
  // Expand the per-qubit factors into all 2^n products before merging.
  std::map<std::string, Complex> partial{{"", Complex{1.0, 0.0}}};
  for (std::size_t q = 0; q < row_bits.size(); ++q) {
    char r = row_bits[q];
    char c = col_bits[q];
    if ((r != '0' && r != '1') || (c != '0' && c != '1')) {
      throw ContractError("non-binary character in bitstring");
    }
    std::pair<char, Complex> factor[2];
    if (r == c) {
      factor[0] = {'I', 0.5};
      factor[1] = {'Z', r == '0' ? 0.5 : -0.5};
    } else {
      // |0><1| = (X + iY)/2, |1><0| = (X - iY)/2
      factor[0] = {'X', 0.5};
      factor[1] = {'Y', r == '0' ? Complex(0.0, 0.5) : Complex(0.0, -0.5)};
    }
    std::map<std::string, Complex> next;
    for (const auto& [prefix, coeff] : partial) {
      for (const auto& [letter, weight] : factor) next[prefix + letter] += coeff * weight;
    }
    partial = std::move(next);
  }
  PauliSum out(row_bits.size());
  for (const auto& [letters, coeff] : partial) out.add(PauliTerm{coeff, letters});
  return out;
}

ComplexMatrix to_matrix(const PauliSum& sum) {
  const std::size_t n = sum.num_qubits();
  if (n > kMaxDenseQubits) {
    throw ContractError("to_matrix: " + std::to_string(n) + " qubits exceeds dense limit " +
                        std::to_string(kMaxDenseQubits));
  }
  const std::uint64_t dim = std::uint64_t{1} << n;
  ComplexMatrix m = ComplexMatrix::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  static const Complex kIPowers[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  for (const auto& [letters, coeff] : sum.terms()) {
    PauliMasks pm = pauli_masks(letters);
    Complex base = coeff * kIPowers[pm.y_count % 4];
    for (std::uint64_t col = 0; col < dim; ++col) {
      double sign = (std::popcount(col & pm.z) & 1) ? -1.0 : 1.0;
      m(static_cast<Eigen::Index>(col ^ pm.x), static_cast<Eigen::Index>(col)) += sign * base;
    }
  }
  return m;
}

double max_coefficient_distance(const PauliSum& a, const PauliSum& b) {
  require_same_width(a.num_qubits(), b.num_qubits());
  double worst = 0.0;
  for (const auto& [letters, c] : a.terms()) worst = std::max(worst, std::abs(c - b.coefficient(letters)));
  for (const auto& [letters, c] : b.terms()) worst = std::max(worst, std::abs(c - a.coefficient(letters)));
  return worst;
}

}  // namespace bandvqe
