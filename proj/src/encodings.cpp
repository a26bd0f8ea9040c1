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

#include "bandvqe/encodings.hpp"

#include <algorithm>
#include <cctype>

#include "bandvqe/circuit.hpp"
#include "bandvqe/errors.hpp"
#include "bandvqe/measurement.hpp"

namespace bandvqe {

std::string_view to_string(EncodingKind kind) { return kind == EncodingKind::OneHot ? "onehot" : "gray"; }

EncodingKind parse_encoding_kind(std::string_view text) {
  std::string lower;
  for (char c : text) lower += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (lower == "onehot" || lower == "one-hot" || lower == "one_hot") return EncodingKind::OneHot;
  if (lower == "gray") return EncodingKind::Gray;
  throw ContractError("unknown encoding '" + std::string(text) + "' (expected gray or onehot)");
}

int gray_qubit_count(int n_states) {
  if (n_states < 1) throw ContractError("encoding needs at least one basis state");
  int n = 1;
  while ((std::int64_t{1} << n) < n_states) ++n;
  return n;
}

std::vector<std::string> gray_code(int n_states) {
  const int n = gray_qubit_count(n_states);
  std::vector<std::string> out;
  out.reserve(static_cast<std::size_t>(n_states));
  for (int m = 0; m < n_states; ++m) {
    const auto g = static_cast<std::uint64_t>(m) ^ (static_cast<std::uint64_t>(m) >> 1);
    std::string word(static_cast<std::size_t>(n), '0');
    for (int q = 0; q < n; ++q) {
      if ((g >> q) & 1U) word[static_cast<std::size_t>(q)] = '1';
    }
    out.push_back(std::move(word));
  }
  return out;
}

std::uint64_t bits_to_index(std::string_view bits) {
  std::uint64_t idx = 0;
  for (char c : bits) {
    if (c != '0' && c != '1') throw ContractError("non-binary character in bitstring");
    idx = (idx << 1) | static_cast<std::uint64_t>(c == '1');
  }
  return idx;
}

Encoding Encoding::make(EncodingKind kind, int n_states) {
  if (n_states < 1) throw ContractError("encoding needs at least one basis state");
  Encoding e;
  e.kind = kind;
  if (kind == EncodingKind::Gray) {
    e.num_qubits = gray_qubit_count(n_states);
    e.code = gray_code(n_states);
  } else {
    e.num_qubits = n_states;
    for (int m = 0; m < n_states; ++m) {
      std::string word(static_cast<std::size_t>(n_states), '0');
      word[static_cast<std::size_t>(m)] = '1';
      e.code.push_back(std::move(word));
    }
  }
  return e;
}

std::uint64_t Encoding::basis_index(int m) const { return bits_to_index(code.at(static_cast<std::size_t>(m))); }

PauliSum encode_onehot(const BandedHamiltonian& h) {
  const int n = h.dim();
  PauliSum out(static_cast<std::size_t>(n));
  const std::string identity(static_cast<std::size_t>(n), 'I');
  for (int m = 0; m < n; ++m) {
    const double d = h(m, m);
    if (d == 0.0) continue;
    std::string z = identity;
    z[static_cast<std::size_t>(m)] = 'Z';
    out.add(PauliTerm{0.5 * d, identity});
    out.add(PauliTerm{-0.5 * d, z});
  }
  for (int m = 0; m < n; ++m) {
    for (int k = 1; k <= h.band() && m + k < n; ++k) {
      const double v = h(m + k, m);
      if (v == 0.0) continue;
      std::string xx = identity;
      std::string yy = identity;
      xx[static_cast<std::size_t>(m)] = xx[static_cast<std::size_t>(m + k)] = 'X';
      yy[static_cast<std::size_t>(m)] = yy[static_cast<std::size_t>(m + k)] = 'Y';
      out.add(PauliTerm{0.5 * v, xx});
      out.add(PauliTerm{0.5 * v, yy});
    }
  }
  return out;
}

PauliSum encode_gray(const BandedHamiltonian& h) {
  const int n = h.dim();
  const std::vector<std::string> code = gray_code(n);
  PauliSum out(code.front().size());
  for (int m = 0; m < n; ++m) {
    const double d = h(m, m);
    if (d == 0.0) continue;
    const auto& word = code[static_cast<std::size_t>(m)];
    out.add(outer_product_to_paulis(word, word).scaled(d));
  }
  for (int m = 0; m < n; ++m) {
    for (int k = 1; k <= h.band() && m + k < n; ++k) {
      const double v = h(m + k, m);
      if (v == 0.0) continue;
      PauliSum g = outer_product_to_paulis(code[static_cast<std::size_t>(m + k)], code[static_cast<std::size_t>(m)]);
      out.add((g + g.adjoint()).scaled(v));
    }
  }
  return out;
}

PauliSum encode(const BandedHamiltonian& h, EncodingKind kind) {
  return kind == EncodingKind::OneHot ? encode_onehot(h) : encode_gray(h);
}

std::string EncodingReport::to_text() const {
  std::string out;
  auto line = [&](std::string_view key, const std::string& value) {
    out += key;
    out += '=';
    out += value;
    out += '\n';
  };
  line("encoding", std::string(to_string(kind)));
  line("n_states", std::to_string(num_states));
  line("K", std::to_string(band));
  line("n_qubits", std::to_string(num_qubits));
  if (kind == EncodingKind::Gray) line("layers", std::to_string(layers));
  line("pauli_term_count", std::to_string(pauli_term_count));
  line("parameter_count", std::to_string(parameter_count));
  line("ansatz_two_qubit_gate_count", std::to_string(ansatz_two_qubit_gate_count));
  line("measurement_group_count", std::to_string(measurement_group_count));
  return out;
}

EncodingReport encoding_report(const BandedHamiltonian& h, const Encoding& encoding, int layers) {
  if (encoding.num_states() != h.dim()) throw ContractError("encoding size does not match Hamiltonian");
  const PauliSum observable = encode(h, encoding.kind);
  const Ansatz ansatz = encoding.kind == EncodingKind::OneHot ? Ansatz::onehot(h.dim())
                                                              : Ansatz::gray(encoding.num_qubits, layers);
  const Circuit circuit = ansatz.circuit(std::vector<double>(static_cast<std::size_t>(ansatz.parameter_count()), 0.0));
  EncodingReport r;
  r.kind = encoding.kind;
  r.num_states = h.dim();
  r.band = h.band();
  r.num_qubits = encoding.num_qubits;
  r.layers = encoding.kind == EncodingKind::Gray ? layers : 0;
  r.pauli_term_count = observable.size();
  r.parameter_count = ansatz.parameter_count();
  r.ansatz_two_qubit_gate_count = circuit.two_qubit_gate_count();
  r.measurement_group_count = group_commuting(observable).size();
  return r;
}

}  // namespace bandvqe
