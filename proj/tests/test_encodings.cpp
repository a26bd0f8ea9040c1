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

#include <gtest/gtest.h>

#include <bit>
#include <set>

#include "bandvqe/errors.hpp"
#include "test_util.hpp"

namespace bandvqe {
namespace {

using testing::random_symmetric;

// Rows and columns of the dense operator on the one-hot (weight-1) states,
// ordered by set-bit position.
RealMatrix onehot_block(const ComplexMatrix& full, int n, double* leak) {
  RealMatrix block(n, n);
  *leak = 0.0;
  for (int c = 0; c < n; ++c) {
    const Eigen::Index col = Eigen::Index{1} << (n - 1 - c);
    for (Eigen::Index r = 0; r < full.rows(); ++r) {
      if (std::popcount(static_cast<std::uint64_t>(r)) == 1) {
        const int m = n - 1 - std::countr_zero(static_cast<std::uint64_t>(r));
        block(m, c) = full(r, col).real();
      } else {
        *leak = std::max(*leak, std::abs(full(r, col)));
      }
    }
  }
  return block;
}

// P H P^T with P sending m to the index of its code word.
ComplexMatrix gray_permuted(const BandedHamiltonian& h) {
  const Encoding e = Encoding::make(EncodingKind::Gray, h.dim());
  const Eigen::Index dim = Eigen::Index{1} << e.num_qubits;
  ComplexMatrix out = ComplexMatrix::Zero(dim, dim);
  for (int i = 0; i < h.dim(); ++i) {
    for (int j = 0; j < h.dim(); ++j) out(e.basis_index(i), e.basis_index(j)) = h(i, j);
  }
  return out;
}

TEST(GrayCode, MatchesTable) {
  EXPECT_EQ(gray_code(8), (std::vector<std::string>{"000", "100", "110", "010", "011", "111", "101", "001"}));
  EXPECT_EQ(gray_code(2), (std::vector<std::string>{"0", "1"}));
  EXPECT_EQ(gray_code(5), (std::vector<std::string>{"000", "100", "110", "010", "011"}));
  EXPECT_EQ(gray_code(1), (std::vector<std::string>{"0"}));
  EXPECT_THROW(gray_code(0), ContractError);
}

TEST(GrayCode, PrefixOfFullCode) {
  for (int n = 1; n <= 40; ++n) {
    const auto full = gray_code(1 << gray_qubit_count(n));
    const auto part = gray_code(n);
    ASSERT_TRUE(std::equal(part.begin(), part.end(), full.begin())) << n;
  }
}

TEST(GrayCode, AdjacentWordsDifferInOneBit) {
  for (int n = 1; n <= 64; ++n) {
    const auto code = gray_code(n);
    ASSERT_EQ(std::set<std::string>(code.begin(), code.end()).size(), code.size());
    for (std::size_t m = 1; m < code.size(); ++m) {
      const auto diff = bits_to_index(code[m]) ^ bits_to_index(code[m - 1]);
      ASSERT_EQ(std::popcount(diff), 1) << "N=" << n << " m=" << m;
    }
  }
}

TEST(Encoding, QubitCounts) {
  EXPECT_EQ(gray_qubit_count(8), 3);
  EXPECT_EQ(gray_qubit_count(5), 3);
  EXPECT_EQ(gray_qubit_count(32), 5);
  EXPECT_EQ(gray_qubit_count(1), 1);
  Encoding one = Encoding::make(EncodingKind::OneHot, 4);
  EXPECT_EQ(one.num_qubits, 4);
  EXPECT_EQ(one.code[1], "0100");
  EXPECT_EQ(one.basis_index(1), 4U);
}

TEST(Encoding, KindNames) {
  EXPECT_EQ(parse_encoding_kind("gray"), EncodingKind::Gray);
  EXPECT_EQ(parse_encoding_kind("OneHot"), EncodingKind::OneHot);
  EXPECT_EQ(to_string(EncodingKind::OneHot), "onehot");
  EXPECT_THROW(parse_encoding_kind("binary"), ContractError);
}

TEST(EncodeOnehot, TwoByTwo) {
  const double a = 1.25, b = -0.5, c = 0.75;
  RealMatrix m(2, 2);
  m << a, c, c, b;
  PauliSum s = encode_onehot(BandedHamiltonian(m));
  EXPECT_EQ(s.size(), 5U);
  EXPECT_EQ(s.coefficient("II"), Complex((a + b) / 2));
  EXPECT_EQ(s.coefficient("ZI"), Complex(-a / 2));
  EXPECT_EQ(s.coefficient("IZ"), Complex(-b / 2));
  EXPECT_EQ(s.coefficient("XX"), Complex(c / 2));
  EXPECT_EQ(s.coefficient("YY"), Complex(c / 2));
  double leak = 0.0;
  EXPECT_LE((onehot_block(to_matrix(s), 2, &leak) - m).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(EncodeOnehot, ZeroMatrixIsEmpty) {
  EXPECT_TRUE(encode_onehot(BandedHamiltonian(RealMatrix::Zero(4, 4))).empty());
  EXPECT_TRUE(encode_gray(BandedHamiltonian(RealMatrix::Zero(4, 4))).empty());
}

TEST(EncodeOnehot, TridiagonalTermCount) {
  BandedHamiltonian h = truncate_band(BandedHamiltonian(random_symmetric(8, 4)), 1);
  PauliSum s = encode_onehot(h);
  // 8 Z terms, one merged identity, XX and YY for each of the 7 couplings.
  EXPECT_EQ(s.size(), 8U + 1U + 2U * 7U);
}

TEST(EncodeOnehot, DiagonalOnlyAtZeroBand) {
  PauliSum s = encode_onehot(truncate_band(BandedHamiltonian(random_symmetric(6, 2)), 0));
  for (const auto& [letters, c] : s.terms()) {
    EXPECT_EQ(letters.find_first_of("XY"), std::string::npos) << letters;
  }
  PauliSum g = encode_gray(truncate_band(BandedHamiltonian(random_symmetric(8, 2)), 0));
  for (const auto& [letters, c] : g.terms()) {
    EXPECT_EQ(letters.find_first_of("XY"), std::string::npos) << letters;
  }
}

TEST(EncodeGray, TwoByTwo) {
  const double a = 2.0, b = -1.0, c = 0.3;
  RealMatrix m(2, 2);
  m << a, c, c, b;
  PauliSum s = encode_gray(BandedHamiltonian(m));
  EXPECT_EQ(s.size(), 3U);
  EXPECT_NEAR(std::abs(s.coefficient("I") - (a + b) / 2), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(s.coefficient("Z") - (a - b) / 2), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(s.coefficient("X") - c), 0.0, 1e-15);
}

TEST(EncodeGray, IdentityIsIdentity) {
  for (int n : {2, 4, 8}) {
    PauliSum s = encode_gray(BandedHamiltonian(RealMatrix::Identity(n, n)));
    ASSERT_EQ(s.size(), 1U);
    EXPECT_NEAR(std::abs(s.coefficient(std::string(static_cast<std::size_t>(gray_qubit_count(n)), 'I')) - 1.0),
                0.0, 1e-15);
  }
}

TEST(EncodeGray, ReconstructsPermutedMatrix) {
  for (int n : {2, 3, 4, 5, 7, 8}) {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      BandedHamiltonian full(random_symmetric(n, seed * 31 + n));
      for (int k = 0; k < n; ++k) {
        BandedHamiltonian h = truncate_band(full, k);
        PauliSum s = encode_gray(h);
        ASSERT_TRUE(s.hermitian());
        ASSERT_LE((to_matrix(s) - gray_permuted(h)).cwiseAbs().maxCoeff(), 1e-12) << n << " " << k;
      }
    }
  }
}

TEST(EncodeOnehot, ReconstructsOnWeightOneSubspace) {
  for (int n : {2, 3, 5, 8}) {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      BandedHamiltonian full(random_symmetric(n, seed * 17 + n));
      for (int k = 0; k < n; ++k) {
        BandedHamiltonian h = truncate_band(full, k);
        PauliSum s = encode_onehot(h);
        ASSERT_TRUE(s.hermitian());
        double leak = 0.0;
        RealMatrix block = onehot_block(to_matrix(s), n, &leak);
        ASSERT_LE((block - h.entries()).cwiseAbs().maxCoeff(), 1e-12);
        ASSERT_LE(leak, 1e-12);
      }
    }
  }
}

TEST(Encode, IsLinear) {
  const double alpha = 0.7, beta = -2.5;
  for (auto kind : {EncodingKind::Gray, EncodingKind::OneHot}) {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      RealMatrix h1 = random_symmetric(6, seed);
      RealMatrix h2 = random_symmetric(6, seed + 1000);
      PauliSum lhs = encode(BandedHamiltonian(alpha * h1 + beta * h2), kind);
      PauliSum rhs = encode(BandedHamiltonian(h1), kind).scaled(alpha) + encode(BandedHamiltonian(h2), kind).scaled(beta);
      ASSERT_LE(max_coefficient_distance(lhs, rhs), 1e-12);
    }
  }
}

TEST(EncodingReport, ResourceCounts) {
  BandedHamiltonian h32(random_symmetric(32, 32));
  EncodingReport onehot = encoding_report(h32, Encoding::make(EncodingKind::OneHot, 32));
  EXPECT_EQ(onehot.num_qubits, 32);
  EXPECT_EQ(onehot.ansatz_two_qubit_gate_count, 61);
  EXPECT_EQ(onehot.parameter_count, 31);

  EncodingReport gray = encoding_report(h32, Encoding::make(EncodingKind::Gray, 32), 3);
  EXPECT_EQ(gray.num_qubits, 5);
  EXPECT_EQ(gray.ansatz_two_qubit_gate_count, 12);
  EXPECT_EQ(gray.parameter_count, 15);

  BandedHamiltonian h8(random_symmetric(8, 8));
  EncodingReport small = encoding_report(h8, Encoding::make(EncodingKind::Gray, 8), 3);
  EXPECT_EQ(small.num_qubits, 3);
  EXPECT_EQ(small.ansatz_two_qubit_gate_count, 6);
  EXPECT_EQ(small.parameter_count, 9);
  EXPECT_NE(small.to_text().find("n_qubits=3\n"), std::string::npos);

  EXPECT_THROW(encoding_report(h8, Encoding::make(EncodingKind::Gray, 4)), ContractError);
}

}  // namespace
}  // namespace bandvqe
