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

#include <gtest/gtest.h>

#include <random>

#include "bandvqe/errors.hpp"

namespace bandvqe {
namespace {

const Complex kI{0.0, 1.0};

std::string bits(std::uint64_t v, int n) {
  std::string s(n, '0');
  for (int q = 0; q < n; ++q) {
    if ((v >> (n - 1 - q)) & 1U) s[q] = '1';
  }
  return s;
}

std::string random_letters(std::mt19937_64& rng, int n) {
  static constexpr char kLetters[] = "IXYZ";
  std::string s(n, 'I');
  for (auto& c : s) c = kLetters[rng() % 4];
  return s;
}

TEST(PauliTerm, ProductExamples) {
  PauliTerm xy = term_product({1.0, "X"}, {1.0, "Y"});
  EXPECT_EQ(xy.letters, "Z");
  EXPECT_EQ(xy.coefficient, kI);

  PauliTerm disjoint = term_product({1.0, "XI"}, {1.0, "IX"});
  EXPECT_EQ(disjoint.letters, "XX");
  EXPECT_EQ(disjoint.coefficient, Complex(1.0));

  PauliTerm zz = term_product({2.0, "Z"}, {3.0, "Z"});
  EXPECT_EQ(zz.letters, "I");
  EXPECT_EQ(zz.coefficient, Complex(6.0));
}

TEST(PauliTerm, ProductRejectsWidthMismatchAndBadLetters) {
  EXPECT_THROW(term_product({1.0, "X"}, {1.0, "XX"}), ContractError);
  EXPECT_THROW(validate_letters("XQ"), ContractError);
}

TEST(PauliTerm, ProductIsAssociativeAndMatchesMatrices) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 4);
    PauliTerm a{1.0, random_letters(rng, n)};
    PauliTerm b{Complex(0.5, -1.0), random_letters(rng, n)};
    PauliTerm c{2.0, random_letters(rng, n)};
    PauliTerm left = term_product(term_product(a, b), c);
    PauliTerm right = term_product(a, term_product(b, c));
    ASSERT_EQ(left.letters, right.letters);
    ASSERT_NEAR(std::abs(left.coefficient - right.coefficient), 0.0, 1e-14);

    PauliSum sa(n), sb(n), sab(n);
    sa.add(a);
    sb.add(b);
    sab.add(term_product(a, b));
    ASSERT_LE((to_matrix(sa) * to_matrix(sb) - to_matrix(sab)).cwiseAbs().maxCoeff(), 1e-14);
  }
}

TEST(PauliSum, AddExamples) {
  PauliSum s(1);
  s.add({1.0, "I"}).add({-1.0, "I"});
  EXPECT_TRUE(s.empty());

  PauliSum merge(1);
  merge.add({0.5, "X"}).add({0.5, "X"});
  ASSERT_EQ(merge.size(), 1U);
  EXPECT_EQ(merge.coefficient("X"), Complex(1.0));

  PauliSum insert(1);
  insert += PauliTerm{1.0, "Z"};
  EXPECT_EQ(insert.coefficient("Z"), Complex(1.0));
  EXPECT_EQ(insert.coefficient("X"), Complex(0.0));
}

TEST(PauliSum, AddRejectsWrongWidth) {
  PauliSum s(2);
  EXPECT_THROW(s.add({1.0, "X"}), ContractError);
}

TEST(PauliSum, AddNeverDuplicatesLetters) {
  std::mt19937_64 rng(3);
  PauliSum s(2);
  int inserted = 0;
  for (int i = 0; i < 500; ++i) {
    s.add({static_cast<double>(1 + rng() % 3), random_letters(rng, 2)});
    ++inserted;
  }
  EXPECT_LE(s.size(), 16U);
  EXPECT_EQ(inserted, 500);
}

TEST(OuterProduct, Examples) {
  PauliSum lower = outer_product_to_paulis("1", "0");
  EXPECT_EQ(lower.size(), 2U);
  EXPECT_EQ(lower.coefficient("X"), Complex(0.5));
  EXPECT_EQ(lower.coefficient("Y"), Complex(0.0, -0.5));

  PauliSum proj = outer_product_to_paulis("0", "0");
  EXPECT_EQ(proj.coefficient("I"), Complex(0.5));
  EXPECT_EQ(proj.coefficient("Z"), Complex(0.5));

  PauliSum two = outer_product_to_paulis("10", "00");
  EXPECT_EQ(two.size(), 4U);
  EXPECT_EQ(two.coefficient("XI"), Complex(0.25));
  EXPECT_EQ(two.coefficient("XZ"), Complex(0.25));
  EXPECT_EQ(two.coefficient("YI"), Complex(0.0, -0.25));
  EXPECT_EQ(two.coefficient("YZ"), Complex(0.0, -0.25));
}

// Every |r><c| for n <= 4 against the elementary matrix.
TEST(OuterProduct, MatchesElementaryMatrices) {
  for (int n = 1; n <= 4; ++n) {
    const std::uint64_t dim = std::uint64_t{1} << n;
    for (std::uint64_t r = 0; r < dim; ++r) {
      for (std::uint64_t c = 0; c < dim; ++c) {
        ComplexMatrix m = to_matrix(outer_product_to_paulis(bits(r, n), bits(c, n)));
        ComplexMatrix expect = ComplexMatrix::Zero(dim, dim);
        expect(r, c) = 1.0;
        ASSERT_LE((m - expect).cwiseAbs().maxCoeff(), 1e-14) << bits(r, n) << " " << bits(c, n);
      }
    }
  }
}

TEST(ToMatrix, Examples) {
  PauliSum z(1);
  z.add({1.0, "Z"});
  ComplexMatrix mz = to_matrix(z);
  EXPECT_EQ(mz(0, 0), Complex(1.0));
  EXPECT_EQ(mz(1, 1), Complex(-1.0));
  EXPECT_EQ(mz(0, 1), Complex(0.0));

  PauliSum x(1);
  x.add({2.5, "X"});
  ComplexMatrix mx = to_matrix(x);
  EXPECT_EQ(mx(0, 1), Complex(2.5));
  EXPECT_EQ(mx(1, 0), Complex(2.5));
  EXPECT_EQ(mx(0, 0), Complex(0.0));
}

TEST(ToMatrix, RejectsTooManyQubits) {
  PauliSum big(kMaxDenseQubits + 1);
  EXPECT_THROW(to_matrix(big), ContractError);
}

TEST(PauliSum, HermitianIffMatrixIsHermitian) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  int hermitian_count = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 3);
    PauliSum s(n);
    for (int t = 0; t < 4; ++t) {
      const bool imaginary = (rng() % 3) == 0;
      s.add({Complex(u(rng), imaginary ? u(rng) : 0.0), random_letters(rng, n)});
    }
    ComplexMatrix m = to_matrix(s);
    const bool matrix_hermitian = (m - m.adjoint()).cwiseAbs().maxCoeff() <= 1e-12;
    ASSERT_EQ(s.hermitian(), matrix_hermitian);
    hermitian_count += matrix_hermitian;
  }
  EXPECT_GT(hermitian_count, 0);
  EXPECT_LT(hermitian_count, 300);
}

TEST(PauliSum, AdjointAndProductMatchMatrices) {
  PauliSum a = outer_product_to_paulis("01", "10");
  PauliSum b = outer_product_to_paulis("10", "11");
  ComplexMatrix ma = to_matrix(a);
  ComplexMatrix mb = to_matrix(b);
  EXPECT_LE((to_matrix(a.adjoint()) - ma.adjoint()).cwiseAbs().maxCoeff(), 1e-15);
  EXPECT_LE((to_matrix(sum_product(a, b)) - ma * mb).cwiseAbs().maxCoeff(), 1e-15);
  EXPECT_LE((to_matrix(a.scaled(Complex(0, 2))) - Complex(0, 2) * ma).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(PauliSum, TextRoundTripIsExact) {
  PauliSum s(3);
  s.add({Complex(0.1, 0.0), "XYZ"}).add({Complex(1.0 / 3.0, -2e-5), "IIZ"}).add({-7.25, "III"});
  const std::string text = s.to_text();
  EXPECT_EQ(PauliSum::from_text(text, 3), s);
  EXPECT_EQ(PauliSum::from_text(text, 3).to_text(), text);
  EXPECT_THROW(PauliSum::from_text("1.0 X\n", 1), ParseError);
}

}  // namespace
}  // namespace bandvqe
