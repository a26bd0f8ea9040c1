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

#include "bandvqe/hamiltonian.hpp"

#include <gtest/gtest.h>

#include <Eigen/Eigenvalues>
#include <cmath>
#include <random>
#include <sstream>

#include "bandvqe/errors.hpp"
#include "test_util.hpp"

namespace bandvqe {
namespace {

using testing::data_path;
using testing::random_symmetric;

BandedHamiltonian parse(const std::string& text) {
  std::istringstream in(text);
  return parse_matrix(in);
}

// Number of eigenvalues below sigma, from the inertia of an LDL^T
// factorization of A - sigma I (Sylvester's law).
int count_below(const RealMatrix& a, double sigma) {
  const Eigen::Index n = a.rows();
  RealMatrix m = a - sigma * RealMatrix::Identity(n, n);
  int negatives = 0;
  for (Eigen::Index k = 0; k < n; ++k) {
    double pivot = m(k, k);
    if (pivot == 0.0) pivot = -1e-300;
    if (pivot < 0.0) ++negatives;
    for (Eigen::Index i = k + 1; i < n; ++i) {
      const double f = m(i, k) / pivot;
      for (Eigen::Index j = k + 1; j < n; ++j) m(i, j) -= f * m(k, j);
    }
  }
  return negatives;
}

double bisect_lowest(const RealMatrix& a) {
  double lo = -a.cwiseAbs().rowwise().sum().maxCoeff() - 1.0;
  double hi = -lo;
  for (int it = 0; it < 200 && hi - lo > 1e-13; ++it) {
    const double mid = 0.5 * (lo + hi);
    (count_below(a, mid) >= 1 ? hi : lo) = mid;
  }
  return 0.5 * (lo + hi);
}

TEST(LoadMatrix, Examples) {
  BandedHamiltonian h = parse("2\n1 0.5\n0.5 2\n");
  EXPECT_EQ(h.dim(), 2);
  EXPECT_EQ(h(0, 0), 1.0);
  EXPECT_EQ(h(0, 1), 0.5);
  EXPECT_EQ(h(1, 0), 0.5);
  EXPECT_EQ(h(1, 1), 2.0);
  EXPECT_EQ(h.band(), 1);

  BandedHamiltonian scalar = parse("1\n-3.7\n");
  EXPECT_EQ(scalar.dim(), 1);
  EXPECT_EQ(scalar(0, 0), -3.7);

  EXPECT_THROW(parse("2\n1 0.5\n0.6 2\n"), ContractError);
}

TEST(LoadMatrix, CommentsAndBlankLines) {
  BandedHamiltonian h = parse("# header\n\n2\n  # row comment\n1 0\n\n0 1\n");
  EXPECT_EQ(h.entries(), RealMatrix::Identity(2, 2));
}

TEST(LoadMatrix, ReportsLineNumbers) {
  try {
    parse("2\n1 2\n2 x\n");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3);
  }
  EXPECT_THROW(parse("2\n1 2 3\n2 1\n"), ParseError);
  EXPECT_THROW(parse("2\n1 2\n"), ParseError);
  EXPECT_THROW(parse(""), ParseError);
  EXPECT_THROW(parse("0\n"), ParseError);
  EXPECT_THROW(parse("1\nnan\n"), ContractError);
  EXPECT_THROW(load_matrix("/nonexistent/matrix.txt"), ParseError);
}

TEST(LoadMatrix, WriteRoundTripIsExact) {
  RealMatrix m = random_symmetric(6, 9);
  std::ostringstream out;
  write_matrix(out, m, "seeded\nsecond line");
  EXPECT_EQ(parse(out.str()).entries(), m);
}

TEST(TruncateBand, Examples) {
  BandedHamiltonian dense(random_symmetric(8, 1));
  BandedHamiltonian tri = truncate_band(dense, 1);
  for (int i = 0; i < 8; ++i) {
    for (int j = 0; j < 8; ++j) {
      EXPECT_EQ(tri(i, j), std::abs(i - j) <= 1 ? dense(i, j) : 0.0);
    }
  }
  EXPECT_EQ(tri.band(), 1);
  EXPECT_EQ(truncate_band(dense, 7), dense);

  BandedHamiltonian ones(RealMatrix::Ones(3, 3));
  BandedHamiltonian cut = truncate_band(ones, 1);
  EXPECT_EQ(cut(0, 2), 0.0);
  EXPECT_EQ(cut(2, 0), 0.0);
  EXPECT_EQ(cut(1, 2), 1.0);
  EXPECT_EQ(cut.entries().sum(), 7.0);

  EXPECT_THROW(truncate_band(ones, 3), ContractError);
  EXPECT_THROW(truncate_band(ones, -1), ContractError);
}

TEST(TruncateBand, IsIdempotentAndSymmetric) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    BandedHamiltonian h(random_symmetric(8, seed));
    for (int k = 0; k < 8; ++k) {
      BandedHamiltonian once = truncate_band(h, k);
      ASSERT_EQ(truncate_band(once, k), once);
      ASSERT_EQ(once.entries(), once.entries().transpose());
    }
  }
}

TEST(LowestEigenpair, Examples) {
  RealMatrix d = RealMatrix::Zero(3, 3);
  d.diagonal() << 3, 1, 2;
  EigenPair diag = lowest_eigenpair(BandedHamiltonian(d));
  EXPECT_NEAR(diag.energy, 1.0, 1e-15);
  EXPECT_NEAR(std::abs(diag.vector(1)), 1.0, 1e-15);

  RealMatrix x(2, 2);
  x << 0, 1, 1, 0;
  EigenPair pair = lowest_eigenpair(BandedHamiltonian(x));
  EXPECT_NEAR(pair.energy, -1.0, 1e-14);
  EXPECT_NEAR(std::abs(pair.vector(0)), 1.0 / std::sqrt(2.0), 1e-14);
  EXPECT_NEAR(pair.vector(0), -pair.vector(1), 1e-14);
}

TEST(LowestEigenpair, MatchesInertiaBisectionOracle) {
  for (std::uint64_t seed = 100; seed < 150; ++seed) {
    RealMatrix m = random_symmetric(8, seed);
    EigenPair p = lowest_eigenpair(BandedHamiltonian(m));
    ASSERT_NEAR(p.energy, bisect_lowest(m), 1e-9) << "seed " << seed;
    ASSERT_NEAR(p.vector.norm(), 1.0, 1e-12);
  }
}

TEST(LowestEigenpair, FullSpectrumMatchesEigen) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    RealMatrix m = random_symmetric(12, seed);
    SymmetricEigen mine = jacobi_eigen(m);
    Eigen::SelfAdjointEigenSolver<RealMatrix> ref(m);
    ASSERT_LE((mine.values - ref.eigenvalues()).cwiseAbs().maxCoeff(), 1e-11);
    ASSERT_LE((m * mine.vectors - mine.vectors * mine.values.asDiagonal()).norm(), 1e-10);
  }
}

TEST(LowestEigenpair, BoundsEveryRayleighQuotient) {
  std::mt19937_64 rng(77);
  std::normal_distribution<double> g;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    RealMatrix m = random_symmetric(8, seed);
    const double e0 = lowest_eigenpair(BandedHamiltonian(m)).energy;
    for (int trial = 0; trial < 50; ++trial) {
      RealVector v(8);
      for (auto& c : v) c = g(rng);
      ASSERT_GE(v.dot(m * v) / v.squaredNorm(), e0 - 1e-9);
    }
  }
}

TEST(LowestEigenpair, SynthesizedSpectrumIsRecovered) {
  const std::vector<double> spectrum{-2.0, 0.0, 6.414, 9.0};
  Eigen::HouseholderQR<RealMatrix> qr(random_symmetric(4, 3));
  RealMatrix q = qr.householderQ();
  SymmetricEigen eig = jacobi_eigen(synthesize_from_spectrum(spectrum, q));
  for (int i = 0; i < 4; ++i) EXPECT_NEAR(eig.values(i), spectrum[static_cast<std::size_t>(i)], 1e-12);
}

// Errors against the full matrix shrink as the band widens, on every
// shipped sample.
TEST(ShippedSamples, MonotoneRefinement) {
  for (const char* name : {"spectral_gap_8.txt", "tridiag_dominant_8.txt", "sector_a_8.txt", "sector_b_8.txt"}) {
    BandedHamiltonian h = load_matrix(data_path(name));
    const double full = lowest_eigenpair(h).energy;
    double previous = INFINITY;
    for (int k : {1, 3, 5, 7}) {
      const double err = std::abs(lowest_eigenpair(truncate_band(h, k)).energy - full);
      EXPECT_LE(err, previous) << name << " K=" << k;
      previous = err;
    }
  }
}

TEST(ShippedSamples, SpectralSampleHasTheGap) {
  SymmetricEigen eig = jacobi_eigen(load_matrix(data_path("spectral_gap_8.txt")).entries());
  EXPECT_NEAR(eig.values(0), 0.0, 1e-12);
  EXPECT_NEAR(eig.values(1), 6.414, 1e-12);

  const double a = lowest_eigenpair(load_matrix(data_path("sector_a_8.txt"))).energy;
  const double b = lowest_eigenpair(load_matrix(data_path("sector_b_8.txt"))).energy;
  EXPECT_NEAR(b - a, 6.414, 1e-10);
}

TEST(Series, Examples) {
  for (int k : {1, 3, 5, 7}) EXPECT_EQ(series_truncation(0.0, 1.7e-4, k), 0.0);
  for (double g : {0.0, 1e-3, 0.5}) EXPECT_EQ(series_truncation(3.0, g, 1), -1.5);
  EXPECT_THROW(series_truncation(1.0, 1.0, 0), ContractError);
}

// Long-double oracle for the truncated sum, independent of the loop order
// used in the library.
long double truncated_oracle(long double x, long double g, int k) {
  long double sum = 0.0L;
  for (int j = 0; j < (k + 1) / 2; ++j) sum += std::pow(-g * x, j) / std::tgamma(static_cast<long double>(j + 2));
  return -x / 2.0L * sum;
}

TEST(Series, MatchesOracleAndLeadingRemainder) {
  const double g = 1.7e-4;
  for (double x : {100.0, 250.0, 500.0}) {
    for (int k : {1, 3, 5, 7}) {
      const long double ref = truncated_oracle(x, g, k);
      ASSERT_NEAR(series_truncation(x, g, k), static_cast<double>(ref), 1e-13 * std::abs(static_cast<double>(ref)));
    }
    // Four terms survive at K=7; the first dropped term fixes the error.
    const double exact = series_exact(x, g);
    const double rel = std::abs(series_truncation(x, g, 7) - exact) / std::abs(exact);
    const double leading = std::pow(g * x, 4) / 120.0;
    EXPECT_NEAR(rel, leading, 0.1 * leading) << "x=" << x;
  }
}

TEST(Series, ConvergesForSmallArguments) {
  for (double gx : {0.01, 0.05, 0.1}) {
    const double g = 1.7e-4;
    const double x = gx / g;
    double previous = INFINITY;
    for (int k : {1, 3, 5, 7, 9}) {
      const double err = std::abs(series_truncation(x, g, k) - series_exact(x, g));
      EXPECT_LT(err, previous);
      previous = err;
    }
    EXPECT_LT(previous, 1e-6 * std::abs(series_exact(x, g)));
  }
}

TEST(SymEft, Validate) {
  SymEftParams p;
  EXPECT_NO_THROW(p.validate());
  EXPECT_EQ(p.hbar_omega, 18.0);
  EXPECT_EQ(p.gamma, 1.7e-4);
  EXPECT_EQ(p.n_max, 12);
  p.gamma = 0.0;
  EXPECT_THROW(p.validate(), ContractError);
}

}  // namespace
}  // namespace bandvqe
