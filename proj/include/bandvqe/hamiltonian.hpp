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

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>

#include <Eigen/Dense>

namespace bandvqe {

using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;

/// Relative tolerance for accepting a stored matrix as symmetric.
inline constexpr double kSymmetryTolerance = 1e-9;

/// Real symmetric N x N Hamiltonian (MeV) with an active half-bandwidth K.
/// Entries with |i - j| > K are exactly zero once the band has been applied;
/// the matrix bandwidth is 2K + 1.
class BandedHamiltonian {
 public:
  /// Validates symmetry to `kSymmetryTolerance * max|entry|`, then stores
  /// (A + A^T) / 2. K starts at N - 1.
  explicit BandedHamiltonian(RealMatrix entries);

  int dim() const { return static_cast<int>(entries_.rows()); }
  int band() const { return band_; }
  const RealMatrix& entries() const { return entries_; }
  double operator()(int row, int col) const { return entries_(row, col); }

  friend BandedHamiltonian truncate_band(const BandedHamiltonian& h, int k);
  friend bool operator==(const BandedHamiltonian& a, const BandedHamiltonian& b) {
    return a.band_ == b.band_ && a.entries_ == b.entries_;
  }

 private:
  RealMatrix entries_;
  int band_;
};

/// Copy of `h` with every entry outside |i - j| <= k set to zero.
BandedHamiltonian truncate_band(const BandedHamiltonian& h, int k);

/// Reads the dense text format: N on the first data line, then N rows of N
/// reals. '#' starts a comment line and blank lines are skipped.
BandedHamiltonian parse_matrix(std::istream& in);
BandedHamiltonian load_matrix(const std::filesystem::path& path);

/// Writes `m` in the format read by parse_matrix, at full precision.
void write_matrix(std::ostream& out, const RealMatrix& m, const std::string& comment = {});

struct EigenPair {
  double energy = 0.0;
  RealVector vector;
};

/// Full eigendecomposition; values ascending, columns of `vectors` matching.
struct SymmetricEigen {
  RealVector values;
  RealMatrix vectors;
};

/// Cyclic Jacobi eigensolver for small dense symmetric matrices.
/// Throws NumericalError if the sweep cap is hit.
SymmetricEigen jacobi_eigen(const RealMatrix& a);

/// Lowest eigenvalue and a unit eigenvector, checked against the residual
/// bound ||Hv - Ev|| <= 1e-9 ||H||_F.
EigenPair lowest_eigenpair(const BandedHamiltonian& h);

/// Q diag(eigenvalues) Q^T for an orthogonal Q.
RealMatrix synthesize_from_spectrum(std::span<const double> eigenvalues, const RealMatrix& orthogonal);

/// Parameters of the symmetry-inspired effective interaction. Only gamma enters
/// any computation here; the rest is carried as run metadata.
struct SymEftParams {
  double hbar_omega = 18.0;  // MeV
  double gamma = 1.7e-4;
  std::optional<double> chi;  // MeV
  int n_max = 12;

  void validate() const;
};

/// Truncated expansion of (exp(-gamma x) - 1) / (2 gamma): the first
/// ceil(K/2) terms of -(x/2) sum_k (-gamma x)^k / (k+1)!.
double series_truncation(double x, double gamma, int k);

/// Closed form (exp(-gamma x) - 1) / (2 gamma).
double series_exact(double x, double gamma);

}  // namespace bandvqe
