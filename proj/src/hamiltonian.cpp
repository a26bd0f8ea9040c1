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

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numeric>
#include <sstream>
#include <vector>

#include "bandvqe/errors.hpp"

namespace bandvqe {

BandedHamiltonian::BandedHamiltonian(RealMatrix entries) : entries_(std::move(entries)) {
  if (entries_.rows() < 1 || entries_.rows() != entries_.cols()) {
    throw ContractError("Hamiltonian must be a non-empty square matrix");
  }
  if (!entries_.allFinite()) throw ContractError("Hamiltonian has non-finite entries");
  const double scale = entries_.cwiseAbs().maxCoeff();
  const double worst = (entries_ - entries_.transpose()).cwiseAbs().maxCoeff();
  if (worst > kSymmetryTolerance * scale) {
    char buf[128];
    std::snprintf(buf, sizeof buf, "matrix is not symmetric (max |A - A^T| = %.3g)", worst);
    throw ContractError(buf);
  }
  RealMatrix sym = 0.5 * (entries_ + entries_.transpose());
  entries_ = std::move(sym);
  band_ = dim() - 1;
}

BandedHamiltonian truncate_band(const BandedHamiltonian& h, int k) {
  if (k < 0 || k > h.dim() - 1) {
    throw ContractError("band K=" + std::to_string(k) + " outside [0, " + std::to_string(h.dim() - 1) + "]");
  }
  BandedHamiltonian out = h;
  for (int i = 0; i < h.dim(); ++i) {
    for (int j = 0; j < h.dim(); ++j) {
      if (std::abs(i - j) > k) out.entries_(i, j) = 0.0;
    }
  }
  out.band_ = k;
  return out;
}

BandedHamiltonian parse_matrix(std::istream& in) {
  std::string line;
  int line_no = 0;
  int n = -1;
  std::vector<double> values;
  std::vector<int> row_lines;
  while (std::getline(in, line)) {
    ++line_no;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream fields(line);
    if (n < 0) {
      long long parsed = 0;
      std::string rest;
      if (!(fields >> parsed) || (fields >> rest)) throw ParseError("expected matrix dimension N", line_no);
      if (parsed < 1) throw ParseError("matrix dimension must be >= 1", line_no);
      if (parsed > 4096) throw ParseError("matrix dimension exceeds 4096", line_no);
      n = static_cast<int>(parsed);
      continue;
    }
    if (static_cast<int>(row_lines.size()) == n) throw ParseError("more than N rows", line_no);
    std::vector<double> row;
    std::string token;
    while (fields >> token) {
      std::size_t used = 0;
      double v = 0.0;
      try {
        v = std::stod(token, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != token.size()) throw ParseError("invalid number '" + token + "'", line_no);
      row.push_back(v);
    }
    if (static_cast<int>(row.size()) != n) {
      throw ParseError("expected " + std::to_string(n) + " values, found " + std::to_string(row.size()), line_no);
    }
    values.insert(values.end(), row.begin(), row.end());
    row_lines.push_back(line_no);
  }
  if (n < 0) throw ParseError("empty matrix file", 0);
  if (static_cast<int>(row_lines.size()) != n) {
    throw ParseError("expected " + std::to_string(n) + " rows, found " + std::to_string(row_lines.size()), line_no);
  }
  RealMatrix m(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) m(i, j) = values[static_cast<std::size_t>(i * n + j)];
  }
  return BandedHamiltonian(std::move(m));
}

BandedHamiltonian load_matrix(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open matrix file '" + path.string() + "'", 0);
  return parse_matrix(in);
}

void write_matrix(std::ostream& out, const RealMatrix& m, const std::string& comment) {
  std::istringstream lines(comment);
  std::string line;
  while (std::getline(lines, line)) out << "# " << line << '\n';
  out << m.rows() << '\n';
  char buf[32];
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      std::snprintf(buf, sizeof buf, "%.17g", m(i, j));
      out << (j ? " " : "") << buf;
    }
    out << '\n';
  }
}

SymmetricEigen jacobi_eigen(const RealMatrix& input) {
  const Eigen::Index n = input.rows();
  RealMatrix a = input;
  RealMatrix v = RealMatrix::Identity(n, n);
  const double norm = input.norm();
  constexpr int kMaxSweeps = 100;

  auto off_diagonal = [&] {
    double s = 0.0;
    for (Eigen::Index i = 0; i < n; ++i) {
      for (Eigen::Index j = 0; j < n; ++j) {
        if (i != j) s += a(i, j) * a(i, j);
      }
    }
    return std::sqrt(s);
  };

  int sweep = 0;
  while (off_diagonal() > 1e-14 * norm && norm > 0.0) {
    if (++sweep > kMaxSweeps) {
      char buf[128];
      std::snprintf(buf, sizeof buf, "Jacobi eigensolver did not converge (off-diagonal norm %.3g)",
                    off_diagonal());
      throw NumericalError(buf);
    }
    for (Eigen::Index p = 0; p < n - 1; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        // Rotation angle that annihilates a(p, q).
        const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        const double t = std::copysign(1.0, theta) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (Eigen::Index k = 0; k < n; ++k) {
          const double akp = a(k, p);
          const double akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (Eigen::Index k = 0; k < n; ++k) {
          const double apk = a(p, k);
          const double aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        for (Eigen::Index k = 0; k < n; ++k) {
          const double vkp = v(k, p);
          const double vkq = v(k, q);
          v(k, p) = c * vkp - s * vkq;
          v(k, q) = s * vkp + c * vkq;
        }
      }
    }
  }

  std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), Eigen::Index{0});
  std::stable_sort(order.begin(), order.end(), [&](Eigen::Index i, Eigen::Index j) { return a(i, i) < a(j, j); });
  SymmetricEigen out{RealVector(n), RealMatrix(n, n)};
  for (Eigen::Index k = 0; k < n; ++k) {
    out.values(k) = a(order[static_cast<std::size_t>(k)], order[static_cast<std::size_t>(k)]);
    out.vectors.col(k) = v.col(order[static_cast<std::size_t>(k)]);
  }
  return out;
}

EigenPair lowest_eigenpair(const BandedHamiltonian& h) {
  if (h.dim() > 4096) throw ContractError("lowest_eigenpair: N exceeds 4096");
  SymmetricEigen eig = jacobi_eigen(h.entries());
  EigenPair out{eig.values(0), eig.vectors.col(0)};
  out.vector.normalize();
  const double residual = (h.entries() * out.vector - out.energy * out.vector).norm();
  const double bound = 1e-9 * h.entries().norm();
  if (!std::isfinite(residual) || !std::isfinite(out.energy)) {
    throw NumericalError("eigenpair is not finite (matrix entries overflow)");
  }
  if (residual > bound && residual > 1e-300) {
    char buf[128];
    std::snprintf(buf, sizeof buf, "eigenpair residual %.3g exceeds bound %.3g", residual, bound);
    throw NumericalError(buf);
  }
  return out;
}

RealMatrix synthesize_from_spectrum(std::span<const double> eigenvalues, const RealMatrix& orthogonal) {
  const auto n = static_cast<Eigen::Index>(eigenvalues.size());
  if (orthogonal.rows() != n || orthogonal.cols() != n) {
    throw ContractError("orthogonal factor does not match spectrum size");
  }
  RealVector diag = Eigen::Map<const RealVector>(eigenvalues.data(), n);
  RealMatrix m = orthogonal * diag.asDiagonal() * orthogonal.transpose();
  return 0.5 * (m + m.transpose());
}

void SymEftParams::validate() const {
  if (!(hbar_omega > 0.0)) throw ContractError("hbar_omega must be positive");
  if (!(gamma > 0.0)) throw ContractError("gamma must be positive");
}

double series_truncation(double x, double gamma, int k) {
  if (k < 1) throw ContractError("series_truncation: K must be >= 1");
  const int terms = (k + 1) / 2;  // ceil(K/2)
  double power = 1.0;             // (-gamma x)^j
  double factorial = 1.0;         // (j+1)!
  double sum = 0.0;
  for (int j = 0; j < terms; ++j) {
    factorial *= static_cast<double>(j + 1);
    sum += power / factorial;
    power *= -gamma * x;
  }
  return -0.5 * x * sum;
}

double series_exact(double x, double gamma) { return std::expm1(-gamma * x) / (2.0 * gamma); }

}  // namespace bandvqe
