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

// Writes the synthetic sample Hamiltonians shipped under data/.
//
//   make_samples <output-dir>
//
// None of these matrices is a physical nuclear Hamiltonian. The spectral
// samples are built as Q diag(E) Q^T with Q a fixed product of nearest-
// neighbour Givens rotations, so their low spectrum is known exactly and their
// matrix elements fall off away from the diagonal.

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "bandvqe/hamiltonian.hpp"

namespace {

using bandvqe::RealMatrix;

RealMatrix givens_ladder(int n, int sweeps, double max_angle, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> angle(-max_angle, max_angle);
  RealMatrix q = RealMatrix::Identity(n, n);
  for (int s = 0; s < sweeps; ++s) {
    for (int i = 0; i + 1 < n; ++i) {
      const double t = angle(rng);
      const double c = std::cos(t);
      const double sn = std::sin(t);
      for (int r = 0; r < n; ++r) {
        const double a = q(r, i);
        const double b = q(r, i + 1);
        q(r, i) = c * a - sn * b;
        q(r, i + 1) = sn * a + c * b;
      }
    }
  }
  return q;
}

RealMatrix random_banded(int n, double diag_step, double coupling, double decay, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  RealMatrix m = RealMatrix::Zero(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = diag_step * i + 0.5 * diag_step * normal(rng);
  for (int d = 1; d < n; ++d) {
    for (int i = 0; i + d < n; ++i) {
      const double v = coupling * std::pow(decay, d - 1) * normal(rng);
      m(i, i + d) = v;
      m(i + d, i) = v;
    }
  }
  return m;
}

void save(const std::filesystem::path& path, const RealMatrix& m, const std::string& comment) {
  std::ofstream out(path);
  bandvqe::write_matrix(out, m, comment);
  std::cout << "wrote " << path.string() << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: make_samples <output-dir>\n";
    return 1;
  }
  const std::filesystem::path dir = argv[1];
  std::filesystem::create_directories(dir);

  const std::vector<double> gap_spectrum{0.0, 6.414, 11.2, 15.9, 21.7, 27.4, 33.0, 39.6};
  save(dir / "spectral_gap_8.txt",
       bandvqe::synthesize_from_spectrum(gap_spectrum, givens_ladder(8, 2, 1.0, 18)),
       "Synthetic 8x8 Hamiltonian (MeV), Q diag(E) Q^T.\n"
       "Spectrum: 0 6.414 11.2 15.9 21.7 27.4 33.0 39.6 (lowest gap 6.414 MeV by construction).\n"
       "Not a physical matrix.");

  save(dir / "tridiag_dominant_8.txt", random_banded(8, 5.0, 3.0, 0.35, 7),
       "Synthetic seeded-random symmetric 8x8 with dominant tridiagonal band (MeV).");

  const std::vector<double> ground_sector{-92.16, -84.51, -79.02, -73.80, -68.13, -61.90, -55.47, -48.82};
  const std::vector<double> excited_sector{-85.746, -80.41, -75.06, -69.65, -63.28, -57.73, -51.94, -45.02};
  save(dir / "sector_a_8.txt",
       bandvqe::synthesize_from_spectrum(ground_sector, givens_ladder(8, 2, 1.0, 14)),
       "Synthetic lower-sector 8x8 Hamiltonian (MeV); lowest eigenvalue -92.16.\nNot a physical matrix.");
  save(dir / "sector_b_8.txt",
       bandvqe::synthesize_from_spectrum(excited_sector, givens_ladder(8, 2, 1.0, 20)),
       "Synthetic upper-sector 8x8 Hamiltonian (MeV); lowest eigenvalue -85.746,\n"
       "6.414 MeV above the lower sector.\nNot a physical matrix.");

  RealMatrix banded32 = random_banded(32, 2.0, 1.5, 0.4, 32);
  save(dir / "banded_32.txt", banded32, "Synthetic seeded-random symmetric 32x32 (MeV), decaying off-diagonals.");
  return 0;
}
