#pragma once

// Seeded random generators and measurement families shared by the unit and
// acceptance suites.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include <Eigen/QR>

#include "snest/basis.hpp"
#include "snest/matkernel.hpp"
#include "snest/povm.hpp"
#include "snest/states.hpp"

namespace snest::test {

using Rng = std::mt19937_64;

inline ComplexMatrix random_complex(Eigen::Index rows, Eigen::Index cols, Rng& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  ComplexMatrix m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i)
    for (Eigen::Index j = 0; j < cols; ++j) m(i, j) = Complex(n(rng), n(rng));
  return m;
}

inline RealMatrix random_real(Eigen::Index rows, Eigen::Index cols, Rng& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  RealMatrix m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i)
    for (Eigen::Index j = 0; j < cols; ++j) m(i, j) = n(rng);
  return m;
}

inline ComplexMatrix random_hermitian(Eigen::Index d, Rng& rng) {
  const ComplexMatrix g = random_complex(d, d, rng);
  return 0.5 * (g + g.adjoint());
}

inline ComplexMatrix random_unitary(Eigen::Index d, Rng& rng) {
  Eigen::HouseholderQR<ComplexMatrix> qr(random_complex(d, d, rng));
  return qr.householderQ() * ComplexMatrix::Identity(d, d);
}

/// Ginibre-style mixed state: G G^dagger / tr.
inline ComplexMatrix random_density(int dA, int dB, Rng& rng) {
  const int n = dA * dB;
  const ComplexMatrix g = random_complex(n, n, rng);
  ComplexMatrix rho = g * g.adjoint();
  return rho / rho.trace().real();
}

inline ComplexVector random_unit_vector(Eigen::Index n, Rng& rng) {
  const ComplexMatrix g = random_complex(n, 1, rng);
  return g.col(0).normalized();
}

struct Family {
  std::string name;
  int d;
  int N;
  int M;
  GroupingScheme scheme;
};

/// The measurement families the examples use, plus two extra shapes.
inline std::vector<Family> families() {
  return {
      {"(3,2) d=2 sequential", 2, 3, 2, GroupingScheme::sequential},
      {"(5,4) d=4 appendix-A", 4, 5, 4, GroupingScheme::appendix_a},
      {"(8,2) d=3 appendix-B", 3, 8, 2, GroupingScheme::appendix_b},
      {"(4,3) d=3 sequential", 3, 4, 3, GroupingScheme::sequential},
      {"(1,4) d=2 sequential", 2, 1, 4, GroupingScheme::sequential},
  };
}

inline GroupedBasis grouped(const Family& f) {
  return group_basis(gellmann_basis(f.d), f.N, f.M, f.scheme);
}

inline TInterval family_range(const Family& f) { return t_range(build_h(grouped(f))); }

/// Five admissible t values spread over the interval, both endpoints included.
inline std::vector<double> admissible_ts(const TInterval& r) {
  return {r.lo, 0.4 * r.lo, 0.2 * r.hi, 0.6 * r.hi, r.hi};
}

inline SymmetricPovm family_povm(const Family& f, double t) { return build_povm(grouped(f), t); }

}  // namespace snest::test
