#pragma once

// Dense complex matrix primitives shared by every other module.
//
// Bipartite convention: |i>_A |k>_B <-> composite index i*dB + k (A-major).

#include <complex>
#include <cstddef>

#include <Eigen/Dense>

namespace snest {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;

inline constexpr double kHermitianTol = 1e-10;
inline constexpr double kPsdTol = 1e-10;
inline constexpr Eigen::Index kDefaultMaxDim = 4096;

bool all_finite(const ComplexMatrix& a);

/// Largest entry of |a - a^dagger|; +inf for non-square input.
double hermiticity_defect(const ComplexMatrix& a);

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b,
                   Eigen::Index max_dim = kDefaultMaxDim);

struct EigenSystem {
  RealVector values;      // ascending
  ComplexMatrix vectors;  // orthonormal columns, vectors.col(i) <-> values(i)
};

/// Throws not_hermitian if the defect exceeds `tol`. The input is symmetrized
/// before diagonalization.
EigenSystem hermitian_eig(const ComplexMatrix& a, double tol = kHermitianTol);

double min_eigenvalue(const ComplexMatrix& a, double tol = kHermitianTol);

RealVector singular_values(const ComplexMatrix& a);
RealVector singular_values(const RealMatrix& a);

double trace_norm(const ComplexMatrix& a);
double trace_norm(const RealMatrix& a);

/// R[i*dA + j, k*dB + l] = rho[i*dB + k, j*dB + l].
ComplexMatrix realign(const ComplexMatrix& rho, int dA, int dB);

/// Inverse index map of realign().
ComplexMatrix realign_inverse(const ComplexMatrix& r, int dA, int dB);

ComplexMatrix partial_trace_B(const ComplexMatrix& rho, int dA, int dB);

/// Hilbert-Schmidt inner product tr(a^dagger b).
Complex hs_inner(const ComplexMatrix& a, const ComplexMatrix& b);

/// tr(a b) without forming the product.
Complex trace_of_product(const ComplexMatrix& a, const ComplexMatrix& b);

}  // namespace snest
