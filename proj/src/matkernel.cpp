#include "snest/matkernel.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "snest/error.hpp"

namespace snest {

namespace {

void require_square(const ComplexMatrix& m, Eigen::Index n, const char* what) {
  if (m.rows() != n || m.cols() != n) {
    throw Error(ErrorKind::dimension_mismatch,
                std::string(what) + ": expected " + std::to_string(n) + "x" +
                    std::to_string(n) + ", got " + std::to_string(m.rows()) +
                    "x" + std::to_string(m.cols()));
  }
}

}  // namespace

bool all_finite(const ComplexMatrix& a) {
  for (Eigen::Index j = 0; j < a.cols(); ++j)
    for (Eigen::Index i = 0; i < a.rows(); ++i)
      if (!std::isfinite(a(i, j).real()) || !std::isfinite(a(i, j).imag()))
        return false;
  return true;
}

double hermiticity_defect(const ComplexMatrix& a) {
  if (a.rows() != a.cols()) return std::numeric_limits<double>::infinity();
  if (a.size() == 0) return 0.0;
  return (a - a.adjoint()).cwiseAbs().maxCoeff();
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b,
                   Eigen::Index max_dim) {
  const Eigen::Index rows = a.rows() * b.rows();
  const Eigen::Index cols = a.cols() * b.cols();
  if (rows > max_dim || cols > max_dim) {
    throw Error(ErrorKind::dimension_overflow,
                "kron: result " + std::to_string(rows) + "x" +
                    std::to_string(cols) + " exceeds maximum dimension " +
                    std::to_string(max_dim));
  }
  ComplexMatrix out(rows, cols);
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

EigenSystem hermitian_eig(const ComplexMatrix& a, double tol) {
  if (a.rows() != a.cols()) {
    throw Error(ErrorKind::not_hermitian, "hermitian_eig: matrix is not square");
  }
  const double defect = hermiticity_defect(a);
  if (!(defect <= tol)) {
    throw Error(ErrorKind::not_hermitian,
                "hermitian_eig: max |a - a^dagger| = " + std::to_string(defect) +
                    " exceeds tolerance");
  }
  const ComplexMatrix sym = 0.5 * (a + a.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(sym);
  if (solver.info() != Eigen::Success) {
    throw Error(ErrorKind::degenerate, "hermitian_eig: eigensolver did not converge");
  }
  return {solver.eigenvalues(), solver.eigenvectors()};
}

double min_eigenvalue(const ComplexMatrix& a, double tol) {
  return hermitian_eig(a, tol).values(0);
}

RealVector singular_values(const ComplexMatrix& a) {
  if (a.size() == 0) return RealVector();
  Eigen::JacobiSVD<ComplexMatrix> svd(a);
  return svd.singularValues();
}

RealVector singular_values(const RealMatrix& a) {
  if (a.size() == 0) return RealVector();
  Eigen::JacobiSVD<RealMatrix> svd(a);
  return svd.singularValues();
}

double trace_norm(const ComplexMatrix& a) { return singular_values(a).sum(); }

double trace_norm(const RealMatrix& a) { return singular_values(a).sum(); }

ComplexMatrix realign(const ComplexMatrix& rho, int dA, int dB) {
  require_square(rho, Eigen::Index(dA) * dB, "realign");
  ComplexMatrix r(dA * dA, dB * dB);
  for (int i = 0; i < dA; ++i)
    for (int j = 0; j < dA; ++j)
      for (int k = 0; k < dB; ++k)
        for (int l = 0; l < dB; ++l)
          r(i * dA + j, k * dB + l) = rho(i * dB + k, j * dB + l);
  return r;
}

ComplexMatrix realign_inverse(const ComplexMatrix& r, int dA, int dB) {
  if (r.rows() != Eigen::Index(dA) * dA || r.cols() != Eigen::Index(dB) * dB) {
    throw Error(ErrorKind::dimension_mismatch, "realign_inverse: shape mismatch");
  }
  ComplexMatrix rho(dA * dB, dA * dB);
  for (int i = 0; i < dA; ++i)
    for (int j = 0; j < dA; ++j)
      for (int k = 0; k < dB; ++k)
        for (int l = 0; l < dB; ++l)
          rho(i * dB + k, j * dB + l) = r(i * dA + j, k * dB + l);
  return rho;
}

ComplexMatrix partial_trace_B(const ComplexMatrix& rho, int dA, int dB) {
  require_square(rho, Eigen::Index(dA) * dB, "partial_trace_B");
  ComplexMatrix out = ComplexMatrix::Zero(dA, dA);
  for (int i = 0; i < dA; ++i)
    for (int j = 0; j < dA; ++j)
      for (int k = 0; k < dB; ++k) out(i, j) += rho(i * dB + k, j * dB + k);
  return out;
}

Complex hs_inner(const ComplexMatrix& a, const ComplexMatrix& b) {
  return (a.conjugate().cwiseProduct(b)).sum();
}

Complex trace_of_product(const ComplexMatrix& a, const ComplexMatrix& b) {
  // tr(ab) = sum_ij a_ij b_ji
  return (a.cwiseProduct(b.transpose())).sum();
}

}  // namespace snest
