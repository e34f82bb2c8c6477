#include "snest/correlation.hpp"

#include <cmath>
#include <sstream>

#include <omp.h>

#include "snest/error.hpp"

namespace snest {

namespace {

double checked_real(Complex v, Eigen::Index row, Eigen::Index col) {
  if (std::abs(v.imag()) > kImaginaryResidueTol) {
    std::ostringstream os;
    os << "correlation entry (" << row << ", " << col << ") has imaginary part "
       << v.imag();
    throw Error(ErrorKind::imaginary_residue, os.str());
  }
  return v.real();
}

void check_shapes(const ComplexMatrix& rho, int dA, int dB,
                  std::span<const ComplexMatrix> ea, std::span<const ComplexMatrix> eb) {
  const Eigen::Index n = Eigen::Index(dA) * dB;
  if (rho.rows() != n || rho.cols() != n) {
    throw Error(ErrorKind::dimension_mismatch, "correlation_matrix: rho is not (dA*dB)^2");
  }
  for (const auto& e : ea)
    if (e.rows() != dA || e.cols() != dA)
      throw Error(ErrorKind::dimension_mismatch, "correlation_matrix: party A effect is not dA x dA");
  for (const auto& e : eb)
    if (e.rows() != dB || e.cols() != dB)
      throw Error(ErrorKind::dimension_mismatch, "correlation_matrix: party B effect is not dB x dB");
}

void fill_row(const ComplexMatrix& rho, int dA, int dB, const ComplexMatrix& ea,
              std::span<const ComplexMatrix> eb, Eigen::Index row, RealMatrix& out) {
  const ComplexMatrix x = contract_party_a(rho, dA, dB, ea);
  for (std::size_t b = 0; b < eb.size(); ++b)
    out(row, Eigen::Index(b)) = checked_real(trace_of_product(x, eb[b]), row, Eigen::Index(b));
}

}  // namespace

ComplexMatrix contract_party_a(const ComplexMatrix& rho, int dA, int dB,
                               const ComplexMatrix& effect_a) {
  ComplexMatrix x = ComplexMatrix::Zero(dB, dB);
  for (int i = 0; i < dA; ++i)
    for (int j = 0; j < dA; ++j) {
      const Complex e = effect_a(j, i);
      if (e == Complex(0.0, 0.0)) continue;
      x += e * rho.block(i * dB, j * dB, dB, dB);
    }
  return x;
}

RealMatrix correlation_matrix(const ComplexMatrix& rho, int dA, int dB,
                              std::span<const ComplexMatrix> effects_a,
                              std::span<const ComplexMatrix> effects_b, Execution exec) {
  check_shapes(rho, dA, dB, effects_a, effects_b);
  const auto rows = Eigen::Index(effects_a.size());
  const auto cols = Eigen::Index(effects_b.size());
  RealMatrix out(rows, cols);

  switch (exec) {
    case Execution::reference:
      for (Eigen::Index a = 0; a < rows; ++a)
        for (Eigen::Index b = 0; b < cols; ++b) {
          const ComplexMatrix joint = kron(effects_a[std::size_t(a)], effects_b[std::size_t(b)]);
          out(a, b) = checked_real(trace_of_product(rho, joint), a, b);
        }
      break;
    case Execution::serial:
      for (Eigen::Index a = 0; a < rows; ++a)
        fill_row(rho, dA, dB, effects_a[std::size_t(a)], effects_b, a, out);
      break;
    case Execution::parallel: {
      // exceptions must not escape the parallel region; rethrow after it
      std::exception_ptr failure;
#pragma omp parallel for schedule(static) num_threads(configured_threads())
      for (Eigen::Index a = 0; a < rows; ++a) {
        try {
          fill_row(rho, dA, dB, effects_a[std::size_t(a)], effects_b, a, out);
        } catch (...) {
#pragma omp critical(snest_correlation_failure)
          if (!failure) failure = std::current_exception();
        }
      }
      if (failure) std::rethrow_exception(failure);
      break;
    }
  }
  return out;
}

RealMatrix correlation_matrix(const DensityMatrix& rho, const SymmetricPovm& pA,
                              const SymmetricPovm& pB, Execution exec) {
  if (pA.d() != rho.dA() || pB.d() != rho.dB()) {
    throw Error(ErrorKind::dimension_mismatch,
                "correlation_matrix: POVM dimensions (" + std::to_string(pA.d()) + ", " +
                    std::to_string(pB.d()) + ") do not match state (" +
                    std::to_string(rho.dA()) + ", " + std::to_string(rho.dB()) + ")");
  }
  return correlation_matrix(rho.matrix(), rho.dA(), rho.dB(), pA.effects(), pB.effects(), exec);
}

}  // namespace snest
