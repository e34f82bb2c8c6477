#pragma once

// Correlation matrices P[a,b] = tr(rho (E_a (x) F_b)) of two measurement
// families on a bipartite state. Rows index party A (alpha-major, a = alpha*M_A + k),
// columns party B.

#include <span>

#include "snest/matkernel.hpp"
#include "snest/parallel.hpp"
#include "snest/povm.hpp"
#include "snest/states.hpp"

namespace snest {

inline constexpr double kImaginaryResidueTol = 1e-10;

/// Generic kernel over arbitrary effect lists. Throws dimension_mismatch for
/// incompatible shapes and imaginary_residue when an entry's imaginary part
/// exceeds kImaginaryResidueTol.
RealMatrix correlation_matrix(const ComplexMatrix& rho, int dA, int dB,
                              std::span<const ComplexMatrix> effects_a,
                              std::span<const ComplexMatrix> effects_b,
                              Execution exec = Execution::parallel);

RealMatrix correlation_matrix(const DensityMatrix& rho, const SymmetricPovm& pA,
                              const SymmetricPovm& pB,
                              Execution exec = Execution::parallel);

/// Partial contraction X[k,l] = sum_{i,j} rho[(i,k),(j,l)] E[j,i], so that
/// tr(rho (E (x) F)) = tr(X F).
ComplexMatrix contract_party_a(const ComplexMatrix& rho, int dA, int dB,
                               const ComplexMatrix& effect_a);

}  // namespace snest
