#pragma once

// Measurements used as baselines and special cases: Weyl-Heisenberg SICs,
// prime-dimension MUBs, and the GSIC operator family at a given purity.

#include <vector>

#include "snest/matkernel.hpp"
#include "snest/povm.hpp"

namespace snest {

inline constexpr double kSicOverlapTol = 1e-10;

/// (1, d^2)-POVM {|psi_jk><psi_jk| / d} from the clock-and-shift orbit
/// psi_jk = X^j Z^k psi. Throws not_a_sic unless every pairwise overlap
/// |<psi|psi'>|^2 equals 1/(d+1) within kSicOverlapTol.
SymmetricPovm sic_from_fiducial(const ComplexVector& fiducial);

/// d = 3 SIC from the fiducial (|1> - |2>)/sqrt2.
SymmetricPovm sic_povm_d3();

/// Known Weyl-Heisenberg fiducial for d = 2 (tetrahedral SIC) or d = 3.
ComplexVector sic_fiducial(int d);

/// d+1 mutually unbiased bases for prime d as a (d+1, d)-POVM with x = 1.
SymmetricPovm mub_prime(int d);

/// The d^2 operators I/d^2 + t H_k of the (1, d^2) Gell-Mann construction
/// with t chosen so that tr(E_k^2) = a. They satisfy every GSIC trace
/// relation but need not be positive when t leaves the construction's PSD
/// range. For N = 1 the trace norm of a correlation matrix depends only on
/// the purity, so these stand in for any GSIC with parameter a.
std::vector<ComplexMatrix> gsic_operator_family(int d, double a);

}  // namespace snest
