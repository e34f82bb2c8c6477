#pragma once

// Bipartite states: validated density matrices, pure states with their
// Schmidt decomposition, and the gallery of example families.

#include <cstdint>
#include <string>

#include "snest/matkernel.hpp"

namespace snest {

struct StateCheck {
  double hermiticity_defect = 0.0;
  double trace_defect = 0.0;
  double min_eigenvalue = 0.0;
  bool shape_ok = true;
  bool finite = true;
  bool ok = false;
  std::string violated;  // first violated invariant, empty when ok
};

StateCheck check_density_matrix(const ComplexMatrix& mat, int dA, int dB);

class DensityMatrix {
 public:
  /// Throws invalid_state naming the violated invariant (hermitian, trace,
  /// psd, finite) or dimension_mismatch for a wrong shape.
  DensityMatrix(int dA, int dB, ComplexMatrix mat);

  int dA() const noexcept { return dA_; }
  int dB() const noexcept { return dB_; }
  const ComplexMatrix& matrix() const noexcept { return mat_; }

 private:
  int dA_;
  int dB_;
  ComplexMatrix mat_;
};

struct SchmidtDecomposition {
  RealVector coefficients;  // nonincreasing, length min(dA, dB)
  ComplexMatrix left;       // columns |e_s>
  ComplexMatrix right;      // columns |f_s>
  int rank = 0;
};

inline constexpr double kSchmidtRankTol = 1e-10;

class PureState {
 public:
  /// Amplitudes in A-major order; throws invalid_state for the zero vector
  /// or a norm off by more than 1e-12.
  PureState(int dA, int dB, ComplexVector amplitudes);

  int dA() const noexcept { return dA_; }
  int dB() const noexcept { return dB_; }
  const ComplexVector& amplitudes() const noexcept { return amp_; }

  DensityMatrix density() const;

 private:
  int dA_;
  int dB_;
  ComplexVector amp_;
};

/// Normalizes `amplitudes` first; throws invalid_state for the zero vector.
PureState make_pure_state(int dA, int dB, ComplexVector amplitudes);

SchmidtDecomposition schmidt_decompose(const PureState& psi);

/// (1/sqrt d) sum_i |ii>
PureState maximally_entangled(int d);

/// sqrt(2 (1 - tr rho_A^2)) through the reduced state.
double pure_concurrence(const PureState& psi);

/// Schmidt rank exactly r; coefficients drawn uniformly on the simplex
/// (floored away from zero), frames from QR of seeded complex Gaussians.
/// Generator: std::mt19937_64 seeded with `seed`.
PureState random_schmidt_rank_state(int dA, int dB, int r, std::uint64_t seed);

// Gallery --------------------------------------------------------------------

/// Horodecki's 2x4 bound entangled family, 0 < tau < 1.
DensityMatrix horodecki_2x4(double tau);

/// q |xi><xi| + (1-q) rho_tau with xi = (|00> + |11>)/sqrt2 in 2x4.
DensityMatrix example1_state(double tau, double q);

/// p rho + (1-p)|xi><xi| on 4x4, rho = 1/2 |phi3><phi3| + 1/4 (|23>+|32>)(<23|+<32|),
/// phi3 = (|00>+|11>+|22>)/sqrt3, xi = (|00> + |11> + sqrt23 |22>)/5.
DensityMatrix example2_state(double p);

/// v |Psi+><Psi+| + (1-v) I/d^2, 0 <= v <= 1.
DensityMatrix isotropic(int d, double v);

/// Horodecki 3x3 family with the (7,7) diagonal entry equal to tau.
DensityMatrix horodecki_3x3(double tau);

/// The 3x3 matrix with (7,7) set to 0 as printed in the source display. Its
/// trace is (1+7tau)/(1+8tau), so it is returned raw rather than validated.
ComplexMatrix horodecki_3x3_verbatim(double tau);

/// Strict mode: throws invalid_state with the trace defect of the verbatim
/// matrix; kept so the defect is reported rather than silently fixed.
DensityMatrix horodecki_3x3_strict(double tau);

/// q rho_tau + (1-q) I/9.
DensityMatrix example4_state(double tau, double q);

DensityMatrix maximally_mixed(int dA, int dB);

}  // namespace snest
