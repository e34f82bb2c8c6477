#include "snest/states.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "snest/error.hpp"

namespace snest {

namespace {

void require_unit_interval(double v, const char* name, bool open) {
  const bool ok = open ? (v > 0.0 && v < 1.0) : (v >= 0.0 && v <= 1.0);
  if (!ok || !std::isfinite(v)) {
    std::ostringstream os;
    os << name << " = " << v << " outside " << (open ? "(0, 1)" : "[0, 1]");
    throw Error(ErrorKind::invalid_argument, os.str());
  }
}

ComplexVector basis_ket(int dA, int dB, int i, int k) {
  ComplexVector v = ComplexVector::Zero(dA * dB);
  v(i * dB + k) = 1.0;
  return v;
}

ComplexMatrix projector(const ComplexVector& v) { return v * v.adjoint(); }

}  // namespace

StateCheck check_density_matrix(const ComplexMatrix& mat, int dA, int dB) {
  StateCheck c;
  const Eigen::Index n = Eigen::Index(dA) * dB;
  if (dA < 1 || dB < 1 || mat.rows() != n || mat.cols() != n) {
    c.shape_ok = false;
    c.violated = "shape";
    return c;
  }
  if (!all_finite(mat)) {
    c.finite = false;
    c.violated = "finite";
    return c;
  }
  c.hermiticity_defect = hermiticity_defect(mat);
  c.trace_defect = std::abs(mat.trace() - 1.0);
  const ComplexMatrix sym = 0.5 * (mat + mat.adjoint());
  c.min_eigenvalue = Eigen::SelfAdjointEigenSolver<ComplexMatrix>(sym, Eigen::EigenvaluesOnly)
                         .eigenvalues()(0);
  if (c.hermiticity_defect > kHermitianTol) {
    c.violated = "hermitian";
  } else if (c.trace_defect > 1e-10) {
    c.violated = "trace";
  } else if (c.min_eigenvalue < -kPsdTol) {
    c.violated = "psd";
  }
  c.ok = c.violated.empty();
  return c;
}

DensityMatrix::DensityMatrix(int dA, int dB, ComplexMatrix mat)
    : dA_(dA), dB_(dB), mat_(std::move(mat)) {
  const StateCheck c = check_density_matrix(mat_, dA, dB);
  if (!c.shape_ok) {
    throw Error(ErrorKind::dimension_mismatch,
                "density matrix is " + std::to_string(mat_.rows()) + "x" +
                    std::to_string(mat_.cols()) + ", expected dA*dB = " +
                    std::to_string(long(dA) * dB));
  }
  if (!c.ok) {
    std::ostringstream os;
    os << "invalid density matrix: " << c.violated << " invariant violated (";
    if (c.violated == "hermitian") os << "max |rho - rho^dagger| = " << c.hermiticity_defect;
    if (c.violated == "trace") os << "|tr rho - 1| = " << c.trace_defect;
    if (c.violated == "psd") os << "min eigenvalue = " << c.min_eigenvalue;
    if (c.violated == "finite") os << "NaN or Inf entry";
    os << ")";
    throw Error(ErrorKind::invalid_state, os.str());
  }
}

PureState::PureState(int dA, int dB, ComplexVector amplitudes)
    : dA_(dA), dB_(dB), amp_(std::move(amplitudes)) {
  if (dA < 1 || dB < 1 || amp_.size() != Eigen::Index(dA) * dB) {
    throw Error(ErrorKind::dimension_mismatch, "pure state: amplitude count != dA*dB");
  }
  const double norm = amp_.norm();
  if (!(norm > 0.0)) throw Error(ErrorKind::invalid_state, "pure state: zero vector");
  if (std::abs(norm - 1.0) > 1e-12) {
    throw Error(ErrorKind::invalid_state, "pure state: amplitudes not unit norm");
  }
}

DensityMatrix PureState::density() const { return DensityMatrix(dA_, dB_, projector(amp_)); }

PureState make_pure_state(int dA, int dB, ComplexVector amplitudes) {
  const double norm = amplitudes.norm();
  if (!(norm > 0.0)) throw Error(ErrorKind::invalid_state, "pure state: zero vector");
  return PureState(dA, dB, amplitudes / norm);
}

SchmidtDecomposition schmidt_decompose(const PureState& psi) {
  const int dA = psi.dA(), dB = psi.dB();
  ComplexMatrix c(dA, dB);
  for (int i = 0; i < dA; ++i)
    for (int k = 0; k < dB; ++k) c(i, k) = psi.amplitudes()(i * dB + k);
  Eigen::JacobiSVD<ComplexMatrix> svd(c, Eigen::ComputeThinU | Eigen::ComputeThinV);
  SchmidtDecomposition out;
  out.coefficients = svd.singularValues();
  out.left = svd.matrixU();
  // C = sum_s l_s u_s v_s^dagger, so the B-side vectors are conj(v_s)
  out.right = svd.matrixV().conjugate();
  out.rank = int((out.coefficients.array() > kSchmidtRankTol).count());
  return out;
}

PureState maximally_entangled(int d) {
  if (d < 1) throw Error(ErrorKind::invalid_argument, "maximally_entangled: d >= 1");
  ComplexVector v = ComplexVector::Zero(d * d);
  for (int i = 0; i < d; ++i) v(i * d + i) = 1.0 / std::sqrt(double(d));
  return PureState(d, d, std::move(v));
}

double pure_concurrence(const PureState& psi) {
  const ComplexMatrix rho_a =
      partial_trace_B(projector(psi.amplitudes()), psi.dA(), psi.dB());
  const double purity = trace_of_product(rho_a, rho_a).real();
  return std::sqrt(std::max(0.0, 2.0 * (1.0 - purity)));
}

PureState random_schmidt_rank_state(int dA, int dB, int r, std::uint64_t seed) {
  if (dA < 1 || dB < 1 || r < 1 || r > std::min(dA, dB)) {
    throw Error(ErrorKind::invalid_argument,
                "random_schmidt_rank_state: need 1 <= r <= min(dA, dB)");
  }
  std::mt19937_64 rng(seed);
  std::exponential_distribution<double> expo(1.0);
  std::normal_distribution<double> gauss(0.0, 1.0);

  // uniform point on the simplex, floored so every coefficient exceeds 1e-6
  RealVector probs(r);
  for (int s = 0; s < r; ++s) probs(s) = expo(rng);
  probs /= probs.sum();
  probs = probs.cwiseMax(1e-10);
  probs /= probs.sum();

  auto frame = [&](int d) {
    ComplexMatrix g(d, r);
    for (int j = 0; j < r; ++j)
      for (int i = 0; i < d; ++i) g(i, j) = Complex(gauss(rng), gauss(rng));
    Eigen::HouseholderQR<ComplexMatrix> qr(g);
    return ComplexMatrix(qr.householderQ() * ComplexMatrix::Identity(d, r));
  };
  const ComplexMatrix ea = frame(dA);
  const ComplexMatrix fb = frame(dB);

  ComplexVector amp = ComplexVector::Zero(dA * dB);
  for (int s = 0; s < r; ++s) {
    const double lambda = std::sqrt(probs(s));
    for (int i = 0; i < dA; ++i)
      for (int k = 0; k < dB; ++k) amp(i * dB + k) += lambda * ea(i, s) * fb(k, s);
  }
  return make_pure_state(dA, dB, std::move(amp));
}

DensityMatrix horodecki_2x4(double tau) {
  require_unit_interval(tau, "tau", true);
  ComplexMatrix m = ComplexMatrix::Zero(8, 8);
  for (int i = 0; i < 8; ++i) m(i, i) = tau;
  for (int i = 0; i < 3; ++i) m(i, i + 5) = m(i + 5, i) = tau;
  m(4, 4) = m(7, 7) = (1.0 + tau) / 2.0;
  m(4, 7) = m(7, 4) = std::sqrt(1.0 - tau * tau) / 2.0;
  return DensityMatrix(2, 4, m / (1.0 + 7.0 * tau));
}

DensityMatrix example1_state(double tau, double q) {
  require_unit_interval(q, "q", false);
  const ComplexVector xi = (basis_ket(2, 4, 0, 0) + basis_ket(2, 4, 1, 1)) / std::sqrt(2.0);
  const DensityMatrix be = horodecki_2x4(tau);
  return DensityMatrix(2, 4, q * projector(xi) + (1.0 - q) * be.matrix());
}

DensityMatrix example2_state(double p) {
  require_unit_interval(p, "p", false);
  const ComplexVector phi3 =
      (basis_ket(4, 4, 0, 0) + basis_ket(4, 4, 1, 1) + basis_ket(4, 4, 2, 2)) / std::sqrt(3.0);
  const ComplexVector w = basis_ket(4, 4, 2, 3) + basis_ket(4, 4, 3, 2);
  const ComplexMatrix rho = 0.5 * projector(phi3) + 0.25 * projector(w);
  const ComplexVector xi = (basis_ket(4, 4, 0, 0) + basis_ket(4, 4, 1, 1) +
                            std::sqrt(23.0) * basis_ket(4, 4, 2, 2)) / 5.0;
  return DensityMatrix(4, 4, p * rho + (1.0 - p) * projector(xi));
}

DensityMatrix isotropic(int d, double v) {
  if (d < 2) throw Error(ErrorKind::invalid_argument, "isotropic: d >= 2");
  require_unit_interval(v, "v", false);
  const ComplexVector psi = maximally_entangled(d).amplitudes();
  const ComplexMatrix id = ComplexMatrix::Identity(d * d, d * d);
  return DensityMatrix(d, d, v * projector(psi) + (1.0 - v) * id / double(d * d));
}

ComplexMatrix horodecki_3x3_verbatim(double tau) {
  require_unit_interval(tau, "tau", true);
  ComplexMatrix m = ComplexMatrix::Zero(9, 9);
  for (int i = 0; i < 9; ++i) m(i, i) = tau;
  for (int i : {0, 4, 8})
    for (int j : {0, 4, 8}) m(i, j) = tau;
  m(6, 6) = m(8, 8) = (1.0 + tau) / 2.0;
  m(6, 8) = m(8, 6) = std::sqrt(1.0 - tau * tau) / 2.0;
  m(7, 7) = 0.0;
  return m / (1.0 + 8.0 * tau);
}

DensityMatrix horodecki_3x3(double tau) {
  ComplexMatrix m = horodecki_3x3_verbatim(tau);
  m(7, 7) = tau / (1.0 + 8.0 * tau);
  return DensityMatrix(3, 3, std::move(m));
}

DensityMatrix horodecki_3x3_strict(double tau) {
  const ComplexMatrix m = horodecki_3x3_verbatim(tau);
  const double defect = std::abs(m.trace() - 1.0);
  std::ostringstream os;
  os << "invalid density matrix: trace invariant violated (verbatim 3x3 matrix has trace "
     << m.trace().real() << ", defect " << defect << ")";
  throw Error(ErrorKind::invalid_state, os.str());
}

DensityMatrix example4_state(double tau, double q) {
  require_unit_interval(q, "q", false);
  const DensityMatrix be = horodecki_3x3(tau);
  return DensityMatrix(3, 3, q * be.matrix() + (1.0 - q) / 9.0 * ComplexMatrix::Identity(9, 9));
}

DensityMatrix maximally_mixed(int dA, int dB) {
  const int n = dA * dB;
  return DensityMatrix(dA, dB, ComplexMatrix::Identity(n, n) / double(n));
}

}  // namespace snest
