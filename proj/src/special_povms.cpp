#include "snest/special_povms.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "snest/basis.hpp"
#include "snest/error.hpp"

namespace snest {

namespace {

bool is_prime(int n) {
  if (n < 2) return false;
  for (int f = 2; f * f <= n; ++f)
    if (n % f == 0) return false;
  return true;
}

}  // namespace

SymmetricPovm sic_from_fiducial(const ComplexVector& fiducial) {
  const int d = int(fiducial.size());
  if (d < 2) throw Error(ErrorKind::invalid_argument, "sic_from_fiducial: d >= 2");
  const double norm = fiducial.norm();
  if (!(norm > 0.0)) throw Error(ErrorKind::not_a_sic, "sic_from_fiducial: zero fiducial");
  const ComplexVector psi = fiducial / norm;

  const Complex omega = std::polar(1.0, 2.0 * std::numbers::pi / d);
  std::vector<ComplexVector> orbit;
  orbit.reserve(std::size_t(d) * d);
  for (int j = 0; j < d; ++j)
    for (int k = 0; k < d; ++k) {
      ComplexVector v(d);
      // (X^j Z^k psi)_m = omega^{k (m-j)} psi_{m-j}
      for (int m = 0; m < d; ++m) {
        const int src = ((m - j) % d + d) % d;
        v(m) = std::pow(omega, double(k * src)) * psi(src);
      }
      orbit.push_back(std::move(v));
    }

  const double want = 1.0 / (d + 1);
  double worst = 0.0;
  for (std::size_t a = 0; a < orbit.size(); ++a)
    for (std::size_t b = a + 1; b < orbit.size(); ++b)
      worst = std::max(worst, std::abs(std::norm(orbit[a].dot(orbit[b])) - want));
  if (worst > kSicOverlapTol) {
    std::ostringstream os;
    os << "fiducial does not generate a SIC: max overlap deviation " << worst;
    throw Error(ErrorKind::not_a_sic, os.str());
  }

  std::vector<ComplexMatrix> effects;
  effects.reserve(orbit.size());
  for (const auto& v : orbit) effects.push_back(v * v.adjoint() / double(d));
  const int M = d * d;
  const double x = 1.0 / (double(d) * d);
  return SymmetricPovm(d, 1, M, t_of_x(d, M, x), x, std::move(effects));
}

ComplexVector sic_fiducial(int d) {
  ComplexVector v(d);
  if (d == 2) {
    v(0) = std::sqrt((3.0 + std::sqrt(3.0)) / 6.0);
    v(1) = std::polar(std::sqrt((3.0 - std::sqrt(3.0)) / 6.0), std::numbers::pi / 4.0);
    return v;
  }
  if (d == 3) {
    v << 0.0, 1.0 / std::sqrt(2.0), -1.0 / std::sqrt(2.0);
    return v;
  }
  throw Error(ErrorKind::invalid_argument,
              "no built-in SIC fiducial for d = " + std::to_string(d) + " (d = 2, 3 available)");
}

SymmetricPovm sic_povm_d3() { return sic_from_fiducial(sic_fiducial(3)); }

SymmetricPovm mub_prime(int d) {
  if (!is_prime(d)) {
    throw Error(ErrorKind::invalid_argument, "mub_prime: d must be prime, got " + std::to_string(d));
  }
  std::vector<ComplexMatrix> effects;
  effects.reserve(std::size_t(d + 1) * d);
  for (int b = 0; b < d; ++b) {
    ComplexMatrix e = ComplexMatrix::Zero(d, d);
    e(b, b) = 1.0;
    effects.push_back(std::move(e));
  }
  const double inv_sqrt_d = 1.0 / std::sqrt(double(d));
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b) {
      ComplexVector v(d);
      for (int j = 0; j < d; ++j) {
        // d = 2 needs the fourth root of unity for the quadratic term
        const double phase = d == 2 ? std::numbers::pi * (0.5 * a * j * j + b * j)
                                    : 2.0 * std::numbers::pi * double((a * j * j + b * j) % d) / d;
        v(j) = std::polar(inv_sqrt_d, phase);
      }
      effects.push_back(v * v.adjoint());
    }
  return SymmetricPovm(d, d + 1, d, t_of_x(d, d, 1.0), 1.0, std::move(effects));
}

std::vector<ComplexMatrix> gsic_operator_family(int d, double a) {
  const int M = d * d;
  if (!x_in_window(d, M, a)) {
    std::ostringstream os;
    os << "GSIC parameter a = " << a << " outside (" << 1.0 / (double(d) * d * d) << ", "
       << 1.0 / (double(d) * d) << "]";
    throw Error(ErrorKind::window_violation, os.str());
  }
  const GroupedBasis gb = group_basis(gellmann_basis(d), 1, M, GroupingScheme::sequential);
  const HOperators h = build_h(gb);
  const double t = t_of_x(d, M, a);
  std::vector<ComplexMatrix> effects;
  effects.reserve(h.ops.size());
  const ComplexMatrix base = ComplexMatrix::Identity(d, d) / double(M);
  for (const auto& op : h.ops) effects.push_back(base + t * op);
  return effects;
}

}  // namespace snest
