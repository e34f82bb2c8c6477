#include "snest/criteria.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "snest/error.hpp"
#include "snest/special_povms.hpp"

namespace snest {

namespace {

void require_window(int d, int M, double x, const char* who) {
  if (!x_in_window(d, M, x)) {
    std::ostringstream os;
    os << who << ": x = " << x << " outside (" << double(d) / (double(M) * M) << ", "
       << std::min(double(d) * d / (double(M) * M), double(d) / M) << "] for d = " << d
       << ", M = " << M;
    throw Error(ErrorKind::window_violation, os.str());
  }
}

double sq(double v) { return v * v; }

}  // namespace

CriterionConstants klr_constants(int dA, int MA, double xA, int dB, int MB, double xB) {
  require_window(dA, MA, xA, "klr_constants (party A)");
  require_window(dB, MB, xB, "klr_constants (party B)");
  const double da = dA, db = dB, ma = MA, mb = MB;
  CriterionConstants c;
  c.K = std::sqrt(da * db * (ma - 1) * (mb - 1));
  c.L = std::sqrt((da - 1) * (db - 1) * (ma * ma * xA + da * da) * (mb * mb * xB + db * db) /
                  (ma * mb));
  c.R = std::sqrt(da * db * (ma * ma * xA - da) * (mb * mb * xB - db) / (ma * mb));
  c.a = {dA, MA, xA};
  c.b = {dB, MB, xB};
  return c;
}

CriterionConstants klr_constants(const SymmetricPovm& pA, const SymmetricPovm& pB) {
  return klr_constants(pA.d(), pA.M(), pA.x(), pB.d(), pB.M(), pB.x());
}

int certified_schmidt_number(double sn_real_lb) {
  return std::max(1, int(std::ceil(sn_real_lb + 1.0 - kCeilSlack)));
}

SchmidtBound schmidt_bound(double trace_norm, const CriterionConstants& c) {
  SchmidtBound b;
  b.sn_real_lb = (c.K * trace_norm - c.L) / c.R;
  b.sn_int_lb = certified_schmidt_number(b.sn_real_lb);
  return b;
}

double separability_bound(const CriterionConstants& c) { return c.L / c.K; }

double theorem_bound(const CriterionConstants& c, int r) {
  return c.L / c.K + (r - 1) * c.R / c.K;
}

double corollary1_bound(int d, int M, double x, int r) {
  require_window(d, M, x, "corollary1_bound");
  const double m2x = double(M) * M * x;
  return (d - 1) * (m2x + double(d) * d) / (double(d) * M * (M - 1)) +
         (r - 1) * (m2x - d) / (double(M) * (M - 1));
}

double concurrence_lower_bound(double trace_norm, const CriterionConstants& c, int dA, int dB) {
  const double d = std::min(dA, dB);
  const double value = c.K / c.R * std::sqrt(2.0 / (d * (d - 1))) * (trace_norm - c.L / c.K);
  return std::max(0.0, value);
}

PureNorms pure_norm_closed_forms(int dA, int MA, double xA, int dB, int MB, double xB) {
  require_window(dA, MA, xA, "pure_norm_closed_forms (party A)");
  require_window(dB, MB, xB, "pure_norm_closed_forms (party B)");
  auto diag = [](double d, double m, double x) {
    return (d - 1) * (m * m * x + d * d) / (d * m * (m - 1));
  };
  auto off = [](double d, double m, double x) { return (m * m * x - d) / (m * (m - 1)); };
  PureNorms n;
  n.normD = std::sqrt(diag(dA, MA, xA)) * std::sqrt(diag(dB, MB, xB));
  n.normO = std::sqrt(off(dA, MA, xA)) * std::sqrt(off(dB, MB, xB));
  return n;
}

RealMatrix diagonal_block(const SymmetricPovm& pA, const SymmetricPovm& pB, int s) {
  if (s < 0 || s >= std::min(pA.d(), pB.d())) {
    throw Error(ErrorKind::invalid_argument, "diagonal_block: s out of range");
  }
  RealMatrix D(Eigen::Index(pA.size()), Eigen::Index(pB.size()));
  for (std::size_t a = 0; a < pA.size(); ++a)
    for (std::size_t b = 0; b < pB.size(); ++b)
      D(Eigen::Index(a), Eigen::Index(b)) =
          (pA.effects()[a](s, s) * pB.effects()[b](s, s)).real();
  return D;
}

ComplexMatrix offdiagonal_block(const SymmetricPovm& pA, const SymmetricPovm& pB, int s, int t) {
  const int dmin = std::min(pA.d(), pB.d());
  if (s < 0 || t < 0 || s >= dmin || t >= dmin || s == t) {
    throw Error(ErrorKind::invalid_argument, "offdiagonal_block: need distinct s, t < min(dA, dB)");
  }
  ComplexMatrix O(Eigen::Index(pA.size()), Eigen::Index(pB.size()));
  for (std::size_t a = 0; a < pA.size(); ++a)
    for (std::size_t b = 0; b < pB.size(); ++b)
      O(Eigen::Index(a), Eigen::Index(b)) = pA.effects()[a](s, t) * pB.effects()[b](s, t);
  return O;
}

PureEquality pure_state_equality(const PureState& psi, const SymmetricPovm& p, Execution exec) {
  const int d = p.d();
  if (psi.dA() != d || psi.dB() != d) {
    throw Error(ErrorKind::dimension_mismatch, "pure_state_equality: state must be d x d");
  }
  if (!p.informationally_complete()) {
    throw Error(ErrorKind::not_informationally_complete, "pure_state_equality: POVM not IC");
  }
  const double M = p.M(), x = p.x();
  const double norm = trace_norm(correlation_matrix(psi.density(), p, p, exec));
  PureEquality e;
  e.lhs = M * (M - 1) / (x * M * M - d) *
          (norm - (d - 1) * (x * M * M + double(d) * d) / (d * M * (M - 1)));
  const RealVector lambda = schmidt_decompose(psi).coefficients;
  e.rhs = sq(lambda.sum()) - lambda.squaredNorm();
  return e;
}

double realignment_sn_bound(const DensityMatrix& rho) {
  return trace_norm(realign(rho.matrix(), rho.dA(), rho.dB()));
}

double isotropic_norm_closed_form(int d, int N, int M, double x, double v) {
  require_window(d, M, x, "isotropic_norm_closed_form");
  if (!(v >= 0.0 && v <= 1.0)) {
    throw Error(ErrorKind::invalid_argument, "isotropic_norm_closed_form: v outside [0, 1]");
  }
  return double(N) / M + v * N * (double(M) * M * x - d) / (double(d) * M);
}

double fidelity_isotropic_threshold(int d, int r) {
  if (d < 2 || r < 1 || r >= d) {
    throw Error(ErrorKind::invalid_argument, "fidelity_isotropic_threshold: need 1 <= r < d");
  }
  return (double(r) * d - 1) / (double(d) * d - 1);
}

FidelityImplication fidelity_implication(int d, int N, int M, double x, int r, double v) {
  FidelityImplication f;
  f.corollary_bound = corollary1_bound(d, M, x, r);
  f.isotropic_norm = isotropic_norm_closed_form(d, N, M, x, v);
  f.holds = f.isotropic_norm > f.corollary_bound;
  return f;
}

double max_entangled_fidelity(const DensityMatrix& rho) {
  if (rho.dA() != rho.dB()) {
    throw Error(ErrorKind::dimension_mismatch, "fidelity needs equal local dimensions");
  }
  const ComplexVector psi = maximally_entangled(rho.dA()).amplitudes();
  return (psi.adjoint() * rho.matrix() * psi)(0, 0).real();
}

CriterionEvaluator::CriterionEvaluator(SymmetricPovm pA, SymmetricPovm pB,
                                       BaselineSelection baselines)
    : pA_(std::move(pA)),
      pB_(std::move(pB)),
      constants_(klr_constants(pA_, pB_)),
      selection_(std::move(baselines)) {
  const int dA = pA_.d(), dB = pB_.d();
  if (selection_.gsic) {
    const auto [aA, aB] = *selection_.gsic;
    gsic_a_ = gsic_operator_family(dA, aA);
    gsic_b_ = gsic_operator_family(dB, aB);
    gsic_constants_ = klr_constants(dA, dA * dA, aA, dB, dB * dB, aB);
  }
  if (selection_.sic) {
    sic_a_ = sic_from_fiducial(sic_fiducial(dA));
    sic_b_ = sic_from_fiducial(sic_fiducial(dB));
    sic_constants_ = klr_constants(*sic_a_, *sic_b_);
  }
  if (selection_.fidelity && dA != dB) {
    throw Error(ErrorKind::dimension_mismatch, "fidelity baseline needs dA = dB");
  }
}

CriterionReport CriterionEvaluator::evaluate(const DensityMatrix& rho, Execution exec) const {
  CriterionReport rep;
  rep.constants = constants_;
  rep.trace_norm = trace_norm(correlation_matrix(rho, pA_, pB_, exec));
  rep.separability_bound = separability_bound(constants_);
  const SchmidtBound sb = schmidt_bound(rep.trace_norm, constants_);
  rep.sn_real_lb = sb.sn_real_lb;
  rep.sn_int_lb = sb.sn_int_lb;
  rep.entangled = sb.sn_real_lb > 0.0;
  rep.concurrence_lb = concurrence_lower_bound(rep.trace_norm, constants_, rho.dA(), rho.dB());

  if (gsic_constants_) {
    const double n = trace_norm(
        correlation_matrix(rho.matrix(), rho.dA(), rho.dB(), gsic_a_, gsic_b_, exec));
    rep.baselines["gsic"] = schmidt_bound(n, *gsic_constants_).sn_real_lb;
  }
  if (sic_constants_) {
    const double n = trace_norm(correlation_matrix(rho, *sic_a_, *sic_b_, exec));
    rep.baselines["sic"] = schmidt_bound(n, *sic_constants_).sn_real_lb;
  }
  if (selection_.realignment) rep.baselines["realignment"] = realignment_sn_bound(rho) - 1.0;
  if (selection_.fidelity) {
    rep.baselines["fidelity"] = rho.dA() * max_entangled_fidelity(rho) - 1.0;
  }
  return rep;
}

CriterionReport full_report(const DensityMatrix& rho, const SymmetricPovm& pA,
                            const SymmetricPovm& pB, const BaselineSelection& baselines) {
  return CriterionEvaluator(pA, pB, baselines).evaluate(rho);
}

}  // namespace snest
