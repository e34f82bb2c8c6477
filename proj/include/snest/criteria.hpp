#pragma once

// Schmidt-number and concurrence estimates from the trace norm of a
// symmetric-measurement correlation matrix, plus the baseline criteria they
// are compared against.

#include <map>
#include <optional>
#include <string>
#include <utility>

#include "snest/correlation.hpp"
#include "snest/povm.hpp"
#include "snest/states.hpp"

namespace snest {

/// Measurement parameters of one party: dimension, outcomes per POVM and
/// purity x.
struct PartyParams {
  int d = 0;
  int M = 0;
  double x = 0.0;
};

struct CriterionConstants {
  double K = 0.0;
  double L = 0.0;
  double R = 0.0;
  PartyParams a;
  PartyParams b;
};

/// K = sqrt(dA dB (MA-1)(MB-1))
/// L = sqrt((dA-1)(dB-1)(MA^2 xA + dA^2)(MB^2 xB + dB^2) / (MA MB))
/// R = sqrt(dA dB (MA^2 xA - dA)(MB^2 xB - dB) / (MA MB))
/// Throws window_violation unless d/M^2 < x <= min(d^2/M^2, d/M) on both sides.
CriterionConstants klr_constants(int dA, int MA, double xA, int dB, int MB, double xB);
CriterionConstants klr_constants(const SymmetricPovm& pA, const SymmetricPovm& pB);

struct SchmidtBound {
  double sn_real_lb = 0.0;  // lower bound on SN - 1
  int sn_int_lb = 1;        // certified lower bound on SN
};

inline constexpr double kCeilSlack = 1e-9;

/// sn_real_lb = (K ||P|| - L) / R, sn_int_lb = max(1, ceil(sn_real_lb + 1 - 1e-9)).
SchmidtBound schmidt_bound(double trace_norm, const CriterionConstants& c);

int certified_schmidt_number(double sn_real_lb);

/// L / K: the largest trace norm any separable state can reach.
double separability_bound(const CriterionConstants& c);

/// Threshold at Schmidt number r: L/K + (r-1) R/K.
double theorem_bound(const CriterionConstants& c, int r);

/// Equal-party form (d-1)(M^2x+d^2)/(dM(M-1)) + (r-1)(M^2x-d)/(M(M-1)).
double corollary1_bound(int d, int M, double x, int r);

/// max(0, K/R sqrt(2/(d(d-1))) (||P|| - L/K)) with d = min(dA, dB).
double concurrence_lower_bound(double trace_norm, const CriterionConstants& c, int dA, int dB);

struct PureNorms {
  double normD = 0.0;  // ||D_s||_tr
  double normO = 0.0;  // ||O_{s,t}||_tr, s != t
};

PureNorms pure_norm_closed_forms(int dA, int MA, double xA, int dB, int MB, double xB);

/// [D_s]_{a,b} = <ss| E_a (x) F_b |ss> for computational basis states.
RealMatrix diagonal_block(const SymmetricPovm& pA, const SymmetricPovm& pB, int s);

/// [O_{s,t}]_{a,b} = <ss| E_a (x) F_b |tt>, complex in general.
ComplexMatrix offdiagonal_block(const SymmetricPovm& pA, const SymmetricPovm& pB, int s, int t);

struct PureEquality {
  double lhs = 0.0;  // M(M-1)/(xM^2-d) (||P(psi)|| - (d-1)(xM^2+d^2)/(dM(M-1)))
  double rhs = 0.0;  // 2 sum_{i<j} l_i l_j
};

PureEquality pure_state_equality(const PureState& psi, const SymmetricPovm& p,
                                 Execution exec = Execution::serial);

/// ||R(rho)||_tr; the Schmidt number is at least this value.
double realignment_sn_bound(const DensityMatrix& rho);

/// N/M + v N (M^2 x - d) / (d M)
double isotropic_norm_closed_form(int d, int N, int M, double x, double v);

/// (r d - 1) / (d^2 - 1), 1 <= r < d.
double fidelity_isotropic_threshold(int d, int r);

struct FidelityImplication {
  double corollary_bound = 0.0;  // corollary1_bound(d, M, x, r)
  double isotropic_norm = 0.0;   // isotropic_norm_closed_form(d, N, M, x, v)
  bool holds = false;            // isotropic_norm > corollary_bound
};

FidelityImplication fidelity_implication(int d, int N, int M, double x, int r, double v);

/// <Psi+| rho |Psi+> for dA = dB.
double max_entangled_fidelity(const DensityMatrix& rho);

// Reports ---------------------------------------------------------------------

struct BaselineSelection {
  std::optional<std::pair<double, double>> gsic;  // (a_A, a_B)
  bool sic = false;
  bool realignment = false;
  bool fidelity = false;
};

struct CriterionReport {
  double trace_norm = 0.0;
  CriterionConstants constants;
  double separability_bound = 0.0;
  double sn_real_lb = 0.0;
  int sn_int_lb = 1;
  bool entangled = false;
  double concurrence_lb = 0.0;
  /// Baselines in SN-1 normalization, keyed gsic / sic / realignment /
  /// fidelity: GSIC and SIC as K/R(||P|| - L/K) with their own constants,
  /// realignment as ||R|| - 1, fidelity as d<Psi+|rho|Psi+> - 1.
  std::map<std::string, double> baselines;
};

/// Holds the measurement families once so repeated evaluations (sweeps,
/// bisection) do not rebuild them.
class CriterionEvaluator {
 public:
  CriterionEvaluator(SymmetricPovm pA, SymmetricPovm pB, BaselineSelection baselines = {});

  CriterionReport evaluate(const DensityMatrix& rho, Execution exec = Execution::parallel) const;

  const SymmetricPovm& party_a() const noexcept { return pA_; }
  const SymmetricPovm& party_b() const noexcept { return pB_; }
  const CriterionConstants& constants() const noexcept { return constants_; }
  const BaselineSelection& selection() const noexcept { return selection_; }

 private:
  SymmetricPovm pA_;
  SymmetricPovm pB_;
  CriterionConstants constants_;
  BaselineSelection selection_;
  std::vector<ComplexMatrix> gsic_a_, gsic_b_;
  std::optional<CriterionConstants> gsic_constants_;
  std::optional<SymmetricPovm> sic_a_, sic_b_;
  std::optional<CriterionConstants> sic_constants_;
};

CriterionReport full_report(const DensityMatrix& rho, const SymmetricPovm& pA,
                            const SymmetricPovm& pB, const BaselineSelection& baselines = {});

}  // namespace snest
