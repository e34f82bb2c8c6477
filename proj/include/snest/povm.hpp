#pragma once

// Informationally complete (N,M)-POVMs built as E_{a,k} = I/M + t H_{a,k}
// from a grouped traceless Hermitian basis.

#include <span>
#include <string>
#include <vector>

#include "snest/basis.hpp"
#include "snest/matkernel.hpp"

namespace snest {

inline constexpr double kPovmTol = 1e-10;

/// N*M traceless operators H_{a,k}, flattened alpha-major (index a*M + k).
struct HOperators {
  int d = 0;
  int N = 0;
  int M = 0;
  std::vector<ComplexMatrix> ops;

  const ComplexMatrix& at(int alpha, int k) const { return ops[std::size_t(alpha * M + k)]; }
};

struct TInterval {
  double lo = 0.0;
  double hi = 0.0;

  bool contains(double t, double slack = 1e-12) const {
    return t >= lo - slack && t <= hi + slack;
  }
};

HOperators build_h(const GroupedBasis& gb);

/// [-1/(M lambda_max), 1/(M |lambda_min|)] with lambda_max / lambda_min the
/// global extreme eigenvalues over every H_{a,k}.
TInterval t_range(const HOperators& h);

double x_of_t(int d, int M, double t);

/// Inverse of x_of_t on the nonnegative branch.
double t_of_x(int d, int M, double x);

/// Admissible purity window d/M^2 < x <= min(d^2/M^2, d/M).
bool x_in_window(int d, int M, double x, double slack = 1e-12);

class SymmetricPovm {
 public:
  /// `effects` flattened alpha-major; `h_ops` may be empty for POVMs that
  /// were not produced by the I/M + tH construction (SIC, MUB).
  SymmetricPovm(int d, int N, int M, double t, double x,
                std::vector<ComplexMatrix> effects,
                std::vector<ComplexMatrix> h_ops = {});

  int d() const noexcept { return d_; }
  int N() const noexcept { return N_; }
  int M() const noexcept { return M_; }
  double t() const noexcept { return t_; }
  double x() const noexcept { return x_; }

  std::size_t size() const noexcept { return effects_.size(); }
  const ComplexMatrix& effect(int alpha, int k) const { return effects_[std::size_t(alpha * M_ + k)]; }
  std::span<const ComplexMatrix> effects() const noexcept { return effects_; }
  std::span<const ComplexMatrix> h_ops() const noexcept { return h_ops_; }

  bool informationally_complete() const noexcept {
    return long(N_) * (M_ - 1) == long(d_) * d_ - 1;
  }

 private:
  int d_;
  int N_;
  int M_;
  double t_;
  double x_;
  std::vector<ComplexMatrix> effects_;
  std::vector<ComplexMatrix> h_ops_;
};

/// Throws t_out_of_range (message carries the admissible interval) or
/// psd_violation.
SymmetricPovm build_povm(const GroupedBasis& gb, double t);

struct RelationCheck {
  std::string name;
  double max_deviation = 0.0;
  bool ok = true;
};

struct PovmValidation {
  std::vector<RelationCheck> relations;  // trace, purity, same-group, cross-group, completeness, psd
  bool in_window = false;
  bool passed = false;

  const RelationCheck& relation(const std::string& name) const;
  std::vector<std::string> failures() const;
};

PovmValidation validate_povm(const SymmetricPovm& p, double tol = kPovmTol);

struct DualFrame {
  std::vector<ComplexMatrix> ops;  // F_{a,k}, alpha-major
  double w = 0.0;
  double y = 0.0;
  double z = 0.0;
  double A = 0.0;
};

/// F_{a,k} = (E_{a,k} - A I) / (x - y), A = ((N-1)z + y)/(N w).
DualFrame dual_frame(const SymmetricPovm& p);

/// sum_{a,k} tr(E_{a,k} sigma) F_{a,k}
ComplexMatrix reconstruct(const SymmetricPovm& p, const DualFrame& frame,
                          const ComplexMatrix& sigma);

struct Lemma1Sides {
  double lhs = 0.0;
  double rhs = 0.0;
};

/// lhs = sum |tr(E sigma)|^2 directly; rhs =
/// [d(M^2 x - d) tr(sigma sigma^dagger) + (d^3 - M^2 x)|tr sigma|^2] / (d M (M-1)).
Lemma1Sides lemma1_check(const SymmetricPovm& p, const ComplexMatrix& sigma);

}  // namespace snest
