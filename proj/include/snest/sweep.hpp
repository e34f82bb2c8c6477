#pragma once

// Parameter sweeps over the example state families, bisection of detection
// thresholds, and the canned figure reproductions used by the CLI.

#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "snest/basis.hpp"
#include "snest/criteria.hpp"
#include "snest/parallel.hpp"

namespace snest {

enum class StateFamily { example1, example2, example4, isotropic, maximally_mixed };

std::string_view to_string(StateFamily f) noexcept;
StateFamily parse_state_family(std::string_view name);

struct GalleryParams {
  double tau = 0.9;
  double q = 0.5;
  double p = 0.5;
  double v = 0.5;
  int d = 3;   // isotropic
  int dA = 3;  // maximally mixed
  int dB = 3;
};

/// Sets tau, q, p or v by name; throws invalid_argument otherwise.
void set_gallery_param(GalleryParams& params, std::string_view name, double value);

std::pair<int, int> gallery_dims(StateFamily family, const GalleryParams& params);
DensityMatrix make_gallery_state(StateFamily family, const GalleryParams& params);

enum class MeasurementFamily { symmetric, sic, mub, file };

struct MeasurementSpec {
  MeasurementFamily family = MeasurementFamily::symmetric;
  int N = 0;  // 0: derive from d (with M) or use the per-dimension default
  int M = 0;
  GroupingScheme scheme = GroupingScheme::sequential;
  std::vector<int> perm;  // explicit grouping; overrides scheme when non-empty
  double t = 0.01;
  std::string file;
};

/// The groupings used for the worked examples: (3,2) sequential for d=2,
/// (8,2) appendix-B for d=3, (5,4) appendix-A for d=4, (d^2-1,2) sequential
/// otherwise; t = 0.01.
MeasurementSpec default_measurement(int d);

SymmetricPovm make_measurement(const MeasurementSpec& spec, int d);

struct SweepSpec {
  StateFamily family = StateFamily::example1;
  GalleryParams fixed;
  std::string param = "q";
  double lo = 0.0;
  double hi = 1.0;
  int points = 201;
  MeasurementSpec a;
  MeasurementSpec b;
  BaselineSelection baselines;

  /// Throws invalid_argument unless lo < hi and points >= 2.
  void validate() const;
};

std::vector<double> sweep_grid(double lo, double hi, int points);

struct SweepRow {
  double param = 0.0;
  CriterionReport report;
};

CriterionEvaluator make_evaluator(const SweepSpec& spec);

std::vector<SweepRow> run_sweep(const SweepSpec& spec, Execution exec = Execution::parallel);

/// Columns: param, trace_norm, sn_real_lb, sn_int_lb, concurrence_lb, one
/// column per selected baseline (gsic, sic, realignment, fidelity), then
/// sn_real_lb_clamped = max(0, sn_real_lb).
void write_sweep_csv(std::ostream& os, const SweepSpec& spec, const std::vector<SweepRow>& rows);

enum class Curve { red, gsic, sic, realignment, fidelity };

Curve parse_curve(std::string_view name);
std::string_view to_string(Curve c) noexcept;
double curve_value(const CriterionReport& rep, Curve c);

struct ThresholdResult {
  double value = 0.0;            // parameter at the crossing
  double level = 0.0;
  double curve_at_value = 0.0;
  double achieved_tolerance = 0.0;  // |curve(value) - level|
  double bracket_width = 0.0;
  int iterations = 0;
};

/// Bisects f(x) = level on [lo, hi] until the bracket is at most `tol` wide
/// and |f(mid) - level| <= tol. Throws no_sign_change when the endpoint
/// values do not straddle the level.
ThresholdResult bisect_threshold(const std::function<double(double)>& f, double lo, double hi,
                                 double level, double tol = 1e-6, int max_iter = 200);

ThresholdResult find_threshold(const SweepSpec& spec, Curve curve, double level,
                               double tol = 1e-6);

enum class Figure { fig1, fig2, fig3, example3 };

Figure parse_figure(std::string_view name);

/// Baked parameters of the fig1-fig3 reproductions (t = 0.01, tau = 0.9, q = 0.995,
/// a1 = 0.1277, a2 = 0.04984).
SweepSpec figure_spec(Figure fig);

struct ReproduceCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct ReproduceResult {
  std::vector<ReproduceCheck> checks;
  bool all_passed() const;
};

/// Writes the figure's CSV to `csv` and a human-readable summary (one line
/// per check) to `summary`.
ReproduceResult reproduce(Figure fig, std::ostream& csv, std::ostream& summary);

}  // namespace snest
