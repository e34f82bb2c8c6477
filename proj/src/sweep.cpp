#include "snest/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <omp.h>

#include "snest/error.hpp"
#include "snest/json_io.hpp"
#include "snest/special_povms.hpp"

namespace snest {

namespace {

constexpr double kPaperT = 0.01;
constexpr double kFig1Tau = 0.9;
constexpr double kFig3Q = 0.995;
constexpr double kGsicA1 = 0.1277;
constexpr double kGsicA2 = 0.04984;

constexpr double kFig1Threshold = 0.42115;
constexpr double kFig2RedThreshold = 0.5219;
constexpr double kFig2RealignThreshold = 0.5475;
constexpr double kThresholdTol = 1e-3;

const char* const kBaselineOrder[] = {"gsic", "sic", "realignment", "fidelity"};

bool baseline_selected(const BaselineSelection& s, std::string_view name) {
  if (name == "gsic") return s.gsic.has_value();
  if (name == "sic") return s.sic;
  if (name == "realignment") return s.realignment;
  return s.fidelity;
}

std::string fmt(double v, int digits = 6) {
  std::ostringstream os;
  os << std::setprecision(digits) << v;
  return os.str();
}

}  // namespace

std::string_view to_string(StateFamily f) noexcept {
  switch (f) {
    case StateFamily::example1: return "example1";
    case StateFamily::example2: return "example2";
    case StateFamily::example4: return "example4";
    case StateFamily::isotropic: return "isotropic";
    case StateFamily::maximally_mixed: return "maximally-mixed";
  }
  return "example1";
}

StateFamily parse_state_family(std::string_view name) {
  if (name == "example1") return StateFamily::example1;
  if (name == "example2") return StateFamily::example2;
  if (name == "example4") return StateFamily::example4;
  if (name == "isotropic") return StateFamily::isotropic;
  if (name == "maximally-mixed" || name == "mixed") return StateFamily::maximally_mixed;
  throw Error(ErrorKind::invalid_argument, "unknown state family '" + std::string(name) + "'");
}

void set_gallery_param(GalleryParams& params, std::string_view name, double value) {
  if (name == "tau") params.tau = value;
  else if (name == "q") params.q = value;
  else if (name == "p") params.p = value;
  else if (name == "v") params.v = value;
  else throw Error(ErrorKind::invalid_argument, "unknown sweep parameter '" + std::string(name) + "'");
}

std::pair<int, int> gallery_dims(StateFamily family, const GalleryParams& params) {
  switch (family) {
    case StateFamily::example1: return {2, 4};
    case StateFamily::example2: return {4, 4};
    case StateFamily::example4: return {3, 3};
    case StateFamily::isotropic: return {params.d, params.d};
    case StateFamily::maximally_mixed: return {params.dA, params.dB};
  }
  return {0, 0};
}

DensityMatrix make_gallery_state(StateFamily family, const GalleryParams& params) {
  switch (family) {
    case StateFamily::example1: return example1_state(params.tau, params.q);
    case StateFamily::example2: return example2_state(params.p);
    case StateFamily::example4: return example4_state(params.tau, params.q);
    case StateFamily::isotropic: return isotropic(params.d, params.v);
    case StateFamily::maximally_mixed: return maximally_mixed(params.dA, params.dB);
  }
  throw Error(ErrorKind::invalid_argument, "unknown state family");
}

MeasurementSpec default_measurement(int d) {
  MeasurementSpec m;
  m.t = kPaperT;
  switch (d) {
    case 2: m.N = 3; m.M = 2; m.scheme = GroupingScheme::sequential; break;
    case 3: m.N = 8; m.M = 2; m.scheme = GroupingScheme::appendix_b; break;
    case 4: m.N = 5; m.M = 4; m.scheme = GroupingScheme::appendix_a; break;
    default: m.N = d * d - 1; m.M = 2; m.scheme = GroupingScheme::sequential; break;
  }
  return m;
}

SymmetricPovm make_measurement(const MeasurementSpec& spec, int d) {
  switch (spec.family) {
    case MeasurementFamily::sic: return sic_from_fiducial(sic_fiducial(d));
    case MeasurementFamily::mub: return mub_prime(d);
    case MeasurementFamily::file: {
      SymmetricPovm p = load_povm_file(spec.file);
      if (p.d() != d) {
        throw Error(ErrorKind::dimension_mismatch,
                    "POVM file has d = " + std::to_string(p.d()) + ", state needs " +
                        std::to_string(d));
      }
      return p;
    }
    case MeasurementFamily::symmetric: break;
  }
  MeasurementSpec s = spec;
  if (s.N == 0 && s.M == 0) {
    const MeasurementSpec def = default_measurement(d);
    s.N = def.N;
    s.M = def.M;
    s.scheme = def.scheme;
  } else if (s.N == 0 && s.M >= 2 && (d * d - 1) % (s.M - 1) == 0) {
    s.N = (d * d - 1) / (s.M - 1);
  } else if (s.M == 0 && s.N >= 1 && (d * d - 1) % s.N == 0) {
    s.M = (d * d - 1) / s.N + 1;
  }
  const OperatorBasis basis = gellmann_basis(d);
  const GroupedBasis gb = s.perm.empty() ? group_basis(basis, s.N, s.M, s.scheme)
                                         : group_basis(basis, s.N, s.M, s.perm);
  return build_povm(gb, s.t);
}

void SweepSpec::validate() const {
  if (!(lo < hi)) throw Error(ErrorKind::invalid_argument, "sweep: need lo < hi");
  if (points < 2) throw Error(ErrorKind::invalid_argument, "sweep: need at least 2 points");
  GalleryParams probe = fixed;
  set_gallery_param(probe, param, lo);
}

std::vector<double> sweep_grid(double lo, double hi, int points) {
  std::vector<double> grid(std::size_t(std::max(points, 0)));
  for (int i = 0; i < points; ++i) {
    grid[std::size_t(i)] = i == points - 1 ? hi : lo + (hi - lo) * double(i) / (points - 1);
  }
  return grid;
}

CriterionEvaluator make_evaluator(const SweepSpec& spec) {
  const auto [dA, dB] = gallery_dims(spec.family, spec.fixed);
  return CriterionEvaluator(make_measurement(spec.a, dA), make_measurement(spec.b, dB),
                            spec.baselines);
}

std::vector<SweepRow> run_sweep(const SweepSpec& spec, Execution exec) {
  spec.validate();
  const CriterionEvaluator evaluator = make_evaluator(spec);
  const std::vector<double> grid = sweep_grid(spec.lo, spec.hi, spec.points);
  std::vector<SweepRow> rows(grid.size());

  auto eval_point = [&](std::size_t i) {
    GalleryParams params = spec.fixed;
    set_gallery_param(params, spec.param, grid[i]);
    rows[i].param = grid[i];
    rows[i].report = evaluator.evaluate(make_gallery_state(spec.family, params), Execution::serial);
  };

  if (exec != Execution::parallel) {
    for (std::size_t i = 0; i < grid.size(); ++i) eval_point(i);
    return rows;
  }
  std::exception_ptr failure;
  const long n = long(grid.size());
#pragma omp parallel for schedule(dynamic) num_threads(configured_threads())
  for (long i = 0; i < n; ++i) {
    try {
      eval_point(std::size_t(i));
    } catch (...) {
#pragma omp critical(snest_sweep_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return rows;
}

void write_sweep_csv(std::ostream& os, const SweepSpec& spec, const std::vector<SweepRow>& rows) {
  os << spec.param << ",trace_norm,sn_real_lb,sn_int_lb,concurrence_lb";
  for (const char* name : kBaselineOrder)
    if (baseline_selected(spec.baselines, name)) os << ',' << name;
  os << ",sn_real_lb_clamped\n";
  for (const auto& row : rows) {
    const auto& r = row.report;
    os << format_double(row.param) << ',' << format_double(r.trace_norm) << ','
       << format_double(r.sn_real_lb) << ',' << r.sn_int_lb << ','
       << format_double(r.concurrence_lb);
    for (const char* name : kBaselineOrder)
      if (baseline_selected(spec.baselines, name)) os << ',' << format_double(r.baselines.at(name));
    os << ',' << format_double(std::max(0.0, r.sn_real_lb)) << '\n';
  }
}

Curve parse_curve(std::string_view name) {
  if (name == "red" || name == "schmidt") return Curve::red;
  if (name == "gsic" || name == "green") return Curve::gsic;
  if (name == "sic" || name == "purple") return Curve::sic;
  if (name == "realignment" || name == "orange") return Curve::realignment;
  if (name == "fidelity") return Curve::fidelity;
  throw Error(ErrorKind::invalid_argument, "unknown curve '" + std::string(name) + "'");
}

std::string_view to_string(Curve c) noexcept {
  switch (c) {
    case Curve::red: return "red";
    case Curve::gsic: return "gsic";
    case Curve::sic: return "sic";
    case Curve::realignment: return "realignment";
    case Curve::fidelity: return "fidelity";
  }
  return "red";
}

double curve_value(const CriterionReport& rep, Curve c) {
  if (c == Curve::red) return rep.sn_real_lb;
  const auto it = rep.baselines.find(std::string(to_string(c)));
  if (it == rep.baselines.end()) {
    throw Error(ErrorKind::invalid_argument,
                "curve '" + std::string(to_string(c)) + "' not selected in the report");
  }
  return it->second;
}

ThresholdResult bisect_threshold(const std::function<double(double)>& f, double lo, double hi,
                                 double level, double tol, int max_iter) {
  double flo = f(lo) - level;
  const double fhi = f(hi) - level;
  if (flo == 0.0) return {lo, level, level, 0.0, hi - lo, 0};
  if (fhi == 0.0) return {hi, level, level, 0.0, hi - lo, 0};
  if (flo * fhi > 0.0) {
    std::ostringstream os;
    os << "level " << level << " is not bracketed on [" << lo << ", " << hi
       << "]: curve - level = " << flo << " and " << fhi;
    throw Error(ErrorKind::no_sign_change, os.str());
  }
  ThresholdResult res;
  res.level = level;
  double a = lo, b = hi;
  for (int it = 1; it <= max_iter; ++it) {
    const double mid = 0.5 * (a + b);
    const double fm = f(mid) - level;
    res.value = mid;
    res.curve_at_value = fm + level;
    res.iterations = it;
    if ((fm < 0.0) == (flo < 0.0)) {
      a = mid;
      flo = fm;
    } else {
      b = mid;
    }
    res.bracket_width = b - a;
    if ((res.bracket_width <= tol && std::abs(fm) <= tol) || fm == 0.0) break;
  }
  res.achieved_tolerance = std::abs(res.curve_at_value - level);
  return res;
}

ThresholdResult find_threshold(const SweepSpec& spec, Curve curve, double level, double tol) {
  spec.validate();
  const CriterionEvaluator evaluator = make_evaluator(spec);
  auto f = [&](double value) {
    GalleryParams params = spec.fixed;
    set_gallery_param(params, spec.param, value);
    return curve_value(evaluator.evaluate(make_gallery_state(spec.family, params)), curve);
  };
  return bisect_threshold(f, spec.lo, spec.hi, level, tol);
}

Figure parse_figure(std::string_view name) {
  if (name == "fig1") return Figure::fig1;
  if (name == "fig2") return Figure::fig2;
  if (name == "fig3") return Figure::fig3;
  if (name == "example3") return Figure::example3;
  throw Error(ErrorKind::invalid_argument, "unknown figure '" + std::string(name) + "'");
}

SweepSpec figure_spec(Figure fig) {
  SweepSpec s;
  switch (fig) {
    case Figure::fig1:
      s.family = StateFamily::example1;
      s.fixed.tau = kFig1Tau;
      s.param = "q";
      s.lo = 0.0;
      s.hi = 1.0;
      s.points = 201;
      s.a = default_measurement(2);
      s.b = default_measurement(4);
      s.baselines.gsic = std::pair{kGsicA1, kGsicA2};
      break;
    case Figure::fig2:
      s.family = StateFamily::example2;
      s.param = "p";
      s.lo = 0.0;
      s.hi = 1.0;
      s.points = 201;
      s.a = s.b = default_measurement(4);
      s.baselines.realignment = true;
      break;
    case Figure::fig3:
      s.family = StateFamily::example4;
      s.fixed.q = kFig3Q;
      s.param = "tau";
      s.lo = 0.05;
      s.hi = 0.95;
      s.points = 181;  // step 0.005
      s.a = s.b = default_measurement(3);
      s.baselines.gsic = std::pair{kGsicA2, kGsicA2};
      s.baselines.sic = true;
      s.baselines.realignment = true;
      break;
    case Figure::example3:
      throw Error(ErrorKind::invalid_argument, "example3 is an analytic table, not a sweep");
  }
  return s;
}

bool ReproduceResult::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed; });
}

namespace {

ReproduceCheck threshold_check(const std::string& name, const SweepSpec& spec, Curve curve,
                               double level, double expected) {
  ReproduceCheck c;
  c.name = name;
  try {
    const ThresholdResult r = find_threshold(spec, curve, level);
    c.passed = std::abs(r.value - expected) <= kThresholdTol;
    c.detail = spec.param + "* = " + fmt(r.value, 8) + " (expected " + fmt(expected) +
               " +/- " + fmt(kThresholdTol) + ", " + std::to_string(r.iterations) +
               " bisection steps)";
  } catch (const Error& e) {
    c.passed = false;
    c.detail = e.what();
  }
  return c;
}

ReproduceResult reproduce_fig1(std::ostream& csv) {
  const SweepSpec spec = figure_spec(Figure::fig1);
  const auto rows = run_sweep(spec);
  write_sweep_csv(csv, spec, rows);

  ReproduceResult res;
  res.checks.push_back(threshold_check("red curve crosses 0", spec, Curve::red, 0.0, kFig1Threshold));

  ReproduceCheck g{"GSIC baseline: no detection", true, ""};
  double worst = -std::numeric_limits<double>::infinity();
  double worst_at = 0.0;
  for (const auto& row : rows) {
    const double v = row.report.baselines.at("gsic");
    if (v > worst) {
      worst = v;
      worst_at = row.param;
    }
  }
  g.passed = worst <= 0.0;
  g.detail = "max GSIC curve value " + fmt(worst, 8) + " at q = " + fmt(worst_at);
  if (!g.passed) {
    try {
      const ThresholdResult r = find_threshold(spec, Curve::gsic, 0.0);
      g.detail += "; GSIC baseline detects for q >= " + fmt(r.value, 8);
    } catch (const Error&) {
    }
  }
  res.checks.push_back(g);
  return res;
}

ReproduceResult reproduce_fig2(std::ostream& csv) {
  const SweepSpec spec = figure_spec(Figure::fig2);
  write_sweep_csv(csv, spec, run_sweep(spec));
  ReproduceResult res;
  res.checks.push_back(
      threshold_check("red curve crosses 1 (SN > 2)", spec, Curve::red, 1.0, kFig2RedThreshold));
  res.checks.push_back(threshold_check("realignment curve crosses 1 (SN > 2)", spec,
                                       Curve::realignment, 1.0, kFig2RealignThreshold));
  return res;
}

ReproduceResult reproduce_fig3(std::ostream& csv) {
  const SweepSpec spec = figure_spec(Figure::fig3);
  const auto rows = run_sweep(spec);
  write_sweep_csv(csv, spec, rows);
  ReproduceResult res;
  for (const char* name : {"gsic", "sic", "realignment"}) {
    ReproduceCheck c{std::string("red >= ") + name + " pointwise", true, ""};
    double min_gap = std::numeric_limits<double>::infinity();
    double at = 0.0;
    for (const auto& row : rows) {
      const double gap = row.report.sn_real_lb - row.report.baselines.at(name);
      if (gap < min_gap) {
        min_gap = gap;
        at = row.param;
      }
    }
    c.passed = min_gap >= 0.0;
    c.detail = "min(red - " + std::string(name) + ") = " + fmt(min_gap, 6) + " at tau = " + fmt(at);
    res.checks.push_back(c);
  }
  return res;
}

ReproduceResult reproduce_example3(std::ostream& csv) {
  ReproduceResult res;
  csv << "d,N,M,t,x,v,closed_form,numeric,abs_diff\n";
  double worst = 0.0;
  const std::vector<double> vs = sweep_grid(0.0, 1.0, 11);
  for (int d : {2, 3, 4}) {
    std::vector<MeasurementSpec> families{default_measurement(d)};
    if (d == 3) families.push_back({MeasurementFamily::symmetric, 4, 3, GroupingScheme::sequential, {}, 0.01, {}});
    for (const auto& fam : families) {
      const TInterval range =
          t_range(build_h(group_basis(gellmann_basis(d), fam.N, fam.M, fam.scheme)));
      for (double t : {kPaperT, 0.5 * std::min(-range.lo, range.hi)}) {
        MeasurementSpec m = fam;
        m.t = t;
        const SymmetricPovm p = make_measurement(m, d);
        for (double v : vs) {
          const double closed = isotropic_norm_closed_form(d, p.N(), p.M(), p.x(), v);
          const double numeric = trace_norm(correlation_matrix(isotropic(d, v), p, p));
          const double diff = std::abs(closed - numeric);
          worst = std::max(worst, diff);
          csv << d << ',' << p.N() << ',' << p.M() << ',' << format_double(t) << ','
              << format_double(p.x()) << ',' << format_double(v) << ',' << format_double(closed)
              << ',' << format_double(numeric) << ',' << format_double(diff) << '\n';
        }
      }
    }
  }
  res.checks.push_back({"closed form vs numeric isotropic norm", worst < 1e-10,
                        "max deviation " + fmt(worst, 3)});

  // fidelity implication over window-valid x for each IC family
  bool all_hold = true;
  int cases = 0;
  std::ostringstream table;
  for (int d : {2, 3, 4}) {
    std::vector<std::pair<int, int>> nm{{1, d * d}, {d + 1, d}, {d * d - 1, 2}};
    if (d > 2) nm.emplace_back(d - 1, d + 2);
    for (int r = 1; r < d; ++r) {
      const double vopt = fidelity_isotropic_threshold(d, r);
      table << " v_opt(d=" << d << ", r=" << r << ") = " << fmt(vopt);
      for (auto [N, M] : nm) {
        const double xlo = double(d) / (double(M) * M);
        const double xhi = std::min(double(d) * d / (double(M) * M), double(d) / M);
        for (int xi = 1; xi <= 5; ++xi) {
          const double x = xlo + (xhi - xlo) * xi / 5.0;
          for (double v : vs) {
            if (!(v > vopt)) continue;
            ++cases;
            all_hold = all_hold && fidelity_implication(d, N, M, x, r, v).holds;
          }
        }
      }
    }
  }
  res.checks.push_back({"fidelity implication (v > v_opt => criterion certifies SN >= r+1)",
                        all_hold, std::to_string(cases) + " grid points;" + table.str()});
  return res;
}

}  // namespace

ReproduceResult reproduce(Figure fig, std::ostream& csv, std::ostream& summary) {
  ReproduceResult res;
  switch (fig) {
    case Figure::fig1: res = reproduce_fig1(csv); break;
    case Figure::fig2: res = reproduce_fig2(csv); break;
    case Figure::fig3: res = reproduce_fig3(csv); break;
    case Figure::example3: res = reproduce_example3(csv); break;
  }
  for (const auto& c : res.checks)
    summary << (c.passed ? "PASS " : "FAIL ") << c.name << ": " << c.detail << '\n';
  return res;
}

}  // namespace snest
