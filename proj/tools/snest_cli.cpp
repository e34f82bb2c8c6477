// snest: command-line front end for POVM construction, criterion evaluation,
// parameter sweeps, threshold bisection and figure reproduction.
//
// Exit codes: 0 ok, 1 a reproduce check failed, 2 usage or parameter error,
// 3 dimension mismatch, 4 invalid density matrix.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "snest/basis.hpp"
#include "snest/criteria.hpp"
#include "snest/error.hpp"
#include "snest/json_io.hpp"
#include "snest/povm.hpp"
#include "snest/special_povms.hpp"
#include "snest/sweep.hpp"

namespace {

using namespace snest;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitDimension = 3;
constexpr int kExitInvalidState = 4;

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::dimension_mismatch:
    case ErrorKind::dimension_overflow:
      return kExitDimension;
    case ErrorKind::invalid_state:
    case ErrorKind::not_hermitian:
      return kExitInvalidState;
    default:
      return kExitUsage;
  }
}

struct PartyOptions {
  std::string family = "symmetric";
  int N = 0;
  int M = 0;
  std::string scheme;
  std::string perm_file;
  std::optional<double> t;
  std::string file;
};

struct StateOptions {
  std::string state_file;
  std::string gallery;
  GalleryParams params;
};

struct BaselineOptions {
  std::vector<double> gsic;
  bool sic = false;
  bool realignment = false;
  bool fidelity = false;
};

void add_party_options(CLI::App* app, PartyOptions& o, const std::string& prefix,
                       const std::string& who) {
  app->add_option("--" + prefix + "-family", o.family,
                  "measurement family of " + who + ": symmetric, sic, mub, file")
      ->check(CLI::IsMember({"symmetric", "sic", "mub", "file"}));
  app->add_option("--" + prefix + "-N", o.N, "number of POVMs for " + who);
  app->add_option("--" + prefix + "-M", o.M, "outcomes per POVM for " + who);
  app->add_option("--" + prefix + "-scheme", o.scheme, "grouping scheme for " + who);
  app->add_option("--" + prefix + "-perm", o.perm_file, "grouping permutation JSON for " + who);
  app->add_option("--" + prefix + "-t", o.t, "POVM parameter t for " + who);
  app->add_option("--" + prefix + "-file", o.file, "POVM JSON for " + who)->check(CLI::ExistingFile);
}

void add_state_options(CLI::App* app, StateOptions& o, bool allow_file) {
  if (allow_file) {
    app->add_option("--state-file", o.state_file, "density matrix JSON")->check(CLI::ExistingFile);
  }
  app->add_option("--gallery", o.gallery,
                  "example1, example2, example4, isotropic, maximally-mixed");
  app->add_option("--tau", o.params.tau, "Horodecki parameter");
  app->add_option("--q", o.params.q, "mixing weight (example1, example4)");
  app->add_option("--p", o.params.p, "mixing weight (example2)");
  app->add_option("--v", o.params.v, "isotropic visibility");
  app->add_option("--d", o.params.d, "isotropic local dimension");
  app->add_option("--dA", o.params.dA, "maximally mixed: dimension of A");
  app->add_option("--dB", o.params.dB, "maximally mixed: dimension of B");
}

void add_baseline_options(CLI::App* app, BaselineOptions& o) {
  app->add_option("--gsic", o.gsic, "GSIC baseline parameters a_A,a_B")
      ->delimiter(',')
      ->expected(2);
  app->add_flag("--sic", o.sic, "SIC baseline");
  app->add_flag("--realignment", o.realignment, "realignment baseline");
  app->add_flag("--fidelity", o.fidelity, "fidelity baseline (dA = dB)");
}

MeasurementSpec to_spec(const PartyOptions& o, int d, std::optional<double> shared_t) {
  MeasurementSpec s;
  if (o.family == "sic") s.family = MeasurementFamily::sic;
  else if (o.family == "mub") s.family = MeasurementFamily::mub;
  else if (o.family == "file" || !o.file.empty()) s.family = MeasurementFamily::file;
  s.file = o.file;
  const MeasurementSpec def = default_measurement(d);
  const bool shape_given = o.N != 0 || o.M != 0;
  s.N = shape_given ? o.N : def.N;
  s.M = shape_given ? o.M : def.M;
  if (!o.scheme.empty()) s.scheme = parse_grouping_scheme(o.scheme);
  else if (!shape_given) s.scheme = def.scheme;
  if (!o.perm_file.empty()) {
    const PermutationFile pf = load_permutation_file(o.perm_file);
    if (pf.d != d) {
      throw Error(ErrorKind::dimension_mismatch, "permutation file is for d = " +
                                                     std::to_string(pf.d) + ", party has d = " +
                                                     std::to_string(d));
    }
    s.N = pf.N;
    s.M = pf.M;
    s.perm = pf.perm;
  }
  if (shared_t) s.t = *shared_t;
  if (o.t) s.t = *o.t;
  return s;
}

BaselineSelection to_selection(const BaselineOptions& o) {
  BaselineSelection sel;
  if (o.gsic.size() == 2) sel.gsic = std::pair{o.gsic[0], o.gsic[1]};
  sel.sic = o.sic;
  sel.realignment = o.realignment;
  sel.fidelity = o.fidelity;
  return sel;
}

StateFamily gallery_family(const StateOptions& o) {
  if (o.gallery.empty()) throw Error(ErrorKind::invalid_argument, "--gallery is required");
  return parse_state_family(o.gallery);
}

SweepSpec build_sweep_spec(const StateOptions& st, const PartyOptions& a, const PartyOptions& b,
                           std::optional<double> t, const BaselineOptions& bl,
                           const std::string& param, double lo, double hi, int points) {
  SweepSpec s;
  s.family = gallery_family(st);
  s.fixed = st.params;
  s.param = param;
  s.lo = lo;
  s.hi = hi;
  s.points = points;
  const auto [dA, dB] = gallery_dims(s.family, s.fixed);
  s.a = to_spec(a, dA, t);
  s.b = to_spec(b, dB, t);
  s.baselines = to_selection(bl);
  s.validate();
  return s;
}

std::string interval_text(const TInterval& r) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(6) << '[' << r.lo << ", " << r.hi << ']';
  return os.str();
}

GroupedBasis grouped_from_flags(int d, int N, int M, const std::string& scheme,
                                const std::string& perm_file) {
  const OperatorBasis basis = gellmann_basis(d);
  if (!perm_file.empty()) {
    const PermutationFile pf = load_permutation_file(perm_file);
    if (pf.d != d || pf.N != N || pf.M != M) {
      throw Error(ErrorKind::invalid_argument, "permutation file does not match --d/--N/--M");
    }
    return group_basis(basis, N, M, pf.perm);
  }
  return group_basis(basis, N, M, parse_grouping_scheme(scheme));
}

template <class F>
int guarded(F&& f) {
  try {
    return f();
  } catch (const Error& e) {
    std::cerr << "error (" << to_string(e.kind()) << "): " << e.what() << '\n';
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::invalid_argument, "cannot write '" + path + "'");
  out << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Schmidt-number estimation from symmetric measurements"};
  app.require_subcommand(1);
  int rc = kExitOk;

  // povm ---------------------------------------------------------------------
  auto* povm = app.add_subcommand("povm", "build, validate or bound (N,M)-POVMs");
  povm->require_subcommand(1);
  struct {
    int d = 2, N = 3, M = 2;
    std::string scheme = "sequential", perm, out, in;
    double t = 0.01, tol = kPovmTol;
  } po;
  auto add_povm_flags = [&](CLI::App* sub, bool with_t) {
    sub->add_option("--d", po.d, "local dimension")->check(CLI::Range(2, 64));
    sub->add_option("--N", po.N, "number of POVMs");
    sub->add_option("--M", po.M, "outcomes per POVM");
    sub->add_option("--scheme", po.scheme, "sequential, appendix-A, appendix-B");
    sub->add_option("--perm", po.perm, "grouping permutation JSON")->check(CLI::ExistingFile);
    if (with_t) sub->add_option("--t", po.t, "construction parameter t");
  };
  auto* povm_build = povm->add_subcommand("build", "write POVM JSON");
  add_povm_flags(povm_build, true);
  povm_build->add_option("--out", po.out, "output file (default stdout)");
  auto* povm_validate = povm->add_subcommand("validate", "print per-relation deviations");
  add_povm_flags(povm_validate, true);
  povm_validate->add_option("--in", po.in, "POVM JSON to validate instead of building")
      ->check(CLI::ExistingFile);
  povm_validate->add_option("--tol", po.tol, "tolerance");
  auto* povm_trange = povm->add_subcommand("trange", "print the admissible t interval");
  add_povm_flags(povm_trange, false);

  povm_build->callback([&] {
    rc = guarded([&] {
      const GroupedBasis gb = grouped_from_flags(po.d, po.N, po.M, po.scheme, po.perm);
      const TInterval range = t_range(build_h(gb));
      if (!range.contains(po.t)) {
        std::cerr << "error: t = " << po.t << " outside admissible interval "
                  << interval_text(range) << '\n';
        return kExitUsage;
      }
      std::ostringstream os;
      write_povm_json(os, build_povm(gb, po.t));
      write_output(po.out, os.str());
      return kExitOk;
    });
  });
  povm_validate->callback([&] {
    rc = guarded([&] {
      const SymmetricPovm p = po.in.empty()
          ? build_povm(grouped_from_flags(po.d, po.N, po.M, po.scheme, po.perm), po.t)
          : load_povm_file(po.in);
      const PovmValidation v = validate_povm(p, po.tol);
      for (const auto& r : v.relations) {
        std::cout << std::left << std::setw(14) << r.name << std::scientific
                  << std::setprecision(3) << r.max_deviation << (r.ok ? "  ok" : "  FAIL") << '\n';
      }
      std::cout << std::left << std::setw(14) << "window" << (v.in_window ? "ok" : "FAIL") << '\n';
      std::cout << (v.passed ? "valid" : "invalid") << '\n';
      return v.passed ? kExitOk : kExitUsage;
    });
  });
  povm_trange->callback([&] {
    rc = guarded([&] {
      const TInterval range =
          t_range(build_h(grouped_from_flags(po.d, po.N, po.M, po.scheme, po.perm)));
      std::cout << interval_text(range) << '\n';
      return kExitOk;
    });
  });

  // eval / sweep / threshold share state, measurement and baseline flags -------
  StateOptions st;
  PartyOptions pa, pb;
  std::optional<double> shared_t;
  BaselineOptions bl;
  std::string param = "q";
  double lo = 0.0, hi = 1.0;
  int points = 201;
  auto add_common = [&](CLI::App* sub, bool allow_file) {
    add_state_options(sub, st, allow_file);
    add_party_options(sub, pa, "a", "party A");
    add_party_options(sub, pb, "b", "party B");
    sub->add_option("--t", shared_t, "POVM parameter t for both parties (default 0.01)");
    add_baseline_options(sub, bl);
  };
  auto add_range = [&](CLI::App* sub) {
    sub->add_option("--param", param, "swept parameter: tau, q, p, v");
    sub->add_option("--lo", lo, "lower end");
    sub->add_option("--hi", hi, "upper end");
  };

  auto* eval = app.add_subcommand("eval", "evaluate the criterion on one state (JSON report)");
  add_common(eval, true);
  eval->callback([&] {
    rc = guarded([&] {
      std::optional<DensityMatrix> rho;
      if (!st.state_file.empty()) {
        const RawState raw = load_state_file(st.state_file);
        rho.emplace(raw.dA, raw.dB, raw.matrix);
      } else {
        rho.emplace(make_gallery_state(gallery_family(st), st.params));
      }
      const SymmetricPovm A = make_measurement(to_spec(pa, rho->dA(), shared_t), rho->dA());
      const SymmetricPovm B = make_measurement(to_spec(pb, rho->dB(), shared_t), rho->dB());
      write_report_json(std::cout, full_report(*rho, A, B, to_selection(bl)));
      return kExitOk;
    });
  });

  auto* sweep = app.add_subcommand("sweep", "sweep a gallery parameter and write CSV");
  add_common(sweep, false);
  add_range(sweep);
  sweep->add_option("--points", points, "grid points")->check(CLI::PositiveNumber);
  std::string csv_path;
  sweep->add_option("--csv", csv_path, "output CSV (default stdout)");
  sweep->callback([&] {
    rc = guarded([&] {
      const SweepSpec spec = build_sweep_spec(st, pa, pb, shared_t, bl, param, lo, hi, points);
      std::ostringstream os;
      write_sweep_csv(os, spec, run_sweep(spec));
      write_output(csv_path, os.str());
      return kExitOk;
    });
  });

  auto* threshold = app.add_subcommand("threshold", "bisect where a curve crosses a level");
  add_common(threshold, false);
  add_range(threshold);
  std::string curve = "red";
  double level = 0.0, tol = 1e-6;
  threshold->add_option("--curve", curve, "red, gsic, sic, realignment, fidelity");
  threshold->add_option("--level", level, "crossing level (SN-1 scale)");
  threshold->add_option("--tol", tol, "parameter and level tolerance")->check(CLI::PositiveNumber);
  threshold->callback([&] {
    rc = guarded([&] {
      SweepSpec spec = build_sweep_spec(st, pa, pb, shared_t, bl, param, lo, hi, 2);
      const Curve c = parse_curve(curve);
      if (c == Curve::sic) spec.baselines.sic = true;
      if (c == Curve::realignment) spec.baselines.realignment = true;
      if (c == Curve::fidelity) spec.baselines.fidelity = true;
      if (c == Curve::gsic && !spec.baselines.gsic) {
        throw Error(ErrorKind::invalid_argument, "--curve gsic needs --gsic a,b");
      }
      const ThresholdResult r = find_threshold(spec, c, level, tol);
      std::cout << "{\"param\":\"" << spec.param << "\",\"curve\":\"" << to_string(c)
                << "\",\"value\":" << format_double(r.value)
                << ",\"level\":" << format_double(r.level)
                << ",\"curve_at_value\":" << format_double(r.curve_at_value)
                << ",\"achieved_tolerance\":" << format_double(r.achieved_tolerance)
                << ",\"bracket_width\":" << format_double(r.bracket_width)
                << ",\"iterations\":" << r.iterations << "}\n";
      return kExitOk;
    });
  });

  auto* reproduce_cmd = app.add_subcommand("reproduce", "regenerate a figure CSV and its checks");
  std::string figure;
  std::string out_dir = ".";
  reproduce_cmd->add_option("figure", figure, "fig1, fig2, fig3, example3")
      ->required()
      ->check(CLI::IsMember({"fig1", "fig2", "fig3", "example3"}));
  reproduce_cmd->add_option("--out-dir", out_dir, "directory for <figure>.csv and summary");
  reproduce_cmd->callback([&] {
    rc = guarded([&] {
      std::filesystem::create_directories(out_dir);
      const std::filesystem::path dir(out_dir);
      std::ostringstream csv, summary;
      const ReproduceResult r = reproduce(parse_figure(figure), csv, summary);
      write_output((dir / (figure + ".csv")).string(), csv.str());
      write_output((dir / (figure + "_summary.txt")).string(), summary.str());
      std::cout << summary.str();
      return r.all_passed() ? kExitOk : kExitCheckFailed;
    });
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }
  return rc;
}
