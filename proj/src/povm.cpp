#include "snest/povm.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "snest/error.hpp"

namespace snest {

namespace {

std::string format_interval(const TInterval& r) {
  std::ostringstream os;
  os.precision(6);
  os << "[" << r.lo << ", " << r.hi << "]";
  return os.str();
}

}  // namespace

HOperators build_h(const GroupedBasis& gb) {
  const int M = gb.M;
  const double sqM = std::sqrt(double(M));
  HOperators h{gb.d, gb.N, M, {}};
  h.ops.reserve(std::size_t(gb.N) * M);
  for (const auto& group : gb.groups) {
    ComplexMatrix g_alpha = ComplexMatrix::Zero(gb.d, gb.d);
    for (const auto& g : group) g_alpha += g;
    for (const auto& g : group) h.ops.push_back(g_alpha - sqM * (sqM + 1.0) * g);
    h.ops.push_back((sqM + 1.0) * g_alpha);
  }
  return h;
}

TInterval t_range(const HOperators& h) {
  if (h.ops.empty()) throw Error(ErrorKind::degenerate, "t_range: no H operators");
  double lmax = -std::numeric_limits<double>::infinity();
  double lmin = std::numeric_limits<double>::infinity();
  for (const auto& op : h.ops) {
    const auto eig = hermitian_eig(op);
    lmin = std::min(lmin, eig.values(0));
    lmax = std::max(lmax, eig.values(eig.values.size() - 1));
  }
  // traceless nonzero operators have lmax > 0 > lmin
  if (!(lmax > 1e-14) || !(lmin < -1e-14)) {
    throw Error(ErrorKind::degenerate, "t_range: all H operators vanish");
  }
  return {-1.0 / (h.M * lmax), 1.0 / (h.M * std::abs(lmin))};
}

double x_of_t(int d, int M, double t) {
  const double s = std::sqrt(double(M)) + 1.0;
  return double(d) / (double(M) * M) + t * t * (M - 1) * s * s;
}

double t_of_x(int d, int M, double x) {
  const double s = std::sqrt(double(M)) + 1.0;
  const double t2 = (x - double(d) / (double(M) * M)) / ((M - 1) * s * s);
  if (t2 < 0.0) {
    throw Error(ErrorKind::window_violation, "t_of_x: x below d/M^2");
  }
  return std::sqrt(t2);
}

bool x_in_window(int d, int M, double x, double slack) {
  const double lo = double(d) / (double(M) * M);
  const double hi = std::min(double(d) * d / (double(M) * M), double(d) / M);
  return x > lo && x <= hi + slack;
}

SymmetricPovm::SymmetricPovm(int d, int N, int M, double t, double x,
                             std::vector<ComplexMatrix> effects,
                             std::vector<ComplexMatrix> h_ops)
    : d_(d), N_(N), M_(M), t_(t), x_(x), effects_(std::move(effects)), h_ops_(std::move(h_ops)) {
  if (d < 2 || N < 1 || M < 2) {
    throw Error(ErrorKind::invalid_argument, "SymmetricPovm: need d >= 2, N >= 1, M >= 2");
  }
  if (effects_.size() != std::size_t(N) * M) {
    throw Error(ErrorKind::count_mismatch, "SymmetricPovm: expected N*M effects");
  }
  if (!h_ops_.empty() && h_ops_.size() != effects_.size()) {
    throw Error(ErrorKind::count_mismatch, "SymmetricPovm: expected N*M H operators");
  }
  for (const auto& e : effects_) {
    if (e.rows() != d || e.cols() != d) {
      throw Error(ErrorKind::dimension_mismatch, "SymmetricPovm: effect is not d x d");
    }
    if (!all_finite(e)) throw Error(ErrorKind::invalid_argument, "SymmetricPovm: non-finite entry");
  }
}

SymmetricPovm build_povm(const GroupedBasis& gb, double t) {
  HOperators h = build_h(gb);
  const TInterval range = t_range(h);
  if (!std::isfinite(t) || !range.contains(t)) {
    std::ostringstream os;
    os << "t = " << t << " outside admissible interval " << format_interval(range);
    throw Error(ErrorKind::t_out_of_range, os.str());
  }
  const int d = gb.d;
  const ComplexMatrix base = ComplexMatrix::Identity(d, d) / double(gb.M);
  std::vector<ComplexMatrix> effects;
  effects.reserve(h.ops.size());
  for (const auto& op : h.ops) {
    effects.push_back(base + t * op);
    const double lmin = min_eigenvalue(effects.back());
    if (lmin < -kPsdTol) {
      throw Error(ErrorKind::psd_violation,
                  "build_povm: effect has eigenvalue " + std::to_string(lmin));
    }
  }
  return SymmetricPovm(d, gb.N, gb.M, t, x_of_t(d, gb.M, t), std::move(effects),
                       std::move(h.ops));
}

const RelationCheck& PovmValidation::relation(const std::string& name) const {
  for (const auto& r : relations)
    if (r.name == name) return r;
  throw Error(ErrorKind::invalid_argument, "no relation named " + name);
}

std::vector<std::string> PovmValidation::failures() const {
  std::vector<std::string> out;
  for (const auto& r : relations)
    if (!r.ok) out.push_back(r.name);
  return out;
}

PovmValidation validate_povm(const SymmetricPovm& p, double tol) {
  const int d = p.d(), N = p.N(), M = p.M();
  const double x = p.x();
  const double want_trace = double(d) / M;
  const double want_same = (d - M * x) / (double(M) * (M - 1));
  const double want_cross = double(d) / (double(M) * M);

  double dev_trace = 0, dev_purity = 0, dev_same = 0, dev_cross = 0, dev_complete = 0, dev_psd = 0;
  const ComplexMatrix id = ComplexMatrix::Identity(d, d);
  for (int a = 0; a < N; ++a) {
    ComplexMatrix sum = ComplexMatrix::Zero(d, d);
    for (int k = 0; k < M; ++k) {
      const auto& e = p.effect(a, k);
      sum += e;
      dev_trace = std::max(dev_trace, std::abs(e.trace() - want_trace));
      double lmin;
      try {
        lmin = min_eigenvalue(e, tol);
      } catch (const Error&) {
        lmin = -std::numeric_limits<double>::infinity();
      }
      dev_psd = std::max(dev_psd, -lmin);
      for (int b = 0; b < N; ++b) {
        for (int l = 0; l < M; ++l) {
          const Complex v = trace_of_product(e, p.effect(b, l));
          if (a == b && k == l) {
            dev_purity = std::max(dev_purity, std::abs(v - x));
          } else if (a == b) {
            dev_same = std::max(dev_same, std::abs(v - want_same));
          } else {
            dev_cross = std::max(dev_cross, std::abs(v - want_cross));
          }
        }
      }
    }
    dev_complete = std::max(dev_complete, (sum - id).cwiseAbs().maxCoeff());
  }

  PovmValidation out;
  auto add = [&](const char* name, double dev) {
    out.relations.push_back({name, dev, dev <= tol});
  };
  add("trace", dev_trace);
  add("purity", dev_purity);
  add("same-group", dev_same);
  add("cross-group", dev_cross);
  add("completeness", dev_complete);
  add("psd", std::max(0.0, dev_psd));
  out.in_window = x_in_window(d, M, x);
  out.passed = std::all_of(out.relations.begin(), out.relations.end(),
                           [](const RelationCheck& r) { return r.ok; });
  return out;
}

DualFrame dual_frame(const SymmetricPovm& p) {
  if (!p.informationally_complete()) {
    throw Error(ErrorKind::not_informationally_complete,
                "dual_frame: N(M-1) != d^2-1");
  }
  const int d = p.d(), N = p.N(), M = p.M();
  DualFrame f;
  f.w = double(d) / M;
  f.y = (d - M * p.x()) / (double(M) * (M - 1));
  f.z = double(d) / (double(M) * M);
  f.A = ((N - 1) * f.z + f.y) / (N * f.w);
  const double scale = 1.0 / (p.x() - f.y);
  const ComplexMatrix shift = f.A * ComplexMatrix::Identity(d, d);
  f.ops.reserve(p.size());
  for (const auto& e : p.effects()) f.ops.push_back(scale * (e - shift));
  return f;
}

ComplexMatrix reconstruct(const SymmetricPovm& p, const DualFrame& frame,
                          const ComplexMatrix& sigma) {
  ComplexMatrix out = ComplexMatrix::Zero(p.d(), p.d());
  for (std::size_t i = 0; i < p.size(); ++i)
    out += trace_of_product(p.effects()[i], sigma) * frame.ops[i];
  return out;
}

Lemma1Sides lemma1_check(const SymmetricPovm& p, const ComplexMatrix& sigma) {
  const int d = p.d(), M = p.M();
  if (sigma.rows() != d || sigma.cols() != d) {
    throw Error(ErrorKind::dimension_mismatch, "lemma1_check: sigma must be d x d");
  }
  Lemma1Sides s;
  for (const auto& e : p.effects()) s.lhs += std::norm(trace_of_product(e, sigma));
  const double m2x = double(M) * M * p.x();
  const double hs = sigma.squaredNorm();  // tr(sigma sigma^dagger)
  const double tr2 = std::norm(sigma.trace());
  s.rhs = (d * (m2x - d) * hs + (double(d) * d * d - m2x) * tr2) / (double(d) * M * (M - 1));
  return s;
}

}  // namespace snest
