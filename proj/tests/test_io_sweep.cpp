#include <doctest.h>

#include <cmath>
#include <sstream>

#include "snest/error.hpp"
#include "snest/json_io.hpp"
#include "snest/special_povms.hpp"
#include "snest/sweep.hpp"
#include "support.hpp"

using namespace snest;
using namespace snest::test;

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(item);
  return out;
}

}  // namespace

TEST_CASE("format_double") {
  CHECK(format_double(0.1) == "0.10000000000000001");
  CHECK(format_double(2.0) == "2");
  CHECK(format_double(std::nan("")) == "null");
  CHECK(std::stod(format_double(M_PI)) == M_PI);
}

TEST_CASE("state JSON round trip is exact") {
  Rng rng(61);
  const DensityMatrix rho(2, 3, random_density(2, 3, rng));
  std::ostringstream os;
  write_state_json(os, rho);
  const RawState back = parse_state_json(os.str());
  CHECK(back.dA == 2);
  CHECK(back.dB == 3);
  CHECK(back.matrix == rho.matrix());
}

TEST_CASE("state JSON errors") {
  auto kind = [](const std::string& text) {
    try {
      (void)parse_state_json(text);
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::degenerate;  // sentinel: accepted
  };
  CHECK(kind("not json") == ErrorKind::parse_error);
  CHECK(kind(R"({"dA":1,"dB":1})") == ErrorKind::parse_error);
  CHECK(kind(R"({"dA":1,"dB":1,"matrix":[[1]]})") == ErrorKind::parse_error);
  CHECK(kind(R"({"dA":2,"dB":1,"matrix":[[[1,0]]]})") == ErrorKind::dimension_mismatch);
  CHECK(kind(R"({"dA":1,"dB":1,"matrix":[[[1,0]]]})") == ErrorKind::degenerate);
  // parsing does not validate; construction does
  const RawState raw = parse_state_json(R"({"dA":1,"dB":1,"matrix":[[[0.98,0]]]})");
  CHECK_THROWS_AS(DensityMatrix(raw.dA, raw.dB, raw.matrix), Error);
}

TEST_CASE("POVM JSON round trip") {
  for (const SymmetricPovm& p : {family_povm(families()[1], 0.01), sic_povm_d3()}) {
    std::ostringstream os;
    write_povm_json(os, p);
    const SymmetricPovm back = parse_povm_json(os.str());
    CHECK(back.d() == p.d());
    CHECK(back.N() == p.N());
    CHECK(back.M() == p.M());
    CHECK(back.x() == p.x());
    for (std::size_t i = 0; i < p.size(); ++i) CHECK(back.effects()[i] == p.effects()[i]);
    CHECK(validate_povm(back).passed);
  }
  CHECK_THROWS_AS((void)parse_povm_json(R"({"d":2,"N":1,"M":2,"t":0,"x":0.5,"effects":[]})"), Error);
}

TEST_CASE("report JSON carries every field") {
  const CriterionReport r =
      full_report(isotropic(3, 0.7), sic_povm_d3(), sic_povm_d3(), {{}, false, true, true});
  std::ostringstream os;
  write_report_json(os, r);
  const std::string s = os.str();
  for (const char* key : {"trace_norm", "constants", "separability_bound", "sn_real_lb",
                          "sn_int_lb", "entangled", "concurrence_lb", "baselines", "realignment",
                          "fidelity"})
    CHECK(s.find(std::string("\"") + key + "\"") != std::string::npos);
}

TEST_CASE("gallery plumbing") {
  CHECK(parse_state_family("example4") == StateFamily::example4);
  CHECK(to_string(StateFamily::maximally_mixed) == "maximally-mixed");
  CHECK_THROWS_AS((void)parse_state_family("werner"), Error);
  GalleryParams g;
  set_gallery_param(g, "p", 0.25);
  CHECK(g.p == 0.25);
  CHECK_THROWS_AS(set_gallery_param(g, "lambda", 0.1), Error);
  CHECK(gallery_dims(StateFamily::example1, g) == std::pair{2, 4});
  CHECK(gallery_dims(StateFamily::example2, g) == std::pair{4, 4});
  CHECK(default_measurement(3).scheme == GroupingScheme::appendix_b);
  CHECK(default_measurement(4).N == 5);
  CHECK(default_measurement(5).M == 2);
  MeasurementSpec m;
  m.M = 3;
  m.t = 0.05;
  const SymmetricPovm p = make_measurement(m, 3);
  CHECK(p.N() == 4);
  m.family = MeasurementFamily::mub;
  CHECK(make_measurement(m, 3).N() == 4);
}

TEST_CASE("sweep grid") {
  const auto g = sweep_grid(0.05, 0.95, 181);
  CHECK(g.size() == 181);
  CHECK(g.front() == 0.05);
  CHECK(g.back() == 0.95);
  CHECK(std::abs(g[10] - 0.1) < 1e-15);
}

TEST_CASE("sweep CSV") {
  SweepSpec spec = figure_spec(Figure::fig1);
  spec.points = 11;
  const auto rows_par = run_sweep(spec, Execution::parallel);
  const auto rows_ser = run_sweep(spec, Execution::serial);
  std::ostringstream a, b;
  write_sweep_csv(a, spec, rows_par);
  write_sweep_csv(b, spec, rows_ser);
  CHECK(a.str() == b.str());
  const auto lines = split(a.str(), '\n');
  REQUIRE(lines.size() == 12);
  CHECK(lines[0] == "q,trace_norm,sn_real_lb,sn_int_lb,concurrence_lb,gsic,sn_real_lb_clamped");
  double prev = -1;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto cols = split(lines[i], ',');
    REQUIRE(cols.size() == 7);
    const double q = std::stod(cols[0]);
    CHECK(q > prev);
    prev = q;
    const double lb = std::stod(cols[2]);
    CHECK(std::stoi(cols[3]) == std::max(1, int(std::ceil(lb + 1 - 1e-9))));
    CHECK(std::stod(cols[6]) == std::max(0.0, lb));
  }
  CHECK(a.str().find('\r') == std::string::npos);
}

TEST_CASE("sweep spec validation") {
  SweepSpec spec = figure_spec(Figure::fig2);
  spec.lo = 0.6;
  spec.hi = 0.5;
  CHECK_THROWS_AS(spec.validate(), Error);
  spec = figure_spec(Figure::fig2);
  spec.points = 1;
  CHECK_THROWS_AS(spec.validate(), Error);
  spec = figure_spec(Figure::fig2);
  spec.param = "zeta";
  CHECK_THROWS_AS(spec.validate(), Error);
  CHECK_THROWS_AS((void)figure_spec(Figure::example3), Error);
}

TEST_CASE("bisection") {
  const ThresholdResult r = bisect_threshold([](double x) { return x * x; }, 0.0, 2.0, 2.0, 1e-9);
  CHECK(std::abs(r.value - std::sqrt(2.0)) < 1e-9);
  CHECK(r.achieved_tolerance <= 1e-9);
  CHECK(r.bracket_width <= 1e-9);
  const ThresholdResult dec = bisect_threshold([](double x) { return -x; }, 0.0, 1.0, -0.25);
  CHECK(std::abs(dec.value - 0.25) < 1e-6);
  try {
    (void)bisect_threshold([](double x) { return x; }, 0.0, 1.0, 5.0);
    FAIL("expected no_sign_change");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::no_sign_change);
  }
}

TEST_CASE("thresholds re-evaluate within tolerance") {
  const SweepSpec spec = figure_spec(Figure::fig2);
  const ThresholdResult r = find_threshold(spec, Curve::red, 1.0, 1e-7);
  GalleryParams g = spec.fixed;
  set_gallery_param(g, "p", r.value);
  const CriterionReport rep = make_evaluator(spec).evaluate(make_gallery_state(spec.family, g));
  CHECK(std::abs(rep.sn_real_lb - 1.0) <= 1e-7);
  CHECK_THROWS_AS((void)find_threshold(spec, Curve::gsic, 0.0), Error);
  CHECK(parse_curve("orange") == Curve::realignment);
  CHECK_THROWS_AS((void)parse_curve("blue"), Error);
}
