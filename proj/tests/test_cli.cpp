#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>

#include "snest/json_io.hpp"

namespace fs = std::filesystem;

namespace {

struct RunResult {
  int code = -1;
  std::string out;
  std::string err;
};

fs::path scratch() {
  static const fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / ("snest_cli_test_" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

RunResult run(const std::string& args) {
  const fs::path out = scratch() / "stdout.txt";
  const fs::path err = scratch() / "stderr.txt";
  const std::string cmd = std::string("\"") + SNEST_CLI_PATH + "\" " + args + " > \"" +
                          out.string() + "\" 2> \"" + err.string() + "\"";
  const int status = std::system(cmd.c_str());
  RunResult r;
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.out = slurp(out);
  r.err = slurp(err);
  return r;
}

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("povm trange prints the interval") {
  const RunResult r = run("povm trange --d 4 --N 5 --M 4 --scheme appendix-A");
  CHECK(r.code == 0);
  CHECK(contains(r.out, "[-0.057193, 0.068041]"));
}

TEST_CASE("povm build writes JSON that validates") {
  const fs::path json = scratch() / "povm.json";
  RunResult r = run("povm build --d 3 --N 8 --M 2 --scheme appendix-B --t 0.01 --out \"" +
                    json.string() + "\"");
  REQUIRE(r.code == 0);
  const snest::SymmetricPovm p = snest::load_povm_file(json);
  CHECK(p.N() == 8);
  CHECK(snest::validate_povm(p, 1e-10).passed);
  r = run("povm validate --in \"" + json.string() + "\" --tol 1e-10");
  CHECK(r.code == 0);
  CHECK(contains(r.out, "completeness"));
  CHECK(contains(r.out, "valid"));
}

TEST_CASE("povm build outside the interval exits 2 with the interval") {
  const RunResult r = run("povm build --d 3 --N 8 --M 2 --scheme appendix-B --t 0.5");
  CHECK(r.code == 2);
  CHECK(contains(r.err, "[-0.253653, 0.253653]"));
}

TEST_CASE("povm parameter errors exit 2") {
  CHECK(run("povm build --d 3 --N 3 --M 3").code == 2);
  CHECK(run("povm trange --d 3 --N 5 --M 4 --scheme appendix-A").code == 2);
  CHECK(run("povm frobnicate").code == 2);
  CHECK(run("").code == 2);
}

TEST_CASE("eval on gallery states") {
  RunResult r = run("eval --gallery example1 --tau 0.9 --q 0.6");
  CHECK(r.code == 0);
  CHECK(contains(r.out, "\"entangled\": true"));
  r = run("eval --gallery maximally-mixed --dA 3 --dB 3 --a-N 8 --a-M 2 --b-N 8 --b-M 2");
  CHECK(r.code == 0);
  CHECK(contains(r.out, "\"sn_int_lb\": 1,"));
  r = run("eval --gallery example4 --tau 0.3 --q 0.995 --gsic 0.04984,0.04984 --sic --realignment");
  CHECK(r.code == 0);
  CHECK(contains(r.out, "\"gsic\""));
  CHECK(contains(r.out, "\"sic\""));
}

TEST_CASE("an explicit scheme is kept when N and M default") {
  CHECK(run("eval --gallery isotropic --d 4 --v 0.9 --a-scheme sequential --b-scheme sequential")
            .code == 0);
  const RunResult r = run("eval --gallery isotropic --d 4 --v 0.9 --a-scheme appendix-B");
  CHECK(r.code == 2);
  CHECK(contains(r.err, "scheme"));
}

TEST_CASE("eval error exit codes") {
  const fs::path bad = scratch() / "bad_trace.json";
  {
    std::ofstream f(bad);
    f << R"({"dA":2,"dB":2,"matrix":[)";
    for (int i = 0; i < 4; ++i) {
      f << (i ? "," : "") << '[';
      for (int j = 0; j < 4; ++j) f << (j ? "," : "") << '[' << (i == j ? "0.245" : "0") << ",0]";
      f << ']';
    }
    f << "]}";
  }
  RunResult r = run("eval --state-file \"" + bad.string() + "\"");
  CHECK(r.code == 4);
  CHECK(contains(r.err, "trace"));

  const fs::path povm = scratch() / "povm_d3.json";
  REQUIRE(run("povm build --d 3 --N 8 --M 2 --t 0.01 --out \"" + povm.string() + "\"").code == 0);
  r = run("eval --gallery example1 --a-file \"" + povm.string() + "\"");
  CHECK(r.code == 3);

  const fs::path shape = scratch() / "bad_shape.json";
  std::ofstream(shape) << R"({"dA":2,"dB":2,"matrix":[[[1,0]]]})";
  CHECK(run("eval --state-file \"" + shape.string() + "\"").code == 3);
}

TEST_CASE("sweep output is deterministic") {
  const std::string args =
      "sweep --gallery example2 --param p --lo 0 --hi 1 --points 21 --realignment --csv ";
  const fs::path a = scratch() / "a.csv", b = scratch() / "b.csv";
  REQUIRE(run(args + "\"" + a.string() + "\"").code == 0);
  REQUIRE(run(args + "\"" + b.string() + "\"").code == 0);
  const std::string sa = slurp(a);
  CHECK(sa == slurp(b));
  CHECK(sa.rfind("p,trace_norm,sn_real_lb,sn_int_lb,concurrence_lb,realignment,sn_real_lb_clamped\n", 0) == 0);
  CHECK(run("sweep --gallery example2 --param p --lo 1 --hi 0").code == 2);
}

TEST_CASE("threshold") {
  RunResult r = run("threshold --gallery example1 --tau 0.9 --param q --curve red --level 0");
  CHECK(r.code == 0);
  const auto pos = r.out.find("\"value\":");
  REQUIRE(pos != std::string::npos);
  const double q = std::stod(r.out.substr(pos + 8));
  CHECK(std::abs(q - 0.42115) < 1e-3);
  r = run("threshold --gallery example2 --param p --curve realignment --level 1");
  CHECK(r.code == 0);
  r = run("threshold --gallery example2 --param p --curve red --level 7");
  CHECK(r.code == 2);
  CHECK(contains(r.err, "no-sign-change"));
}

TEST_CASE("reproduce writes CSV and summary") {
  const fs::path dir = scratch() / "repro";
  RunResult r = run("reproduce fig2 --out-dir \"" + dir.string() + "\"");
  CHECK(r.code == 0);
  CHECK(fs::exists(dir / "fig2.csv"));
  CHECK(contains(slurp(dir / "fig2_summary.txt"), "PASS"));
  r = run("reproduce example3 --out-dir \"" + dir.string() + "\"");
  CHECK(r.code == 0);
  CHECK(contains(r.out, "max deviation"));
  r = run("reproduce fig1 --out-dir \"" + dir.string() + "\"");
  CHECK(contains(r.out, "q* = 0.4211"));
  CHECK(contains(r.out, "GSIC baseline: no detection"));
  CHECK(run("reproduce fig9").code == 2);
}
