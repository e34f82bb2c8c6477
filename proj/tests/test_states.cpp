#include <doctest.h>

#include <cmath>

#include "snest/error.hpp"
#include "snest/states.hpp"
#include "support.hpp"

using namespace snest;
using namespace snest::test;

namespace {

ComplexVector ket(int dA, int dB, int i, int k) {
  ComplexVector v = ComplexVector::Zero(dA * dB);
  v(i * dB + k) = 1.0;
  return v;
}

void check_valid(const DensityMatrix& rho) {
  const StateCheck c = check_density_matrix(rho.matrix(), rho.dA(), rho.dB());
  CHECK(c.ok);
  CHECK(c.hermiticity_defect < 1e-12);
  CHECK(c.trace_defect < 1e-12);
  CHECK(c.min_eigenvalue > -1e-10);
}

std::vector<double> open_grid(int n) {
  std::vector<double> g;
  for (int i = 1; i <= n; ++i) g.push_back(double(i) / (n + 1));
  return g;
}

}  // namespace

TEST_CASE("DensityMatrix validation names the violated invariant") {
  ComplexMatrix m = ComplexMatrix::Identity(4, 4) * 0.245;
  try {
    DensityMatrix(2, 2, m);
    FAIL("expected invalid_state");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::invalid_state);
    CHECK(std::string(e.what()).find("trace") != std::string::npos);
  }
  m = ComplexMatrix::Identity(4, 4) / 4.0;
  m(0, 1) = 0.1;
  try {
    DensityMatrix(2, 2, m);
    FAIL("expected invalid_state");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("hermit") != std::string::npos);
  }
  RealVector diag(4);
  diag << 0.6, 0.6, -0.1, -0.1;
  try {
    DensityMatrix(2, 2, diag.cast<Complex>().asDiagonal().toDenseMatrix());
    FAIL("expected invalid_state");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("psd") != std::string::npos);
  }
  try {
    DensityMatrix(2, 3, ComplexMatrix::Identity(4, 4) / 4.0);
    FAIL("expected dimension_mismatch");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::dimension_mismatch);
  }
  CHECK_NOTHROW(DensityMatrix(2, 2, ComplexMatrix::Identity(4, 4) / 4.0));
}

TEST_CASE("horodecki_2x4") {
  const DensityMatrix rho = horodecki_2x4(0.9);
  CHECK(rho.matrix()(0, 0).real() == doctest::Approx(0.9 / 7.3).epsilon(1e-15));
  for (double tau : open_grid(25)) {
    const DensityMatrix r = horodecki_2x4(tau);
    CHECK(std::abs(r.matrix().trace() - 1.0) < 1e-15);
    check_valid(r);
  }
  CHECK_THROWS_AS((void)horodecki_2x4(0.0), Error);
  CHECK_THROWS_AS((void)horodecki_2x4(1.0), Error);
}

TEST_CASE("example1_state") {
  const ComplexVector xi = (ket(2, 4, 0, 0) + ket(2, 4, 1, 1)) / std::sqrt(2.0);
  CHECK((example1_state(0.9, 1.0).matrix() - xi * xi.adjoint()).norm() < 1e-15);
  CHECK((example1_state(0.9, 0.0).matrix() - horodecki_2x4(0.9).matrix()).norm() < 1e-15);
  for (double q : open_grid(21)) check_valid(example1_state(0.9, q));
  CHECK_THROWS_AS((void)example1_state(0.9, 1.5), Error);
}

TEST_CASE("example2_state") {
  const ComplexMatrix rho1 = example2_state(1.0).matrix();
  CHECK(std::abs(rho1.trace() - 1.0) < 1e-15);
  // the |22> amplitude of the maximally correlated part
  CHECK(rho1(2 * 4 + 2, 2 * 4 + 2).real() == doctest::Approx(0.5 / 3.0));
  CHECK(rho1(2 * 4 + 3, 3 * 4 + 2).real() == doctest::Approx(0.25));
  const ComplexMatrix rho0 = example2_state(0.0).matrix();
  const EigenSystem es = hermitian_eig(rho0);
  CHECK(es.values(15) == doctest::Approx(1.0));
  const ComplexVector xi = es.vectors.col(15);
  const SchmidtDecomposition sd = schmidt_decompose(PureState(4, 4, xi));
  CHECK(sd.rank == 3);
  CHECK(sd.coefficients(0) == doctest::Approx(std::sqrt(23.0) / 5.0).epsilon(1e-12));
  CHECK(sd.coefficients(1) == doctest::Approx(0.2).epsilon(1e-12));
  CHECK(sd.coefficients(2) == doctest::Approx(0.2).epsilon(1e-12));
  for (double p : open_grid(21)) check_valid(example2_state(p));
}

TEST_CASE("isotropic") {
  CHECK((isotropic(3, 0.0).matrix() - ComplexMatrix::Identity(9, 9) / 9.0).norm() < 1e-15);
  const ComplexMatrix me = maximally_entangled(3).density().matrix();
  CHECK((isotropic(3, 1.0).matrix() - me).norm() < 1e-15);
  const double v = 0.5;
  const EigenSystem es = hermitian_eig(isotropic(3, v).matrix());
  for (int i = 0; i < 8; ++i) CHECK(es.values(i) == doctest::Approx((1 - v) / 9.0));
  CHECK(es.values(8) == doctest::Approx(v + (1 - v) / 9.0));
  for (int d : {2, 3, 4})
    for (double vv : open_grid(20)) check_valid(isotropic(d, vv));
  CHECK_THROWS_AS((void)isotropic(3, -0.1), Error);
  CHECK_THROWS_AS((void)isotropic(1, 0.5), Error);
}

TEST_CASE("Horodecki 3x3 family") {
  for (double tau : open_grid(25)) {
    const DensityMatrix r = horodecki_3x3(tau);
    CHECK(std::abs(r.matrix().trace() - 1.0) < 1e-15);
    check_valid(r);
    check_valid(example4_state(tau, 0.995));
    const ComplexMatrix raw = horodecki_3x3_verbatim(tau);
    CHECK(raw(7, 7) == 0.0);
    CHECK(raw.trace().real() == doctest::Approx((1 + 7 * tau) / (1 + 8 * tau)));
    // only the restored entry differs
    ComplexMatrix diff = r.matrix() - raw;
    diff(7, 7) -= tau / (1 + 8 * tau);
    CHECK(diff.norm() < 1e-16);
  }
  try {
    (void)horodecki_3x3_strict(0.5);
    FAIL("expected invalid_state");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::invalid_state);
    CHECK(std::string(e.what()).find("trace") != std::string::npos);
  }
  CHECK((example4_state(0.3, 0.0).matrix() - ComplexMatrix::Identity(9, 9) / 9.0).norm() < 1e-15);
}

TEST_CASE("maximally_mixed") {
  const DensityMatrix r = maximally_mixed(2, 3);
  CHECK(r.dA() == 2);
  CHECK(r.dB() == 3);
  CHECK((r.matrix() - ComplexMatrix::Identity(6, 6) / 6.0).norm() < 1e-15);
}

TEST_CASE("PureState") {
  CHECK_THROWS_AS(PureState(2, 2, ComplexVector::Ones(4)), Error);
  CHECK_THROWS_AS(PureState(2, 3, ket(2, 2, 0, 0)), Error);
  CHECK_THROWS_AS((void)make_pure_state(2, 2, ComplexVector::Zero(4)), Error);
  const PureState p = make_pure_state(2, 2, ComplexVector::Ones(4));
  CHECK(p.amplitudes().norm() == doctest::Approx(1.0));
  check_valid(p.density());
}

TEST_CASE("schmidt_decompose") {
  SUBCASE("product") {
    const SchmidtDecomposition sd = schmidt_decompose(PureState(2, 3, ket(2, 3, 0, 0)));
    CHECK(sd.rank == 1);
    CHECK(sd.coefficients(0) == doctest::Approx(1.0));
  }
  SUBCASE("maximally entangled") {
    for (int d = 2; d <= 5; ++d) {
      const SchmidtDecomposition sd = schmidt_decompose(maximally_entangled(d));
      CHECK(sd.rank == d);
      for (int s = 0; s < d; ++s) CHECK(sd.coefficients(s) == doctest::Approx(1 / std::sqrt(d)));
    }
  }
  SUBCASE("reassembly up to global phase") {
    Rng rng(31);
    for (auto [dA, dB] : {std::pair{2, 2}, std::pair{2, 4}, std::pair{3, 3}, std::pair{4, 3}}) {
      for (int trial = 0; trial < 20; ++trial) {
        const PureState psi(dA, dB, random_unit_vector(dA * dB, rng));
        const SchmidtDecomposition sd = schmidt_decompose(psi);
        double sq = 0.0;
        ComplexVector back = ComplexVector::Zero(dA * dB);
        for (Eigen::Index s = 0; s < sd.coefficients.size(); ++s) {
          if (s > 0) CHECK(sd.coefficients(s) <= sd.coefficients(s - 1));
          sq += sd.coefficients(s) * sd.coefficients(s);
          for (int i = 0; i < dA; ++i)
            for (int k = 0; k < dB; ++k)
              back(i * dB + k) += sd.coefficients(s) * sd.left(i, s) * sd.right(k, s);
        }
        CHECK(sq == doctest::Approx(1.0).epsilon(1e-10));
        const Complex overlap = back.dot(psi.amplitudes());
        CHECK(std::abs(std::abs(overlap) - 1.0) < 1e-10);
        CHECK((back * overlap - psi.amplitudes()).norm() < 1e-10);
      }
    }
  }
}

TEST_CASE("random_schmidt_rank_state") {
  for (auto [dA, dB] : {std::pair{2, 4}, std::pair{3, 3}, std::pair{4, 4}}) {
    for (int r = 1; r <= std::min(dA, dB); ++r) {
      const PureState a = random_schmidt_rank_state(dA, dB, r, 1234);
      const PureState b = random_schmidt_rank_state(dA, dB, r, 1234);
      const PureState c = random_schmidt_rank_state(dA, dB, r, 4321);
      CHECK(a.amplitudes() == b.amplitudes());
      CHECK(std::abs(a.amplitudes().dot(c.amplitudes())) < 1.0 - 1e-6);
      const SchmidtDecomposition sd = schmidt_decompose(a);
      CHECK(sd.rank == r);
      CHECK(sd.coefficients(r - 1) > 1e-6);
    }
  }
  CHECK_THROWS_AS((void)random_schmidt_rank_state(2, 3, 3, 1), Error);
  CHECK_THROWS_AS((void)random_schmidt_rank_state(2, 3, 0, 1), Error);
}

TEST_CASE("pure_concurrence") {
  CHECK(pure_concurrence(PureState(3, 3, ket(3, 3, 1, 2))) == doctest::Approx(0.0));
  for (int d = 2; d <= 5; ++d)
    CHECK(pure_concurrence(maximally_entangled(d)) == doctest::Approx(std::sqrt(2.0 * (d - 1) / d)));
  const ComplexVector xi = (ket(4, 4, 0, 0) + ket(4, 4, 1, 1) + std::sqrt(23.0) * ket(4, 4, 2, 2)) / 5.0;
  const double l4 = std::pow(23.0 / 25.0, 2) + 2 * std::pow(1.0 / 25.0, 2);
  CHECK(pure_concurrence(PureState(4, 4, xi)) == doctest::Approx(std::sqrt(2 * (1 - l4))).epsilon(1e-12));
  Rng rng(32);
  for (int trial = 0; trial < 30; ++trial) {
    const PureState psi(3, 4, random_unit_vector(12, rng));
    const RealVector l = schmidt_decompose(psi).coefficients;
    const double formula = std::sqrt(2.0 * (1.0 - l.array().pow(4).sum()));
    CHECK(std::abs(pure_concurrence(psi) - formula) < 1e-10);
  }
}
