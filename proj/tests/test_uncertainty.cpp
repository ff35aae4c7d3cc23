#include "geomqm/uncertainty.hpp"

#include "geomqm/bloch.hpp"
#include "test_support.hpp"

#include <doctest.h>

using namespace geomqm;
using namespace geomqm::uncertainty;

namespace {

HermitianOperator sigma(int j) { return HermitianOperator(bloch::pauli(j)); }

PureState ground() {
  Vector v(2);
  v << 1.0, 0.0;
  return PureState(std::move(v));
}

}  // namespace

TEST_CASE("Robertson saturation for sigma1/sigma2 at a sigma3 eigenstate") {
  UncertaintyReport rep = robertson_check(sigma(1), sigma(2), ground());
  CHECK(rep.varA == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(rep.varB == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(rep.cov == doctest::Approx(0.0).epsilon(1e-14));
  CHECK(rep.commutator_term == doctest::Approx(-2.0).epsilon(1e-14));
  CHECK(std::abs(rep.robertson_slack) <= 1e-12);
  CHECK(std::abs(rep.schrodinger_slack) <= 1e-12);
}

TEST_CASE("A = B: self-commuting, Schroedinger saturates exactly") {
  std::mt19937_64 rng(1);
  for (int it = 0; it < 50; ++it) {
    HermitianOperator A = testing::random_hermitian(rng, 3);
    PureState psi = testing::random_state(rng, 3);
    UncertaintyReport rep = schrodinger_check(A, A, psi);
    CHECK(rep.commutator_term == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(rep.robertson_slack >= -1e-10);
    double scale = std::max(1.0, rep.varA * rep.varA);
    CHECK(std::abs(rep.schrodinger_slack) <= 1e-10 * scale);
  }
}

TEST_CASE("slacks are nonnegative and ordered on random samples") {
  std::mt19937_64 rng(2);
  for (int it = 0; it < 2000; ++it) {
    Eigen::Index n = 2 + (it % 3);
    HermitianOperator A = testing::random_hermitian(rng, n);
    HermitianOperator B = testing::random_hermitian(rng, n);
    PureState psi = testing::random_state(rng, n);
    UncertaintyReport rep = schrodinger_check(A, B, psi);
    CHECK(rep.varA >= -1e-12);
    CHECK(rep.varB >= -1e-12);
    double scale = std::max(1.0, rep.varA * rep.varB);
    CHECK(rep.robertson_slack >= -1e-10 * scale);
    CHECK(rep.schrodinger_slack >= -1e-10 * scale);
    // the Schroedinger bound is the tighter one
    CHECK(rep.schrodinger_slack <= rep.robertson_slack + 1e-12 * scale);
  }
}

TEST_CASE("operator path and tensor path agree") {
  std::mt19937_64 rng(3);
  for (int it = 0; it < 500; ++it) {
    Eigen::Index n = 2 + (it % 3);
    HermitianOperator A = testing::random_hermitian(rng, n);
    HermitianOperator B = testing::random_hermitian(rng, n);
    PureState psi = testing::random_state(rng, n);
    UncertaintyReport op = schrodinger_check(A, B, psi);
    UncertaintyReport tensor = tensor_path_check(A, B, psi);
    double scale = std::max(1.0, std::abs(op.robertson_slack));
    CHECK(std::abs(op.robertson_slack - tensor.robertson_slack) <=
          1e-10 * scale);
    CHECK(std::abs(op.schrodinger_slack - tensor.schrodinger_slack) <=
          1e-10 * scale);
    CHECK(std::abs(op.varA - tensor.varA) <= 1e-10 * std::max(1.0, op.varA));
    CHECK(std::abs(op.commutator_term - tensor.commutator_term) <=
          1e-10 * std::max(1.0, std::abs(op.commutator_term)));
  }
}

TEST_CASE("slacks are ray invariant") {
  std::mt19937_64 rng(4);
  for (int it = 0; it < 50; ++it) {
    HermitianOperator A = testing::random_hermitian(rng, 3);
    HermitianOperator B = testing::random_hermitian(rng, 3);
    PureState psi = testing::random_state(rng, 3);
    UncertaintyReport base = schrodinger_check(A, B, psi);
    Complex lambda = testing::random_nonzero_scalar(rng);
    UncertaintyReport scaled =
        schrodinger_check(A, B, PureState(lambda * psi.amplitudes()));
    double tol = 1e-12 * std::max(1.0, std::abs(base.robertson_slack));
    CHECK(std::abs(base.robertson_slack - scaled.robertson_slack) <= tol);
    CHECK(std::abs(base.schrodinger_slack - scaled.schrodinger_slack) <= tol);
  }
}

TEST_CASE("quadratic-polynomial form of the derivation is nonnegative") {
  // alpha^2 varB + alpha e_{[A,B]} + varA >= 0 for all real alpha
  std::mt19937_64 rng(5);
  std::normal_distribution<double> gauss;
  for (int it = 0; it < 100; ++it) {
    HermitianOperator A = testing::random_hermitian(rng, 3);
    HermitianOperator B = testing::random_hermitian(rng, 3);
    PureState psi = testing::random_state(rng, 3);
    UncertaintyReport rep = robertson_check(A, B, psi);
    for (int k = 0; k < 100; ++k) {
      double alpha = 3.0 * gauss(rng);
      double poly = alpha * alpha * rep.varB + alpha * rep.commutator_term +
                    rep.varA;
      CHECK(poly >= -1e-9 * std::max(1.0, std::abs(alpha * alpha)));
    }
  }
}
