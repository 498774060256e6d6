#include <doctest.h>

#include <cmath>
#include <random>

#include "eur/qubit.hpp"

using namespace eur;

namespace {

std::mt19937 gen(7);

BlochVector random_unit() {
  std::normal_distribution<double> n(0.0, 1.0);
  BlochVector v(n(gen), n(gen), n(gen));
  return v / v.norm();
}

}  // namespace

TEST_CASE("projectors of the Pauli axes") {
  const auto [pz1, pz2] = projectors(Observable(BlochVector(0, 0, 1)));
  CHECK((pz1 - (DensityMatrix() << 1, 0, 0, 0).finished()).cwiseAbs().maxCoeff() < 1e-15);
  CHECK((pz2 - (DensityMatrix() << 0, 0, 0, 1).finished()).cwiseAbs().maxCoeff() < 1e-15);

  const auto [px1, px2] = projectors(Observable(BlochVector(1, 0, 0)));
  CHECK((px1 - (DensityMatrix() << 0.5, 0.5, 0.5, 0.5).finished()).cwiseAbs().maxCoeff() < 1e-15);
  CHECK((px2 - (DensityMatrix() << 0.5, -0.5, -0.5, 0.5).finished()).cwiseAbs().maxCoeff() < 1e-15);
}

TEST_CASE("projector algebra on random axes") {
  for (int i = 0; i < 200; ++i) {
    const Observable obs(random_unit());
    const auto [a, b] = projectors(obs);
    CHECK(((a * a) - a).cwiseAbs().maxCoeff() < 1e-12);    // idempotent
    CHECK(((b * b) - b).cwiseAbs().maxCoeff() < 1e-12);
    CHECK((a * b).cwiseAbs().maxCoeff() < 1e-12);          // orthogonal
    CHECK((a + b - DensityMatrix::Identity()).cwiseAbs().maxCoeff() < 1e-12);
    // P1 - P2 = axis . sigma reconstructs the observable.
    const DensityMatrix d = a - b;
    const BlochVector recon(d(1, 0).real(), d(1, 0).imag(), d(0, 0).real());
    CHECK((recon - obs.axis()).norm() < 1e-12);
  }
}

TEST_CASE("state <-> matrix round trip") {
  CHECK((state_to_matrix(QubitState::maximally_mixed()) -
         0.5 * DensityMatrix::Identity()).cwiseAbs().maxCoeff() < 1e-15);
  CHECK((state_to_matrix(QubitState(BlochVector(0, 0, 1))) -
         (DensityMatrix() << 1, 0, 0, 0).finished()).cwiseAbs().maxCoeff() < 1e-15);

  const BlochVector r(0.1, 0.4, 0.5);
  const QubitState back = matrix_to_state(state_to_matrix(QubitState(r)));
  CHECK((back.bloch() - r).norm() < 1e-12);
}

TEST_CASE("matrix_to_state validation") {
  DensityMatrix m;
  m << 0.5, std::complex<double>(0.0, 0.3), std::complex<double>(0.0, 0.3), 0.5;
  CHECK_THROWS_AS(matrix_to_state(m), ValidationError);  // not Hermitian
  m << 0.9, 0.0, 0.0, 0.2;
  CHECK_THROWS_AS(matrix_to_state(m), ValidationError);  // trace != 1
  m << 1.2, 0.0, 0.0, -0.2;
  CHECK_THROWS_AS(matrix_to_state(m), ValidationError);  // negative eigenvalue
}

TEST_CASE("state_spectrum and state_renyi") {
  CHECK(state_spectrum(QubitState(BlochVector(0, 1, 0)))[0] == doctest::Approx(1.0));
  CHECK(state_spectrum(QubitState::maximally_mixed())[0] == doctest::Approx(0.5));
  const QubitState mixed(BlochVector(0, 0, 0.6));
  CHECK(state_spectrum(mixed)[0] == doctest::Approx(0.8).epsilon(1e-14));
  CHECK(state_spectrum(mixed)[1] == doctest::Approx(0.2).epsilon(1e-14));

  CHECK(state_renyi(QubitState(BlochVector(1, 0, 0)), EntropyOrder::finite(2.0)) == 0.0);
  CHECK(state_renyi(QubitState::maximally_mixed(), EntropyOrder::infinity()) ==
        doctest::Approx(std::log(2.0)).epsilon(1e-14));
  // Frozen: H({0.8, 0.2}).
  CHECK(state_renyi(mixed, EntropyOrder::one()) ==
        doctest::Approx(0.5004024235381879).epsilon(1e-14));
}

TEST_CASE("QubitState and Observable validation") {
  CHECK_THROWS_AS(QubitState(BlochVector(1.0, 1.0, 0.0)), ValidationError);
  CHECK_THROWS_AS(Observable(BlochVector(0.5, 0.0, 0.0)), ValidationError);
  CHECK_THROWS_AS(Observable::from_direction(BlochVector::Zero()), ValidationError);
  CHECK((Observable::from_direction(BlochVector(3, 0, 0)).axis() -
         BlochVector(1, 0, 0)).norm() < 1e-15);
}

TEST_CASE("overlap_c") {
  const Observable z(BlochVector(0, 0, 1));
  const Observable x(BlochVector(1, 0, 0));
  CHECK(overlap_c(z, x) == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-14));
  CHECK(overlap_c(z, z) == doctest::Approx(1.0).epsilon(1e-14));

  for (int i = 0; i < 200; ++i) {
    const Observable a(random_unit()), b(random_unit());
    const double c = overlap_c(a, b);
    CHECK(c >= 1.0 / std::sqrt(2.0) - 1e-12);
    CHECK(c <= 1.0 + 1e-12);
    CHECK(c == doctest::Approx(overlap_c(b, a)).epsilon(1e-15));
    const Observable neg_a(BlochVector(-a.axis()));
    CHECK(c == doctest::Approx(overlap_c(neg_a, b)).epsilon(1e-15));
  }
}
