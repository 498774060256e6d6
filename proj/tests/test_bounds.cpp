#include <doctest.h>

#include <cmath>
#include <random>

#include "eur/bounds.hpp"

using namespace eur;

namespace {

std::mt19937 gen(211);

BlochVector random_unit() {
  std::normal_distribution<double> n(0.0, 1.0);
  BlochVector v(n(gen), n(gen), n(gen));
  return v / v.norm();
}

QubitState random_state() {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  return QubitState(BlochVector(std::cbrt(u(gen)) * random_unit()));
}

MeasurementPair random_pair() {
  return {Observable(random_unit()), Observable(random_unit())};
}

EntropyOrder random_order() {
  // The four named branches plus log-uniform alpha on [0.1, 10].
  std::uniform_int_distribution<int> pick(0, 4);
  switch (pick(gen)) {
    case 0: return EntropyOrder::finite(0.5);
    case 1: return EntropyOrder::one();
    case 2: return EntropyOrder::finite(2.0);
    case 3: return EntropyOrder::infinity();
    default: break;
  }
  std::uniform_real_distribution<double> u(std::log(0.1), std::log(10.0));
  const double a = std::exp(u(gen));
  return std::abs(a - 1.0) < 1e-6 ? EntropyOrder::one() : EntropyOrder::finite(a);
}

const double kLn2 = std::log(2.0);

}  // namespace

TEST_CASE("lhs_reur spot values") {
  const Observable z(BlochVector(0, 0, 1));
  const Observable x(BlochVector(1, 0, 0));
  const MeasurementPair zx(z, x);
  CHECK(lhs_reur(zx, QubitState(BlochVector(0, 0, 1)), EntropyOrder::one()) ==
        doctest::Approx(kLn2).epsilon(1e-14));
  CHECK(lhs_reur(zx, QubitState::maximally_mixed(), EntropyOrder::finite(2.0)) ==
        doctest::Approx(2.0 * kLn2).epsilon(1e-14));
  // Spin case phi = 0, theta = pi/2, varphi = pi/4 at order One, frozen from
  // the closed forms: H({(1 + sqrt(2)/2)/2, ...}) + ln 2.
  const QubitState rho(BlochVector(std::sqrt(0.5), std::sqrt(0.5), 0.0));
  const MeasurementPair xy(x, Observable(BlochVector(0, 1, 0)));
  CHECK(lhs_reur(xy, rho, EntropyOrder::one()) ==
        doctest::Approx(1.1096427112596328).epsilon(1e-13));
}

TEST_CASE("theorem1_bound spot values") {
  const Observable z(BlochVector(0, 0, 1));
  const Observable x(BlochVector(1, 0, 0));
  const MeasurementPair zx(z, x);
  CHECK(theorem1_bound(zx, QubitState::maximally_mixed(), EntropyOrder::one()) ==
        doctest::Approx(2.0 * kLn2).epsilon(1e-14));
  // m = 0, |r| = 0.6 at One: H({0.8, 0.2}) + ln 2 (frozen).
  CHECK(theorem1_bound(zx, QubitState(BlochVector(0, 0, 0.6)), EntropyOrder::one()) ==
        doctest::Approx(0.5004024235381879 + kLn2).epsilon(1e-13));
  // Pure state: reduces to the theorem-3 value.
  for (int i = 0; i < 100; ++i) {
    const MeasurementPair pair = random_pair();
    const QubitState pure(random_unit());
    const EntropyOrder order = random_order();
    CHECK(theorem1_bound(pair, pure, order) ==
          doctest::Approx(theorem3_bound(pair, order)).epsilon(1e-12));
  }
}

TEST_CASE("corollary1_min_entropy_bound") {
  const Observable z(BlochVector(0, 0, 1));
  const Observable x(BlochVector(1, 0, 0));
  CHECK(corollary1_min_entropy_bound(MeasurementPair(z, x),
                                     QubitState(BlochVector(0, 0, 1))) ==
        doctest::Approx(kLn2).epsilon(1e-14));
  CHECK(corollary1_min_entropy_bound(MeasurementPair(z, x),
                                     QubitState::maximally_mixed()) ==
        doctest::Approx(2.0 * kLn2).epsilon(1e-14));
  // |r| = 1, m = 0.5: -ln 0.75 (frozen), and coincides with theorem1 at Infinity.
  const double s = std::sqrt(1.0 - 0.25);
  const MeasurementPair tilted(z, Observable(BlochVector(s, 0, 0.5)));
  const QubitState pure(BlochVector(0, 0, 1));
  CHECK(corollary1_min_entropy_bound(tilted, pure) ==
        doctest::Approx(0.2876820724517809).epsilon(1e-14));
  CHECK(corollary1_min_entropy_bound(tilted, pure) ==
        doctest::Approx(theorem1_bound(tilted, pure, EntropyOrder::infinity()))
            .epsilon(1e-13));
}

TEST_CASE("theorem3_bound") {
  const Observable z(BlochVector(0, 0, 1));
  const Observable x(BlochVector(1, 0, 0));
  CHECK(theorem3_bound(MeasurementPair(z, x), EntropyOrder::finite(2.0)) ==
        doctest::Approx(kLn2).epsilon(1e-14));
  CHECK(theorem3_bound(MeasurementPair(z, z), EntropyOrder::one()) == 0.0);
  for (int i = 0; i < 1000; ++i) {
    const MeasurementPair pair = random_pair();
    const QubitState rho = random_state();
    const EntropyOrder order = random_order();
    CHECK(theorem3_bound(pair, order) <=
          theorem1_bound(pair, rho, order) + 1e-12);
  }
}

TEST_CASE("maassen_uffink_bound") {
  const Observable z(BlochVector(0, 0, 1));
  const Observable x(BlochVector(1, 0, 0));
  CHECK(maassen_uffink_bound(MeasurementPair(z, x)) ==
        doctest::Approx(kLn2).epsilon(1e-14));
  CHECK(maassen_uffink_bound(MeasurementPair(z, z)) == doctest::Approx(0.0));
  const Observable neg_z(BlochVector(0, 0, -1));
  CHECK(maassen_uffink_bound(MeasurementPair(z, neg_z)) == doctest::Approx(0.0));
}

TEST_CASE("improved_bound_eq45 spot values") {
  const Observable z(BlochVector(0, 0, 1));
  const Observable x(BlochVector(1, 0, 0));
  const MeasurementPair zx(z, x);
  CHECK(improved_bound_eq45(zx, QubitState(BlochVector(0, 0, 1))) ==
        doctest::Approx(kLn2).epsilon(1e-14));
  CHECK(improved_bound_eq45(zx, QubitState::maximally_mixed()) ==
        doctest::Approx(2.0 * kLn2).epsilon(1e-14));
}

TEST_CASE("report") {
  const BoundReport equal = report(kLn2, kLn2);
  CHECK(equal.slack == doctest::Approx(0.0));
  CHECK(equal.ratio.value() == doctest::Approx(1.0));
  CHECK(report(2.0 * kLn2, kLn2).ratio.value() == doctest::Approx(2.0));
  const BoundReport degenerate = report(0.3, 0.0);
  CHECK_FALSE(degenerate.ratio.has_value());
  CHECK(degenerate.slack == doctest::Approx(0.3));
}

TEST_CASE("theorem 1 and 3 hold on random samples") {
  for (int i = 0; i < 20000; ++i) {
    const MeasurementPair pair = random_pair();
    const QubitState rho = random_state();
    const EntropyOrder order = random_order();
    const double lhs = lhs_reur(pair, rho, order);
    CHECK(lhs - theorem1_bound(pair, rho, order) >= -1e-10);
    CHECK(lhs - theorem3_bound(pair, order) >= -1e-10);
  }
}

TEST_CASE("theorem 1 equality when r is parallel to p, including mixed states") {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 1000; ++i) {
    const Observable p(random_unit());
    const MeasurementPair pair(p, Observable(random_unit()));
    const double t = (u(gen) < 0.5 ? -1.0 : 1.0) * u(gen);
    const QubitState rho(BlochVector(t * p.axis()));
    const EntropyOrder order = random_order();
    CHECK(std::abs(lhs_reur(pair, rho, order) - theorem1_bound(pair, rho, order)) <=
          1e-10);
  }
}

TEST_CASE("theorem 3 equality on pure eigenstates of P") {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 1000; ++i) {
    const Observable p(random_unit());
    const MeasurementPair pair(p, Observable(random_unit()));
    const QubitState rho(BlochVector((u(gen) < 0.5 ? -1.0 : 1.0) * p.axis()));
    const EntropyOrder order = random_order();
    CHECK(std::abs(lhs_reur(pair, rho, order) - theorem3_bound(pair, order)) <= 1e-10);
  }
}

TEST_CASE("corollary consistency with theorem 1 at One and Infinity") {
  for (int i = 0; i < 2000; ++i) {
    const MeasurementPair pair = random_pair();
    const QubitState rho = random_state();
    // One branch: Shannon form of Eq. (18), evaluated independently here.
    const double r = rho.radius();
    auto h2 = [](double v) {
      double h = 0.0;
      for (double p : {(1.0 + v) / 2.0, (1.0 - v) / 2.0})
        if (p > 0.0) h -= p * std::log(p);
      return h;
    };
    CHECK(std::abs(theorem1_bound(pair, rho, EntropyOrder::one()) -
                   (h2(r) + h2(pair.m() * r))) < 1e-12);
    CHECK(std::abs(theorem1_bound(pair, rho, EntropyOrder::infinity()) -
                   corollary1_min_entropy_bound(pair, rho)) < 1e-12);
  }
}

TEST_CASE("Maassen-Uffink and the improved bound hold for the Shannon sum") {
  for (int i = 0; i < 20000; ++i) {
    const MeasurementPair pair = random_pair();
    const QubitState rho = random_state();
    const double lhs = lhs_reur(pair, rho, EntropyOrder::one());
    CHECK(lhs - maassen_uffink_bound(pair) >= -1e-10);
    CHECK(lhs - improved_bound_eq45(pair, rho) >= -1e-10);
  }
}
