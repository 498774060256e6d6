#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <optional>
#include <utility>

#include "eur/entropy.hpp"
#include "eur/qubit.hpp"
#include "eur/successive.hpp"

namespace eur {

/// Two spin observables in the x-y plane separated by half-angle phi, measured
/// successively on the pure state with polar angle theta and azimuth varphi.
struct SpinScenario {
  double phi = 0.0;
  double theta = 0.0;
  double varphi = 0.0;

  SpinScenario(double phi_, double theta_, double varphi_)
      : phi(phi_), theta(theta_), varphi(varphi_) {
    if (!std::isfinite(phi) || !std::isfinite(theta) || !std::isfinite(varphi))
      throw ValidationError("SpinScenario: non-finite angle");
    if (theta < 0.0 || theta > std::numbers::pi)
      throw ValidationError("SpinScenario: theta outside [0, pi]");
    varphi = std::fmod(varphi, 2.0 * std::numbers::pi);
    if (varphi < 0.0) varphi += 2.0 * std::numbers::pi;
  }
};

/// Generic-pipeline inputs for the scenario: axes in the x-y plane, pure state
/// from the spherical angles. The axis overlap is sin(2 phi).
inline std::pair<MeasurementPair, QubitState> to_generic(const SpinScenario& s) {
  const Observable x(BlochVector(std::cos(s.phi), std::sin(s.phi), 0.0));
  const Observable y(BlochVector(std::sin(s.phi), std::cos(s.phi), 0.0));
  const QubitState rho(BlochVector(std::sin(s.theta) * std::cos(s.varphi),
                                   std::sin(s.theta) * std::sin(s.varphi),
                                   std::cos(s.theta)));
  return {MeasurementPair(x, y), rho};
}

// Closed forms below are written out directly from the trigonometric
// expressions so they can serve as an oracle for the Bloch pipeline.

/// First-measurement outcome probabilities (1 +- cos(phi - varphi) sin theta)/2.
inline ProbDist closed_form_first(const SpinScenario& s) {
  return ProbDist::binary(std::cos(s.phi - s.varphi) * std::sin(s.theta));
}

/// Second-measurement probabilities (1 +- cos(phi - varphi) sin theta sin 2phi)/2.
inline ProbDist closed_form_second(const SpinScenario& s) {
  return ProbDist::binary(std::cos(s.phi - s.varphi) * std::sin(s.theta) *
                          std::sin(2.0 * s.phi));
}

/// The erased state written out as a matrix.
inline DensityMatrix closed_form_erased_matrix(const SpinScenario& s) {
  const double k = std::cos(s.phi - s.varphi) * std::sin(s.theta);
  const std::complex<double> off =
      0.5 * std::exp(std::complex<double>(0.0, -s.phi)) * k;
  DensityMatrix m;
  m << 0.5, off,
       std::conj(off), 0.5;
  return m;
}

/// The four normalized tightness ratios for one scenario. A ratio is absent
/// when its denominator degenerates (e.g. phi = pi/4 where the axes coincide).
struct SpinRatios {
  std::optional<double> reur;     // (R(X) + R^erased(Y)) / R({(1 +- sin 2phi)/2})
  std::optional<double> creur;    // R(X|Y) over the same denominator, identically 1
  std::optional<double> seurp;    // Shannon sum over -ln((1 + sin 2phi)/2)
  std::optional<double> cseurp;   // Shannon conditional over the same
};

inline SpinRatios ratios(const SpinScenario& s, const EntropyOrder& order) {
  const double m = std::sin(2.0 * s.phi);
  const ProbDist k = ProbDist::binary(m);
  const double denom_renyi = renyi_entropy(k, order);
  const double denom_shannon = -std::log((1.0 + m) / 2.0);

  SpinRatios out;
  if (denom_renyi > 1e-12) {
    const double lhs = renyi_entropy(closed_form_first(s), order) +
                       renyi_entropy(closed_form_second(s), order);
    out.reur = lhs / denom_renyi;
    out.creur = renyi_entropy(k, order) / denom_renyi;
  }
  if (denom_shannon > 1e-12) {
    const EntropyOrder one = EntropyOrder::one();
    const double shannon_lhs = renyi_entropy(closed_form_first(s), one) +
                               renyi_entropy(closed_form_second(s), one);
    out.seurp = shannon_lhs / denom_shannon;
    out.cseurp = renyi_entropy(k, one) / denom_shannon;
  }
  return out;
}

}  // namespace eur
