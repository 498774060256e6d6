#pragma once

#include <cmath>
#include <optional>

#include "eur/entropy.hpp"
#include "eur/qubit.hpp"
#include "eur/successive.hpp"

namespace eur {

/// One comparison of an entropy sum against a lower bound. The ratio is the
/// figures' normalized "uncertainty"; it is undefined when the bound vanishes.
struct BoundReport {
  double lhs = 0.0;
  double bound = 0.0;
  double slack = 0.0;                // lhs - bound
  std::optional<double> ratio;       // lhs / bound, only when bound > 1e-12
};

inline BoundReport report(double lhs, double bound) {
  BoundReport r;
  r.lhs = lhs;
  r.bound = bound;
  r.slack = lhs - bound;
  if (bound > 1e-12) r.ratio = lhs / bound;
  return r;
}

/// Entropy sum R_alpha(P) + R_alpha^{erased}(Q) for the successive procedure.
inline double lhs_reur(const MeasurementPair& pair, const QubitState& rho,
                       const EntropyOrder& order) {
  return renyi_entropy(first_probs(pair, rho), order) +
         renyi_entropy(second_probs(pair, rho), order);
}

/// State-dependent lower bound R_alpha(rho) + R_alpha({(1 +- m|r|)/2}).
/// Saturated when the state's Bloch vector is parallel to the first axis.
inline double theorem1_bound(const MeasurementPair& pair, const QubitState& rho,
                             const EntropyOrder& order) {
  return state_renyi(rho, order) +
         renyi_entropy(ProbDist::binary(pair.m() * rho.radius()), order);
}

/// Min-entropy specialization: -ln(max_i P_i * max_j Q_j).
inline double corollary1_min_entropy_bound(const MeasurementPair& pair,
                                           const QubitState& rho) {
  const double r = rho.radius();
  const double max_p = (1.0 + r) / 2.0;
  const double max_q = (1.0 + std::abs(pair.m()) * r) / 2.0;
  return -std::log(max_p * max_q);
}

/// State-independent bound: the conditional Renyi entropy R_alpha(Q|P).
inline double theorem3_bound(const MeasurementPair& pair, const EntropyOrder& order) {
  return renyi_entropy(ProbDist::binary(pair.m()), order);
}

/// Maassen-Uffink bound -2 ln c = -ln((1 + |m|)/2) for the Shannon entropy sum.
inline double maassen_uffink_bound(const MeasurementPair& pair) {
  return -2.0 * std::log(overlap_c(pair.p(), pair.q()));
}

/// Improved state-dependent Shannon bound: H(erased state) - 2 ln c, with H
/// read as the von Neumann entropy of the erased state.
inline double improved_bound_eq45(const MeasurementPair& pair, const QubitState& rho) {
  const double h_erased =
      renyi_entropy(state_spectrum(erased_state(pair, rho)), EntropyOrder::one());
  return h_erased + maassen_uffink_bound(pair);
}

}  // namespace eur
