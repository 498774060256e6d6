#pragma once

#include <Eigen/Dense>

#include <algorithm>

#include "eur/entropy.hpp"
#include "eur/qubit.hpp"

namespace eur {

/// Two non-degenerate observables measured in succession, with the cached
/// axis overlap m = p.q.
class MeasurementPair {
 public:
  MeasurementPair(Observable p, Observable q)
      : p_(std::move(p)), q_(std::move(q)), m_(p_.axis().dot(q_.axis())) {}

  const Observable& p() const { return p_; }
  const Observable& q() const { return q_; }
  double m() const { return m_; }

 private:
  Observable p_;
  Observable q_;
  double m_;
};

namespace detail {

/// p.r, clamped to [-|r|, |r|] (Cauchy-Schwarz; rounding can spill past it).
inline double axis_component(const MeasurementPair& pair, const QubitState& rho) {
  const double pr = pair.p().axis().dot(rho.bloch());
  const double rad = rho.radius();
  return std::clamp(pr, -rad, rad);
}

}  // namespace detail

/// Outcome probabilities of the first measurement: {(1 + p.r)/2, (1 - p.r)/2}.
inline ProbDist first_probs(const MeasurementPair& pair, const QubitState& rho) {
  return ProbDist::binary(detail::axis_component(pair, rho));
}

/// Post-measurement state with outcome information erased: Bloch vector (p.r) p.
/// A projection onto the measurement axis, hence idempotent.
inline QubitState erased_state(const MeasurementPair& pair, const QubitState& rho) {
  return QubitState(BlochVector(detail::axis_component(pair, rho) * pair.p().axis()));
}

/// Outcome probabilities of the second measurement on the erased state:
/// {(1 + (p.r) m)/2, (1 - (p.r) m)/2}.
inline ProbDist second_probs(const MeasurementPair& pair, const QubitState& rho) {
  return ProbDist::binary(detail::axis_component(pair, rho) * pair.m());
}

/// Conditional table P(Q_j | P_i) for the conditional procedure, where the
/// post-measurement state of outcome i is the projector itself. Rows sum to 1;
/// the table does not depend on the measured state.
inline Eigen::Matrix2d conditional_probs(const MeasurementPair& pair) {
  const double a = (1.0 + pair.m()) / 2.0;
  const double b = (1.0 - pair.m()) / 2.0;
  Eigen::Matrix2d t;
  t << a, b,
       b, a;
  return t;
}

/// Conditional Renyi entropy R_alpha(Q|P). State-independent: both conditional
/// rows are permutations of {(1+m)/2, (1-m)/2}, so the outcome weights cancel.
inline double conditional_renyi_qp(const MeasurementPair& pair,
                                   const QubitState& rho,
                                   const EntropyOrder& order) {
  (void)rho;  // validated by construction; kept to mirror the procedure
  return renyi_entropy(ProbDist::binary(pair.m()), order);
}

/// Everything one run of the successive procedure produces.
struct SuccessiveOutcome {
  ProbDist first;
  QubitState erased;
  ProbDist second;
  Eigen::Matrix2d conditionals;
};

inline SuccessiveOutcome run_successive(const MeasurementPair& pair,
                                        const QubitState& rho) {
  return {first_probs(pair, rho), erased_state(pair, rho),
          second_probs(pair, rho), conditional_probs(pair)};
}

}  // namespace eur
