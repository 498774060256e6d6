#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <utility>

#include "eur/entropy.hpp"

namespace eur {

using BlochVector = Eigen::Vector3d;
using DensityMatrix = Eigen::Matrix2cd;

/// v . sigma for the Pauli vector sigma = (sx, sy, sz).
inline DensityMatrix pauli_dot(const BlochVector& v) {
  using namespace std::complex_literals;
  DensityMatrix m;
  m << v.z(), v.x() - 1i * v.y(),
       v.x() + 1i * v.y(), -v.z();
  return m;
}

/// Qubit state as a Bloch vector, |r| <= 1. Pure iff |r| = 1.
class QubitState {
 public:
  explicit QubitState(BlochVector r) : r_(std::move(r)) {
    if (!r_.allFinite()) throw ValidationError("QubitState: non-finite Bloch vector");
    if (r_.norm() > 1.0 + kProbTol)
      throw ValidationError("QubitState: Bloch vector norm exceeds 1");
  }

  const BlochVector& bloch() const { return r_; }
  double radius() const { return std::min(r_.norm(), 1.0); }
  bool is_pure() const { return std::abs(r_.norm() - 1.0) <= kProbTol; }

  static QubitState maximally_mixed() { return QubitState(BlochVector::Zero()); }

 private:
  BlochVector r_;
};

/// Non-degenerate projective observable, identified by its unit Bloch axis.
class Observable {
 public:
  explicit Observable(BlochVector axis) : axis_(std::move(axis)) {
    if (!axis_.allFinite()) throw ValidationError("Observable: non-finite axis");
    if (std::abs(axis_.norm() - 1.0) > kProbTol)
      throw ValidationError("Observable: axis must be a unit vector");
  }

  /// Normalizes a nonzero direction; convenience for user-facing input.
  static Observable from_direction(const BlochVector& dir) {
    const double n = dir.norm();
    if (!std::isfinite(n) || n <= 0.0)
      throw ValidationError("Observable: direction must be nonzero and finite");
    return Observable(BlochVector(dir / n));
  }

  const BlochVector& axis() const { return axis_; }

 private:
  BlochVector axis_;
};

/// Rank-1 eigenprojectors (1 +- axis.sigma)/2, summing to the identity.
inline std::pair<DensityMatrix, DensityMatrix> projectors(const Observable& obs) {
  const DensityMatrix s = pauli_dot(obs.axis());
  const DensityMatrix id = DensityMatrix::Identity();
  return {0.5 * (id + s), 0.5 * (id - s)};
}

inline DensityMatrix state_to_matrix(const QubitState& state) {
  return 0.5 * (DensityMatrix::Identity() + pauli_dot(state.bloch()));
}

inline QubitState matrix_to_state(const DensityMatrix& m) {
  if (!m.allFinite()) throw ValidationError("matrix_to_state: non-finite entries");
  if ((m - m.adjoint()).cwiseAbs().maxCoeff() > kProbTol)
    throw ValidationError("matrix_to_state: matrix not Hermitian");
  if (std::abs(m.trace() - std::complex<double>(1.0)) > kProbTol)
    throw ValidationError("matrix_to_state: trace must be 1");
  const BlochVector r(2.0 * m(1, 0).real(), 2.0 * m(1, 0).imag(),
                      (m(0, 0) - m(1, 1)).real());
  if (r.norm() > 1.0 + 2.0 * kProbTol)
    throw ValidationError("matrix_to_state: negative eigenvalue");
  return QubitState(r.norm() > 1.0 ? BlochVector(r / r.norm()) : r);
}

/// Eigenvalues {(1+|r|)/2, (1-|r|)/2} of the density matrix.
inline ProbDist state_spectrum(const QubitState& state) {
  return ProbDist::binary(state.radius());
}

inline double state_renyi(const QubitState& state, const EntropyOrder& order) {
  return renyi_entropy(state_spectrum(state), order);
}

/// Maximal eigenvector overlap c = sqrt((1 + |p.q|)/2), in [1/sqrt(2), 1].
inline double overlap_c(const Observable& p, const Observable& q) {
  return std::sqrt((1.0 + std::abs(p.axis().dot(q.axis()))) / 2.0);
}

}  // namespace eur
