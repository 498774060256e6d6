#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <cstdio>
#include <initializer_list>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace eur {

/// Tolerance used everywhere a probability or norm is validated.
inline constexpr double kProbTol = 1e-12;

/// Entries at or below this threshold do not count as support (alpha = 0 branch).
inline constexpr double kPositivityThreshold = 1e-12;

/// Finite Renyi orders must keep this distance from 1; closer values are Shannon.
inline constexpr double kAlphaGuard = 1e-9;

class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A finite discrete probability distribution. Entries are clamped to [0, 1]
/// after validation so downstream pow/log calls never see -1e-17 style noise.
class ProbDist {
 public:
  explicit ProbDist(Eigen::VectorXd probs) : probs_(std::move(probs)) {
    if (probs_.size() == 0) throw ValidationError("ProbDist: empty distribution");
    for (Eigen::Index i = 0; i < probs_.size(); ++i) {
      const double p = probs_[i];
      if (!std::isfinite(p) || p < -kProbTol || p > 1.0 + kProbTol) {
        std::ostringstream os;
        os << "ProbDist: entry " << i << " = " << p << " outside [0,1]";
        throw ValidationError(os.str());
      }
    }
    const double total = probs_.sum();
    if (std::abs(total - 1.0) > probs_.size() * kProbTol) {
      std::ostringstream os;
      os << "ProbDist: entries sum to " << total << ", expected 1";
      throw ValidationError(os.str());
    }
    probs_ = probs_.cwiseMax(0.0).cwiseMin(1.0);
  }

  ProbDist(std::initializer_list<double> probs)
      : ProbDist(Eigen::Map<const Eigen::VectorXd>(probs.begin(),
                 static_cast<Eigen::Index>(probs.size())).eval()) {}

  /// {(1+x)/2, (1-x)/2} for x in [-1, 1]; the workhorse for every qubit outcome
  /// pair. x within kProbTol of +-1 snaps to the exact deterministic
  /// distribution, matching the purity tolerance on Bloch vectors; without the
  /// snap, machine-epsilon noise in near-deterministic inputs is amplified to
  /// ~1e-8 by orders alpha < 1.
  static ProbDist binary(double x) {
    if (x >= 1.0 - kProbTol)
      x = 1.0;
    else if (x <= -1.0 + kProbTol)
      x = -1.0;
    return ProbDist(Eigen::Vector2d((1.0 + x) / 2.0, (1.0 - x) / 2.0));
  }

  const Eigen::VectorXd& probs() const { return probs_; }
  Eigen::Index size() const { return probs_.size(); }
  double operator[](Eigen::Index i) const { return probs_[i]; }

 private:
  Eigen::VectorXd probs_;
};

/// Renyi order alpha with the limiting branches made explicit. Finite(alpha)
/// refuses values within kAlphaGuard of 1 to keep 1/(1-alpha) well conditioned.
class EntropyOrder {
 public:
  enum class Tag { Zero, One, Finite, Infinity };

  static EntropyOrder zero() { return EntropyOrder(Tag::Zero, 0.0); }
  static EntropyOrder one() { return EntropyOrder(Tag::One, 1.0); }
  static EntropyOrder infinity() {
    return EntropyOrder(Tag::Infinity, std::numeric_limits<double>::infinity());
  }
  static EntropyOrder finite(double alpha) {
    if (!std::isfinite(alpha) || alpha <= 0.0)
      throw ValidationError("EntropyOrder: finite order requires alpha > 0");
    if (std::abs(alpha - 1.0) < kAlphaGuard)
      throw ValidationError("EntropyOrder: alpha too close to 1, use One");
    return EntropyOrder(Tag::Finite, alpha);
  }

  /// "0" -> Zero, "1" -> One, "inf" -> Infinity, anything else parsed as Finite.
  static EntropyOrder parse(const std::string& token) {
    if (token == "inf" || token == "Inf" || token == "INF") return infinity();
    std::size_t pos = 0;
    double a = 0.0;
    try {
      a = std::stod(token, &pos);
    } catch (const std::exception&) {
      throw ValidationError("EntropyOrder: cannot parse '" + token + "'");
    }
    if (pos != token.size())
      throw ValidationError("EntropyOrder: cannot parse '" + token + "'");
    if (std::isinf(a)) return infinity();
    if (a == 0.0) return zero();
    if (std::abs(a - 1.0) < kAlphaGuard) return one();
    return finite(a);
  }

  Tag tag() const { return tag_; }
  double alpha() const { return alpha_; }

  /// Serialization token: "0", "1", "inf", or the decimal alpha.
  std::string label() const {
    switch (tag_) {
      case Tag::Zero: return "0";
      case Tag::One: return "1";
      case Tag::Infinity: return "inf";
      case Tag::Finite: break;
    }
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", alpha_);
    return buf;
  }

  friend bool operator==(const EntropyOrder& a, const EntropyOrder& b) {
    return a.tag_ == b.tag_ && (a.tag_ != Tag::Finite || a.alpha_ == b.alpha_);
  }

 private:
  EntropyOrder(Tag tag, double alpha) : tag_(tag), alpha_(alpha) {}
  Tag tag_;
  double alpha_;
};

namespace detail {

/// Finite-order formula with no guard band around alpha = 1. Exposed for the
/// Shannon-limit tests only; library code goes through renyi_entropy.
inline double renyi_raw(const ProbDist& dist, double alpha) {
  double sum = 0.0;
  for (Eigen::Index i = 0; i < dist.size(); ++i)
    if (dist[i] > 0.0) sum += std::pow(dist[i], alpha);
  return std::log(sum) / (1.0 - alpha);
}

}  // namespace detail

/// Renyi entropy in nats, all four branches.
inline double renyi_entropy(const ProbDist& dist, const EntropyOrder& order) {
  double h = 0.0;
  switch (order.tag()) {
    case EntropyOrder::Tag::Zero: {
      int support = 0;
      for (Eigen::Index i = 0; i < dist.size(); ++i)
        if (dist[i] > kPositivityThreshold) ++support;
      h = std::log(static_cast<double>(support));
      break;
    }
    case EntropyOrder::Tag::One: {
      for (Eigen::Index i = 0; i < dist.size(); ++i)
        if (dist[i] > 0.0) h -= dist[i] * std::log(dist[i]);
      break;
    }
    case EntropyOrder::Tag::Finite:
      h = detail::renyi_raw(dist, order.alpha());
      break;
    case EntropyOrder::Tag::Infinity:
      h = -std::log(dist.probs().maxCoeff());
      break;
  }
  return std::max(h, 0.0);
}

/// Outcome-weighted Renyi entropy of the conditional distributions.
inline double conditional_renyi(const ProbDist& weights,
                                const std::vector<ProbDist>& conditionals,
                                const EntropyOrder& order) {
  if (weights.size() != static_cast<Eigen::Index>(conditionals.size()))
    throw ValidationError("conditional_renyi: weights/conditionals length mismatch");
  double h = 0.0;
  for (Eigen::Index i = 0; i < weights.size(); ++i)
    h += weights[i] * renyi_entropy(conditionals[static_cast<std::size_t>(i)], order);
  return h;
}

}  // namespace eur
