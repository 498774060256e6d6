#include "eur/scan.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <deque>
#include <numbers>
#include <sstream>

namespace eur::scan {

namespace {

using json = nlohmann::ordered_json;

constexpr double kPi = std::numbers::pi;

std::vector<EntropyOrder> default_verify_orders() {
  return {EntropyOrder::finite(0.5), EntropyOrder::one(), EntropyOrder::finite(2.0),
          EntropyOrder::finite(5.0), EntropyOrder::infinity()};
}

void put(json& j, const char* key, double v) { j[key] = fmt17(v); }

void put(json& j, const char* key, const std::optional<double>& v) {
  if (v)
    j[key] = fmt17(*v);
  else
    j[key] = nullptr;
}

}  // namespace

std::string fmt17(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::vector<EntropyOrder> parse_alpha_list(const std::string& csv) {
  std::vector<EntropyOrder> orders;
  std::stringstream ss(csv);
  std::string token;
  while (std::getline(ss, token, ',')) {
    if (!token.empty()) orders.push_back(EntropyOrder::parse(token));
  }
  if (orders.empty()) throw ValidationError("alpha list: no orders given");
  return orders;
}

BlochVector Rng::unit_vector() {
  const double z = uniform(-1.0, 1.0);
  const double ang = uniform(0.0, 2.0 * kPi);
  const double s = std::sqrt(std::max(0.0, 1.0 - z * z));
  return {s * std::cos(ang), s * std::sin(ang), z};
}

BlochVector Rng::ball_vector() {
  const double radius = std::cbrt(uniform());
  return radius * unit_vector();
}

int RegionMask::true_count() const {
  int n = 0;
  for (auto c : cells) n += (c != 0);
  return n;
}

Observable fig4_default_p() {
  return Observable(BlochVector(0.1, 0.4, std::sqrt(1.0 - 0.01 - 0.16)));
}

Observable fig4_default_q() {
  return Observable(BlochVector(0.15, 0.5, std::sqrt(1.0 - 0.0225 - 0.25)));
}

ScanRecord evaluate(const MeasurementPair& pair, const QubitState& rho,
                    const EntropyOrder& order) {
  const EntropyOrder one = EntropyOrder::one();
  ScanRecord rec;
  rec.alpha = order.label();
  rec.lhs = lhs_reur(pair, rho, order);
  rec.shannon_lhs =
      order.tag() == EntropyOrder::Tag::One ? rec.lhs : lhs_reur(pair, rho, one);

  const BoundReport t1 = report(rec.lhs, theorem1_bound(pair, rho, order));
  const BoundReport t3 = report(rec.lhs, theorem3_bound(pair, order));
  const BoundReport mu = report(rec.shannon_lhs, maassen_uffink_bound(pair));
  const BoundReport e45 = report(rec.shannon_lhs, improved_bound_eq45(pair, rho));

  rec.bound_t1 = t1.bound;
  rec.bound_t3 = t3.bound;
  rec.bound_mu = mu.bound;
  rec.bound_eq45 = e45.bound;
  rec.slack_t1 = t1.slack;
  rec.slack_t3 = t3.slack;
  rec.slack_mu = mu.slack;
  rec.slack_eq45 = e45.slack;
  rec.ratio_t1 = t1.ratio;
  rec.ratio_t3 = t3.ratio;
  rec.ratio_mu = mu.ratio;
  rec.ratio_eq45 = e45.ratio;

  rec.violation = t1.slack < -kViolationTol || t3.slack < -kViolationTol ||
                  mu.slack < -kViolationTol || e45.slack < -kViolationTol;
  return rec;
}

std::vector<ScanRecord> eval_point(const Observable& p, const Observable& q,
                                   const QubitState& rho,
                                   const std::vector<EntropyOrder>& orders) {
  const MeasurementPair pair(p, q);
  std::vector<ScanRecord> out;
  out.reserve(orders.size());
  for (const auto& order : orders) out.push_back(evaluate(pair, rho, order));
  return out;
}

std::vector<ScanRecord> figure_curves(int figure,
                                      const std::vector<EntropyOrder>& orders,
                                      int points) {
  if (points < 2) throw ValidationError("figure_curves: need at least 2 points");

  // Panel values quoted in the figure captions.
  std::vector<double> thetas, phis;
  switch (figure) {
    case 1:
      phis = {0.0};
      thetas = {0.0, kPi / 4.0, 5.0 * kPi / 9.0, kPi / 2.0};
      break;
    case 2:
      thetas = {kPi / 4.0};
      phis = {0.0, kPi / 7.0, kPi / 3.0, kPi / 2.0};
      break;
    case 3:
      thetas = {kPi / 4.0};
      phis = {0.0, kPi / 15.0, kPi / 10.0, kPi / 5.0,
              3.0 * kPi / 10.0, 2.0 * kPi / 5.0, 13.0 * kPi / 30.0, kPi / 2.0};
      break;
    default:
      throw ValidationError("figure_curves: figure must be 1, 2 or 3");
  }

  std::vector<ScanRecord> out;
  for (double phi : phis) {
    for (double theta : thetas) {
      for (int k = 0; k < points; ++k) {
        const double varphi = 2.0 * kPi * k / (points - 1);
        const SpinScenario s(phi, theta, varphi);
        const auto [pair, rho] = to_generic(s);
        for (const auto& order : orders) {
          ScanRecord rec = evaluate(pair, rho, order);
          rec.phi = phi;
          rec.theta = theta;
          rec.varphi = varphi;
          const SpinRatios r = ratios(s, order);
          rec.ratio_creur = r.creur;
          rec.ratio_cseurp = r.cseurp;
          out.push_back(std::move(rec));
        }
      }
    }
  }
  return out;
}

RegionMask region_fig4(int theta_steps, int varphi_steps, const Observable& p,
                       const Observable& q) {
  if (theta_steps < 2 || varphi_steps < 2)
    throw ValidationError("region_fig4: grid needs at least 2 steps per axis");
  const MeasurementPair pair(p, q);
  const EntropyOrder one = EntropyOrder::one();

  RegionMask mask;
  mask.theta_steps = theta_steps;
  mask.varphi_steps = varphi_steps;
  mask.cells.assign(static_cast<std::size_t>(theta_steps) * varphi_steps, 0);

  for (int i = 0; i < theta_steps; ++i) {
    const double theta = kPi * i / (theta_steps - 1);
    for (int j = 0; j < varphi_steps; ++j) {
      const double varphi = 2.0 * kPi * j / (varphi_steps - 1);
      const QubitState rho(BlochVector(std::sin(theta) * std::cos(varphi),
                                       std::sin(theta) * std::sin(varphi),
                                       std::cos(theta)));
      const double t1 = theorem1_bound(pair, rho, one);
      const double e45 = improved_bound_eq45(pair, rho);
      // Strict-tightness margin so numerically equal cells don't count.
      mask.cells[static_cast<std::size_t>(i) * varphi_steps + j] =
          (t1 > e45 + 1e-12) ? 1 : 0;
    }
  }
  return mask;
}

int component_count(const RegionMask& mask) {
  const int T = mask.theta_steps, P = mask.varphi_steps;
  std::vector<std::uint8_t> seen(mask.cells.size(), 0);
  int components = 0;
  for (int i = 0; i < T; ++i) {
    for (int j = 0; j < P; ++j) {
      const std::size_t idx = static_cast<std::size_t>(i) * P + j;
      if (!mask.cells[idx] || seen[idx]) continue;
      ++components;
      std::deque<std::pair<int, int>> queue{{i, j}};
      seen[idx] = 1;
      while (!queue.empty()) {
        const auto [a, b] = queue.front();
        queue.pop_front();
        constexpr int da[4] = {1, -1, 0, 0};
        constexpr int db[4] = {0, 0, 1, -1};
        for (int d = 0; d < 4; ++d) {
          const int x = a + da[d], y = b + db[d];
          if (x < 0 || x >= T || y < 0 || y >= P) continue;
          const std::size_t n = static_cast<std::size_t>(x) * P + y;
          if (mask.cells[n] && !seen[n]) {
            seen[n] = 1;
            queue.emplace_back(x, y);
          }
        }
      }
    }
  }
  return components;
}

VerifySummary verify_theorems(std::uint64_t samples, std::uint64_t seed,
                              double tolerance) {
  if (samples < 1) throw ValidationError("verify_theorems: samples must be >= 1");
  const auto orders = default_verify_orders();
  const EntropyOrder one = EntropyOrder::one();

  VerifySummary s;
  s.samples = samples;
  s.seed = seed;
  s.tolerance = tolerance;
  for (const auto& o : orders) {
    s.min_slack_t1.emplace_back(o.label(), std::numeric_limits<double>::infinity());
    s.min_slack_t3.emplace_back(o.label(), std::numeric_limits<double>::infinity());
  }
  s.min_slack_mu = std::numeric_limits<double>::infinity();
  s.min_slack_eq45 = std::numeric_limits<double>::infinity();
  s.max_t3_minus_t1 = -std::numeric_limits<double>::infinity();

  Rng rng(seed);
  auto note_failure = [&](const std::string& what, const MeasurementPair& pair,
                          const QubitState& rho, const std::string& order) {
    if (s.failures.size() >= 10) return;
    std::ostringstream os;
    os << what << " order=" << order << " p=(" << pair.p().axis().transpose()
       << ") q=(" << pair.q().axis().transpose() << ") r=("
       << rho.bloch().transpose() << ")";
    s.failures.push_back(os.str());
  };

  for (std::uint64_t n = 0; n < samples; ++n) {
    const MeasurementPair pair(Observable(rng.unit_vector()),
                               Observable(rng.unit_vector()));
    const QubitState rho(rng.ball_vector());
    double shannon_lhs = 0.0;
    for (std::size_t k = 0; k < orders.size(); ++k) {
      const double lhs = lhs_reur(pair, rho, orders[k]);
      const double b1 = theorem1_bound(pair, rho, orders[k]);
      const double b3 = theorem3_bound(pair, orders[k]);
      const double s1 = lhs - b1;
      const double s3 = lhs - b3;
      s.min_slack_t1[k].second = std::min(s.min_slack_t1[k].second, s1);
      s.min_slack_t3[k].second = std::min(s.min_slack_t3[k].second, s3);
      s.max_t3_minus_t1 = std::max(s.max_t3_minus_t1, b3 - b1);
      if (s1 < -tolerance) note_failure("theorem1 slack", pair, rho, orders[k].label());
      if (s3 < -tolerance) note_failure("theorem3 slack", pair, rho, orders[k].label());
      if (orders[k].tag() == EntropyOrder::Tag::One) shannon_lhs = lhs;
    }
    const double smu = shannon_lhs - maassen_uffink_bound(pair);
    const double se45 = shannon_lhs - improved_bound_eq45(pair, rho);
    s.min_slack_mu = std::min(s.min_slack_mu, smu);
    s.min_slack_eq45 = std::min(s.min_slack_eq45, se45);
    if (smu < -tolerance) note_failure("maassen-uffink slack", pair, rho, "1");
    if (se45 < -tolerance) note_failure("improved-bound slack", pair, rho, "1");
  }

  // Theorem 1 equality locus: Bloch vector of the state parallel to p.
  for (int n = 0; n < 1000; ++n) {
    const Observable p(rng.unit_vector());
    const Observable q(rng.unit_vector());
    const double sign = rng.uniform() < 0.5 ? -1.0 : 1.0;
    const MeasurementPair pair(p, q);
    const QubitState rho(BlochVector(sign * p.axis()));
    for (const auto& order : orders) {
      const double res =
          std::abs(lhs_reur(pair, rho, order) - theorem1_bound(pair, rho, order));
      s.max_equality_residual_t1 = std::max(s.max_equality_residual_t1, res);
    }
  }

  // Theorem 3 equality locus: pure eigenstates of P.
  for (int n = 0; n < 1000; ++n) {
    const Observable p(rng.unit_vector());
    const Observable q(rng.unit_vector());
    const double sign = rng.uniform() < 0.5 ? -1.0 : 1.0;
    const MeasurementPair pair(p, q);
    const QubitState rho(BlochVector(sign * p.axis()));
    for (const auto& order : orders) {
      const double res =
          std::abs(lhs_reur(pair, rho, order) - theorem3_bound(pair, order));
      s.max_equality_residual_t3 = std::max(s.max_equality_residual_t3, res);
    }
  }

  // Theorem 2 state independence and agreement with the closed form.
  for (int np = 0; np < 100; ++np) {
    const MeasurementPair pair(Observable(rng.unit_vector()),
                               Observable(rng.unit_vector()));
    const Eigen::Matrix2d table = conditional_probs(pair);
    const std::vector<ProbDist> rows = {ProbDist(table.row(0).transpose().eval()),
                                        ProbDist(table.row(1).transpose().eval())};
    for (const auto& order : orders) {
      const double closed = conditional_renyi_qp(pair, QubitState::maximally_mixed(), order);
      double lo = std::numeric_limits<double>::infinity();
      double hi = -std::numeric_limits<double>::infinity();
      for (int ns = 0; ns < 100; ++ns) {
        const QubitState rho(rng.ball_vector());
        const double v = conditional_renyi(first_probs(pair, rho), rows, order);
        lo = std::min(lo, v);
        hi = std::max(hi, v);
        s.max_t2_closed_form_gap =
            std::max(s.max_t2_closed_form_gap, std::abs(v - closed));
      }
      s.max_t2_variation = std::max(s.max_t2_variation, hi - lo);
    }
  }

  double worst_min = std::numeric_limits<double>::infinity();
  for (const auto& [label, v] : s.min_slack_t1) worst_min = std::min(worst_min, v);
  for (const auto& [label, v] : s.min_slack_t3) worst_min = std::min(worst_min, v);
  worst_min = std::min({worst_min, s.min_slack_mu, s.min_slack_eq45});

  s.pass = worst_min >= -tolerance && s.max_t3_minus_t1 <= tolerance &&
           s.max_equality_residual_t1 <= tolerance &&
           s.max_equality_residual_t3 <= tolerance &&
           s.max_t2_variation <= 1e-12 && s.max_t2_closed_form_gap <= 1e-12;
  return s;
}

std::string summary_to_json(const VerifySummary& s) {
  json j;
  j["samples"] = s.samples;
  j["seed"] = s.seed;
  j["tolerance"] = fmt17(s.tolerance);
  json t1 = json::object(), t3 = json::object();
  for (const auto& [label, v] : s.min_slack_t1) t1[label] = fmt17(v);
  for (const auto& [label, v] : s.min_slack_t3) t3[label] = fmt17(v);
  j["min_slack_theorem1"] = t1;
  j["min_slack_theorem3"] = t3;
  put(j, "min_slack_maassen_uffink", s.min_slack_mu);
  put(j, "min_slack_improved_bound", s.min_slack_eq45);
  put(j, "max_theorem3_minus_theorem1", s.max_t3_minus_t1);
  put(j, "max_equality_residual_theorem1", s.max_equality_residual_t1);
  put(j, "max_equality_residual_theorem3", s.max_equality_residual_t3);
  put(j, "max_theorem2_state_variation", s.max_t2_variation);
  put(j, "max_theorem2_closed_form_gap", s.max_t2_closed_form_gap);
  j["pass"] = s.pass;
  j["failures"] = s.failures;
  return j.dump(2) + "\n";
}

std::string summary_to_text(const VerifySummary& s) {
  std::ostringstream os;
  os << "verify: samples=" << s.samples << " seed=" << s.seed
     << " tol=" << fmt17(s.tolerance) << "\n";
  for (const auto& [label, v] : s.min_slack_t1)
    os << "  theorem1 min slack (alpha=" << label << "): " << fmt17(v) << "\n";
  for (const auto& [label, v] : s.min_slack_t3)
    os << "  theorem3 min slack (alpha=" << label << "): " << fmt17(v) << "\n";
  os << "  maassen-uffink min slack: " << fmt17(s.min_slack_mu) << "\n"
     << "  improved-bound min slack: " << fmt17(s.min_slack_eq45) << "\n"
     << "  max theorem3 - theorem1: " << fmt17(s.max_t3_minus_t1) << "\n"
     << "  theorem1 equality residual: " << fmt17(s.max_equality_residual_t1) << "\n"
     << "  theorem3 equality residual: " << fmt17(s.max_equality_residual_t3) << "\n"
     << "  theorem2 state variation: " << fmt17(s.max_t2_variation) << "\n"
     << "  theorem2 closed-form gap: " << fmt17(s.max_t2_closed_form_gap) << "\n"
     << (s.pass ? "PASS" : "FAIL") << "\n";
  for (const auto& f : s.failures) os << "  violation: " << f << "\n";
  return os.str();
}

namespace {

void append_opt(std::ostream& os, const std::optional<double>& v) {
  os << ',';
  if (v) os << fmt17(*v);
}

void write_record_row(std::ostream& os, const ScanRecord& rec) {
  auto opt_angle = [&](const std::optional<double>& v) {
    if (v) os << fmt17(*v);
    os << ',';
  };
  opt_angle(rec.phi);
  opt_angle(rec.theta);
  opt_angle(rec.varphi);
  os << rec.alpha << ',' << fmt17(rec.lhs) << ',' << fmt17(rec.bound_t1) << ','
     << fmt17(rec.bound_t3) << ',' << fmt17(rec.bound_mu) << ','
     << fmt17(rec.bound_eq45) << ',' << fmt17(rec.slack_t1);
  append_opt(os, rec.ratio_t1);
  os << ',' << fmt17(rec.slack_t3);
  append_opt(os, rec.ratio_t3);
  os << ',' << fmt17(rec.slack_mu);
  append_opt(os, rec.ratio_mu);
  os << ',' << fmt17(rec.slack_eq45);
  append_opt(os, rec.ratio_eq45);
  append_opt(os, rec.ratio_creur);
  append_opt(os, rec.ratio_cseurp);
  os << ',';
  if (rec.tighter) os << *rec.tighter;
  os << '\n';
}

constexpr const char* kCsvHeader =
    "phi,theta,varphi,alpha,lhs,bound_t1,bound_t3,bound_mu,bound_eq45,"
    "slack_t1,ratio_t1,slack_t3,ratio_t3,slack_mu,ratio_mu,slack_eq45,"
    "ratio_eq45,ratio_creur,ratio_cseurp,tighter\n";

}  // namespace

void write_csv(std::ostream& os, const std::vector<ScanRecord>& records) {
  os << kCsvHeader;
  for (const auto& rec : records) write_record_row(os, rec);
}

void write_region_csv(std::ostream& os, const RegionMask& mask,
                      const Observable& p, const Observable& q) {
  const MeasurementPair pair(p, q);
  const EntropyOrder one = EntropyOrder::one();
  os << kCsvHeader;
  for (int i = 0; i < mask.theta_steps; ++i) {
    const double theta = kPi * i / (mask.theta_steps - 1);
    for (int j = 0; j < mask.varphi_steps; ++j) {
      const double varphi = 2.0 * kPi * j / (mask.varphi_steps - 1);
      const QubitState rho(BlochVector(std::sin(theta) * std::cos(varphi),
                                       std::sin(theta) * std::sin(varphi),
                                       std::cos(theta)));
      ScanRecord rec = evaluate(pair, rho, one);
      rec.theta = theta;
      rec.varphi = varphi;
      rec.tighter = mask.at(i, j) ? 1 : 0;
      write_record_row(os, rec);
    }
  }
}

std::string records_to_json(const std::vector<ScanRecord>& records) {
  json arr = json::array();
  for (const auto& rec : records) {
    json j;
    put(j, "phi", rec.phi);
    put(j, "theta", rec.theta);
    put(j, "varphi", rec.varphi);
    j["alpha"] = rec.alpha;
    put(j, "lhs", rec.lhs);
    put(j, "bound_t1", rec.bound_t1);
    put(j, "bound_t3", rec.bound_t3);
    put(j, "bound_mu", rec.bound_mu);
    put(j, "bound_eq45", rec.bound_eq45);
    put(j, "slack_t1", rec.slack_t1);
    put(j, "ratio_t1", rec.ratio_t1);
    put(j, "slack_t3", rec.slack_t3);
    put(j, "ratio_t3", rec.ratio_t3);
    put(j, "slack_mu", rec.slack_mu);
    put(j, "ratio_mu", rec.ratio_mu);
    put(j, "slack_eq45", rec.slack_eq45);
    put(j, "ratio_eq45", rec.ratio_eq45);
    put(j, "ratio_creur", rec.ratio_creur);
    put(j, "ratio_cseurp", rec.ratio_cseurp);
    j["violation"] = rec.violation;
    arr.push_back(std::move(j));
  }
  return arr.dump(2) + "\n";
}

}  // namespace eur::scan
