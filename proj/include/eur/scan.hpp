#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <random>
#include <string>
#include <vector>

#include "eur/bounds.hpp"
#include "eur/entropy.hpp"
#include "eur/qubit.hpp"
#include "eur/spin.hpp"
#include "eur/successive.hpp"

namespace eur::scan {

/// Slack below this is treated as a theorem violation.
inline constexpr double kViolationTol = 1e-10;

/// Seedable generator backing every randomized sweep. The raw engine is
/// std::mt19937_64; doubles are built from the top 53 bits so the stream does
/// not depend on the standard library's distribution implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double uniform() {  // [0, 1)
    return static_cast<double>(engine_() >> 11) * 0x1p-53;
  }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Uniform on the unit sphere.
  BlochVector unit_vector();

  /// Uniform in the closed unit ball (cube-root radial transform).
  BlochVector ball_vector();

 private:
  std::mt19937_64 engine_;
};

/// One evaluated point: inputs, entropy sum, every bound with its slack and
/// (when defined) ratio. The Maassen-Uffink and improved-bound columns always
/// refer to the Shannon entropy sum, whatever the record's order is.
struct ScanRecord {
  std::optional<double> phi, theta, varphi;
  std::string alpha;
  double lhs = 0.0;
  double shannon_lhs = 0.0;
  double bound_t1 = 0.0, bound_t3 = 0.0, bound_mu = 0.0, bound_eq45 = 0.0;
  double slack_t1 = 0.0, slack_t3 = 0.0, slack_mu = 0.0, slack_eq45 = 0.0;
  std::optional<double> ratio_t1, ratio_t3, ratio_mu, ratio_eq45;
  std::optional<double> ratio_creur, ratio_cseurp;
  std::optional<int> tighter;
  bool violation = false;
};

/// Boolean grid over pure states: cell true iff the Shannon theorem-1 bound is
/// strictly tighter than the improved bound at that state.
struct RegionMask {
  int theta_steps = 0;
  int varphi_steps = 0;
  std::vector<std::uint8_t> cells;  // row-major, theta outer

  bool at(int i, int j) const { return cells[static_cast<std::size_t>(i) * varphi_steps + j] != 0; }
  int true_count() const;
};

/// Fixed measurement directions used in the paper's region comparison.
Observable fig4_default_p();
Observable fig4_default_q();

ScanRecord evaluate(const MeasurementPair& pair, const QubitState& rho,
                    const EntropyOrder& order);

std::vector<ScanRecord> eval_point(const Observable& p, const Observable& q,
                                   const QubitState& rho,
                                   const std::vector<EntropyOrder>& orders);

std::vector<ScanRecord> figure_curves(int figure,
                                      const std::vector<EntropyOrder>& orders,
                                      int points);

RegionMask region_fig4(int theta_steps, int varphi_steps, const Observable& p,
                       const Observable& q);

/// Number of 4-neighbor connected components of the true cells.
int component_count(const RegionMask& mask);

/// Outcome of the randomized theorem verification.
struct VerifySummary {
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  double tolerance = 0.0;
  std::vector<std::pair<std::string, double>> min_slack_t1;  // per order label
  std::vector<std::pair<std::string, double>> min_slack_t3;
  double min_slack_mu = 0.0;
  double min_slack_eq45 = 0.0;
  double max_t3_minus_t1 = 0.0;          // ordering check, must stay <= tol
  double max_equality_residual_t1 = 0.0; // r = +-p locus
  double max_equality_residual_t3 = 0.0; // pure eigenstates of P
  double max_t2_variation = 0.0;         // state independence
  double max_t2_closed_form_gap = 0.0;   // pipeline vs closed form
  bool pass = false;
  std::vector<std::string> failures;
};

VerifySummary verify_theorems(std::uint64_t samples, std::uint64_t seed,
                              double tolerance);

std::string summary_to_json(const VerifySummary& s);
std::string summary_to_text(const VerifySummary& s);
std::string records_to_json(const std::vector<ScanRecord>& records);

void write_csv(std::ostream& os, const std::vector<ScanRecord>& records);
void write_region_csv(std::ostream& os, const RegionMask& mask,
                      const Observable& p, const Observable& q);

/// %.17g, with infinities as "inf".
std::string fmt17(double v);

std::vector<EntropyOrder> parse_alpha_list(const std::string& csv);

}  // namespace eur::scan
