#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "eur/scan.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitViolation = 2;

eur::BlochVector parse_vec3(const std::string& text) {
  std::vector<double> parts;
  std::stringstream ss(text);
  std::string token;
  while (std::getline(ss, token, ',')) {
    std::size_t pos = 0;
    parts.push_back(std::stod(token, &pos));
    if (pos != token.size())
      throw eur::ValidationError("vector: cannot parse component '" + token + "'");
  }
  if (parts.size() != 3)
    throw eur::ValidationError("vector: expected three comma-separated components");
  return {parts[0], parts[1], parts[2]};
}

std::ofstream open_out(const std::string& path) {
  std::ofstream os(path);
  if (!os) throw eur::ValidationError("cannot open output file '" + path + "'");
  return os;
}

bool any_violation(const std::vector<eur::scan::ScanRecord>& records) {
  for (const auto& r : records)
    if (r.violation) return true;
  return false;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Renyi-entropy uncertainty relations for successive qubit measurements"};
  app.require_subcommand(1);

  // verify
  auto* verify = app.add_subcommand("verify", "randomized theorem verification");
  std::uint64_t samples = 100000, seed = 42;
  double tol = 1e-10;
  bool verify_json = false;
  std::string emit_golden;
  verify->add_option("--samples", samples, "number of random samples");
  verify->add_option("--seed", seed, "RNG seed (mt19937_64)");
  verify->add_option("--tol", tol, "violation tolerance");
  verify->add_flag("--json", verify_json, "emit the summary as JSON");
  verify->add_option("--emit-golden", emit_golden, "also write the JSON summary to FILE");

  // figure
  auto* figure = app.add_subcommand("figure", "ratio curves for figures 1-3");
  int figure_id = 1;
  std::string alpha_list = "0.5,1,2,inf";
  int points = 721;
  std::string fig_out;
  figure->add_option("id", figure_id, "figure number (1, 2 or 3)")->required();
  figure->add_option("--alpha", alpha_list, "comma-separated Renyi orders");
  figure->add_option("--points", points, "samples of varphi on [0, 2pi]");
  figure->add_option("--out", fig_out, "output CSV file")->required();

  // region4
  auto* region = app.add_subcommand("region4", "bound-comparison region over pure states");
  std::string p_text = "", q_text = "", grid_text = "361x721", region_out;
  region->add_option("--p", p_text, "first observable axis X,Y,Z (normalized)");
  region->add_option("--q", q_text, "second observable axis X,Y,Z (normalized)");
  region->add_option("--grid", grid_text, "grid as THETAxVARPHI steps");
  region->add_option("--out", region_out, "output CSV file")->required();

  // point
  auto* point = app.add_subcommand("point", "evaluate a single configuration");
  std::string pp_text, pq_text, pr_text, point_alpha = "0.5,1,2,inf";
  bool point_json = false;
  point->add_option("--p", pp_text, "first observable axis X,Y,Z (normalized)")->required();
  point->add_option("--q", pq_text, "second observable axis X,Y,Z (normalized)")->required();
  point->add_option("--r", pr_text, "state Bloch vector X,Y,Z")->required();
  point->add_option("--alpha", point_alpha, "comma-separated Renyi orders");
  point->add_flag("--json", point_json, "emit records as JSON");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*verify) {
      const auto summary = eur::scan::verify_theorems(samples, seed, tol);
      const std::string json = eur::scan::summary_to_json(summary);
      if (!emit_golden.empty()) open_out(emit_golden) << json;
      std::cout << (verify_json ? json : eur::scan::summary_to_text(summary));
      return summary.pass ? kExitOk : kExitViolation;
    }

    if (*figure) {
      const auto orders = eur::scan::parse_alpha_list(alpha_list);
      const auto records = eur::scan::figure_curves(figure_id, orders, points);
      auto os = open_out(fig_out);
      eur::scan::write_csv(os, records);
      return any_violation(records) ? kExitViolation : kExitOk;
    }

    if (*region) {
      int theta_steps = 0, varphi_steps = 0;
      if (std::sscanf(grid_text.c_str(), "%dx%d", &theta_steps, &varphi_steps) != 2)
        throw eur::ValidationError("--grid: expected THETAxVARPHI, e.g. 361x721");
      const eur::Observable p = p_text.empty()
                                    ? eur::scan::fig4_default_p()
                                    : eur::Observable::from_direction(parse_vec3(p_text));
      const eur::Observable q = q_text.empty()
                                    ? eur::scan::fig4_default_q()
                                    : eur::Observable::from_direction(parse_vec3(q_text));
      const auto mask = eur::scan::region_fig4(theta_steps, varphi_steps, p, q);
      auto os = open_out(region_out);
      eur::scan::write_region_csv(os, mask, p, q);
      std::cout << "region4: " << mask.true_count() << " of "
                << mask.cells.size() << " cells tighter, "
                << eur::scan::component_count(mask) << " component(s)\n";
      return kExitOk;
    }

    if (*point) {
      const auto orders = eur::scan::parse_alpha_list(point_alpha);
      const eur::Observable p = eur::Observable::from_direction(parse_vec3(pp_text));
      const eur::Observable q = eur::Observable::from_direction(parse_vec3(pq_text));
      const eur::QubitState rho(parse_vec3(pr_text));
      const auto records = eur::scan::eval_point(p, q, rho, orders);
      if (point_json) {
        std::cout << eur::scan::records_to_json(records);
      } else {
        eur::scan::write_csv(std::cout, records);
      }
      return any_violation(records) ? kExitViolation : kExitOk;
    }
  } catch (const eur::ValidationError& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  }
  return kExitOk;
}
