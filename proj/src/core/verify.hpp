#ifndef PLD_CORE_VERIFY_HPP
#define PLD_CORE_VERIFY_HPP

#include <cstdint>
#include <nlohmann/json_fwd.hpp>
#include <string>
#include <vector>

#include "core/models.hpp"

// The runnable invariant suite: every structural identity the construction
// promises, evaluated at seeded random points and reported as one record per
// check per structure. The CLI `verify` subcommand and the acceptance tests
// are both built on this.

namespace pld {

struct CheckRecord {
  std::string check;
  std::string structure;
  double value = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  std::vector<double> point;  // argmax point when meaningful

  nlohmann::json to_json() const;
};

struct VerifyOptions {
  std::string system = "lorenz";
  std::vector<double> etas = {-1.0, -0.25, 0.0, 0.25, 1.0};
  std::vector<double> alphas = {-1.0, 0.0, 0.5, 1.0};
  std::uint64_t seed = 42;
  std::string fault;          // empty = intact model
  int points = 100;           // random points per check
  bool with_reduction = true;
  double reduction_t_end = 5.0;
  double reduction_dt = 1e-3;
};

struct VerifyReport {
  VerifyOptions options;
  std::vector<CheckRecord> records;

  bool all_pass() const;
  size_t failed_count() const;
  nlohmann::json to_json() const;
};

VerifyReport run_verify(const VerifyOptions& opt);

// Figure reproduction: closed orbits of the deformed system for
// eta in {0, +-pi/4, +-pi/8} from the two reference initial conditions.
struct Figure1Options {
  std::string panel = "AB";  // "A", "B" or both
  double t_end = 60.0;
  double dt = 2e-4;
  double settle = 1.0;
  double closure_tolerance = 1e-3;
  std::string svg_path;  // empty = no file
};

struct Figure1Result {
  bool all_closed = true;
  std::vector<CheckRecord> curves;  // value = closure distance, point = [period]
  nlohmann::json to_json() const;
};

Figure1Result run_figure1(const Figure1Options& opt);

}  // namespace pld

#endif
