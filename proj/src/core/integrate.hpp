#ifndef PLD_CORE_INTEGRATE_HPP
#define PLD_CORE_INTEGRATE_HPP

#include <Eigen/Dense>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "core/poisson.hpp"

// Fixed-step RK4 and adaptive Dormand-Prince 5(4) integration with invariant
// monitoring. Invariant drift is observed, not enforced.

namespace pld {

using VectorField = std::function<Eigen::VectorXd(const Eigen::VectorXd&)>;

struct IntegratorConfig {
  enum class Method { RK4, DoPri5 };
  Method method = Method::RK4;
  double dt = 1e-3;     // rk4 step
  double rtol = 1e-8;   // dopri5
  double atol = 1e-10;  // dopri5
  double t_end = 1.0;
  int sample_every = 1;

  void validate() const;
  static Method parse_method(const std::string& name);
};

struct Trajectory {
  std::vector<double> times;
  std::vector<Eigen::VectorXd> states;
  std::vector<std::string> monitor_names;
  std::vector<std::vector<double>> monitor_values;  // [monitor][sample]

  int dim() const { return states.empty() ? 0 : static_cast<int>(states.front().size()); }
  size_t samples() const { return times.size(); }
};

// Thrown when the state stops being finite; carries the last finite sample.
struct IntegratorAbort : std::runtime_error {
  double t_last;
  Eigen::VectorXd last_state;
  IntegratorAbort(double t, Eigen::VectorXd state)
      : std::runtime_error("integration aborted: non-finite state at t = " + std::to_string(t)),
        t_last(t),
        last_state(std::move(state)) {}
};

Trajectory integrate(const VectorField& field, const Eigen::VectorXd& x0,
                     const IntegratorConfig& cfg, const std::vector<ScalarField>& monitors = {});

// (min distance back to the initial state among samples with t > settle,
// time at which the minimum occurs). Needs >= 10 samples past `settle`.
std::pair<double, double> closure_metric(const Trajectory& traj, double settle);

// Richardson estimate of the rk4 order: log2 of the error ratio between dt
// and dt/2 runs measured against a dt/8 reference. Returns +inf when both
// errors vanish (e.g. a zero field).
double convergence_order(const VectorField& field, const Eigen::VectorXd& x0, double t_end);

// max_t |F(t) - F(0)| / max(|F(0)|, floor).
double relative_drift(const Trajectory& traj, size_t monitor_idx, double floor = 1e-12);

// CSV with header t,x1,...,xn,<monitor names>, 17 significant digits.
void write_csv(const Trajectory& traj, const std::string& path);

}  // namespace pld

#endif
