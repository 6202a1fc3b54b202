#include "core/integrate.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

namespace pld {

void IntegratorConfig::validate() const {
  if (t_end <= 0.0) throw std::invalid_argument("integrator: t_end must be positive");
  if (sample_every < 1) throw std::invalid_argument("integrator: sample_every must be >= 1");
  if (method == Method::RK4) {
    if (dt <= 0.0) throw std::invalid_argument("integrator: dt must be positive");
    if (dt > t_end) throw std::invalid_argument("integrator: dt must not exceed t_end");
  } else {
    if (rtol <= 0.0 || rtol > 1e-2 || atol <= 0.0 || atol > 1e-2)
      throw std::invalid_argument("integrator: rtol and atol must lie in (0, 1e-2]");
  }
}

IntegratorConfig::Method IntegratorConfig::parse_method(const std::string& name) {
  if (name == "rk4") return Method::RK4;
  if (name == "dopri5") return Method::DoPri5;
  throw std::invalid_argument("unknown integrator method '" + name + "' (expected rk4|dopri5)");
}

namespace {

void check_finite(double t, const Eigen::VectorXd& x, double t_prev,
                  const Eigen::VectorXd& x_prev) {
  if (!x.allFinite()) throw IntegratorAbort(t_prev, x_prev);
  (void)t;
}

void record(Trajectory& traj, const std::vector<ScalarField>& monitors, double t,
            const Eigen::VectorXd& x) {
  traj.times.push_back(t);
  traj.states.push_back(x);
  for (size_t m = 0; m < monitors.size(); ++m)
    traj.monitor_values[m].push_back(monitors[m].eval(x));
}

Eigen::VectorXd rk4_step(const VectorField& f, const Eigen::VectorXd& x, double dt) {
  const Eigen::VectorXd k1 = f(x);
  const Eigen::VectorXd k2 = f(x + 0.5 * dt * k1);
  const Eigen::VectorXd k3 = f(x + 0.5 * dt * k2);
  const Eigen::VectorXd k4 = f(x + dt * k3);
  return x + dt / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
}

Trajectory integrate_rk4(const VectorField& f, const Eigen::VectorXd& x0,
                         const IntegratorConfig& cfg, const std::vector<ScalarField>& monitors) {
  Trajectory traj;
  traj.monitor_values.resize(monitors.size());
  for (const auto& m : monitors) traj.monitor_names.push_back(m.name);

  // Whole steps of dt plus one final partial step landing exactly on t_end.
  long nsteps = static_cast<long>(std::floor(cfg.t_end / cfg.dt + 1e-9));
  double remainder = cfg.t_end - nsteps * cfg.dt;
  if (remainder <= 1e-12 * cfg.t_end) remainder = 0.0;

  Eigen::VectorXd x = x0;
  double t = 0.0;
  record(traj, monitors, t, x);
  for (long s = 1; s <= nsteps; ++s) {
    const Eigen::VectorXd xn = rk4_step(f, x, cfg.dt);
    check_finite(s * cfg.dt, xn, t, x);
    x = xn;
    t = s * cfg.dt;
    if (s % cfg.sample_every == 0 || (s == nsteps && remainder == 0.0))
      record(traj, monitors, t, x);
  }
  if (remainder > 0.0) {
    const Eigen::VectorXd xn = rk4_step(f, x, remainder);
    check_finite(cfg.t_end, xn, t, x);
    x = xn;
    record(traj, monitors, cfg.t_end, x);
  }
  return traj;
}

// Dormand-Prince 5(4) coefficients.
constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
constexpr double a21 = 1.0 / 5;
constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                 a54 = -212.0 / 729;
constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                 a64 = 49.0 / 176, a65 = -5103.0 / 18656;
constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192, b5 = -2187.0 / 6784,
                 b6 = 11.0 / 84;
constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920,
                 e5 = -17253.0 / 339200, e6 = 22.0 / 525, e7 = -1.0 / 40;

Trajectory integrate_dopri5(const VectorField& f, const Eigen::VectorXd& x0,
                            const IntegratorConfig& cfg,
                            const std::vector<ScalarField>& monitors) {
  Trajectory traj;
  traj.monitor_values.resize(monitors.size());
  for (const auto& m : monitors) traj.monitor_names.push_back(m.name);

  Eigen::VectorXd x = x0;
  double t = 0.0;
  record(traj, monitors, t, x);

  Eigen::VectorXd k1 = f(x);
  double h = 1e-4 * std::max(1.0, x.norm()) / std::max(1.0, k1.norm());
  h = std::min(h, cfg.t_end);
  long accepted = 0;
  const long max_steps = 10'000'000;
  for (long iter = 0; iter < max_steps && t < cfg.t_end; ++iter) {
    h = std::min(h, cfg.t_end - t);
    const Eigen::VectorXd k2 = f(x + h * (a21 * k1));
    const Eigen::VectorXd k3 = f(x + h * (a31 * k1 + a32 * k2));
    const Eigen::VectorXd k4 = f(x + h * (a41 * k1 + a42 * k2 + a43 * k3));
    const Eigen::VectorXd k5 = f(x + h * (a51 * k1 + a52 * k2 + a53 * k3 + a54 * k4));
    const Eigen::VectorXd k6 =
        f(x + h * (a61 * k1 + a62 * k2 + a63 * k3 + a64 * k4 + a65 * k5));
    const Eigen::VectorXd x5 =
        x + h * (b1 * k1 + b3 * k3 + b4 * k4 + b5 * k5 + b6 * k6);
    const Eigen::VectorXd k7 = f(x5);
    const Eigen::VectorXd err_vec =
        h * (e1 * k1 + e3 * k3 + e4 * k4 + e5 * k5 + e6 * k6 + e7 * k7);

    double err = 0.0;
    for (int i = 0; i < x.size(); ++i) {
      const double sc = cfg.atol + cfg.rtol * std::max(std::abs(x[i]), std::abs(x5[i]));
      err = std::max(err, std::abs(err_vec[i]) / sc);
    }
    if (!x5.allFinite()) throw IntegratorAbort(t, x);

    if (err <= 1.0) {
      t += h;
      x = x5;
      k1 = k7;  // FSAL
      ++accepted;
      if (accepted % cfg.sample_every == 0 || t >= cfg.t_end)
        record(traj, monitors, t, x);
    }
    const double fac = std::clamp(0.9 * std::pow(std::max(err, 1e-16), -0.2), 0.2, 10.0);
    h *= fac;
    if (h < 1e-14) throw IntegratorAbort(t, x);
  }
  return traj;
}

}  // namespace

Trajectory integrate(const VectorField& field, const Eigen::VectorXd& x0,
                     const IntegratorConfig& cfg, const std::vector<ScalarField>& monitors) {
  cfg.validate();
  for (const auto& m : monitors)
    if (m.dim != x0.size()) throw std::invalid_argument("integrate: monitor dimension mismatch");
  if (cfg.method == IntegratorConfig::Method::RK4)
    return integrate_rk4(field, x0, cfg, monitors);
  return integrate_dopri5(field, x0, cfg, monitors);
}

std::pair<double, double> closure_metric(const Trajectory& traj, double settle) {
  const Eigen::VectorXd& start = traj.states.front();
  size_t count = 0;
  double best = std::numeric_limits<double>::infinity();
  double best_t = 0.0;
  for (size_t i = 0; i < traj.samples(); ++i) {
    if (traj.times[i] <= settle) continue;
    ++count;
    const double d = (traj.states[i] - start).norm();
    if (d < best) {
      best = d;
      best_t = traj.times[i];
    }
  }
  if (count < 10)
    throw std::invalid_argument("closure_metric: needs at least 10 samples past settle time");
  return {best, best_t};
}

double convergence_order(const VectorField& field, const Eigen::VectorXd& x0, double t_end) {
  const double dt = t_end / 200.0;
  auto run = [&](double step) {
    IntegratorConfig cfg;
    cfg.dt = step;
    cfg.t_end = t_end;
    cfg.sample_every = std::numeric_limits<int>::max();
    return integrate(field, x0, cfg).states.back();
  };
  const Eigen::VectorXd ref = run(dt / 8.0);
  const double err1 = (run(dt) - ref).norm();
  const double err2 = (run(dt / 2.0) - ref).norm();
  if (err1 == 0.0 && err2 == 0.0) return std::numeric_limits<double>::infinity();
  if (err2 == 0.0) return std::numeric_limits<double>::infinity();
  return std::log2(err1 / err2);
}

double relative_drift(const Trajectory& traj, size_t monitor_idx, double floor) {
  const std::vector<double>& vals = traj.monitor_values.at(monitor_idx);
  const double f0 = vals.front();
  double worst = 0.0;
  for (double v : vals) worst = std::max(worst, std::abs(v - f0));
  return worst / std::max(std::abs(f0), floor);
}

void write_csv(const Trajectory& traj, const std::string& path) {
  std::FILE* fp = std::fopen(path.c_str(), "w");
  if (!fp) throw std::runtime_error("cannot open '" + path + "' for writing");
  std::fprintf(fp, "t");
  for (int i = 1; i <= traj.dim(); ++i) std::fprintf(fp, ",x%d", i);
  for (const auto& name : traj.monitor_names) std::fprintf(fp, ",%s", name.c_str());
  std::fprintf(fp, "\n");
  for (size_t s = 0; s < traj.samples(); ++s) {
    std::fprintf(fp, "%.17g", traj.times[s]);
    for (int i = 0; i < traj.dim(); ++i) std::fprintf(fp, ",%.17g", traj.states[s][i]);
    for (const auto& mv : traj.monitor_values) std::fprintf(fp, ",%.17g", mv[s]);
    std::fprintf(fp, "\n");
  }
  std::fclose(fp);
}

}  // namespace pld
