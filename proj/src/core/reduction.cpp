#include "core/reduction.hpp"

#include <stdexcept>

#include "core/integrate.hpp"

namespace pld {

Eigen::VectorXd reduce_state(const GroupLaw& g, const std::vector<Eigen::VectorXd>& parts) {
  if (parts.empty()) throw std::invalid_argument("reduce_state: needs at least one part");
  Eigen::VectorXd r = parts.front();
  for (size_t i = 1; i < parts.size(); ++i) r = g.multiply(r, parts[i]);
  return r;
}

double reduction_residual(const CoupledBundle& cb, int which,
                          const std::vector<Eigen::VectorXd>& start, double t_end, double dt) {
  if (static_cast<int>(start.size()) != cb.copies)
    throw std::invalid_argument("reduction_residual: start must have cb.copies parts");
  const int n = cb.base.group.dim;
  Eigen::VectorXd x0(n * cb.copies);
  for (int c = 0; c < cb.copies; ++c) x0.segment(c * n, n) = start[c];

  if (t_end <= 0.0) return 0.0;

  IntegratorConfig cfg;
  cfg.dt = dt;
  cfg.t_end = t_end;

  const VectorField coupled =
      hamiltonian_field(cb.structure(which), cb.hamiltonian(which));
  const Trajectory traj_coupled = integrate(coupled, x0, cfg);

  const PoissonStructure& pbase = which == 0 ? cb.base.p0 : cb.base.p1;
  const ScalarField& hbase = which == 0 ? cb.base.h0 : cb.base.h1;
  const Trajectory traj_base =
      integrate(hamiltonian_field(pbase, hbase), cb.reduce(x0), cfg);

  double worst = 0.0;
  for (size_t s = 0; s < traj_coupled.samples(); ++s)
    worst = std::max(worst,
                     (cb.reduce(traj_coupled.states[s]) - traj_base.states[s]).norm());
  return worst;
}

double tangency_residual(const CoupledBundle& cb, int which, const Eigen::VectorXd& x) {
  const Eigen::VectorXd xc =
      hamiltonian_vf(cb.structure(which), cb.hamiltonian(which), x);
  const PoissonStructure& pbase = which == 0 ? cb.base.p0 : cb.base.p1;
  const ScalarField& hbase = which == 0 ? cb.base.h0 : cb.base.h1;
  const Eigen::VectorXd xb = hamiltonian_vf(pbase, hbase, cb.reduce(x));
  return (cb.reduce_jacobian(x) * xc - xb).lpNorm<Eigen::Infinity>();
}

QuasiGap quasi_bihamiltonian_gap(const CoupledBundle& cb, const Eigen::VectorXd& x) {
  if (cb.copies != 2)
    throw std::invalid_argument("quasi_bihamiltonian_gap: needs exactly 2 copies");
  const Eigen::VectorXd f0 = hamiltonian_vf(cb.p0N, cb.h0N, x);
  const Eigen::VectorXd f1 = hamiltonian_vf(cb.p1N, cb.h1N, x);
  QuasiGap out;
  out.gap = (f0 - f1).lpNorm<Eigen::Infinity>();
  out.reduction_agreement =
      (cb.reduce_jacobian(x) * (f0 - f1)).lpNorm<Eigen::Infinity>();
  return out;
}

}  // namespace pld
