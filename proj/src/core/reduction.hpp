#ifndef PLD_CORE_REDUCTION_HPP
#define PLD_CORE_REDUCTION_HPP

#include <Eigen/Dense>
#include <vector>

#include "core/models.hpp"

// Verification of the reduction claims: the coupled Hamiltonian flows on
// G^N project, through iterated group multiplication, onto the deformed
// bi-Hamiltonian flow on G.

namespace pld {

// Left-to-right iterated multiply. Throws for an empty part list.
Eigen::VectorXd reduce_state(const GroupLaw& g, const std::vector<Eigen::VectorXd>& parts);

// Integrates the coupled flow (p_whichN, h_whichN) from `start` and the base
// flow from reduce(start), both with rk4 at the given step; returns the max
// over samples of || reduce(coupled(t)) - base(t) ||_2.
double reduction_residual(const CoupledBundle& cb, int which,
                          const std::vector<Eigen::VectorXd>& start, double t_end, double dt);

// || D(reduce) X_coupled(x) - X_base(reduce(x)) ||_inf, the t = 0 form of the
// reduction statement, with analytic multiplication Jacobians.
double tangency_residual(const CoupledBundle& cb, int which, const Eigen::VectorXd& x);

struct QuasiGap {
  double gap;                  // ||X_{h0N}^{p0N} - X_{h1N}^{p1N}||_inf, generically nonzero
  double reduction_agreement;  // ||D(reduce)(X0 - X1)||_inf, should vanish
};

// Needs exactly 2 copies.
QuasiGap quasi_bihamiltonian_gap(const CoupledBundle& cb, const Eigen::VectorXd& x);

}  // namespace pld

#endif
