#ifndef PLD_CORE_GROUP_HPP
#define PLD_CORE_GROUP_HPP

#include <Eigen/Dense>
#include <functional>
#include <string>
#include <utility>

#include "core/poisson.hpp"

// Explicit group laws on R^n: translation Jacobians, adjoint action,
// invariant frames, finite products, and the multiplicativity residual that
// makes "Poisson-Lie" checkable pointwise.

namespace pld {

struct GroupLaw {
  int dim = 0;
  std::string name;
  std::function<Eigen::VectorXd(const Eigen::VectorXd&, const Eigen::VectorXd&)> multiply;
  Eigen::VectorXd identity;
  std::function<Eigen::VectorXd(const Eigen::VectorXd&)> inverse;

  // Optional analytic tables. jac_first = d(g*h)/dg, jac_second = d(g*h)/dh.
  std::function<Eigen::MatrixXd(const Eigen::VectorXd&, const Eigen::VectorXd&)> jac_first;
  std::function<Eigen::MatrixXd(const Eigen::VectorXd&, const Eigen::VectorXd&)> jac_second;
  std::function<Eigen::VectorXd(const Eigen::VectorXd&, const Eigen::VectorXd&)> adjoint_table;
  std::function<Eigen::MatrixXd(const Eigen::VectorXd&)> left_frame;
  std::function<Eigen::MatrixXd(const Eigen::VectorXd&)> right_frame;
};

enum class FrameSide { Left, Right };

// (J_r, J_l): J_r is the Jacobian at g of a -> a*h, J_l the Jacobian at h of
// b -> g*b. Analytic tables when present, otherwise central differences with
// step 1e-6.
std::pair<Eigen::MatrixXd, Eigen::MatrixXd> translation_jacobians(const GroupLaw& g,
                                                                  const Eigen::VectorXd& a,
                                                                  const Eigen::VectorXd& b);

// ||Pi(g*h) - J_r Pi(g) J_r^T - J_l Pi(h) J_l^T||_inf.
double multiplicativity_residual(const GroupLaw& gl, const PoissonStructure& p,
                                 const Eigen::VectorXd& g, const Eigen::VectorXd& h,
                                 bool force_fd_jacobians = false);

// Ad_g(X) from the closed-form table.
Eigen::VectorXd adjoint(const GroupLaw& gl, const Eigen::VectorXd& g, const Eigen::VectorXd& x);

// exp(X) as the t = 1 flow of the left-invariant extension of X (RK4,
// dt = 1e-3); used only to cross-check the adjoint tables.
Eigen::VectorXd group_exp(const GroupLaw& gl, const Eigen::VectorXd& x);

// d/dt|_0 of g * exp(tX) * g^{-1} by central differences.
Eigen::VectorXd adjoint_by_conjugation(const GroupLaw& gl, const Eigen::VectorXd& g,
                                       const Eigen::VectorXd& x);

// Columns are the invariant frame fields at x (table when present, else
// derived from the translation Jacobians at the identity).
Eigen::MatrixXd invariant_frame(const GroupLaw& gl, FrameSide side, const Eigen::VectorXd& x);

// Componentwise product group on R^{2 dim} (or n copies).
GroupLaw product_group(const GroupLaw& g);
GroupLaw product_group_n(const GroupLaw& g, int copies);

}  // namespace pld

#endif
