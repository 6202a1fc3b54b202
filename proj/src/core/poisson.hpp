#ifndef PLD_CORE_POISSON_HPP
#define PLD_CORE_POISSON_HPP

#include <Eigen/Dense>
#include <functional>
#include <string>
#include <vector>

#include "core/algebra.hpp"

// Point-evaluated Poisson geometry: bivectors, brackets, Hamiltonian vector
// fields and the residuals (Jacobi, compatibility, Casimir, bi-Hamiltonian)
// that the verification suites are built on. All residual norms are max-abs.

namespace pld {

struct ScalarField {
  int dim = 0;
  std::string name;
  std::function<double(const Eigen::VectorXd&)> eval;
  std::function<Eigen::VectorXd(const Eigen::VectorXd&)> grad;  // empty -> finite differences

  double operator()(const Eigen::VectorXd& x) const { return eval(x); }
  // Analytic gradient when supplied, 5-point central differences otherwise.
  Eigen::VectorXd gradient(const Eigen::VectorXd& x) const;
};

// 5-point central finite-difference gradient, step h per coordinate.
Eigen::VectorXd fd_gradient(const std::function<double(const Eigen::VectorXd&)>& f,
                            const Eigen::VectorXd& x, double h = 1e-5);

// Relative inf-norm difference between the analytic gradient and the 5-point
// stencil (step 1e-5).
double gradient_check(const ScalarField& f, const Eigen::VectorXd& x);

struct PoissonStructure {
  int dim = 0;
  std::string name;
  std::function<Eigen::MatrixXd(const Eigen::VectorXd&)> bivector;
  // Optional analytic partials d pi / d x_k; k-th entry of the result.
  std::function<std::vector<Eigen::MatrixXd>(const Eigen::VectorXd&)> partials;
  std::vector<ScalarField> casimirs;
  int rank_generic = 0;

  // Analytic partials when available, otherwise central differences with a
  // scale-aware step 1e-6 * max(1, |x_k|).
  std::vector<Eigen::MatrixXd> bivector_partials(const Eigen::VectorXd& x) const;
};

struct HamiltonianSystem {
  PoissonStructure poisson;
  ScalarField hamiltonian;
};

struct BiHamiltonianSystem {
  HamiltonianSystem sys0, sys1;
};

// bivector(x)_ij = sum_k c_ij^k x_k; the partials are the constants.
PoissonStructure linear_poisson_from_constants(const StructureConstants& sc);

// grad f . Pi . grad g at x.
double poisson_bracket(const PoissonStructure& p, const ScalarField& f, const ScalarField& g,
                       const Eigen::VectorXd& x);

// Pi(x) . grad H(x).
Eigen::VectorXd hamiltonian_vf(const PoissonStructure& p, const ScalarField& h,
                               const Eigen::VectorXd& x);

// max_(i,j,k) |sum_l (pi_il d_l pi_jk + pi_jl d_l pi_ki + pi_kl d_l pi_ij)|.
double jacobi_residual_at(const PoissonStructure& p, const Eigen::VectorXd& x);

// Mixed cyclic sum: vanishes iff the Schouten bracket [Pi0, Pi1] does.
double compatibility_residual_at(const PoissonStructure& p0, const PoissonStructure& p1,
                                 const Eigen::VectorXd& x);

// ||Pi(x) grad C(x)||_inf.
double casimir_residual_at(const PoissonStructure& p, const ScalarField& c,
                           const Eigen::VectorXd& x);

// ||X_{H0}^{P0}(x) - X_{H1}^{P1}(x)||_inf.
double bihamiltonian_residual_at(const BiHamiltonianSystem& b, const Eigen::VectorXd& x);

// Pointwise affine blend (1-alpha) P0 + alpha P1 (no Casimir list).
PoissonStructure blend_structures(const PoissonStructure& p0, const PoissonStructure& p1,
                                  double alpha);

// Block-diagonal product of `copies` copies of p, Casimirs pulled back
// through the factor projections.
PoissonStructure product_structure(const PoissonStructure& p, int copies);

// Rank of the bivector at x by SVD with an absolute singular value threshold.
int numerical_rank(const PoissonStructure& p, const Eigen::VectorXd& x,
                   double threshold = 1e-10);

}  // namespace pld

#endif
