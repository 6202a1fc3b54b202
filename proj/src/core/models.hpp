#ifndef PLD_CORE_MODELS_HPP
#define PLD_CORE_MODELS_HPP

#include <nlohmann/json_fwd.hpp>
#include <string>
#include <vector>

#include "core/group.hpp"
#include "core/poisson.hpp"

// Closed-form catalog of the two deformation families: the integrable-limit
// Lorenz system on R^4 and the Euler top on R^3. A bundle carries the full
// chain of objects for one model at one deformation value eta: the pair of
// compatible Lie algebras, their common cocycle, the dual group law, the two
// multiplicative Poisson structures, Hamiltonians and Casimirs. At eta = 0
// everything collapses exactly to the linear Lie-Poisson data.

namespace pld {

struct ModelBundle {
  std::string name;
  double eta = 0.0;
  StructureConstants sc0, sc1;
  CocycleMap cocycle;
  GroupLaw group;
  PoissonStructure p0, p1;
  ScalarField h0, h1;
  std::vector<ScalarField> casimirs0, casimirs1;
  std::vector<ScalarField> extra_invariants;  // conserved but not a Hamiltonian (x4)
  std::string fault;                          // nonempty after apply_fault

  BiHamiltonianSystem bihamiltonian() const { return {{p0, h0}, {p1, h1}}; }
  std::vector<ScalarField> monitors() const;
};

ModelBundle build_lorenz(double eta);
ModelBundle build_euler(double eta);
// "lorenz" or "euler"; throws std::invalid_argument otherwise.
ModelBundle build_model(const std::string& system, double eta);

// (1-alpha) p0 + alpha p1, the deformed pencil member.
PoissonStructure deformed_pencil(const ModelBundle& m, double alpha);

// The flow of (p_which, h_which).
std::function<Eigen::VectorXd(const Eigen::VectorXd&)> hamiltonian_field(
    const PoissonStructure& p, const ScalarField& h);

// Chart change between the conservative Lorenz limit in (x,y,z) and the
// catalog coordinates: x1 = x, x2 = 2y, x3 = 2z - 2.
Eigen::Vector3d lorenz_from_conservative(const Eigen::Vector3d& xyz);
Eigen::Vector3d lorenz_to_conservative(const Eigen::Vector3d& x123);

struct CoupledBundle {
  ModelBundle base;
  int copies = 2;
  GroupLaw group;             // product of `copies` factors
  PoissonStructure p0N, p1N;  // block-diagonal products
  ScalarField h0N, h1N;       // coproducts h_i o (iterated multiply)

  Eigen::VectorXd reduce(const Eigen::VectorXd& x) const;
  // D(reduce): base.dim x (copies * base.dim), from the analytic translation
  // Jacobians.
  Eigen::MatrixXd reduce_jacobian(const Eigen::VectorXd& x) const;
  const PoissonStructure& structure(int which) const { return which == 0 ? p0N : p1N; }
  const ScalarField& hamiltonian(int which) const { return which == 0 ? h0N : h1N; }
  std::vector<ScalarField> monitors(int which) const;
};

// Throws std::invalid_argument for copies < 2.
CoupledBundle coupled_model(const ModelBundle& m, int copies);

// Pushforward of the product structure (2 copies) under the diffeomorphism
// (y, z) -> (x = y*z, z). Partials fall back to finite differences.
PoissonStructure chart_xz_structure(const CoupledBundle& cb, int which);
Eigen::VectorXd chart_to_xz(const CoupledBundle& cb, const Eigen::VectorXd& yz);
Eigen::VectorXd chart_from_xz(const CoupledBundle& cb, const Eigen::VectorXd& xz);

// Single-sign / single-term corruptions used to prove the verification suite
// discriminates. Returns false for an unknown name.
bool apply_fault(ModelBundle& m, const std::string& fault);
std::vector<std::string> fault_names(const std::string& system);

nlohmann::json model_card(const ModelBundle& m);

}  // namespace pld

#endif
