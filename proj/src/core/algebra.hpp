#ifndef PLD_CORE_ALGEBRA_HPP
#define PLD_CORE_ALGEBRA_HPP

#include <Eigen/Dense>
#include <nlohmann/json_fwd.hpp>
#include <vector>

// Finite-dimensional Lie algebra layer: structure constants, adjoint
// 1-cocycles with values in Lambda^2, pencils and dual brackets. Everything
// is stored densely (dimensions stay in single digits here).

namespace pld {

struct StructureConstants {
  int dim = 0;
  std::vector<double> c;  // c[(i*dim + j)*dim + k], bracket [X_i,X_j] = c_ij^k X_k

  StructureConstants() = default;
  explicit StructureConstants(int n) : dim(n), c(static_cast<size_t>(n) * n * n, 0.0) {}

  double at(int i, int j, int k) const { return c[(static_cast<size_t>(i) * dim + j) * dim + k]; }
  double& at(int i, int j, int k) { return c[(static_cast<size_t>(i) * dim + j) * dim + k]; }

  // Writes both orientations so antisymmetry holds by construction.
  void set(int i, int j, int k, double v) {
    at(i, j, k) = v;
    at(j, i, k) = -v;
  }

  double antisymmetry_defect() const;

  nlohmann::json to_json() const;
  static StructureConstants from_json(const nlohmann::json& j);
};

struct CocycleMap {
  int dim = 0;
  // psi[(i*dim + j)*dim + k]: psi(X_i) = sum_{j<k} psi_ijk X_j ^ X_k,
  // antisymmetric in the last two indices.
  std::vector<double> psi;

  CocycleMap() = default;
  explicit CocycleMap(int n) : dim(n), psi(static_cast<size_t>(n) * n * n, 0.0) {}

  double at(int i, int j, int k) const { return psi[(static_cast<size_t>(i) * dim + j) * dim + k]; }
  double& at(int i, int j, int k) { return psi[(static_cast<size_t>(i) * dim + j) * dim + k]; }

  void set(int i, int j, int k, double v) {
    at(i, j, k) = v;
    at(i, k, j) = -v;
  }

  // Matrix of psi(X_i) in the wedge-as-antisymmetric-matrix representation.
  Eigen::MatrixXd component(int i) const;
  // psi(w) for an arbitrary vector w.
  Eigen::MatrixXd apply(const Eigen::VectorXd& w) const;

  nlohmann::json to_json() const;
  static CocycleMap from_json(const nlohmann::json& j);
};

struct LiePencil {
  StructureConstants sc0, sc1;
};

// w_k = sum_ij u_i v_j c_ij^k. Throws std::invalid_argument on dimension
// mismatch.
Eigen::VectorXd lie_bracket(const StructureConstants& sc, const Eigen::VectorXd& u,
                            const Eigen::VectorXd& v);

// Matrix of ad_xi = [xi, .]: rows are output components.
Eigen::MatrixXd adjoint_matrix(const StructureConstants& sc, const Eigen::VectorXd& xi);

// max over all basis triples (a,b,c) of ||[[X_a,X_b],X_c] + cyclic||_inf.
double jacobi_residual_constants(const StructureConstants& sc);

// Entrywise (1-alpha) c0 + alpha c1.
StructureConstants pencil_constants(const LiePencil& p, double alpha);

// max over basis pairs (a,b) of
// ||ad_{X_a} psi(X_b) - ad_{X_b} psi(X_a) - psi([X_a,X_b])||_inf,
// with ad acting on Lambda^2 by the Leibniz rule.
double cocycle_residual(const StructureConstants& sc, const CocycleMap& psi);

// Constants of the dual Lie bracket: sc.c[a][b][i] = psi[i][a][b]. Throws
// std::domain_error when the result violates Jacobi beyond 1e-12 (the cocycle
// is then not admissible).
StructureConstants dual_bracket(const CocycleMap& psi);

}  // namespace pld

#endif
