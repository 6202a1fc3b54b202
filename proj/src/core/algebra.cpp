#include "core/algebra.hpp"

#include <nlohmann/json.hpp>
#include <stdexcept>

namespace pld {

double StructureConstants::antisymmetry_defect() const {
  double worst = 0.0;
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j)
      for (int k = 0; k < dim; ++k)
        worst = std::max(worst, std::abs(at(i, j, k) + at(j, i, k)));
  return worst;
}

nlohmann::json StructureConstants::to_json() const {
  nlohmann::json entries = nlohmann::json::array();
  for (int i = 0; i < dim; ++i)
    for (int j = i + 1; j < dim; ++j)
      for (int k = 0; k < dim; ++k)
        if (at(i, j, k) != 0.0) entries.push_back({i, j, k, at(i, j, k)});
  return {{"dim", dim}, {"entries", entries}};
}

StructureConstants StructureConstants::from_json(const nlohmann::json& j) {
  StructureConstants sc(j.at("dim").get<int>());
  for (const auto& e : j.at("entries")) {
    const int i = e.at(0).get<int>(), jj = e.at(1).get<int>(), k = e.at(2).get<int>();
    if (i < 0 || i >= sc.dim || jj < 0 || jj >= sc.dim || k < 0 || k >= sc.dim)
      throw std::invalid_argument("structure constant index out of range");
    sc.set(i, jj, k, e.at(3).get<double>());
  }
  return sc;
}

Eigen::MatrixXd CocycleMap::component(int i) const {
  Eigen::MatrixXd m(dim, dim);
  for (int j = 0; j < dim; ++j)
    for (int k = 0; k < dim; ++k) m(j, k) = at(i, j, k);
  return m;
}

Eigen::MatrixXd CocycleMap::apply(const Eigen::VectorXd& w) const {
  if (w.size() != dim) throw std::invalid_argument("cocycle: dimension mismatch");
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(dim, dim);
  for (int i = 0; i < dim; ++i)
    if (w[i] != 0.0) m += w[i] * component(i);
  return m;
}

nlohmann::json CocycleMap::to_json() const {
  nlohmann::json entries = nlohmann::json::array();
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j)
      for (int k = j + 1; k < dim; ++k)
        if (at(i, j, k) != 0.0) entries.push_back({i, j, k, at(i, j, k)});
  return {{"dim", dim}, {"entries", entries}};
}

CocycleMap CocycleMap::from_json(const nlohmann::json& j) {
  CocycleMap psi(j.at("dim").get<int>());
  for (const auto& e : j.at("entries")) {
    const int i = e.at(0).get<int>(), jj = e.at(1).get<int>(), k = e.at(2).get<int>();
    if (i < 0 || i >= psi.dim || jj < 0 || jj >= psi.dim || k < 0 || k >= psi.dim)
      throw std::invalid_argument("cocycle index out of range");
    psi.set(i, jj, k, e.at(3).get<double>());
  }
  return psi;
}

Eigen::VectorXd lie_bracket(const StructureConstants& sc, const Eigen::VectorXd& u,
                            const Eigen::VectorXd& v) {
  if (u.size() != sc.dim || v.size() != sc.dim)
    throw std::invalid_argument("lie_bracket: dimension mismatch");
  Eigen::VectorXd w = Eigen::VectorXd::Zero(sc.dim);
  for (int i = 0; i < sc.dim; ++i) {
    if (u[i] == 0.0) continue;
    for (int j = 0; j < sc.dim; ++j) {
      if (v[j] == 0.0) continue;
      for (int k = 0; k < sc.dim; ++k) w[k] += u[i] * v[j] * sc.at(i, j, k);
    }
  }
  return w;
}

Eigen::MatrixXd adjoint_matrix(const StructureConstants& sc, const Eigen::VectorXd& xi) {
  if (xi.size() != sc.dim) throw std::invalid_argument("adjoint_matrix: dimension mismatch");
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(sc.dim, sc.dim);
  for (int k = 0; k < sc.dim; ++k)
    for (int j = 0; j < sc.dim; ++j)
      for (int i = 0; i < sc.dim; ++i) m(k, j) += xi[i] * sc.at(i, j, k);
  return m;
}

double jacobi_residual_constants(const StructureConstants& sc) {
  const int n = sc.dim;
  double worst = 0.0;
  Eigen::MatrixXd basis = Eigen::MatrixXd::Identity(n, n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        Eigen::VectorXd s = lie_bracket(sc, lie_bracket(sc, basis.col(a), basis.col(b)), basis.col(c)) +
                            lie_bracket(sc, lie_bracket(sc, basis.col(b), basis.col(c)), basis.col(a)) +
                            lie_bracket(sc, lie_bracket(sc, basis.col(c), basis.col(a)), basis.col(b));
        worst = std::max(worst, s.lpNorm<Eigen::Infinity>());
      }
  return worst;
}

StructureConstants pencil_constants(const LiePencil& p, double alpha) {
  if (p.sc0.dim != p.sc1.dim) throw std::invalid_argument("pencil: dimension mismatch");
  StructureConstants out(p.sc0.dim);
  for (size_t t = 0; t < out.c.size(); ++t)
    out.c[t] = (1.0 - alpha) * p.sc0.c[t] + alpha * p.sc1.c[t];
  return out;
}

double cocycle_residual(const StructureConstants& sc, const CocycleMap& psi) {
  if (sc.dim != psi.dim) throw std::invalid_argument("cocycle_residual: dimension mismatch");
  const int n = sc.dim;
  Eigen::MatrixXd basis = Eigen::MatrixXd::Identity(n, n);
  double worst = 0.0;
  for (int a = 0; a < n; ++a) {
    const Eigen::MatrixXd ad_a = adjoint_matrix(sc, basis.col(a));
    for (int b = 0; b < n; ++b) {
      const Eigen::MatrixXd ad_b = adjoint_matrix(sc, basis.col(b));
      const Eigen::MatrixXd psi_a = psi.component(a);
      const Eigen::MatrixXd psi_b = psi.component(b);
      // ad_xi (u ^ v) = [xi,u] ^ v + u ^ [xi,v]  ==  A M + M A^T on matrices.
      Eigen::MatrixXd r = ad_a * psi_b + psi_b * ad_a.transpose() -
                          (ad_b * psi_a + psi_a * ad_b.transpose()) -
                          psi.apply(lie_bracket(sc, basis.col(a), basis.col(b)));
      worst = std::max(worst, r.cwiseAbs().maxCoeff());
    }
  }
  return worst;
}

StructureConstants dual_bracket(const CocycleMap& psi) {
  StructureConstants sc(psi.dim);
  for (int a = 0; a < psi.dim; ++a)
    for (int b = 0; b < psi.dim; ++b)
      for (int i = 0; i < psi.dim; ++i) sc.at(a, b, i) = psi.at(i, a, b);
  if (jacobi_residual_constants(sc) > 1e-12)
    throw std::domain_error("dual_bracket: cocycle is not admissible (dual map fails Jacobi)");
  return sc;
}

}  // namespace pld
