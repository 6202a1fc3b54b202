#include "core/poisson.hpp"

#include <stdexcept>

namespace pld {

Eigen::VectorXd fd_gradient(const std::function<double(const Eigen::VectorXd&)>& f,
                            const Eigen::VectorXd& x, double h) {
  Eigen::VectorXd g(x.size());
  Eigen::VectorXd xp = x;
  for (int k = 0; k < x.size(); ++k) {
    const double xk = x[k];
    xp[k] = xk + 2.0 * h;
    const double f2p = f(xp);
    xp[k] = xk + h;
    const double f1p = f(xp);
    xp[k] = xk - h;
    const double f1m = f(xp);
    xp[k] = xk - 2.0 * h;
    const double f2m = f(xp);
    xp[k] = xk;
    g[k] = (-f2p + 8.0 * f1p - 8.0 * f1m + f2m) / (12.0 * h);
  }
  return g;
}

Eigen::VectorXd ScalarField::gradient(const Eigen::VectorXd& x) const {
  if (x.size() != dim) throw std::invalid_argument("ScalarField: dimension mismatch");
  if (grad) return grad(x);
  return fd_gradient(eval, x);
}

double gradient_check(const ScalarField& f, const Eigen::VectorXd& x) {
  const Eigen::VectorXd ga = f.gradient(x);
  const Eigen::VectorXd gn = fd_gradient(f.eval, x, 1e-5);
  const double scale = std::max(1.0, std::max(ga.lpNorm<Eigen::Infinity>(),
                                              gn.lpNorm<Eigen::Infinity>()));
  return (ga - gn).lpNorm<Eigen::Infinity>() / scale;
}

std::vector<Eigen::MatrixXd> PoissonStructure::bivector_partials(const Eigen::VectorXd& x) const {
  if (partials) return partials(x);
  std::vector<Eigen::MatrixXd> out(dim);
  Eigen::VectorXd xp = x;
  for (int k = 0; k < dim; ++k) {
    const double h = 1e-6 * std::max(1.0, std::abs(x[k]));
    const double xk = x[k];
    xp[k] = xk + h;
    const Eigen::MatrixXd fp = bivector(xp);
    xp[k] = xk - h;
    const Eigen::MatrixXd fm = bivector(xp);
    xp[k] = xk;
    out[k] = (fp - fm) / (2.0 * h);
  }
  return out;
}

PoissonStructure linear_poisson_from_constants(const StructureConstants& sc) {
  PoissonStructure p;
  p.dim = sc.dim;
  p.name = "linear";
  const int n = sc.dim;
  p.bivector = [sc, n](const Eigen::VectorXd& x) {
    if (x.size() != n) throw std::invalid_argument("bivector: dimension mismatch");
    Eigen::MatrixXd pi = Eigen::MatrixXd::Zero(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        double s = 0.0;
        for (int k = 0; k < n; ++k) s += sc.at(i, j, k) * x[k];
        pi(i, j) = s;
      }
    return pi;
  };
  p.partials = [sc, n](const Eigen::VectorXd&) {
    std::vector<Eigen::MatrixXd> dp(n, Eigen::MatrixXd::Zero(n, n));
    for (int k = 0; k < n; ++k)
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) dp[k](i, j) = sc.at(i, j, k);
    return dp;
  };
  return p;
}

double poisson_bracket(const PoissonStructure& p, const ScalarField& f, const ScalarField& g,
                       const Eigen::VectorXd& x) {
  if (f.dim != p.dim || g.dim != p.dim)
    throw std::invalid_argument("poisson_bracket: dimension mismatch");
  return f.gradient(x).dot(p.bivector(x) * g.gradient(x));
}

Eigen::VectorXd hamiltonian_vf(const PoissonStructure& p, const ScalarField& h,
                               const Eigen::VectorXd& x) {
  if (h.dim != p.dim) throw std::invalid_argument("hamiltonian_vf: dimension mismatch");
  return p.bivector(x) * h.gradient(x);
}

double jacobi_residual_at(const PoissonStructure& p, const Eigen::VectorXd& x) {
  const Eigen::MatrixXd pi = p.bivector(x);
  const std::vector<Eigen::MatrixXd> dp = p.bivector_partials(x);
  const int n = p.dim;
  double worst = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        double s = 0.0;
        for (int l = 0; l < n; ++l)
          s += pi(i, l) * dp[l](j, k) + pi(j, l) * dp[l](k, i) + pi(k, l) * dp[l](i, j);
        worst = std::max(worst, std::abs(s));
      }
  return worst;
}

double compatibility_residual_at(const PoissonStructure& p0, const PoissonStructure& p1,
                                 const Eigen::VectorXd& x) {
  if (p0.dim != p1.dim) throw std::invalid_argument("compatibility: dimension mismatch");
  const Eigen::MatrixXd a = p0.bivector(x);
  const Eigen::MatrixXd b = p1.bivector(x);
  const std::vector<Eigen::MatrixXd> da = p0.bivector_partials(x);
  const std::vector<Eigen::MatrixXd> db = p1.bivector_partials(x);
  const int n = p0.dim;
  double worst = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        double s = 0.0;
        for (int l = 0; l < n; ++l) {
          s += a(i, l) * db[l](j, k) + a(j, l) * db[l](k, i) + a(k, l) * db[l](i, j);
          s += b(i, l) * da[l](j, k) + b(j, l) * da[l](k, i) + b(k, l) * da[l](i, j);
        }
        worst = std::max(worst, std::abs(s));
      }
  return worst;
}

double casimir_residual_at(const PoissonStructure& p, const ScalarField& c,
                           const Eigen::VectorXd& x) {
  return hamiltonian_vf(p, c, x).lpNorm<Eigen::Infinity>();
}

double bihamiltonian_residual_at(const BiHamiltonianSystem& b, const Eigen::VectorXd& x) {
  return (hamiltonian_vf(b.sys0.poisson, b.sys0.hamiltonian, x) -
          hamiltonian_vf(b.sys1.poisson, b.sys1.hamiltonian, x))
      .lpNorm<Eigen::Infinity>();
}

PoissonStructure blend_structures(const PoissonStructure& p0, const PoissonStructure& p1,
                                  double alpha) {
  if (p0.dim != p1.dim) throw std::invalid_argument("blend: dimension mismatch");
  PoissonStructure out;
  out.dim = p0.dim;
  out.name = p0.name + "+" + p1.name;
  out.rank_generic = std::max(p0.rank_generic, p1.rank_generic);
  auto b0 = p0.bivector, b1 = p1.bivector;
  out.bivector = [b0, b1, alpha](const Eigen::VectorXd& x) {
    return ((1.0 - alpha) * b0(x) + alpha * b1(x)).eval();
  };
  if (p0.partials && p1.partials) {
    auto d0 = p0.partials, d1 = p1.partials;
    out.partials = [d0, d1, alpha](const Eigen::VectorXd& x) {
      std::vector<Eigen::MatrixXd> a = d0(x), b = d1(x);
      for (size_t k = 0; k < a.size(); ++k) a[k] = (1.0 - alpha) * a[k] + alpha * b[k];
      return a;
    };
  }
  return out;
}

PoissonStructure product_structure(const PoissonStructure& p, int copies) {
  if (copies < 1) throw std::invalid_argument("product_structure: copies must be >= 1");
  PoissonStructure out;
  const int n = p.dim;
  out.dim = n * copies;
  out.name = p.name + "^" + std::to_string(copies);
  out.rank_generic = p.rank_generic * copies;
  auto biv = p.bivector;
  out.bivector = [biv, n, copies](const Eigen::VectorXd& x) {
    Eigen::MatrixXd pi = Eigen::MatrixXd::Zero(n * copies, n * copies);
    for (int c = 0; c < copies; ++c)
      pi.block(c * n, c * n, n, n) = biv(x.segment(c * n, n));
    return pi;
  };
  if (p.partials) {
    auto par = p.partials;
    out.partials = [par, n, copies](const Eigen::VectorXd& x) {
      std::vector<Eigen::MatrixXd> dp(n * copies,
                                      Eigen::MatrixXd::Zero(n * copies, n * copies));
      for (int c = 0; c < copies; ++c) {
        std::vector<Eigen::MatrixXd> local = par(x.segment(c * n, n));
        for (int k = 0; k < n; ++k) dp[c * n + k].block(c * n, c * n, n, n) = local[k];
      }
      return dp;
    };
  }
  for (int c = 0; c < copies; ++c)
    for (const ScalarField& cas : p.casimirs) {
      ScalarField pulled;
      pulled.dim = n * copies;
      pulled.name = cas.name + ".pr" + std::to_string(c + 1);
      auto ev = cas.eval;
      pulled.eval = [ev, c, n](const Eigen::VectorXd& x) { return ev(x.segment(c * n, n)); };
      if (cas.grad) {
        auto gr = cas.grad;
        pulled.grad = [gr, c, n, copies](const Eigen::VectorXd& x) {
          Eigen::VectorXd g = Eigen::VectorXd::Zero(n * copies);
          g.segment(c * n, n) = gr(x.segment(c * n, n));
          return g;
        };
      }
      out.casimirs.push_back(std::move(pulled));
    }
  return out;
}

int numerical_rank(const PoissonStructure& p, const Eigen::VectorXd& x, double threshold) {
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(p.bivector(x));
  int r = 0;
  for (int i = 0; i < svd.singularValues().size(); ++i)
    if (svd.singularValues()[i] > threshold) ++r;
  return r;
}

}  // namespace pld
