#include "core/models.hpp"

#include <cmath>
#include <nlohmann/json.hpp>
#include <stdexcept>

#include "core/kernels.hpp"

namespace pld {

namespace {

void set_pi(Eigen::MatrixXd& m, int i, int j, double v) {
  m(i, j) = v;
  m(j, i) = -v;
}

ScalarField coordinate_field(int dim, int idx, const std::string& name) {
  ScalarField f;
  f.dim = dim;
  f.name = name;
  f.eval = [idx](const Eigen::VectorXd& x) { return x[idx]; };
  f.grad = [dim, idx](const Eigen::VectorXd&) {
    Eigen::VectorXd g = Eigen::VectorXd::Zero(dim);
    g[idx] = 1.0;
    return g;
  };
  return f;
}

GroupLaw lorenz_group(double eta) {
  GroupLaw g;
  g.dim = 4;
  g.name = "lorenz";
  g.identity = Eigen::VectorXd::Zero(4);
  g.multiply = [eta](const Eigen::VectorXd& a, const Eigen::VectorXd& b) {
    const double c = std::cos(eta * a[3]), s = std::sin(eta * a[3]);
    Eigen::VectorXd out(4);
    out[0] = a[0] + b[0];
    out[1] = a[1] + b[1] * c + b[2] * s;
    out[2] = a[2] - b[1] * s + b[2] * c;
    out[3] = a[3] + b[3];
    return out;
  };
  g.inverse = [eta](const Eigen::VectorXd& a) {
    const double c = std::cos(eta * a[3]), s = std::sin(eta * a[3]);
    Eigen::VectorXd out(4);
    out[0] = -a[0];
    out[1] = -a[1] * c + a[2] * s;
    out[2] = -a[1] * s - a[2] * c;
    out[3] = -a[3];
    return out;
  };
  g.jac_first = [eta](const Eigen::VectorXd& a, const Eigen::VectorXd& b) {
    const double c = std::cos(eta * a[3]), s = std::sin(eta * a[3]);
    Eigen::MatrixXd j = Eigen::MatrixXd::Identity(4, 4);
    j(1, 3) = eta * (-b[1] * s + b[2] * c);
    j(2, 3) = eta * (-b[1] * c - b[2] * s);
    return j;
  };
  g.jac_second = [eta](const Eigen::VectorXd& a, const Eigen::VectorXd&) {
    const double c = std::cos(eta * a[3]), s = std::sin(eta * a[3]);
    Eigen::MatrixXd j = Eigen::MatrixXd::Identity(4, 4);
    j(1, 1) = c;
    j(1, 2) = s;
    j(2, 1) = -s;
    j(2, 2) = c;
    return j;
  };
  g.adjoint_table = [eta](const Eigen::VectorXd& a, const Eigen::VectorXd& x) {
    const double c = std::cos(eta * a[3]), s = std::sin(eta * a[3]);
    Eigen::VectorXd out(4);
    out[0] = x[0];
    out[1] = c * x[1] + s * x[2] - eta * a[2] * x[3];
    out[2] = -s * x[1] + c * x[2] + eta * a[1] * x[3];
    out[3] = x[3];
    return out;
  };
  g.left_frame = [eta](const Eigen::VectorXd& x) {
    const double c = std::cos(eta * x[3]), s = std::sin(eta * x[3]);
    Eigen::MatrixXd f = Eigen::MatrixXd::Identity(4, 4);
    f(1, 1) = c;
    f(2, 1) = -s;
    f(1, 2) = s;
    f(2, 2) = c;
    return f;
  };
  g.right_frame = [eta](const Eigen::VectorXd& x) {
    Eigen::MatrixXd f = Eigen::MatrixXd::Identity(4, 4);
    f(1, 3) = eta * x[2];
    f(2, 3) = -eta * x[1];
    return f;
  };
  return g;
}

GroupLaw euler_group(double eta) {
  GroupLaw g;
  g.dim = 3;
  g.name = "euler";
  g.identity = Eigen::VectorXd::Zero(3);
  g.multiply = [eta](const Eigen::VectorXd& a, const Eigen::VectorXd& b) {
    const double e = std::exp(-eta * a[0]);
    Eigen::VectorXd out(3);
    out[0] = a[0] + b[0];
    out[1] = a[1] + b[1] * e;
    out[2] = a[2] + b[2] * e;
    return out;
  };
  g.inverse = [eta](const Eigen::VectorXd& a) {
    const double e = std::exp(eta * a[0]);
    Eigen::VectorXd out(3);
    out[0] = -a[0];
    out[1] = -a[1] * e;
    out[2] = -a[2] * e;
    return out;
  };
  g.jac_first = [eta](const Eigen::VectorXd& a, const Eigen::VectorXd& b) {
    const double e = std::exp(-eta * a[0]);
    Eigen::MatrixXd j = Eigen::MatrixXd::Identity(3, 3);
    j(1, 0) = -eta * b[1] * e;
    j(2, 0) = -eta * b[2] * e;
    return j;
  };
  g.jac_second = [eta](const Eigen::VectorXd& a, const Eigen::VectorXd&) {
    const double e = std::exp(-eta * a[0]);
    Eigen::MatrixXd j = Eigen::MatrixXd::Identity(3, 3);
    j(1, 1) = e;
    j(2, 2) = e;
    return j;
  };
  g.adjoint_table = [eta](const Eigen::VectorXd& a, const Eigen::VectorXd& x) {
    const double e = std::exp(-eta * a[0]);
    Eigen::VectorXd out(3);
    out[0] = x[0];
    out[1] = eta * a[1] * x[0] + e * x[1];
    out[2] = eta * a[2] * x[0] + e * x[2];
    return out;
  };
  g.left_frame = [eta](const Eigen::VectorXd& x) {
    const double e = std::exp(-eta * x[0]);
    Eigen::MatrixXd f = Eigen::MatrixXd::Identity(3, 3);
    f(1, 1) = e;
    f(2, 2) = e;
    return f;
  };
  g.right_frame = [eta](const Eigen::VectorXd& x) {
    Eigen::MatrixXd f = Eigen::MatrixXd::Identity(3, 3);
    f(1, 0) = -eta * x[1];
    f(2, 0) = -eta * x[2];
    return f;
  };
  return g;
}

}  // namespace

std::vector<ScalarField> ModelBundle::monitors() const {
  std::vector<ScalarField> m = {h0, h1};
  m.insert(m.end(), extra_invariants.begin(), extra_invariants.end());
  return m;
}

ModelBundle build_lorenz(double eta) {
  ModelBundle m;
  m.name = "lorenz";
  m.eta = eta;

  m.sc0 = StructureConstants(4);
  m.sc0.set(0, 1, 2, -0.5);  // [X1,X2] = -X3/2
  m.sc0.set(0, 2, 1, 0.5);   // [X1,X3] =  X2/2

  m.sc1 = StructureConstants(4);
  m.sc1.set(0, 1, 3, 0.25);  // [X1,X2] =  X4/4
  m.sc1.set(1, 2, 0, -0.5);  // [X2,X3] = -X1/2

  m.cocycle = CocycleMap(4);
  m.cocycle.set(1, 2, 3, -eta);  // psi(X2) = -eta X3 ^ X4
  m.cocycle.set(2, 1, 3, eta);   // psi(X3) =  eta X2 ^ X4

  m.group = lorenz_group(eta);

  m.p0.dim = 4;
  m.p0.name = "lorenz.p0";
  m.p0.rank_generic = 2;
  m.p0.bivector = [](const Eigen::VectorXd& x) {
    Eigen::MatrixXd pi = Eigen::MatrixXd::Zero(4, 4);
    set_pi(pi, 0, 1, -x[2] / 2.0);
    set_pi(pi, 0, 2, x[1] / 2.0);
    return pi;
  };
  m.p0.partials = [](const Eigen::VectorXd&) {
    std::vector<Eigen::MatrixXd> dp(4, Eigen::MatrixXd::Zero(4, 4));
    set_pi(dp[2], 0, 1, -0.5);
    set_pi(dp[1], 0, 2, 0.5);
    return dp;
  };

  m.p1.dim = 4;
  m.p1.name = "lorenz.p1";
  m.p1.rank_generic = 2;
  m.p1.bivector = [eta](const Eigen::VectorXd& x) {
    Eigen::MatrixXd pi = Eigen::MatrixXd::Zero(4, 4);
    set_pi(pi, 0, 1, kernel_S(x[3], eta) / 4.0);
    set_pi(pi, 0, 2, kernel_V(x[3], eta) / 4.0);
    set_pi(pi, 1, 2, -x[0] / 2.0);
    return pi;
  };
  m.p1.partials = [eta](const Eigen::VectorXd& x) {
    std::vector<Eigen::MatrixXd> dp(4, Eigen::MatrixXd::Zero(4, 4));
    set_pi(dp[0], 1, 2, -0.5);
    set_pi(dp[3], 0, 1, kernel_S_du(x[3], eta) / 4.0);
    set_pi(dp[3], 0, 2, kernel_V_du(x[3], eta) / 4.0);
    return dp;
  };

  m.h0.dim = 4;
  m.h0.name = "H0";
  m.h0.eval = [eta](const Eigen::VectorXd& x) {
    return kernel_S(x[3], eta) * x[2] - kernel_V(x[3], eta) * x[1] - x[0] * x[0];
  };
  m.h0.grad = [eta](const Eigen::VectorXd& x) {
    Eigen::VectorXd g(4);
    g[0] = -2.0 * x[0];
    g[1] = -kernel_V(x[3], eta);
    g[2] = kernel_S(x[3], eta);
    g[3] = x[2] * kernel_S_du(x[3], eta) - x[1] * kernel_V_du(x[3], eta);
    return g;
  };

  m.h1.dim = 4;
  m.h1.name = "H1";
  m.h1.eval = [](const Eigen::VectorXd& x) { return x[1] * x[1] + x[2] * x[2]; };
  m.h1.grad = [](const Eigen::VectorXd& x) {
    Eigen::VectorXd g(4);
    g << 0.0, 2.0 * x[1], 2.0 * x[2], 0.0;
    return g;
  };

  ScalarField x4 = coordinate_field(4, 3, "x4");
  ScalarField c0 = m.h1;
  c0.name = "C0";
  ScalarField c1 = m.h0;
  c1.name = "C1";
  m.casimirs0 = {c0, x4};
  m.casimirs1 = {c1, x4};
  m.p0.casimirs = m.casimirs0;
  m.p1.casimirs = m.casimirs1;
  m.extra_invariants = {x4};
  return m;
}

ModelBundle build_euler(double eta) {
  ModelBundle m;
  m.name = "euler";
  m.eta = eta;

  m.sc0 = StructureConstants(3);  // so(3)
  m.sc0.set(0, 1, 2, -1.0);
  m.sc0.set(0, 2, 1, 1.0);
  m.sc0.set(1, 2, 0, -1.0);

  m.sc1 = StructureConstants(3);  // sl(2,R)
  m.sc1.set(0, 1, 1, -1.0);
  m.sc1.set(0, 2, 2, 1.0);
  m.sc1.set(1, 2, 0, -2.0);

  m.cocycle = CocycleMap(3);
  m.cocycle.set(1, 1, 0, eta);  // psi(X2) = eta X2 ^ X1
  m.cocycle.set(2, 2, 0, eta);  // psi(X3) = eta X3 ^ X1

  m.group = euler_group(eta);

  m.p0.dim = 3;
  m.p0.name = "euler.p0";
  m.p0.rank_generic = 2;
  m.p0.bivector = [eta](const Eigen::VectorXd& x) {
    Eigen::MatrixXd pi = Eigen::MatrixXd::Zero(3, 3);
    set_pi(pi, 0, 1, -x[2]);
    set_pi(pi, 0, 2, x[1]);
    set_pi(pi, 1, 2, -eta * (x[1] * x[1] + x[2] * x[2]) / 2.0 + kernel_E(x[0], eta));
    return pi;
  };
  m.p0.partials = [eta](const Eigen::VectorXd& x) {
    std::vector<Eigen::MatrixXd> dp(3, Eigen::MatrixXd::Zero(3, 3));
    set_pi(dp[0], 1, 2, kernel_E_du(x[0], eta));
    set_pi(dp[1], 0, 2, 1.0);
    set_pi(dp[1], 1, 2, -eta * x[1]);
    set_pi(dp[2], 0, 1, -1.0);
    set_pi(dp[2], 1, 2, -eta * x[2]);
    return dp;
  };

  m.p1.dim = 3;
  m.p1.name = "euler.p1";
  m.p1.rank_generic = 2;
  m.p1.bivector = [eta](const Eigen::VectorXd& x) {
    Eigen::MatrixXd pi = Eigen::MatrixXd::Zero(3, 3);
    set_pi(pi, 0, 1, -x[1]);
    set_pi(pi, 0, 2, x[2]);
    set_pi(pi, 1, 2, -eta * x[1] * x[2] + 2.0 * kernel_E(x[0], eta));
    return pi;
  };
  m.p1.partials = [eta](const Eigen::VectorXd& x) {
    std::vector<Eigen::MatrixXd> dp(3, Eigen::MatrixXd::Zero(3, 3));
    set_pi(dp[0], 1, 2, 2.0 * kernel_E_du(x[0], eta));
    set_pi(dp[1], 0, 1, -1.0);
    set_pi(dp[1], 1, 2, -eta * x[2]);
    set_pi(dp[2], 0, 2, 1.0);
    set_pi(dp[2], 1, 2, -eta * x[1]);
    return dp;
  };

  m.h0.dim = 3;
  m.h0.name = "H0";
  m.h0.eval = [eta](const Eigen::VectorXd& x) {
    return std::exp(eta * x[0]) * x[1] * x[2] + kernel_W(x[0], eta);
  };
  m.h0.grad = [eta](const Eigen::VectorXd& x) {
    const double e = std::exp(eta * x[0]);
    Eigen::VectorXd g(3);
    g[0] = eta * e * x[1] * x[2] + kernel_W_du(x[0], eta);
    g[1] = e * x[2];
    g[2] = e * x[1];
    return g;
  };

  m.h1.dim = 3;
  m.h1.name = "H1";
  m.h1.eval = [eta](const Eigen::VectorXd& x) {
    return -std::exp(eta * x[0]) * (x[1] * x[1] + x[2] * x[2]) / 2.0 -
           kernel_W(x[0], eta) / 2.0;
  };
  m.h1.grad = [eta](const Eigen::VectorXd& x) {
    const double e = std::exp(eta * x[0]);
    Eigen::VectorXd g(3);
    g[0] = -eta * e * (x[1] * x[1] + x[2] * x[2]) / 2.0 - kernel_W_du(x[0], eta) / 2.0;
    g[1] = -e * x[1];
    g[2] = -e * x[2];
    return g;
  };

  ScalarField c0 = m.h1;
  c0.name = "C0";
  ScalarField c1 = m.h0;
  c1.name = "C1";
  m.casimirs0 = {c0};
  m.casimirs1 = {c1};
  m.p0.casimirs = m.casimirs0;
  m.p1.casimirs = m.casimirs1;
  return m;
}

ModelBundle build_model(const std::string& system, double eta) {
  if (system == "lorenz") return build_lorenz(eta);
  if (system == "euler") return build_euler(eta);
  throw std::invalid_argument("unknown system '" + system + "' (expected lorenz|euler)");
}

PoissonStructure deformed_pencil(const ModelBundle& m, double alpha) {
  PoissonStructure p = blend_structures(m.p0, m.p1, alpha);
  p.name = m.name + ".pencil(" + std::to_string(alpha) + ")";
  p.rank_generic = 2;
  if (m.name == "lorenz") p.casimirs = {m.extra_invariants.front()};
  return p;
}

std::function<Eigen::VectorXd(const Eigen::VectorXd&)> hamiltonian_field(
    const PoissonStructure& p, const ScalarField& h) {
  return [p, h](const Eigen::VectorXd& x) { return hamiltonian_vf(p, h, x); };
}

Eigen::Vector3d lorenz_from_conservative(const Eigen::Vector3d& xyz) {
  return {xyz[0], 2.0 * xyz[1], 2.0 * xyz[2] - 2.0};
}

Eigen::Vector3d lorenz_to_conservative(const Eigen::Vector3d& x123) {
  return {x123[0], x123[1] / 2.0, (x123[2] + 2.0) / 2.0};
}

Eigen::VectorXd CoupledBundle::reduce(const Eigen::VectorXd& x) const {
  const int n = base.group.dim;
  Eigen::VectorXd r = x.segment(0, n);
  for (int c = 1; c < copies; ++c) r = base.group.multiply(r, x.segment(c * n, n));
  return r;
}

Eigen::MatrixXd CoupledBundle::reduce_jacobian(const Eigen::VectorXd& x) const {
  const int n = base.group.dim;
  Eigen::MatrixXd j = Eigen::MatrixXd::Zero(n, n * copies);
  j.block(0, 0, n, n) = Eigen::MatrixXd::Identity(n, n);
  Eigen::VectorXd r = x.segment(0, n);
  for (int c = 1; c < copies; ++c) {
    const Eigen::VectorXd part = x.segment(c * n, n);
    auto [jr, jl] = translation_jacobians(base.group, r, part);
    j.block(0, 0, n, c * n) = jr * j.block(0, 0, n, c * n);
    j.block(0, c * n, n, n) = jl;
    r = base.group.multiply(r, part);
  }
  return j;
}

std::vector<ScalarField> CoupledBundle::monitors(int which) const {
  std::vector<ScalarField> m = {h0N, h1N};
  const PoissonStructure& p = structure(which);
  m.insert(m.end(), p.casimirs.begin(), p.casimirs.end());
  return m;
}

namespace {

ScalarField coproduct_field(const CoupledBundle* cb, const ScalarField& h, const std::string& name) {
  ScalarField f;
  f.dim = cb->base.group.dim * cb->copies;
  f.name = name;
  // Copies of the bundle pieces needed are carried via a shared_ptr snapshot
  // so the field stays valid independently of the bundle object.
  auto base_group = cb->base.group;
  const int copies = cb->copies;
  const int n = base_group.dim;
  auto reduce = [base_group, copies, n](const Eigen::VectorXd& x) {
    Eigen::VectorXd r = x.segment(0, n);
    for (int c = 1; c < copies; ++c) r = base_group.multiply(r, x.segment(c * n, n));
    return r;
  };
  auto reduce_jac = [base_group, copies, n](const Eigen::VectorXd& x) {
    Eigen::MatrixXd j = Eigen::MatrixXd::Zero(n, n * copies);
    j.block(0, 0, n, n) = Eigen::MatrixXd::Identity(n, n);
    Eigen::VectorXd r = x.segment(0, n);
    for (int c = 1; c < copies; ++c) {
      const Eigen::VectorXd part = x.segment(c * n, n);
      auto [jr, jl] = translation_jacobians(base_group, r, part);
      j.block(0, 0, n, c * n) = jr * j.block(0, 0, n, c * n);
      j.block(0, c * n, n, n) = jl;
      r = base_group.multiply(r, part);
    }
    return j;
  };
  auto ev = h.eval;
  auto gr = h.grad;
  f.eval = [reduce, ev](const Eigen::VectorXd& x) { return ev(reduce(x)); };
  f.grad = [reduce, reduce_jac, gr](const Eigen::VectorXd& x) {
    return (reduce_jac(x).transpose() * gr(reduce(x))).eval();
  };
  return f;
}

}  // namespace

CoupledBundle coupled_model(const ModelBundle& m, int copies) {
  if (copies < 2) throw std::invalid_argument("coupled_model: copies must be >= 2");
  CoupledBundle cb;
  cb.base = m;
  cb.copies = copies;
  cb.group = product_group_n(m.group, copies);
  cb.p0N = product_structure(m.p0, copies);
  cb.p1N = product_structure(m.p1, copies);
  cb.h0N = coproduct_field(&cb, m.h0, "H0N");
  cb.h1N = coproduct_field(&cb, m.h1, "H1N");
  return cb;
}

Eigen::VectorXd chart_to_xz(const CoupledBundle& cb, const Eigen::VectorXd& yz) {
  const int n = cb.base.group.dim;
  Eigen::VectorXd out = yz;
  out.segment(0, n) = cb.base.group.multiply(yz.segment(0, n), yz.segment(n, n));
  return out;
}

Eigen::VectorXd chart_from_xz(const CoupledBundle& cb, const Eigen::VectorXd& xz) {
  const int n = cb.base.group.dim;
  Eigen::VectorXd out = xz;
  out.segment(0, n) =
      cb.base.group.multiply(xz.segment(0, n), cb.base.group.inverse(xz.segment(n, n)));
  return out;
}

PoissonStructure chart_xz_structure(const CoupledBundle& cb, int which) {
  if (cb.copies != 2) throw std::invalid_argument("chart_xz_structure: needs exactly 2 copies");
  PoissonStructure out;
  const int n = cb.base.group.dim;
  out.dim = 2 * n;
  out.name = cb.base.name + (which == 0 ? ".p0" : ".p1") + ".xz";
  out.rank_generic = cb.structure(which).rank_generic;
  GroupLaw g = cb.base.group;
  auto prod_biv = cb.structure(which).bivector;
  out.bivector = [g, prod_biv, n](const Eigen::VectorXd& q) {
    const Eigen::VectorXd z = q.segment(n, n);
    Eigen::VectorXd p(2 * n);
    p.segment(0, n) = g.multiply(q.segment(0, n), g.inverse(z));  // y = x * z^{-1}
    p.segment(n, n) = z;
    auto [jr, jl] = translation_jacobians(g, p.segment(0, n), z);
    Eigen::MatrixXd jac = Eigen::MatrixXd::Zero(2 * n, 2 * n);
    jac.block(0, 0, n, n) = jr;
    jac.block(0, n, n, n) = jl;
    jac.block(n, n, n, n) = Eigen::MatrixXd::Identity(n, n);
    return (jac * prod_biv(p) * jac.transpose()).eval();
  };
  return out;
}

bool apply_fault(ModelBundle& m, const std::string& fault) {
  auto flip_entry = [](PoissonStructure& p, int i, int j) {
    auto biv = p.bivector;
    p.bivector = [biv, i, j](const Eigen::VectorXd& x) {
      Eigen::MatrixXd pi = biv(x);
      pi(i, j) = -pi(i, j);
      pi(j, i) = -pi(j, i);
      return pi;
    };
    if (p.partials) {
      auto par = p.partials;
      p.partials = [par, i, j](const Eigen::VectorXd& x) {
        std::vector<Eigen::MatrixXd> dp = par(x);
        for (auto& d : dp) {
          d(i, j) = -d(i, j);
          d(j, i) = -d(j, i);
        }
        return dp;
      };
    }
  };

  if (m.name == "lorenz") {
    if (fault == "sign-flip-pi12-0eta") {
      flip_entry(m.p0, 0, 1);
    } else if (fault == "sign-flip-pi23") {
      flip_entry(m.p1, 1, 2);
    } else if (fault == "cocycle-sign-psi2") {
      m.cocycle.set(1, 2, 3, m.eta);  // psi(X2) -> +eta X3 ^ X4
    } else {
      return false;
    }
  } else if (m.name == "euler") {
    if (fault == "sign-flip-pi23-0eta") {
      // -eta x2^2/2 term of pi_23 flipped to +eta x2^2/2
      const double eta = m.eta;
      auto biv = m.p0.bivector;
      m.p0.bivector = [biv, eta](const Eigen::VectorXd& x) {
        Eigen::MatrixXd pi = biv(x);
        pi(1, 2) += eta * x[1] * x[1];
        pi(2, 1) -= eta * x[1] * x[1];
        return pi;
      };
      auto par = m.p0.partials;
      m.p0.partials = [par, eta](const Eigen::VectorXd& x) {
        std::vector<Eigen::MatrixXd> dp = par(x);
        dp[1](1, 2) += 2.0 * eta * x[1];
        dp[1](2, 1) -= 2.0 * eta * x[1];
        return dp;
      };
    } else if (fault == "sign-flip-pi13-1eta") {
      flip_entry(m.p1, 0, 2);
    } else if (fault == "cocycle-sign-psi2") {
      m.cocycle.set(1, 1, 0, -m.eta);  // psi(X2) -> -eta X2 ^ X1
    } else {
      return false;
    }
  } else {
    return false;
  }
  m.fault = fault;
  return true;
}

std::vector<std::string> fault_names(const std::string& system) {
  if (system == "lorenz")
    return {"sign-flip-pi12-0eta", "sign-flip-pi23", "cocycle-sign-psi2"};
  if (system == "euler")
    return {"sign-flip-pi23-0eta", "sign-flip-pi13-1eta", "cocycle-sign-psi2"};
  return {};
}

nlohmann::json model_card(const ModelBundle& m) {
  nlohmann::json card;
  card["name"] = m.name;
  card["eta"] = m.eta;
  card["dim"] = m.group.dim;
  if (!m.fault.empty()) card["fault"] = m.fault;
  if (m.name == "lorenz") {
    card["group"] =
        "g*h = (g1+h1, g2+h2 cos(eta g4)+h3 sin(eta g4), g3-h2 sin(eta g4)+h3 cos(eta g4), g4+h4)";
    card["brackets"]["p0"] = {"{x1,x2} = -x3/2", "{x1,x3} = x2/2"};
    card["brackets"]["p1"] = {"{x1,x2} = sin(eta x4)/(4 eta)",
                              "{x1,x3} = (cos(eta x4)-1)/(4 eta)", "{x2,x3} = -x1/2"};
    card["hamiltonians"]["H0"] =
        "sin(eta x4)/eta * x3 - (cos(eta x4)-1)/eta * x2 - x1^2";
    card["hamiltonians"]["H1"] = "x2^2 + x3^2";
    card["casimirs"]["p0"] = {"x2^2 + x3^2", "x4"};
    card["casimirs"]["p1"] = {"sin(eta x4)/eta * x3 - (cos(eta x4)-1)/eta * x2 - x1^2", "x4"};
  } else {
    card["group"] = "g*h = (g1+h1, g2+h2 exp(-eta g1), g3+h3 exp(-eta g1))";
    card["brackets"]["p0"] = {"{x1,x2} = -x3", "{x1,x3} = x2",
                              "{x2,x3} = -eta (x2^2+x3^2)/2 + (exp(-2 eta x1)-1)/(2 eta)"};
    card["brackets"]["p1"] = {"{x1,x2} = -x2", "{x1,x3} = x3",
                              "{x2,x3} = -eta x2 x3 + (exp(-2 eta x1)-1)/eta"};
    card["hamiltonians"]["H0"] =
        "exp(eta x1) x2 x3 + (exp(eta x1)+exp(-eta x1)-2)/eta^2";
    card["hamiltonians"]["H1"] =
        "-exp(eta x1) (x2^2+x3^2)/2 - (exp(eta x1)+exp(-eta x1)-2)/(2 eta^2)";
    card["casimirs"]["p0"] = {"-exp(eta x1) (x2^2+x3^2)/2 - (exp(eta x1)+exp(-eta x1)-2)/(2 eta^2)"};
    card["casimirs"]["p1"] = {"exp(eta x1) x2 x3 + (exp(eta x1)+exp(-eta x1)-2)/eta^2"};
  }
  return card;
}

}  // namespace pld
