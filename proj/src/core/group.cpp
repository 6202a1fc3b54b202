#include "core/group.hpp"

#include <stdexcept>

namespace pld {

namespace {

Eigen::MatrixXd fd_jacobian(const std::function<Eigen::VectorXd(const Eigen::VectorXd&)>& f,
                            const Eigen::VectorXd& x, double h = 1e-6) {
  const int n = static_cast<int>(x.size());
  Eigen::MatrixXd j(f(x).size(), n);
  Eigen::VectorXd xp = x;
  for (int k = 0; k < n; ++k) {
    const double xk = x[k];
    xp[k] = xk + h;
    const Eigen::VectorXd fp = f(xp);
    xp[k] = xk - h;
    const Eigen::VectorXd fm = f(xp);
    xp[k] = xk;
    j.col(k) = (fp - fm) / (2.0 * h);
  }
  return j;
}

}  // namespace

std::pair<Eigen::MatrixXd, Eigen::MatrixXd> translation_jacobians(const GroupLaw& g,
                                                                  const Eigen::VectorXd& a,
                                                                  const Eigen::VectorXd& b) {
  Eigen::MatrixXd jr, jl;
  if (g.jac_first)
    jr = g.jac_first(a, b);
  else
    jr = fd_jacobian([&](const Eigen::VectorXd& t) { return g.multiply(t, b); }, a);
  if (g.jac_second)
    jl = g.jac_second(a, b);
  else
    jl = fd_jacobian([&](const Eigen::VectorXd& t) { return g.multiply(a, t); }, b);
  return {jr, jl};
}

double multiplicativity_residual(const GroupLaw& gl, const PoissonStructure& p,
                                 const Eigen::VectorXd& g, const Eigen::VectorXd& h,
                                 bool force_fd_jacobians) {
  if (gl.dim != p.dim || g.size() != gl.dim || h.size() != gl.dim)
    throw std::invalid_argument("multiplicativity_residual: dimension mismatch");
  Eigen::MatrixXd jr, jl;
  if (force_fd_jacobians) {
    jr = fd_jacobian([&](const Eigen::VectorXd& t) { return gl.multiply(t, h); }, g);
    jl = fd_jacobian([&](const Eigen::VectorXd& t) { return gl.multiply(g, t); }, h);
  } else {
    std::tie(jr, jl) = translation_jacobians(gl, g, h);
  }
  const Eigen::MatrixXd lhs = p.bivector(gl.multiply(g, h));
  const Eigen::MatrixXd rhs = jr * p.bivector(g) * jr.transpose() +
                              jl * p.bivector(h) * jl.transpose();
  return (lhs - rhs).cwiseAbs().maxCoeff();
}

Eigen::VectorXd adjoint(const GroupLaw& gl, const Eigen::VectorXd& g, const Eigen::VectorXd& x) {
  if (!gl.adjoint_table) throw std::invalid_argument("adjoint: no table for this group");
  if (g.size() != gl.dim || x.size() != gl.dim)
    throw std::invalid_argument("adjoint: dimension mismatch");
  return gl.adjoint_table(g, x);
}

Eigen::VectorXd group_exp(const GroupLaw& gl, const Eigen::VectorXd& x) {
  // Flow of the left-invariant extension from the identity, t in [0,1].
  auto field = [&](const Eigen::VectorXd& g) -> Eigen::VectorXd {
    return invariant_frame(gl, FrameSide::Left, g) * x;
  };
  Eigen::VectorXd g = gl.identity;
  const double dt = 1e-3;
  const int steps = 1000;
  for (int s = 0; s < steps; ++s) {
    const Eigen::VectorXd k1 = field(g);
    const Eigen::VectorXd k2 = field(g + 0.5 * dt * k1);
    const Eigen::VectorXd k3 = field(g + 0.5 * dt * k2);
    const Eigen::VectorXd k4 = field(g + dt * k3);
    g += dt / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
  }
  return g;
}

Eigen::VectorXd adjoint_by_conjugation(const GroupLaw& gl, const Eigen::VectorXd& g,
                                       const Eigen::VectorXd& x) {
  const Eigen::VectorXd ginv = gl.inverse(g);
  const double eps = 1e-4;
  const Eigen::VectorXd cp = gl.multiply(gl.multiply(g, group_exp(gl, eps * x)), ginv);
  const Eigen::VectorXd cm = gl.multiply(gl.multiply(g, group_exp(gl, -eps * x)), ginv);
  return (cp - cm) / (2.0 * eps);
}

Eigen::MatrixXd invariant_frame(const GroupLaw& gl, FrameSide side, const Eigen::VectorXd& x) {
  if (side == FrameSide::Left) {
    if (gl.left_frame) return gl.left_frame(x);
    // Left-invariant fields: d/dh (x*h) at h = e.
    return translation_jacobians(gl, x, gl.identity).second;
  }
  if (gl.right_frame) return gl.right_frame(x);
  return translation_jacobians(gl, gl.identity, x).first;
}

GroupLaw product_group(const GroupLaw& g) { return product_group_n(g, 2); }

GroupLaw product_group_n(const GroupLaw& g, int copies) {
  if (copies < 1) throw std::invalid_argument("product_group_n: copies must be >= 1");
  GroupLaw p;
  const int n = g.dim;
  p.dim = n * copies;
  p.name = g.name + "^" + std::to_string(copies);
  p.identity = Eigen::VectorXd::Zero(p.dim);
  for (int c = 0; c < copies; ++c) p.identity.segment(c * n, n) = g.identity;

  auto mul = g.multiply;
  p.multiply = [mul, n, copies](const Eigen::VectorXd& a, const Eigen::VectorXd& b) {
    Eigen::VectorXd out(n * copies);
    for (int c = 0; c < copies; ++c)
      out.segment(c * n, n) = mul(a.segment(c * n, n), b.segment(c * n, n));
    return out;
  };
  auto inv = g.inverse;
  p.inverse = [inv, n, copies](const Eigen::VectorXd& a) {
    Eigen::VectorXd out(n * copies);
    for (int c = 0; c < copies; ++c) out.segment(c * n, n) = inv(a.segment(c * n, n));
    return out;
  };
  if (g.jac_first) {
    auto jf = g.jac_first;
    p.jac_first = [jf, n, copies](const Eigen::VectorXd& a, const Eigen::VectorXd& b) {
      Eigen::MatrixXd out = Eigen::MatrixXd::Zero(n * copies, n * copies);
      for (int c = 0; c < copies; ++c)
        out.block(c * n, c * n, n, n) = jf(a.segment(c * n, n), b.segment(c * n, n));
      return out;
    };
  }
  if (g.jac_second) {
    auto js = g.jac_second;
    p.jac_second = [js, n, copies](const Eigen::VectorXd& a, const Eigen::VectorXd& b) {
      Eigen::MatrixXd out = Eigen::MatrixXd::Zero(n * copies, n * copies);
      for (int c = 0; c < copies; ++c)
        out.block(c * n, c * n, n, n) = js(a.segment(c * n, n), b.segment(c * n, n));
      return out;
    };
  }
  if (g.adjoint_table) {
    auto ad = g.adjoint_table;
    p.adjoint_table = [ad, n, copies](const Eigen::VectorXd& a, const Eigen::VectorXd& x) {
      Eigen::VectorXd out(n * copies);
      for (int c = 0; c < copies; ++c)
        out.segment(c * n, n) = ad(a.segment(c * n, n), x.segment(c * n, n));
      return out;
    };
  }
  if (g.left_frame) {
    auto lf = g.left_frame;
    p.left_frame = [lf, n, copies](const Eigen::VectorXd& a) {
      Eigen::MatrixXd out = Eigen::MatrixXd::Zero(n * copies, n * copies);
      for (int c = 0; c < copies; ++c) out.block(c * n, c * n, n, n) = lf(a.segment(c * n, n));
      return out;
    };
  }
  if (g.right_frame) {
    auto rf = g.right_frame;
    p.right_frame = [rf, n, copies](const Eigen::VectorXd& a) {
      Eigen::MatrixXd out = Eigen::MatrixXd::Zero(n * copies, n * copies);
      for (int c = 0; c < copies; ++c) out.block(c * n, c * n, n, n) = rf(a.segment(c * n, n));
      return out;
    };
  }
  return p;
}

}  // namespace pld
