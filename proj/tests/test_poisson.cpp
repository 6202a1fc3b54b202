#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "core/models.hpp"
#include "core/poisson.hpp"
#include "core/rng.hpp"

using namespace pld;

namespace {

ScalarField coordinate(int dim, int idx) {
  ScalarField f;
  f.dim = dim;
  f.name = "x" + std::to_string(idx + 1);
  f.eval = [idx](const Eigen::VectorXd& x) { return x[idx]; };
  f.grad = [dim, idx](const Eigen::VectorXd&) {
    Eigen::VectorXd g = Eigen::VectorXd::Zero(dim);
    g[idx] = 1.0;
    return g;
  };
  return f;
}

// Brute-force Jacobi oracle over all (i,j,k) triples, including repeats,
// with independently computed finite-difference partials.
double jacobi_oracle_at(const PoissonStructure& p, const Eigen::VectorXd& x) {
  const int n = p.dim;
  const double h = 1e-6;
  std::vector<Eigen::MatrixXd> dp(n);
  Eigen::VectorXd xp = x;
  for (int k = 0; k < n; ++k) {
    xp[k] = x[k] + h;
    const Eigen::MatrixXd fp = p.bivector(xp);
    xp[k] = x[k] - h;
    const Eigen::MatrixXd fm = p.bivector(xp);
    xp[k] = x[k];
    dp[k] = (fp - fm) / (2 * h);
  }
  const Eigen::MatrixXd pi = p.bivector(x);
  double worst = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        double s = 0.0;
        for (int l = 0; l < n; ++l)
          s += pi(i, l) * dp[l](j, k) + pi(j, l) * dp[l](k, i) + pi(k, l) * dp[l](i, j);
        worst = std::max(worst, std::abs(s));
      }
  return worst;
}

}  // namespace

TEST_CASE("linear_poisson_from_constants: Lorenz bracket 1 at (1,2,3,4)") {
  const ModelBundle m = build_lorenz(0.0);
  const PoissonStructure p = linear_poisson_from_constants(m.sc1);
  Eigen::VectorXd x(4);
  x << 1, 2, 3, 4;
  const Eigen::MatrixXd pi = p.bivector(x);
  CHECK(pi(0, 1) == doctest::Approx(1.0));  // x4/4
  CHECK(pi(1, 2) == doctest::Approx(-0.5));
  CHECK(pi(0, 2) == 0.0);
}

TEST_CASE("linear_poisson_from_constants: zero at the origin") {
  const ModelBundle m = build_euler(0.0);
  const PoissonStructure p = linear_poisson_from_constants(m.sc0);
  CHECK(p.bivector(Eigen::VectorXd::Zero(3)).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("linear_poisson_from_constants: Euler so(3) at (1,1,1)") {
  const ModelBundle m = build_euler(0.0);
  const PoissonStructure p = linear_poisson_from_constants(m.sc0);
  Eigen::VectorXd x(3);
  x << 1, 1, 1;
  const Eigen::MatrixXd pi = p.bivector(x);
  CHECK(pi(0, 1) == doctest::Approx(-1.0));
  CHECK(pi(0, 2) == doctest::Approx(1.0));
  CHECK(pi(1, 2) == doctest::Approx(-1.0));
}

TEST_CASE("poisson_bracket: antisymmetry makes {f,f} vanish") {
  const ModelBundle m = build_lorenz(0.9);
  Rng rng(3);
  for (int i = 0; i < 10; ++i) {
    const Eigen::VectorXd x = rng.point(4, -2, 2);
    CHECK(std::abs(poisson_bracket(m.p0, m.h0, m.h0, x)) == 0.0);
  }
}

TEST_CASE("poisson_bracket: {x1,x2}_0 at (0,0,2,0) equals -1") {
  const ModelBundle m = build_lorenz(0.0);
  Eigen::VectorXd x(4);
  x << 0, 0, 2, 0;
  CHECK(poisson_bracket(m.p0, coordinate(4, 0), coordinate(4, 1), x) == doctest::Approx(-1.0));
}

TEST_CASE("poisson_bracket: Euler {x2,x3}_1 at (3,0,0) equals -6") {
  const ModelBundle m = build_euler(0.0);
  Eigen::VectorXd x(3);
  x << 3, 0, 0;
  CHECK(poisson_bracket(m.p1, coordinate(3, 1), coordinate(3, 2), x) == doctest::Approx(-6.0));
}

TEST_CASE("hamiltonian_vf: Lorenz (p0, H0) at (1,2,3,4)") {
  const ModelBundle m = build_lorenz(0.0);
  Eigen::VectorXd x(4);
  x << 1, 2, 3, 4;
  const Eigen::VectorXd f = hamiltonian_vf(m.p0, m.h0, x);
  CHECK(f[0] == doctest::Approx(4.0));
  CHECK(f[1] == doctest::Approx(-3.0));
  CHECK(f[2] == doctest::Approx(2.0));
  CHECK(f[3] == 0.0);
}

TEST_CASE("hamiltonian_vf: Euler equilibrium at (0,1,1)") {
  const ModelBundle m = build_euler(0.0);
  Eigen::VectorXd x(3);
  x << 0, 1, 1;
  CHECK(hamiltonian_vf(m.p0, m.h0, x).lpNorm<Eigen::Infinity>() <= 1e-15);
}

TEST_CASE("hamiltonian_vf of a Casimir vanishes") {
  Rng rng(11);
  for (const auto& m : {build_lorenz(0.8), build_euler(-0.6)}) {
    for (int i = 0; i < 20; ++i) {
      const Eigen::VectorXd x = rng.point(m.p0.dim, -2, 2);
      for (const ScalarField& c : m.p0.casimirs)
        CHECK(hamiltonian_vf(m.p0, c, x).lpNorm<Eigen::Infinity>() <= 1e-12);
      for (const ScalarField& c : m.p1.casimirs)
        CHECK(hamiltonian_vf(m.p1, c, x).lpNorm<Eigen::Infinity>() <= 1e-12);
    }
  }
}

TEST_CASE("jacobi_residual_at: deformed Lorenz p1") {
  const ModelBundle m = build_lorenz(0.5);
  Eigen::VectorXd x(4);
  x << 1, 2, 3, 4;
  CHECK(jacobi_residual_at(m.p1, x) <= 1e-9);
  CHECK(jacobi_oracle_at(m.p1, x) <= 1e-9);
}

TEST_CASE("jacobi_residual_at: constant bivector is flat") {
  PoissonStructure p;
  p.dim = 3;
  p.bivector = [](const Eigen::VectorXd&) {
    Eigen::MatrixXd pi = Eigen::MatrixXd::Zero(3, 3);
    pi(0, 1) = 2.0;
    pi(1, 0) = -2.0;
    return pi;
  };
  Eigen::VectorXd x(3);
  x << 0.3, -1.0, 2.0;
  CHECK(jacobi_residual_at(p, x) == 0.0);
}

TEST_CASE("jacobi_residual_at: sign-corrupted Euler p0 fails loudly") {
  ModelBundle m = build_euler(1.0);
  REQUIRE(apply_fault(m, "sign-flip-pi23-0eta"));
  Eigen::VectorXd x(3);
  x << 1, 1, 1;
  CHECK(jacobi_residual_at(m.p0, x) > 1e-3);
  CHECK(jacobi_oracle_at(m.p0, x) > 1e-3);
}

TEST_CASE("jacobi agrees with the brute-force oracle on random points") {
  Rng rng(mix_seed(42, "jacobi-oracle"));
  for (const auto& m : {build_lorenz(0.5), build_euler(0.25)}) {
    for (int i = 0; i < 25; ++i) {
      const Eigen::VectorXd x = rng.point(m.p0.dim, -2, 2);
      CHECK(jacobi_residual_at(m.p0, x) <= 1e-9);
      CHECK(jacobi_residual_at(m.p1, x) <= 1e-9);
      CHECK(jacobi_oracle_at(m.p0, x) <= 1e-8);
      CHECK(jacobi_oracle_at(m.p1, x) <= 1e-8);
    }
  }
}

TEST_CASE("compatibility_residual_at: deformed pairs are compatible") {
  Rng rng(mix_seed(42, "compat"));
  for (const auto& m : {build_lorenz(0.25), build_euler(1.0)}) {
    for (int i = 0; i < 100; ++i) {
      const Eigen::VectorXd x = rng.point(m.p0.dim, -2, 2);
      CHECK(compatibility_residual_at(m.p0, m.p1, x) <= 1e-9);
    }
  }
}

TEST_CASE("compatibility_residual_at: Euler linear pair at (1,2,3)") {
  const ModelBundle m = build_euler(0.0);
  Eigen::VectorXd x(3);
  x << 1, 2, 3;
  CHECK(compatibility_residual_at(m.p0, m.p1, x) <= 1e-9);
}

TEST_CASE("compatibility against the zero structure is trivial") {
  const ModelBundle m = build_lorenz(0.7);
  PoissonStructure zero;
  zero.dim = 4;
  zero.bivector = [](const Eigen::VectorXd&) { return Eigen::MatrixXd::Zero(4, 4); };
  Eigen::VectorXd x(4);
  x << 1, -1, 2, 0.5;
  CHECK(compatibility_residual_at(m.p0, zero, x) == 0.0);
}

TEST_CASE("casimir_residual_at: catalog examples") {
  {
    const ModelBundle m = build_lorenz(0.8);
    Eigen::VectorXd x(4);
    x << 1, 2, 3, 4;
    CHECK(casimir_residual_at(m.p0, m.h1, x) <= 1e-12);  // C_0eta under {.,.}_0eta
  }
  {
    const ModelBundle m = build_euler(0.4);
    Eigen::VectorXd x(3);
    x << 0.3, 1.0, -2.0;
    CHECK(casimir_residual_at(m.p1, m.h0, x) <= 1e-10);  // C_1eta under {.,.}_1eta
  }
}

TEST_CASE("casimir_residual_at: constant field") {
  const ModelBundle m = build_euler(0.9);
  ScalarField c;
  c.dim = 3;
  c.name = "const";
  c.eval = [](const Eigen::VectorXd&) { return 4.2; };
  c.grad = [](const Eigen::VectorXd&) { return Eigen::VectorXd::Zero(3); };
  Eigen::VectorXd x(3);
  x << 1, 2, 3;
  CHECK(casimir_residual_at(m.p0, c, x) == 0.0);
}

TEST_CASE("bihamiltonian_residual_at: deformed Lorenz on random points") {
  const ModelBundle m = build_lorenz(0.6);
  Rng rng(mix_seed(42, "biham"));
  for (int i = 0; i < 100; ++i)
    CHECK(bihamiltonian_residual_at(m.bihamiltonian(), rng.point(4, -2, 2)) <= 1e-10);
}

TEST_CASE("bihamiltonian_residual_at: undeformed limit and Euler point") {
  {
    const ModelBundle m = build_lorenz(0.0);
    Rng rng(5);
    for (int i = 0; i < 20; ++i)
      CHECK(bihamiltonian_residual_at(m.bihamiltonian(), rng.point(4, -2, 2)) <= 1e-12);
  }
  {
    const ModelBundle m = build_euler(1.0);
    Eigen::VectorXd x(3);
    x << 0.1, 0.2, 0.3;
    CHECK(bihamiltonian_residual_at(m.bihamiltonian(), x) <= 1e-10);
  }
}

TEST_CASE("gradient_check: catalog Hamiltonians") {
  {
    const ModelBundle m = build_lorenz(0.3);
    Eigen::VectorXd x(4);
    x << 1, 2, 3, 4;
    CHECK(gradient_check(m.h0, x) <= 1e-6);
  }
  {
    ScalarField lin;
    lin.dim = 2;
    lin.eval = [](const Eigen::VectorXd& x) { return 3.0 * x[0] - 2.0 * x[1]; };
    lin.grad = [](const Eigen::VectorXd&) {
      Eigen::VectorXd g(2);
      g << 3.0, -2.0;
      return g;
    };
    Eigen::VectorXd x(2);
    x << 0.4, -1.0;
    CHECK(gradient_check(lin, x) <= 1e-10);
  }
  {
    const CoupledBundle cb = coupled_model(build_euler(1.0), 2);
    Rng rng(mix_seed(42, "gradcheck-coupled"));
    for (int i = 0; i < 20; ++i) {
      const Eigen::VectorXd x = rng.point(6, -1.5, 1.5);
      CHECK(gradient_check(cb.h0N, x) <= 1e-6);
      CHECK(gradient_check(cb.h1N, x) <= 1e-6);
    }
  }
}

TEST_CASE("bivector antisymmetry holds exactly at random points") {
  Rng rng(mix_seed(42, "antisym"));
  for (const auto& m : {build_lorenz(1.0), build_euler(-1.0)}) {
    for (int i = 0; i < 1000; ++i) {
      const Eigen::VectorXd x = rng.point(m.p0.dim, -2, 2);
      CHECK((m.p0.bivector(x) + m.p0.bivector(x).transpose()).cwiseAbs().maxCoeff() == 0.0);
      CHECK((m.p1.bivector(x) + m.p1.bivector(x).transpose()).cwiseAbs().maxCoeff() == 0.0);
    }
  }
}

TEST_CASE("involution: {H0,H1} vanishes under both brackets") {
  Rng rng(mix_seed(42, "involution"));
  for (const auto& m : {build_lorenz(0.55), build_euler(0.85)}) {
    for (int i = 0; i < 100; ++i) {
      const Eigen::VectorXd x = rng.point(m.p0.dim, -2, 2);
      CHECK(std::abs(poisson_bracket(m.p0, m.h0, m.h1, x)) <= 1e-10);
      CHECK(std::abs(poisson_bracket(m.p1, m.h0, m.h1, x)) <= 1e-10);
    }
  }
}

TEST_CASE("numerical rank matches the recorded generic rank") {
  Rng rng(mix_seed(42, "rank"));
  for (const auto& m : {build_lorenz(0.45), build_euler(0.3)}) {
    for (int i = 0; i < 50; ++i) {
      const Eigen::VectorXd x = rng.point(m.p0.dim, -2, 2);
      CHECK(numerical_rank(m.p0, x) == m.p0.rank_generic);
      CHECK(numerical_rank(m.p1, x) == m.p1.rank_generic);
    }
    const PoissonStructure prod = product_structure(m.p0, 2);
    const Eigen::VectorXd x = rng.point(prod.dim, -2, 2);
    CHECK(numerical_rank(prod, x) == prod.rank_generic);
  }
}

TEST_CASE("deformation limit: first-order convergence of the bivectors") {
  Rng rng(mix_seed(42, "limit"));
  for (const std::string& sys : {std::string("lorenz"), std::string("euler")}) {
    const ModelBundle base = build_model(sys, 0.0);
    const Eigen::VectorXd x = rng.point(base.p0.dim, -2, 2);
    const std::vector<double> etas = {1e-1, 1e-2, 1e-3};
    auto slope_of = [&](auto&& diff) {
      std::vector<double> ds;
      for (double e : etas) ds.push_back(diff(e));
      double su = 0, sv = 0, suu = 0, suv = 0;
      for (size_t i = 0; i < 3; ++i) {
        const double u = std::log(etas[i]), v = std::log(ds[i]);
        su += u, sv += v, suu += u * u, suv += u * v;
      }
      return (3 * suv - su * sv) / (3 * suu - su * su);
    };
    // Only structures that actually deform contribute a slope; Lorenz p0 is
    // eta-independent.
    if (sys == "euler") {
      const double s0 = slope_of([&](double e) {
        return (build_model(sys, e).p0.bivector(x) - base.p0.bivector(x)).cwiseAbs().maxCoeff();
      });
      CHECK(s0 == doctest::Approx(1.0).epsilon(0.1));
    } else {
      for (double e : {1e-1, 1e-2}) {
        const ModelBundle d = build_model(sys, e);
        CHECK((d.p0.bivector(x) - base.p0.bivector(x)).cwiseAbs().maxCoeff() == 0.0);
      }
    }
    const double s1 = slope_of([&](double e) {
      return (build_model(sys, e).p1.bivector(x) - base.p1.bivector(x)).cwiseAbs().maxCoeff();
    });
    CHECK(s1 == doctest::Approx(1.0).epsilon(0.1));
    const double sc = slope_of([&](double e) {
      return std::abs(build_model(sys, e).h0.eval(x) - base.h0.eval(x));
    });
    CHECK(sc == doctest::Approx(1.0).epsilon(0.1));
  }
}
