// Acceptance suite: one line per criterion, nonzero exit when any fails.
// Every tolerance is pinned here, in code.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "core/integrate.hpp"
#include "core/models.hpp"
#include "core/reduction.hpp"
#include "core/rng.hpp"
#include "core/verify.hpp"

using namespace pld;

namespace {

constexpr uint64_t kSeed = 42;

struct Criterion {
  std::string name;
  bool pass = true;
  double worst = 0.0;
  std::string note;

  void fold(double value, double tol, const std::string& where) {
    if (value > worst) worst = value;
    if (value > tol) {
      pass = false;
      if (!note.empty()) note += "; ";
      note += where + " = " + std::to_string(value) + " > " + std::to_string(tol);
    }
  }
  void fold_ge(double value, double threshold, const std::string& where) {
    if (value < threshold) {
      pass = false;
      if (!note.empty()) note += "; ";
      note += where + " = " + std::to_string(value) + " < " + std::to_string(threshold);
    }
  }
};

const std::vector<std::string> kSystems = {"lorenz", "euler"};
const std::vector<double> kEtas = {-1.0, -0.25, 0.0, 0.25, 1.0};
const std::vector<double> kAlphas = {-1.0, 0.0, 0.5, 1.0};

Criterion criterion1_algebraic() {
  Criterion c{"1. algebraic suite"};
  for (const auto& sys : kSystems) {
    for (double eta : kEtas) {
      const ModelBundle m = build_model(sys, eta);
      const std::string tag = sys + "(eta=" + std::to_string(eta) + ")";
      const LiePencil pencil{m.sc0, m.sc1};
      for (double a : kAlphas) {
        c.fold(jacobi_residual_constants(pencil_constants(pencil, a)), 1e-12,
               tag + " jacobi-constants");
        c.fold(cocycle_residual(pencil_constants(pencil, a), m.cocycle), 1e-13, tag + " cocycle");
      }
      std::vector<PoissonStructure> pencil_structures;
      for (double a : kAlphas) pencil_structures.push_back(deformed_pencil(m, a));

      Rng rng(mix_seed(kSeed, "acc1/" + tag));
      for (int i = 0; i < 100; ++i) {
        const Eigen::VectorXd x = rng.point(m.group.dim, -2, 2);
        c.fold(jacobi_residual_at(m.p0, x), 1e-9, tag + " jacobi p0");
        c.fold(jacobi_residual_at(m.p1, x), 1e-9, tag + " jacobi p1");
        for (const auto& pa : pencil_structures)
          c.fold(jacobi_residual_at(pa, x), 1e-9, tag + " jacobi pencil");
        c.fold(compatibility_residual_at(m.p0, m.p1, x), 1e-9, tag + " compatibility");
        for (const ScalarField& cas : m.p0.casimirs)
          c.fold(casimir_residual_at(m.p0, cas, x), 1e-10, tag + " casimir p0");
        for (const ScalarField& cas : m.p1.casimirs)
          c.fold(casimir_residual_at(m.p1, cas, x), 1e-10, tag + " casimir p1");
        c.fold(bihamiltonian_residual_at(m.bihamiltonian(), x), 1e-10, tag + " bihamiltonian");
        c.fold(std::abs(poisson_bracket(m.p0, m.h0, m.h1, x)), 1e-10, tag + " involution p0");
        c.fold(std::abs(poisson_bracket(m.p1, m.h0, m.h1, x)), 1e-10, tag + " involution p1");
      }
    }
  }
  return c;
}

Criterion criterion2_group() {
  Criterion c{"2. group/multiplicativity suite"};
  for (const auto& sys : kSystems) {
    for (double eta : kEtas) {
      const ModelBundle m = build_model(sys, eta);
      const std::string tag = sys + "(eta=" + std::to_string(eta) + ")";
      const GroupLaw g2 = product_group(m.group);
      const PoissonStructure p0x = product_structure(m.p0, 2);
      const PoissonStructure p1x = product_structure(m.p1, 2);
      Rng rng(mix_seed(kSeed, "acc2/" + tag));
      for (int i = 0; i < 60; ++i) {
        const Eigen::VectorXd a = rng.point(m.group.dim, -2, 2);
        const Eigen::VectorXd b = rng.point(m.group.dim, -2, 2);
        const Eigen::VectorXd d = rng.point(m.group.dim, -2, 2);
        c.fold((m.group.multiply(m.group.multiply(a, b), d) -
                m.group.multiply(a, m.group.multiply(b, d)))
                   .lpNorm<Eigen::Infinity>(),
               1e-12, tag + " associativity");
        c.fold((m.group.multiply(a, m.group.inverse(a)) - m.group.identity)
                   .lpNorm<Eigen::Infinity>(),
               1e-12, tag + " inverse");
        c.fold((m.group.multiply(m.group.identity, a) - a).lpNorm<Eigen::Infinity>(), 1e-12,
               tag + " identity");
        c.fold(multiplicativity_residual(m.group, m.p0, a, b), 1e-10, tag + " mult p0 analytic");
        c.fold(multiplicativity_residual(m.group, m.p1, a, b), 1e-10, tag + " mult p1 analytic");
        c.fold(multiplicativity_residual(m.group, m.p0, a, b, true), 1e-6, tag + " mult p0 fd");
        c.fold(multiplicativity_residual(m.group, m.p1, a, b, true), 1e-6, tag + " mult p1 fd");
        const Eigen::VectorXd a2 = rng.point(g2.dim, -2, 2);
        const Eigen::VectorXd b2 = rng.point(g2.dim, -2, 2);
        c.fold(multiplicativity_residual(g2, p0x, a2, b2), 1e-10, tag + " mult p0xp0 analytic");
        c.fold(multiplicativity_residual(g2, p1x, a2, b2), 1e-10, tag + " mult p1xp1 analytic");
        c.fold(multiplicativity_residual(g2, p0x, a2, b2, true), 1e-6, tag + " mult p0xp0 fd");
        c.fold(multiplicativity_residual(g2, p1x, a2, b2, true), 1e-6, tag + " mult p1xp1 fd");
      }
    }
  }
  return c;
}

Criterion criterion3_deformation_limit() {
  Criterion c{"3. deformation-limit suite"};
  const std::vector<double> etas = {1e-1, 1e-2, 1e-3};
  auto slope = [&](const std::vector<double>& ds) {
    double su = 0, sv = 0, suu = 0, suv = 0;
    for (size_t i = 0; i < 3; ++i) {
      const double u = std::log(etas[i]), v = std::log(ds[i]);
      su += u, sv += v, suu += u * u, suv += u * v;
    }
    return (3 * suv - su * sv) / (3 * suu - su * su);
  };
  for (const auto& sys : kSystems) {
    const ModelBundle base = build_model(sys, 0.0);
    std::vector<ModelBundle> def;
    for (double e : etas) def.push_back(build_model(sys, e));
    Rng rng(mix_seed(kSeed, "acc3/" + sys));
    const Eigen::VectorXd x = rng.point(base.group.dim, -2, 2);

    auto check_slope = [&](const std::string& what, auto&& diff) {
      std::vector<double> ds;
      bool exact = true;
      for (size_t i = 0; i < 3; ++i) {
        ds.push_back(diff(def[i]));
        exact = exact && ds.back() < 1e-14;
      }
      if (exact) return;  // quantity does not deform (Lorenz Pi_0, C_0)
      const double s = slope(ds);
      c.fold(std::abs(s - 1.0), 0.1, sys + " slope " + what);
    };
    check_slope("Pi0", [&](const ModelBundle& m) {
      return (m.p0.bivector(x) - base.p0.bivector(x)).cwiseAbs().maxCoeff();
    });
    check_slope("Pi1", [&](const ModelBundle& m) {
      return (m.p1.bivector(x) - base.p1.bivector(x)).cwiseAbs().maxCoeff();
    });
    check_slope("C0", [&](const ModelBundle& m) {
      return std::abs(m.h1.eval(x) - base.h1.eval(x));
    });
    check_slope("C1", [&](const ModelBundle& m) {
      return std::abs(m.h0.eval(x) - base.h0.eval(x));
    });

    IntegratorConfig cfg;
    cfg.dt = 1e-3;
    cfg.t_end = 10.0;
    cfg.sample_every = 20;
    Eigen::VectorXd x0(base.group.dim);
    if (sys == "lorenz")
      x0 << 1, 2, 3, 1;
    else
      x0 << 1.0, 0.75, 0.5;
    const Trajectory ref = integrate(hamiltonian_field(base.p0, base.h0), x0, cfg);
    check_slope("trajectory", [&](const ModelBundle& m) {
      const Trajectory tr = integrate(hamiltonian_field(m.p0, m.h0), x0, cfg);
      double d = 0.0;
      for (size_t s = 0; s < tr.samples(); ++s)
        d = std::max(d, (tr.states[s] - ref.states[s]).norm());
      return d;
    });
  }
  return c;
}

Criterion criterion4_dynamics() {
  Criterion c{"4. dynamics suite"};
  for (const auto& sys : kSystems) {
    for (double eta : {0.0, 0.5}) {
      const ModelBundle m = build_model(sys, eta);
      const std::string tag = sys + "(eta=" + std::to_string(eta) + ")";
      Eigen::VectorXd x0(m.group.dim);
      if (sys == "lorenz")
        x0 << 1, 2, 3, 1;
      else
        x0 << 1.0, 0.75, 0.5;

      IntegratorConfig cfg;
      cfg.dt = 1e-3;
      cfg.t_end = 50.0;
      cfg.sample_every = 100;
      const Trajectory traj =
          integrate(hamiltonian_field(m.p0, m.h0), x0, cfg, m.monitors());
      for (size_t k = 0; k < traj.monitor_names.size(); ++k)
        c.fold(relative_drift(traj, k), 1e-7, tag + " drift " + traj.monitor_names[k]);

      IntegratorConfig short_cfg;
      short_cfg.dt = 1e-3;
      short_cfg.t_end = 10.0;
      short_cfg.sample_every = 100;
      const Trajectory a = integrate(hamiltonian_field(m.p0, m.h0), x0, short_cfg);
      const Trajectory b = integrate(hamiltonian_field(m.p1, m.h1), x0, short_cfg);
      double dev = 0.0;
      for (size_t s = 0; s < a.samples(); ++s)
        dev = std::max(dev, (a.states[s] - b.states[s]).lpNorm<Eigen::Infinity>());
      c.fold(dev, 1e-8, tag + " route deviation");
    }
  }
  return c;
}

Criterion criterion5_figure1() {
  Criterion c{"5. figure-1 reproduction"};
  Figure1Options opt;
  opt.svg_path = "acceptance_figure1.svg";
  const Figure1Result res = run_figure1(opt);
  for (const CheckRecord& rec : res.curves)
    c.fold(rec.value, rec.tolerance, rec.structure + " closure");
  return c;
}

Criterion criterion6_reduction() {
  Criterion c{"6. reduction suite"};
  for (const auto& sys : kSystems) {
    for (double eta : {-1.0, -0.25, 0.25, 1.0}) {
      const ModelBundle m = build_model(sys, eta);
      const std::string tag = sys + "(eta=" + std::to_string(eta) + ")";
      for (int copies : {2, 3}) {
        const CoupledBundle cb = coupled_model(m, copies);
        for (int which : {0, 1}) {
          for (int seed = 0; seed < 5; ++seed) {
            Rng rng(mix_seed(kSeed, "acc6/" + tag + "/" + std::to_string(copies) +
                                        std::to_string(which) + std::to_string(seed)));
            std::vector<Eigen::VectorXd> start;
            for (int q = 0; q < copies; ++q)
              start.push_back(rng.point(m.group.dim, -0.8, 0.8));
            c.fold(reduction_residual(cb, which, start, 10.0, 1e-3), 1e-6,
                   tag + " reduction N=" + std::to_string(copies));
          }
        }
      }
      const CoupledBundle cb2 = coupled_model(m, 2);
      Rng rng(mix_seed(kSeed, "acc6tan/" + tag));
      int nonzero = 0;
      for (int i = 0; i < 100; ++i) {
        const Eigen::VectorXd x = rng.point(cb2.group.dim, -1.5, 1.5);
        c.fold(tangency_residual(cb2, 0, x), 1e-8, tag + " tangency w0");
        c.fold(tangency_residual(cb2, 1, x), 1e-8, tag + " tangency w1");
        if (quasi_bihamiltonian_gap(cb2, x).gap > 1e-3) ++nonzero;
      }
      c.fold_ge(nonzero / 100.0, 0.95, tag + " quasi-gap fraction");
    }
  }
  return c;
}

Criterion criterion7_faults() {
  Criterion c{"7. fault injection"};
  int tripped = 0, total = 0;
  for (const auto& sys : kSystems) {
    for (const std::string& fault : fault_names(sys)) {
      ++total;
      VerifyOptions opt;
      opt.system = sys;
      opt.etas = {1.0};
      opt.seed = kSeed;
      opt.fault = fault;
      opt.points = 40;
      opt.with_reduction = false;
      const VerifyReport rep = run_verify(opt);
      if (!rep.all_pass())
        ++tripped;
      else
        c.note += sys + "/" + fault + " went undetected; ";
    }
  }
  c.worst = static_cast<double>(tripped);
  c.pass = tripped == total && total == 6;
  return c;
}

}  // namespace

int main() {
  using clock = std::chrono::steady_clock;
  std::vector<Criterion (*)()> criteria = {
      criterion1_algebraic, criterion2_group,   criterion3_deformation_limit,
      criterion4_dynamics,  criterion5_figure1, criterion6_reduction,
      criterion7_faults};
  bool all = true;
  for (auto fn : criteria) {
    const auto t0 = clock::now();
    const Criterion c = fn();
    const double secs = std::chrono::duration<double>(clock::now() - t0).count();
    std::printf("[%s] %-32s worst %.3e  (%.1f s)%s%s\n", c.pass ? "PASS" : "FAIL",
                c.name.c_str(), c.worst, secs, c.note.empty() ? "" : "  ",
                c.note.c_str());
    all = all && c.pass;
  }
  std::remove("acceptance_figure1.svg");
  return all ? 0 : 1;
}
