#include "core/verify.hpp"

#include <cmath>
#include <nlohmann/json.hpp>

#include "core/integrate.hpp"
#include "core/plot.hpp"
#include "core/reduction.hpp"
#include "core/rng.hpp"

namespace pld {

nlohmann::json CheckRecord::to_json() const {
  nlohmann::json j{{"check", check},
                   {"structure", structure},
                   {"value", value},
                   {"tolerance", tolerance},
                   {"pass", pass}};
  j["point"] = point;
  return j;
}

bool VerifyReport::all_pass() const {
  for (const auto& r : records)
    if (!r.pass) return false;
  return true;
}

size_t VerifyReport::failed_count() const {
  size_t n = 0;
  for (const auto& r : records)
    if (!r.pass) ++n;
  return n;
}

nlohmann::json VerifyReport::to_json() const {
  nlohmann::json j;
  j["system"] = options.system;
  j["etas"] = options.etas;
  j["alphas"] = options.alphas;
  j["seed"] = options.seed;
  j["fault"] = options.fault.empty() ? nlohmann::json(nullptr) : nlohmann::json(options.fault);
  j["checks"] = nlohmann::json::array();
  for (const auto& r : records) j["checks"].push_back(r.to_json());
  j["summary"] = {{"total", records.size()},
                  {"failed", failed_count()},
                  {"pass", all_pass()}};
  return j;
}

namespace {

std::string tag(const ModelBundle& m, const std::string& piece) {
  return m.name + "." + piece + "[eta=" + std::to_string(m.eta) + "]";
}

// Max of `residual_at` over seeded random points; records the argmax point.
template <class F>
CheckRecord max_over_points(const std::string& check, const std::string& structure, double tol,
                            int dim, const VerifyOptions& opt, F residual_at,
                            double box = 2.0) {
  Rng rng(mix_seed(opt.seed, check + "/" + structure));
  CheckRecord rec{check, structure, 0.0, tol, true, {}};
  for (int s = 0; s < opt.points; ++s) {
    const Eigen::VectorXd x = rng.point(dim, -box, box);
    const double v = residual_at(x);
    if (v >= rec.value) {
      rec.value = v;
      rec.point.assign(x.data(), x.data() + x.size());
    }
  }
  rec.pass = rec.value <= tol;
  return rec;
}

void constants_checks(const ModelBundle& m, const VerifyOptions& opt,
                      std::vector<CheckRecord>& out) {
  auto one = [&](const std::string& name, const StructureConstants& sc) {
    out.push_back({"antisymmetry-constants", tag(m, name), sc.antisymmetry_defect(), 0.0,
                   sc.antisymmetry_defect() <= 0.0, {}});
    const double jr = jacobi_residual_constants(sc);
    out.push_back({"jacobi-constants", tag(m, name), jr, 1e-12, jr <= 1e-12, {}});
  };
  one("sc0", m.sc0);
  one("sc1", m.sc1);
  const LiePencil pencil{m.sc0, m.sc1};
  for (double a : opt.alphas) {
    const StructureConstants sca = pencil_constants(pencil, a);
    const double jr = jacobi_residual_constants(sca);
    out.push_back({"jacobi-constants", tag(m, "pencil[alpha=" + std::to_string(a) + "]"), jr,
                   1e-12, jr <= 1e-12, {}});
    const double cr = cocycle_residual(sca, m.cocycle);
    out.push_back({"cocycle", tag(m, "pencil[alpha=" + std::to_string(a) + "]"), cr, 1e-13,
                   cr <= 1e-13, {}});
  }
  try {
    const StructureConstants dual = dual_bracket(m.cocycle);
    const double jr = jacobi_residual_constants(dual);
    out.push_back({"dual-admissible", tag(m, "dual"), jr, 1e-12, jr <= 1e-12, {}});
  } catch (const std::domain_error&) {
    out.push_back({"dual-admissible", tag(m, "dual"), 1.0, 1e-12, false, {}});
  }
}

void pointwise_checks(const ModelBundle& m, const VerifyOptions& opt,
                      std::vector<CheckRecord>& out) {
  const int n = m.group.dim;
  auto anti = [](const PoissonStructure& p) {
    return [&p](const Eigen::VectorXd& x) {
      const Eigen::MatrixXd pi = p.bivector(x);
      return (pi + pi.transpose()).cwiseAbs().maxCoeff();
    };
  };
  out.push_back(max_over_points("bivector-antisymmetry", tag(m, "p0"), 0.0, n, opt, anti(m.p0)));
  out.push_back(max_over_points("bivector-antisymmetry", tag(m, "p1"), 0.0, n, opt, anti(m.p1)));

  out.push_back(max_over_points("jacobi", tag(m, "p0"), 1e-9, n, opt,
                                [&](const Eigen::VectorXd& x) { return jacobi_residual_at(m.p0, x); }));
  out.push_back(max_over_points("jacobi", tag(m, "p1"), 1e-9, n, opt,
                                [&](const Eigen::VectorXd& x) { return jacobi_residual_at(m.p1, x); }));
  for (double a : opt.alphas) {
    const PoissonStructure pa = deformed_pencil(m, a);
    out.push_back(max_over_points(
        "jacobi", tag(m, "pencil[alpha=" + std::to_string(a) + "]"), 1e-9, n, opt,
        [&](const Eigen::VectorXd& x) { return jacobi_residual_at(pa, x); }));
  }

  out.push_back(max_over_points("compatibility", tag(m, "p0,p1"), 1e-9, n, opt,
                                [&](const Eigen::VectorXd& x) {
                                  return compatibility_residual_at(m.p0, m.p1, x);
                                }));

  auto casimir_set = [&](const PoissonStructure& p, const std::string& pname) {
    for (const ScalarField& c : p.casimirs)
      out.push_back(max_over_points(
          "casimir", tag(m, pname + "." + c.name), 1e-10, n, opt,
          [&](const Eigen::VectorXd& x) { return casimir_residual_at(p, c, x); }));
  };
  casimir_set(m.p0, "p0");
  casimir_set(m.p1, "p1");

  const BiHamiltonianSystem bh = m.bihamiltonian();
  out.push_back(max_over_points("bihamiltonian", tag(m, "D"), 1e-10, n, opt,
                                [&](const Eigen::VectorXd& x) {
                                  return bihamiltonian_residual_at(bh, x);
                                }));

  out.push_back(max_over_points("involution", tag(m, "p0{H0,H1}"), 1e-10, n, opt,
                                [&](const Eigen::VectorXd& x) {
                                  return std::abs(poisson_bracket(m.p0, m.h0, m.h1, x));
                                }));
  out.push_back(max_over_points("involution", tag(m, "p1{H0,H1}"), 1e-10, n, opt,
                                [&](const Eigen::VectorXd& x) {
                                  return std::abs(poisson_bracket(m.p1, m.h0, m.h1, x));
                                }));

  out.push_back(max_over_points("gradient-check", tag(m, "H0"), 1e-6, n, opt,
                                [&](const Eigen::VectorXd& x) { return gradient_check(m.h0, x); }));
  out.push_back(max_over_points("gradient-check", tag(m, "H1"), 1e-6, n, opt,
                                [&](const Eigen::VectorXd& x) { return gradient_check(m.h1, x); }));

  auto rank_check = [&](const PoissonStructure& p, const std::string& pname) {
    out.push_back(max_over_points(
        "rank", tag(m, pname), 0.0, n, opt, [&](const Eigen::VectorXd& x) {
          return std::abs(static_cast<double>(numerical_rank(p, x) - p.rank_generic));
        }));
  };
  rank_check(m.p0, "p0");
  rank_check(m.p1, "p1");
}

void group_checks(const ModelBundle& m, const VerifyOptions& opt,
                  std::vector<CheckRecord>& out) {
  const GroupLaw& g = m.group;
  const int n = g.dim;
  {
    Rng rng(mix_seed(opt.seed, "group-axioms/" + tag(m, "G")));
    double id_res = 0.0, inv_res = 0.0, assoc_res = 0.0;
    for (int s = 0; s < opt.points; ++s) {
      const Eigen::VectorXd a = rng.point(n, -2.0, 2.0);
      const Eigen::VectorXd b = rng.point(n, -2.0, 2.0);
      const Eigen::VectorXd c = rng.point(n, -2.0, 2.0);
      id_res = std::max(id_res, (g.multiply(g.identity, a) - a).lpNorm<Eigen::Infinity>());
      id_res = std::max(id_res, (g.multiply(a, g.identity) - a).lpNorm<Eigen::Infinity>());
      inv_res = std::max(inv_res,
                         (g.multiply(a, g.inverse(a)) - g.identity).lpNorm<Eigen::Infinity>());
      assoc_res = std::max(assoc_res, (g.multiply(g.multiply(a, b), c) -
                                       g.multiply(a, g.multiply(b, c)))
                                          .lpNorm<Eigen::Infinity>());
    }
    out.push_back({"group-identity", tag(m, "G"), id_res, 1e-14, id_res <= 1e-14, {}});
    out.push_back({"group-inverse", tag(m, "G"), inv_res, 1e-12, inv_res <= 1e-12, {}});
    out.push_back({"group-associativity", tag(m, "G"), assoc_res, 1e-12, assoc_res <= 1e-12, {}});
  }
  {
    Rng rng(mix_seed(opt.seed, "adjoint-linearity/" + tag(m, "G")));
    double worst = 0.0;
    for (int s = 0; s < opt.points; ++s) {
      const Eigen::VectorXd gpt = rng.point(n, -2.0, 2.0);
      const Eigen::VectorXd x = rng.point(n, -2.0, 2.0);
      const Eigen::VectorXd y = rng.point(n, -2.0, 2.0);
      const double a = rng.uniform(-2.0, 2.0), b = rng.uniform(-2.0, 2.0);
      worst = std::max(worst, (adjoint(g, gpt, a * x + b * y) - a * adjoint(g, gpt, x) -
                               b * adjoint(g, gpt, y))
                                  .lpNorm<Eigen::Infinity>());
    }
    out.push_back({"adjoint-linearity", tag(m, "G"), worst, 1e-12, worst <= 1e-12, {}});
  }

  auto mult = [&](const GroupLaw& gl, const PoissonStructure& p, const std::string& pname) {
    Rng rng(mix_seed(opt.seed, "multiplicativity/" + tag(m, pname)));
    double worst_an = 0.0, worst_fd = 0.0;
    for (int s = 0; s < opt.points; ++s) {
      const Eigen::VectorXd a = rng.point(gl.dim, -2.0, 2.0);
      const Eigen::VectorXd b = rng.point(gl.dim, -2.0, 2.0);
      worst_an = std::max(worst_an, multiplicativity_residual(gl, p, a, b, false));
      worst_fd = std::max(worst_fd, multiplicativity_residual(gl, p, a, b, true));
    }
    out.push_back({"multiplicativity-analytic", tag(m, pname), worst_an, 1e-10,
                   worst_an <= 1e-10, {}});
    out.push_back({"multiplicativity-fd", tag(m, pname), worst_fd, 1e-6, worst_fd <= 1e-6, {}});
  };
  mult(g, m.p0, "p0");
  mult(g, m.p1, "p1");
  const GroupLaw g2 = product_group(g);
  mult(g2, product_structure(m.p0, 2), "p0xp0");
  mult(g2, product_structure(m.p1, 2), "p1xp1");

  // Bracket of left-invariant frame fields reproduces the dual Lie algebra.
  try {
    const StructureConstants dual = dual_bracket(m.cocycle);
    Rng rng(mix_seed(opt.seed, "frame-dual/" + tag(m, "G")));
    double worst = 0.0;
    const double h = 1e-5;
    for (int s = 0; s < 5; ++s) {
      const Eigen::VectorXd x = rng.point(n, -1.0, 1.0);
      std::vector<Eigen::MatrixXd> dframe(n);
      Eigen::VectorXd xp = x;
      for (int k = 0; k < n; ++k) {
        xp[k] = x[k] + h;
        const Eigen::MatrixXd fp = invariant_frame(g, FrameSide::Left, xp);
        xp[k] = x[k] - h;
        const Eigen::MatrixXd fm = invariant_frame(g, FrameSide::Left, xp);
        xp[k] = x[k];
        dframe[k] = (fp - fm) / (2.0 * h);
      }
      const Eigen::MatrixXd frame = invariant_frame(g, FrameSide::Left, x);
      const auto lu = frame.partialPivLu();
      for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
          Eigen::VectorXd lie = Eigen::VectorXd::Zero(n);
          for (int k = 0; k < n; ++k)
            lie += frame(k, a) * dframe[k].col(b) - frame(k, b) * dframe[k].col(a);
          Eigen::VectorXd coef = lu.solve(lie);
          for (int i = 0; i < n; ++i) coef[i] -= dual.at(a, b, i);
          worst = std::max(worst, coef.lpNorm<Eigen::Infinity>());
        }
    }
    out.push_back({"frame-dual-constants", tag(m, "G"), worst, 1e-5, worst <= 1e-5, {}});
  } catch (const std::domain_error&) {
    out.push_back({"frame-dual-constants", tag(m, "G"), 1.0, 1e-5, false, {}});
  }
}

void coupled_checks(const ModelBundle& m, const VerifyOptions& opt,
                    std::vector<CheckRecord>& out) {
  const CoupledBundle cb = coupled_model(m, 2);
  const int n2 = cb.group.dim;

  out.push_back(max_over_points("involution", tag(m, "p0N{H0N,H1N}"), 1e-9, n2, opt,
                                [&](const Eigen::VectorXd& x) {
                                  return std::abs(poisson_bracket(cb.p0N, cb.h0N, cb.h1N, x));
                                }, 1.5));
  out.push_back(max_over_points("involution", tag(m, "p1N{H0N,H1N}"), 1e-9, n2, opt,
                                [&](const Eigen::VectorXd& x) {
                                  return std::abs(poisson_bracket(cb.p1N, cb.h0N, cb.h1N, x));
                                }, 1.5));

  out.push_back(max_over_points("tangency", tag(m, "N=2,which=0"), 1e-8, n2, opt,
                                [&](const Eigen::VectorXd& x) {
                                  return tangency_residual(cb, 0, x);
                                }, 1.5));
  out.push_back(max_over_points("tangency", tag(m, "N=2,which=1"), 1e-8, n2, opt,
                                [&](const Eigen::VectorXd& x) {
                                  return tangency_residual(cb, 1, x);
                                }, 1.5));

  {
    Rng rng(mix_seed(opt.seed, "quasi-gap/" + tag(m, "N=2")));
    int nonzero = 0;
    double worst_agree = 0.0;
    for (int s = 0; s < opt.points; ++s) {
      const Eigen::VectorXd x = rng.point(n2, -1.5, 1.5);
      const QuasiGap qg = quasi_bihamiltonian_gap(cb, x);
      if (qg.gap > 1e-3) ++nonzero;
      worst_agree = std::max(worst_agree, qg.reduction_agreement);
    }
    const double frac = static_cast<double>(nonzero) / opt.points;
    out.push_back({"quasi-gap-generic", tag(m, "N=2"), frac, 0.95, frac >= 0.95, {}});
    out.push_back({"quasi-gap-reduction-agreement", tag(m, "N=2"), worst_agree, 1e-9,
                   worst_agree <= 1e-9, {}});
  }

  if (opt.with_reduction) {
    for (int which : {0, 1}) {
      Rng rng(mix_seed(opt.seed, "reduction/" + tag(m, "w" + std::to_string(which))));
      std::vector<Eigen::VectorXd> start = {rng.point(m.group.dim, -0.8, 0.8),
                                            rng.point(m.group.dim, -0.8, 0.8)};
      const double res =
          reduction_residual(cb, which, start, opt.reduction_t_end, opt.reduction_dt);
      out.push_back({"reduction", tag(m, "N=2,which=" + std::to_string(which)), res, 1e-6,
                     res <= 1e-6, {}});
    }
  }
}

// Least-squares slope of log(d) against log(eta).
double loglog_slope(const std::vector<double>& etas, const std::vector<double>& ds) {
  const size_t k = etas.size();
  double su = 0, sv = 0, suu = 0, suv = 0;
  for (size_t i = 0; i < k; ++i) {
    const double u = std::log(etas[i]), v = std::log(ds[i]);
    su += u;
    sv += v;
    suu += u * u;
    suv += u * v;
  }
  return (k * suv - su * sv) / (k * suu - su * su);
}

void deformation_limit_checks(const std::string& system, const VerifyOptions& opt,
                              std::vector<CheckRecord>& out) {
  const std::vector<double> etas = {1e-1, 1e-2, 1e-3};
  const ModelBundle base = build_model(system, 0.0);
  const int n = base.group.dim;
  Rng rng(mix_seed(opt.seed, "deformation-limit/" + system));
  const Eigen::VectorXd x = rng.point(n, -2.0, 2.0);

  std::vector<ModelBundle> deformed;
  for (double e : etas) deformed.push_back(build_model(system, e));

  auto slope_record = [&](const std::string& what, const std::vector<double>& ds) {
    // A quantity that does not deform at all is reported as exact.
    bool exact = true;
    for (double d : ds) exact = exact && d < 1e-14;
    if (exact) {
      out.push_back({"deformation-limit-exact", system + "." + what, 0.0, 0.0, true, {}});
      return;
    }
    const double slope = loglog_slope(etas, ds);
    out.push_back({"deformation-limit-slope", system + "." + what, slope, 0.1,
                   std::abs(slope - 1.0) <= 0.1, {}});
  };

  auto structure_of = [](const ModelBundle& m, int which) -> const PoissonStructure& {
    return which == 0 ? m.p0 : m.p1;
  };
  for (int which : {0, 1}) {
    std::vector<double> ds;
    for (size_t i = 0; i < etas.size(); ++i)
      ds.push_back((structure_of(deformed[i], which).bivector(x) -
                    structure_of(base, which).bivector(x))
                       .cwiseAbs()
                       .maxCoeff());
    slope_record("p" + std::to_string(which), ds);
  }
  for (int which : {0, 1}) {
    std::vector<double> ds;
    for (size_t i = 0; i < etas.size(); ++i) {
      const ScalarField& c = which == 0 ? deformed[i].h1 : deformed[i].h0;  // C_0eta, C_1eta
      const ScalarField& c0 = which == 0 ? base.h1 : base.h0;
      ds.push_back(std::abs(c.eval(x) - c0.eval(x)));
    }
    slope_record("C" + std::to_string(which), ds);
  }
  {
    IntegratorConfig cfg;
    cfg.dt = 1e-3;
    cfg.t_end = 10.0;
    cfg.sample_every = 10;
    Eigen::VectorXd x0(n);
    if (system == "lorenz")
      x0 << 1.0, 2.0, 3.0, 1.0;
    else
      x0 << 1.0, 0.75, 0.5;
    const Trajectory ref = integrate(hamiltonian_field(base.p0, base.h0), x0, cfg);
    std::vector<double> ds;
    for (size_t i = 0; i < etas.size(); ++i) {
      const Trajectory tr =
          integrate(hamiltonian_field(deformed[i].p0, deformed[i].h0), x0, cfg);
      double dev = 0.0;
      for (size_t s = 0; s < tr.samples(); ++s)
        dev = std::max(dev, (tr.states[s] - ref.states[s]).norm());
      ds.push_back(dev);
    }
    slope_record("trajectory", ds);
  }
}

}  // namespace

VerifyReport run_verify(const VerifyOptions& opt) {
  VerifyReport rep;
  rep.options = opt;
  for (double eta : opt.etas) {
    ModelBundle m = build_model(opt.system, eta);
    if (!opt.fault.empty() && !apply_fault(m, opt.fault))
      throw std::invalid_argument("unknown fault '" + opt.fault + "' for system " + opt.system);
    constants_checks(m, opt, rep.records);
    pointwise_checks(m, opt, rep.records);
    group_checks(m, opt, rep.records);
    coupled_checks(m, opt, rep.records);
  }
  if (opt.fault.empty()) deformation_limit_checks(opt.system, opt, rep.records);
  return rep;
}

nlohmann::json Figure1Result::to_json() const {
  nlohmann::json j;
  j["all_closed"] = all_closed;
  j["curves"] = nlohmann::json::array();
  for (const auto& c : curves) j["curves"].push_back(c.to_json());
  return j;
}

Figure1Result run_figure1(const Figure1Options& opt) {
  Figure1Result result;
  const double pi = 3.14159265358979323846;
  const std::vector<std::pair<double, std::string>> etas = {{0.0, "black"},
                                                            {pi / 4, "green"},
                                                            {-pi / 4, "blue"},
                                                            {pi / 8, "red"},
                                                            {-pi / 8, "goldenrod"}};
  const std::vector<std::pair<std::string, Eigen::Vector3d>> panels_wanted = {
      {"A", {1.0, 2.0, 3.0}}, {"B", {1.0, -1.0, 0.5}}};

  std::vector<Panel> panels;
  for (const auto& [pname, start3] : panels_wanted) {
    if (opt.panel != "AB" && opt.panel != pname) continue;
    Panel panel;
    panel.title = "x0 = (" + std::to_string(start3[0]).substr(0, 4) + ", " +
                  std::to_string(start3[1]).substr(0, 4) + ", " +
                  std::to_string(start3[2]).substr(0, 4) + "), x4 = 1";
    panel.xlabel = "x1";
    panel.ylabel = "x2";
    for (const auto& [eta, color] : etas) {
      const ModelBundle m = build_lorenz(eta);
      Eigen::VectorXd x0(4);
      x0 << start3[0], start3[1], start3[2], 1.0;
      IntegratorConfig cfg;
      cfg.dt = opt.dt;
      cfg.t_end = opt.t_end;
      const Trajectory traj = integrate(hamiltonian_field(m.p0, m.h0), x0, cfg);
      const auto [dist, period] = closure_metric(traj, opt.settle);

      char label[160];
      const char* ename = eta == 0.0          ? "0"
                          : eta == pi / 4     ? "pi/4"
                          : eta == -pi / 4    ? "-pi/4"
                          : eta == pi / 8     ? "pi/8"
                                              : "-pi/8";
      CheckRecord rec;
      rec.check = "figure1-closure";
      rec.structure = "panel " + pname + ", eta=" + ename;
      rec.value = dist;
      rec.tolerance = opt.closure_tolerance;
      rec.pass = dist <= opt.closure_tolerance;
      rec.point = {period};
      result.curves.push_back(rec);
      result.all_closed = result.all_closed && rec.pass;

      if (rec.pass)
        std::snprintf(label, sizeof label, "eta=%s: closure %.2e at t=%.2f", ename, dist, period);
      else
        std::snprintf(label, sizeof label, "eta=%s: not returned (min %.2e)", ename, dist);

      Curve curve;
      curve.color = color;
      curve.label = label;
      curve.points.reserve(traj.samples() / 40 + 1);
      for (size_t s = 0; s < traj.samples(); s += 40)
        curve.points.push_back({traj.states[s][0], traj.states[s][1]});
      panel.curves.push_back(std::move(curve));
    }
    panels.push_back(std::move(panel));
  }
  if (!opt.svg_path.empty()) write_svg(panels, opt.svg_path);
  return result;
}

}  // namespace pld
