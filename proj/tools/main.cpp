// Command-line front end for the pld library. Talks to the core exclusively
// through the C API in pld/pld.h.
//
//   pld simulate --system lorenz --eta pi/4 --x0 1,2,3,1 --t-end 60 --out traj.csv
//   pld verify   --system euler --etas -1,-0.25,0,0.25,1 --seed 42 --report report.json
//   pld figure1  --svg figure1.svg
//
// Exit codes: 0 run complete / all checks pass, 1 verification failure or
// integration abort, 2 usage error.

#include <CLI11.hpp>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include "pld/pld.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

bool parse_eta_token(const std::string& text, double& out) {
  const double pi = 3.14159265358979323846;
  if (text == "pi/4") {
    out = pi / 4;
    return true;
  }
  if (text == "-pi/4") {
    out = -pi / 4;
    return true;
  }
  if (text == "pi/8") {
    out = pi / 8;
    return true;
  }
  if (text == "-pi/8") {
    out = -pi / 8;
    return true;
  }
  char* end = nullptr;
  out = std::strtod(text.c_str(), &end);
  return end && *end == '\0' && end != text.c_str();
}

bool parse_double_list(const std::string& text, std::vector<double>& out) {
  out.clear();
  size_t pos = 0;
  while (pos <= text.size()) {
    const size_t comma = text.find(',', pos);
    const std::string item = text.substr(pos, comma == std::string::npos ? comma : comma - pos);
    double v;
    if (!parse_eta_token(item, v)) return false;
    out.push_back(v);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return !out.empty();
}

int parse_coordinate(const std::string& token) {
  std::string t = token;
  if (!t.empty() && (t[0] == 'x' || t[0] == 'X')) t = t.substr(1);
  char* end = nullptr;
  const long v = std::strtol(t.c_str(), &end, 10);
  if (!end || *end != '\0' || v < 1) return -1;
  return static_cast<int>(v - 1);
}

uint64_t resolve_seed(bool seed_given, uint64_t seed_flag) {
  if (seed_given) return seed_flag;
  if (const char* env = std::getenv("PLD_SEED")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0') return v;
  }
  return 42;
}

int fail_usage(const std::string& msg) {
  std::fprintf(stderr, "error: %s\nrun 'pld --help' for usage\n", msg.c_str());
  return kExitUsage;
}

int fail_api(const std::string& what, pld_status status) {
  std::fprintf(stderr, "error: %s: %s\n%s\n", what.c_str(), pld_status_name(status),
               pld_last_error());
  return status == PLD_ERR_INVALID_ARG || status == PLD_ERR_DIMENSION ? kExitUsage : kExitFail;
}

struct ModelGuard {
  pld_model* handle = nullptr;
  ~ModelGuard() { pld_model_free(handle); }
};

struct TrajectoryGuard {
  pld_trajectory* handle = nullptr;
  ~TrajectoryGuard() { pld_trajectory_free(handle); }
};

int cmd_simulate(const std::string& system, const std::string& eta_text, const std::string& x0_text,
                 double t_end, double dt, const std::string& method, double rtol, double atol,
                 int couple, int which, int sample_every, const std::string& out_csv,
                 const std::string& svg, const std::string& plane, const std::string& report,
                 const std::string& fault) {
  double eta;
  if (!parse_eta_token(eta_text, eta)) return fail_usage("cannot parse --eta '" + eta_text + "'");
  std::vector<double> x0;
  if (!parse_double_list(x0_text, x0)) return fail_usage("cannot parse --x0 '" + x0_text + "'");

  ModelGuard model;
  pld_status st = pld_model_create(system.c_str(), eta, &model.handle);
  if (st != PLD_OK) return fail_api("creating model", st);

  if (!fault.empty()) {
    st = pld_model_inject_fault(model.handle, fault.c_str());
    if (st != PLD_OK) return fail_api("injecting fault", st);
  }

  if (couple > 1) {
    ModelGuard coupled;
    st = pld_model_couple(model.handle, couple, &coupled.handle);
    if (st != PLD_OK) return fail_api("coupling model", st);
    std::swap(model.handle, coupled.handle);
  }

  const int dim = pld_model_dim(model.handle);
  if (static_cast<int>(x0.size()) != dim)
    return fail_usage("--x0 has " + std::to_string(x0.size()) + " components, model needs " +
                      std::to_string(dim));

  pld_integrator_config cfg{};
  cfg.method = method.c_str();
  cfg.dt = dt;
  cfg.rtol = rtol;
  cfg.atol = atol;
  cfg.t_end = t_end;
  cfg.sample_every = sample_every;

  TrajectoryGuard traj;
  st = pld_simulate(model.handle, which, x0.data(), static_cast<int>(x0.size()), &cfg,
                    &traj.handle);
  if (st == PLD_ERR_NONFINITE) {
    std::fprintf(stderr, "integration aborted; diagnostic:\n%s\n", pld_last_error());
    return kExitFail;
  }
  if (st != PLD_OK) return fail_api("simulate", st);

  if (!out_csv.empty()) {
    st = pld_trajectory_write_csv(traj.handle, out_csv.c_str());
    if (st != PLD_OK) return fail_api("writing csv", st);
  }
  if (!svg.empty()) {
    int ci = 0, cj = 1;
    if (!plane.empty()) {
      const size_t comma = plane.find(',');
      if (comma == std::string::npos) return fail_usage("--plane needs two coordinates, e.g. x2,x3");
      ci = parse_coordinate(plane.substr(0, comma));
      cj = parse_coordinate(plane.substr(comma + 1));
      if (ci < 0 || cj < 0) return fail_usage("cannot parse --plane '" + plane + "'");
    }
    st = pld_trajectory_write_svg(traj.handle, svg.c_str(), ci, cj);
    if (st != PLD_OK) return fail_api("writing svg", st);
  }
  if (!report.empty()) {
    std::string card(16384, '\0');
    size_t needed = 0;
    st = pld_model_card_json(model.handle, card.data(), card.size(), &needed);
    if (st != PLD_OK) return fail_api("model card", st);
    card.resize(needed - 1);

    std::FILE* fp = std::fopen(report.c_str(), "w");
    if (!fp) return fail_api("writing report", PLD_ERR_IO);
    const int samples = pld_trajectory_samples(traj.handle);
    std::fprintf(fp, "{\n  \"model\": %s,\n  \"which\": %d,\n  \"samples\": %d,\n", card.c_str(),
                 which, samples);
    std::fprintf(fp, "  \"drift\": {");
    const int nmon = pld_trajectory_monitor_count(traj.handle);
    for (int m = 0; m < nmon; ++m) {
      double drift = 0.0;
      pld_trajectory_drift(traj.handle, m, &drift);
      std::fprintf(fp, "%s\"%s\": %.17g", m ? ", " : "",
                   pld_trajectory_monitor_name(traj.handle, m), drift);
    }
    std::fprintf(fp, "},\n  \"final_state\": [");
    std::vector<double> state(dim);
    double t_final = 0.0;
    pld_trajectory_row(traj.handle, samples - 1, &t_final, state.data(), nullptr);
    for (int i = 0; i < dim; ++i) std::fprintf(fp, "%s%.17g", i ? ", " : "", state[i]);
    std::fprintf(fp, "],\n  \"t_final\": %.17g\n}\n", t_final);
    std::fclose(fp);
  }
  return kExitOk;
}

int cmd_verify(const std::string& system, const std::string& etas_text, bool alpha_given,
               double alpha, bool seed_given, uint64_t seed_flag, const std::string& fault,
               const std::string& report) {
  std::vector<double> etas;
  if (!etas_text.empty() && !parse_double_list(etas_text, etas))
    return fail_usage("cannot parse --etas '" + etas_text + "'");

  std::vector<double> alphas = {-1.0, 0.0, 0.5, 1.0};
  if (alpha_given) alphas.push_back(alpha);

  const uint64_t seed = resolve_seed(seed_given, seed_flag);
  int all_pass = 0;
  const pld_status st = pld_verify(system.c_str(), etas.empty() ? nullptr : etas.data(),
                                   static_cast<int>(etas.size()), alphas.data(),
                                   static_cast<int>(alphas.size()), seed,
                                   fault.empty() ? nullptr : fault.c_str(),
                                   report.empty() ? nullptr : report.c_str(), &all_pass);
  if (st != PLD_OK) return fail_api("verify", st);
  std::printf("verify %s: %s (seed %llu%s)\n", system.c_str(), all_pass ? "PASS" : "FAIL",
              static_cast<unsigned long long>(seed),
              fault.empty() ? "" : (", fault " + fault).c_str());
  return all_pass ? kExitOk : kExitFail;
}

int cmd_figure1(const std::string& panel, double t_end, double dt, const std::string& svg) {
  int all_closed = 0;
  const pld_status st = pld_figure1(panel.c_str(), t_end, dt, svg.c_str(), &all_closed);
  if (st != PLD_OK) return fail_api("figure1", st);
  std::printf("figure1: wrote %s (%s)\n", svg.c_str(),
              all_closed ? "all orbits closed" : "some orbits did not return");
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Integrable deformations of bi-Hamiltonian systems on Poisson-Lie groups"};
  app.require_subcommand(1);

  // simulate
  auto* sim = app.add_subcommand("simulate", "Integrate a flow and export CSV/SVG");
  std::string system = "lorenz", eta_text = "0", x0_text, method = "rk4";
  std::string out_csv, svg, plane, report, fault;
  double t_end = 10.0, dt = 1e-3, rtol = 1e-8, atol = 1e-10;
  int couple = 1, which = 0, sample_every = 1;
  sim->add_option("--system", system, "lorenz|euler")->check(CLI::IsMember({"lorenz", "euler"}));
  sim->add_option("--eta", eta_text, "deformation parameter (number or pi/4, -pi/4, pi/8, -pi/8)");
  sim->add_option("--x0", x0_text, "initial state, comma separated")->required();
  sim->add_option("--t-end", t_end, "integration horizon");
  sim->add_option("--dt", dt, "rk4 step");
  sim->add_option("--method", method, "rk4|dopri5")->check(CLI::IsMember({"rk4", "dopri5"}));
  sim->add_option("--rtol", rtol, "dopri5 relative tolerance");
  sim->add_option("--atol", atol, "dopri5 absolute tolerance");
  sim->add_option("--couple", couple, "number of coupled copies (N >= 2)");
  sim->add_option("--which", which, "Hamiltonian description 0|1")->check(CLI::Range(0, 1));
  sim->add_option("--sample-every", sample_every, "keep every k-th step");
  sim->add_option("--out", out_csv, "trajectory CSV path");
  sim->add_option("--svg", svg, "orbit SVG path");
  sim->add_option("--plane", plane, "projection coordinates for --svg, e.g. x2,x3");
  sim->add_option("--report", report, "run report JSON path");
  sim->add_option("--inject-fault", fault, "corrupt the model before running");

  // verify
  auto* ver = app.add_subcommand("verify", "Run the structural verification suite");
  std::string v_system = "lorenz", v_etas, v_fault, v_report;
  double v_alpha = 0.0;
  uint64_t v_seed = 42;
  ver->add_option("--system", v_system, "lorenz|euler")->check(CLI::IsMember({"lorenz", "euler"}));
  ver->add_option("--etas", v_etas, "comma-separated eta grid (default -1,-0.25,0,0.25,1)");
  auto* alpha_opt = ver->add_option("--alpha", v_alpha, "extra pencil value for bracket checks");
  auto* seed_opt = ver->add_option("--seed", v_seed, "random seed (fallback: PLD_SEED, then 42)");
  ver->add_option("--inject-fault", v_fault, "named corruption; suite must then fail");
  ver->add_option("--report", v_report, "verification report JSON path");

  // figure1
  auto* fig = app.add_subcommand("figure1", "Reproduce the closed-orbit overlay figure");
  std::string f_panel = "AB", f_svg = "figure1.svg";
  double f_t_end = 60.0, f_dt = 2e-4;
  fig->add_option("--panel", f_panel, "A|B|AB")->check(CLI::IsMember({"A", "B", "AB"}));
  fig->add_option("--t-end", f_t_end, "integration horizon per orbit");
  fig->add_option("--dt", f_dt, "rk4 step");
  fig->add_option("--svg", f_svg, "output SVG path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  if (sim->parsed())
    return cmd_simulate(system, eta_text, x0_text, t_end, dt, method, rtol, atol, couple, which,
                        sample_every, out_csv, svg, plane, report, fault);
  if (ver->parsed())
    return cmd_verify(v_system, v_etas, alpha_opt->count() > 0, v_alpha, seed_opt->count() > 0,
                      v_seed, v_fault, v_report);
  if (fig->parsed()) return cmd_figure1(f_panel, f_t_end, f_dt, f_svg);
  return kExitUsage;
}
