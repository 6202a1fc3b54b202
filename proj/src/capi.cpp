#include "pld/pld.h"

#include <cstring>
#include <nlohmann/json.hpp>
#include <string>
#include <variant>

#include "core/integrate.hpp"
#include "core/models.hpp"
#include "core/plot.hpp"
#include "core/reduction.hpp"
#include "core/verify.hpp"

struct pld_model {
  std::variant<pld::ModelBundle, pld::CoupledBundle> bundle;

  bool coupled() const { return std::holds_alternative<pld::CoupledBundle>(bundle); }
  const pld::ModelBundle& base() const {
    return coupled() ? std::get<pld::CoupledBundle>(bundle).base
                     : std::get<pld::ModelBundle>(bundle);
  }
  int dim() const {
    return coupled() ? std::get<pld::CoupledBundle>(bundle).group.dim : base().group.dim;
  }
  int copies() const {
    return coupled() ? std::get<pld::CoupledBundle>(bundle).copies : 1;
  }
  const pld::PoissonStructure& structure(int which) const {
    if (coupled()) return std::get<pld::CoupledBundle>(bundle).structure(which);
    return which == 0 ? base().p0 : base().p1;
  }
  const pld::ScalarField& hamiltonian(int which) const {
    if (coupled()) return std::get<pld::CoupledBundle>(bundle).hamiltonian(which);
    return which == 0 ? base().h0 : base().h1;
  }
  std::vector<pld::ScalarField> monitors(int which) const {
    if (coupled()) return std::get<pld::CoupledBundle>(bundle).monitors(which);
    return base().monitors();
  }
};

struct pld_trajectory {
  pld::Trajectory traj;
};

namespace {

thread_local std::string g_last_error;

void set_error(const std::string& msg) { g_last_error = msg; }

template <class Fn>
pld_status guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const pld::IntegratorAbort& e) {
    nlohmann::json diag;
    diag["error"] = "non-finite state";
    diag["t_last"] = e.t_last;
    diag["last_state"] = std::vector<double>(e.last_state.data(),
                                             e.last_state.data() + e.last_state.size());
    set_error(diag.dump());
    return PLD_ERR_NONFINITE;
  } catch (const std::invalid_argument& e) {
    set_error(e.what());
    return PLD_ERR_INVALID_ARG;
  } catch (const std::domain_error& e) {
    set_error(e.what());
    return PLD_ERR_INVALID_ARG;
  } catch (const std::exception& e) {
    set_error(e.what());
    return PLD_ERR_INTERNAL;
  }
}

bool bad_which(int which) { return which != 0 && which != 1; }

}  // namespace

extern "C" {

const char* pld_status_name(pld_status status) {
  switch (status) {
    case PLD_OK: return "ok";
    case PLD_ERR_INVALID_ARG: return "invalid argument";
    case PLD_ERR_DIMENSION: return "dimension mismatch";
    case PLD_ERR_NONFINITE: return "non-finite state";
    case PLD_ERR_IO: return "io error";
    case PLD_ERR_INTERNAL: return "internal error";
  }
  return "unknown";
}

const char* pld_last_error(void) { return g_last_error.c_str(); }

pld_status pld_model_create(const char* system, double eta, pld_model** out) {
  if (!system || !out) {
    set_error("null argument");
    return PLD_ERR_INVALID_ARG;
  }
  return guarded([&] {
    *out = new pld_model{pld::build_model(system, eta)};
    return PLD_OK;
  });
}

pld_status pld_model_couple(const pld_model* base, int copies, pld_model** out) {
  if (!base || !out) {
    set_error("null argument");
    return PLD_ERR_INVALID_ARG;
  }
  if (base->coupled()) {
    set_error("model is already coupled");
    return PLD_ERR_INVALID_ARG;
  }
  return guarded([&] {
    *out = new pld_model{pld::coupled_model(base->base(), copies)};
    return PLD_OK;
  });
}

pld_status pld_model_inject_fault(pld_model* model, const char* fault) {
  if (!model || !fault) {
    set_error("null argument");
    return PLD_ERR_INVALID_ARG;
  }
  if (model->coupled()) {
    set_error("faults are injected into base models");
    return PLD_ERR_INVALID_ARG;
  }
  return guarded([&] {
    if (!pld::apply_fault(std::get<pld::ModelBundle>(model->bundle), fault)) {
      set_error(std::string("unknown fault '") + fault + "'");
      return PLD_ERR_INVALID_ARG;
    }
    return PLD_OK;
  });
}

void pld_model_free(pld_model* model) { delete model; }

int pld_model_dim(const pld_model* model) { return model ? model->dim() : 0; }
int pld_model_copies(const pld_model* model) { return model ? model->copies() : 0; }
double pld_model_eta(const pld_model* model) { return model ? model->base().eta : 0.0; }

pld_status pld_model_card_json(const pld_model* model, char* buf, size_t cap, size_t* needed) {
  if (!model) {
    set_error("null argument");
    return PLD_ERR_INVALID_ARG;
  }
  return guarded([&] {
    nlohmann::json card = pld::model_card(model->base());
    if (model->coupled()) card["copies"] = model->copies();
    const std::string text = card.dump(2);
    if (needed) *needed = text.size() + 1;
    if (!buf || cap < text.size() + 1) return PLD_ERR_DIMENSION;
    std::memcpy(buf, text.c_str(), text.size() + 1);
    return PLD_OK;
  });
}

pld_status pld_eval_bivector(const pld_model* model, int which, const double* x, double* pi) {
  if (!model || !x || !pi || bad_which(which)) {
    set_error("null argument or bad which");
    return PLD_ERR_INVALID_ARG;
  }
  return guarded([&] {
    const int n = model->dim();
    const Eigen::MatrixXd m =
        model->structure(which).bivector(Eigen::Map<const Eigen::VectorXd>(x, n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) pi[i * n + j] = m(i, j);
    return PLD_OK;
  });
}

pld_status pld_eval_vector_field(const pld_model* model, int which, const double* x, double* dx) {
  if (!model || !x || !dx || bad_which(which)) {
    set_error("null argument or bad which");
    return PLD_ERR_INVALID_ARG;
  }
  return guarded([&] {
    const int n = model->dim();
    const Eigen::VectorXd f = pld::hamiltonian_vf(
        model->structure(which), model->hamiltonian(which), Eigen::Map<const Eigen::VectorXd>(x, n));
    Eigen::Map<Eigen::VectorXd>(dx, n) = f;
    return PLD_OK;
  });
}

pld_status pld_eval_hamiltonian(const pld_model* model, int which, const double* x, double* value) {
  if (!model || !x || !value || bad_which(which)) {
    set_error("null argument or bad which");
    return PLD_ERR_INVALID_ARG;
  }
  return guarded([&] {
    const int n = model->dim();
    *value = model->hamiltonian(which).eval(Eigen::Map<const Eigen::VectorXd>(x, n));
    return PLD_OK;
  });
}

pld_status pld_reduce_state(const pld_model* model, const double* x, double* out) {
  if (!model || !x || !out) {
    set_error("null argument");
    return PLD_ERR_INVALID_ARG;
  }
  return guarded([&] {
    const int n = model->dim();
    const int nb = model->base().group.dim;
    if (!model->coupled()) {
      std::memcpy(out, x, sizeof(double) * n);
      return PLD_OK;
    }
    const Eigen::VectorXd r =
        std::get<pld::CoupledBundle>(model->bundle).reduce(Eigen::Map<const Eigen::VectorXd>(x, n));
    Eigen::Map<Eigen::VectorXd>(out, nb) = r;
    return PLD_OK;
  });
}

pld_status pld_simulate(const pld_model* model, int which, const double* x0, int x0_len,
                        const pld_integrator_config* config, pld_trajectory** out) {
  if (!model || !x0 || !config || !out || bad_which(which)) {
    set_error("null argument or bad which");
    return PLD_ERR_INVALID_ARG;
  }
  if (x0_len != model->dim()) {
    set_error("x0 has length " + std::to_string(x0_len) + ", model dimension is " +
              std::to_string(model->dim()));
    return PLD_ERR_DIMENSION;
  }
  return guarded([&] {
    pld::IntegratorConfig cfg;
    cfg.method = pld::IntegratorConfig::parse_method(config->method ? config->method : "rk4");
    cfg.dt = config->dt;
    cfg.rtol = config->rtol;
    cfg.atol = config->atol;
    cfg.t_end = config->t_end;
    cfg.sample_every = config->sample_every;
    const auto field = pld::hamiltonian_field(model->structure(which), model->hamiltonian(which));
    pld::Trajectory traj = pld::integrate(
        field, Eigen::Map<const Eigen::VectorXd>(x0, x0_len), cfg, model->monitors(which));
    *out = new pld_trajectory{std::move(traj)};
    return PLD_OK;
  });
}

void pld_trajectory_free(pld_trajectory* traj) { delete traj; }

int pld_trajectory_samples(const pld_trajectory* traj) {
  return traj ? static_cast<int>(traj->traj.samples()) : 0;
}

int pld_trajectory_dim(const pld_trajectory* traj) { return traj ? traj->traj.dim() : 0; }

int pld_trajectory_monitor_count(const pld_trajectory* traj) {
  return traj ? static_cast<int>(traj->traj.monitor_names.size()) : 0;
}

const char* pld_trajectory_monitor_name(const pld_trajectory* traj, int index) {
  if (!traj || index < 0 || index >= pld_trajectory_monitor_count(traj)) return nullptr;
  return traj->traj.monitor_names[index].c_str();
}

pld_status pld_trajectory_row(const pld_trajectory* traj, int row, double* t, double* state,
                              double* monitors) {
  if (!traj) {
    set_error("null argument");
    return PLD_ERR_INVALID_ARG;
  }
  if (row < 0 || row >= pld_trajectory_samples(traj)) {
    set_error("row out of range");
    return PLD_ERR_DIMENSION;
  }
  if (t) *t = traj->traj.times[row];
  if (state)
    Eigen::Map<Eigen::VectorXd>(state, traj->traj.dim()) = traj->traj.states[row];
  if (monitors)
    for (size_t m = 0; m < traj->traj.monitor_values.size(); ++m)
      monitors[m] = traj->traj.monitor_values[m][row];
  return PLD_OK;
}

pld_status pld_trajectory_drift(const pld_trajectory* traj, int monitor, double* drift) {
  if (!traj || !drift) {
    set_error("null argument");
    return PLD_ERR_INVALID_ARG;
  }
  if (monitor < 0 || monitor >= pld_trajectory_monitor_count(traj)) {
    set_error("monitor index out of range");
    return PLD_ERR_DIMENSION;
  }
  return guarded([&] {
    *drift = pld::relative_drift(traj->traj, monitor);
    return PLD_OK;
  });
}

pld_status pld_trajectory_closure(const pld_trajectory* traj, double settle, double* distance,
                                  double* period) {
  if (!traj || !distance || !period) {
    set_error("null argument");
    return PLD_ERR_INVALID_ARG;
  }
  return guarded([&] {
    auto [d, p] = pld::closure_metric(traj->traj, settle);
    *distance = d;
    *period = p;
    return PLD_OK;
  });
}

pld_status pld_trajectory_write_csv(const pld_trajectory* traj, const char* path) {
  if (!traj || !path) {
    set_error("null argument");
    return PLD_ERR_INVALID_ARG;
  }
  return guarded([&] {
    try {
      pld::write_csv(traj->traj, path);
    } catch (const std::runtime_error& e) {
      set_error(e.what());
      return PLD_ERR_IO;
    }
    return PLD_OK;
  });
}

pld_status pld_trajectory_write_svg(const pld_trajectory* traj, const char* path, int ci, int cj) {
  if (!traj || !path) {
    set_error("null argument");
    return PLD_ERR_INVALID_ARG;
  }
  const int n = pld_trajectory_dim(traj);
  if (ci < 0 || ci >= n || cj < 0 || cj >= n) {
    set_error("projection coordinates out of range");
    return PLD_ERR_DIMENSION;
  }
  return guarded([&] {
    pld::Panel panel;
    panel.title = "trajectory projection";
    panel.xlabel = "x" + std::to_string(ci + 1);
    panel.ylabel = "x" + std::to_string(cj + 1);
    pld::Curve curve;
    curve.color = "steelblue";
    curve.points.reserve(traj->traj.samples());
    for (const auto& s : traj->traj.states) curve.points.push_back({s[ci], s[cj]});
    panel.curves.push_back(std::move(curve));
    try {
      pld::write_svg({panel}, path);
    } catch (const std::runtime_error& e) {
      set_error(e.what());
      return PLD_ERR_IO;
    }
    return PLD_OK;
  });
}

pld_status pld_verify(const char* system, const double* etas, int n_etas, const double* alphas,
                      int n_alphas, uint64_t seed, const char* fault, const char* report_path,
                      int* all_pass) {
  if (!system || !all_pass) {
    set_error("null argument");
    return PLD_ERR_INVALID_ARG;
  }
  return guarded([&] {
    pld::VerifyOptions opt;
    opt.system = system;
    if (etas && n_etas > 0) opt.etas.assign(etas, etas + n_etas);
    if (alphas && n_alphas > 0) opt.alphas.assign(alphas, alphas + n_alphas);
    opt.seed = seed;
    if (fault) opt.fault = fault;
    const pld::VerifyReport report = pld::run_verify(opt);
    *all_pass = report.all_pass() ? 1 : 0;
    if (report_path) {
      std::FILE* fp = std::fopen(report_path, "w");
      if (!fp) {
        set_error(std::string("cannot open '") + report_path + "' for writing");
        return PLD_ERR_IO;
      }
      const std::string text = report.to_json().dump(2);
      std::fwrite(text.data(), 1, text.size(), fp);
      std::fputc('\n', fp);
      std::fclose(fp);
    }
    return PLD_OK;
  });
}

pld_status pld_figure1(const char* panel, double t_end, double dt, const char* svg_path,
                       int* all_closed) {
  if (!all_closed) {
    set_error("null argument");
    return PLD_ERR_INVALID_ARG;
  }
  return guarded([&] {
    pld::Figure1Options opt;
    if (panel) opt.panel = panel;
    if (opt.panel != "A" && opt.panel != "B" && opt.panel != "AB") {
      set_error("panel must be A, B or AB");
      return PLD_ERR_INVALID_ARG;
    }
    if (t_end > 0) opt.t_end = t_end;
    if (dt > 0) opt.dt = dt;
    if (svg_path) opt.svg_path = svg_path;
    const pld::Figure1Result result = pld::run_figure1(opt);
    *all_closed = result.all_closed ? 1 : 0;
    return PLD_OK;
  });
}

const char* pld_fault_name(const char* system, int index) {
  if (!system || index < 0) return nullptr;
  static thread_local std::string holder;
  const auto names = pld::fault_names(system);
  if (index >= static_cast<int>(names.size())) return nullptr;
  holder = names[index];
  return holder.c_str();
}

}  // extern "C"
