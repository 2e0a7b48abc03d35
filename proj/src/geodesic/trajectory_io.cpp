#include "srgeo/geodesic/trajectory_io.hpp"

#include <string>

#include "srgeo/core/csv.hpp"

namespace srgeo {

void writeTrajectoryCsv(std::ostream& os, const Model& model, const Trajectory& traj) {
  const int n = traj.states.empty() ? 0 : traj.states.front().u.bandLimit();
  {
    CsvRow header(os);
    header << std::string("t") << std::string("energy") << std::string("lambda1");
    if (model.isVirasoro()) header << std::string("lambda2");
    for (int k = 0; k <= n; ++k) {
      header << "re_" + std::to_string(k) << "im_" + std::to_string(k);
    }
  }
  for (std::size_t i = 0; i < traj.states.size(); ++i) {
    const GeodesicState& s = traj.states[i];
    CsvRow row(os);
    row << traj.times[i] << traj.energies[i] << s.lambda1;
    if (model.isVirasoro()) row << s.lambda2;
    for (int k = 0; k <= n; ++k) row << s.u.coeff(k).real() << s.u.coeff(k).imag();
  }
}

nlohmann::json modelParamsJson(const Model& model) {
  nlohmann::json p = nlohmann::json::object();
  if (model.metric()) {
    p["alpha"] = model.metric()->alpha();
    p["beta"] = model.metric()->beta();
  }
  if (model.isVirasoro()) {
    p["mu"] = model.cocycle().mu;
    p["nu"] = model.cocycle().nu;
  }
  return p;
}

nlohmann::json trajectorySummary(const Model& model, const IntegratorConfig& cfg,
                                 const Trajectory& traj) {
  nlohmann::json j;
  j["model"] = model.name();
  j["params"] = modelParamsJson(model);
  j["N"] = traj.states.empty() ? 0 : traj.states.front().u.bandLimit();
  j["dt"] = cfg.dt;
  j["steps"] = cfg.steps;
  j["scheme"] = cfg.scheme == Scheme::rk4 ? "rk4" : "ifrk4";
  if (!traj.states.empty()) {
    j["lambda1"] = traj.states.front().lambda1;
    if (model.isVirasoro()) j["lambda2"] = traj.states.front().lambda2;
    j["initial_energy"] = traj.energies.front();
    j["final_energy"] = traj.energies.back();
    j["final_time"] = traj.times.back();
  }
  j["drift"] = {
      {"energy_relative", traj.diagnostics.maxEnergyDrift},
      {"max_abs_mean", traj.diagnostics.maxAbsMean},
      {"max_lambda_rate", traj.diagnostics.maxLambdaRate},
  };
  j["warnings"] = traj.warnings;
  return j;
}

}  // namespace srgeo
