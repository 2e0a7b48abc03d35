#pragma once

#include <ostream>

#include "json.hpp"
#include "srgeo/geodesic/integrator.hpp"

namespace srgeo {

/// Columns: t, energy, lambda1 [, lambda2 for Virasoro models], then
/// re_k, im_k for k = 0..N.
void writeTrajectoryCsv(std::ostream& os, const Model& model, const Trajectory& traj);

/// {model, params, N, dt, steps, scheme, drift, ...}
nlohmann::json trajectorySummary(const Model& model, const IntegratorConfig& cfg,
                                 const Trajectory& traj);

nlohmann::json modelParamsJson(const Model& model);

}  // namespace srgeo
