#pragma once

#include <ostream>
#include <vector>

#include "json.hpp"
#include "srgeo/fourier/params.hpp"
#include "srgeo/group/diffeo.hpp"

namespace srgeo {

/// Rows (t, theta_j, phi(theta_j)) after a header line.
void writeDiffeoCsv(std::ostream& os, const std::vector<double>& times,
                    const std::vector<DiffeoGrid>& path);

/// Sidecar for a Virasoro path: grid size, cocycle weights and b(t).
nlohmann::json virasoroSidecar(const std::vector<double>& times, const std::vector<double>& b,
                               int gridSize, const CocycleParams& params);

}  // namespace srgeo
