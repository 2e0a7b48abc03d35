#include "srgeo/group/group_io.hpp"

#include <string>

#include "srgeo/core/csv.hpp"
#include "srgeo/core/error.hpp"

namespace srgeo {

void writeDiffeoCsv(std::ostream& os, const std::vector<double>& times,
                    const std::vector<DiffeoGrid>& path) {
  if (times.size() != path.size()) throw DimensionError("writeDiffeoCsv: size mismatch");
  { CsvRow(os) << std::string("t") << std::string("theta") << std::string("phi"); }
  for (std::size_t i = 0; i < path.size(); ++i) {
    const std::vector<double> v = path[i].values();
    for (int j = 0; j < path[i].size(); ++j) {
      CsvRow(os) << times[i] << path[i].node(j) << v[j];
    }
  }
}

nlohmann::json virasoroSidecar(const std::vector<double>& times, const std::vector<double>& b,
                               int gridSize, const CocycleParams& params) {
  if (times.size() != b.size()) throw DimensionError("virasoroSidecar: size mismatch");
  return {{"grid", gridSize}, {"mu", params.mu}, {"nu", params.nu}, {"t", times}, {"b", b}};
}

}  // namespace srgeo
