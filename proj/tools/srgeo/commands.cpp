#include "commands.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>

#include "config.hpp"
#include "json.hpp"
#include "srgeo/checks/checks.hpp"
#include "srgeo/core/csv.hpp"
#include "srgeo/core/error.hpp"
#include "srgeo/finite/frame.hpp"
#include "srgeo/finite/martinet.hpp"
#include "srgeo/fourier/literal.hpp"
#include "srgeo/geodesic/factorize.hpp"
#include "srgeo/geodesic/integrator.hpp"
#include "srgeo/geodesic/trajectory_io.hpp"
#include "srgeo/group/flow.hpp"
#include "srgeo/group/group_io.hpp"
#include "srgeo/su11/steering.hpp"

namespace srgeo::cli {

namespace {

using Json = nlohmann::json;

class WallClock {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::ofstream openOutput(const std::filesystem::path& p) {
  std::ofstream os(p, std::ios::binary);
  if (!os) throw InputError("cannot write '" + p.string() + "'");
  return os;
}

void writeJson(const std::filesystem::path& p, const Json& j) {
  auto os = openOutput(p);
  os << j.dump(2) << '\n';
}

Model makeModel(const GeodesicOptions& o) {
  const CocycleParams cp{o.mu, o.nu};
  if (o.model == "h10") return Model::h10();
  if (o.model == "hab") return Model::hab(MetricParams(o.alpha, o.beta));
  if (o.model == "vir10") return Model::vir10(cp);
  if (o.model == "virab") return Model::virab(MetricParams(o.alpha, o.beta), cp);
  if (o.model == "kahler") return Model::kahler(MetricParams(o.alpha, o.beta));
  throw ParameterError("unknown model '" + o.model + "'");
}

// Relative residual of the PDE over the last five recorded samples, when
// they are equally spaced; NaN otherwise.
double finalResidual(const Model& model, const Trajectory& traj) {
  const std::size_t n = traj.states.size();
  if (n < 5) return NAN;
  const double h = traj.times[n - 1] - traj.times[n - 2];
  for (std::size_t i = n - 4; i < n; ++i) {
    if (std::abs(traj.times[i] - traj.times[i - 1] - h) > 1e-9 * h) return NAN;
  }
  std::vector<FourierField> u;
  for (std::size_t i = n - 5; i < n; ++i) u.push_back(traj.states[i].u);
  const GeodesicState& s = traj.states.back();
  return geodesicResidual(model, u, s.lambda1, s.lambda2, h);
}

FrameSR frameByName(const std::string& name) {
  if (name == "heisenberg") return heisenbergFrame();
  if (name == "martinet") return martinetFrame();
  throw ParameterError("unknown frame '" + name + "'");
}

Json numberOrNull(double v) { return std::isfinite(v) ? Json(v) : Json(nullptr); }

}  // namespace

int runGeodesic(const GeodesicOptions& o) {
  const WallClock clock;
  if (o.bandLimit < 1) throw ParameterError("band limit must be >= 1");
  if (o.flow && o.grid < 2 * o.bandLimit) throw ParameterError("grid must be >= 2 N for --flow");
  const Model model = makeModel(o);
  model.validateFor(o.bandLimit);

  GeodesicState s0;
  if (o.init == "random") {
    Rng rng(o.seed);
    s0.u = checks::randomField(rng, o.bandLimit, std::min(8, o.bandLimit), 0.1);
  } else {
    s0.u = parseFieldLiteral(o.init, o.bandLimit);
  }
  s0.lambda1 = o.lambda1;
  s0.lambda2 = o.lambda2;

  IntegratorConfig cfg;
  cfg.dt = o.dt;
  cfg.steps = o.steps;
  cfg.sampleEvery = o.sampleEvery;
  cfg.projectMean = !o.keepMean;
  if (!(o.dt > 0.0)) throw ParameterError("dt must be positive");
  const double stiffness = linearStiffness(model, s0, o.dt);
  if (o.scheme == "rk4") {
    cfg.scheme = Scheme::rk4;
  } else if (o.scheme == "ifrk4") {
    cfg.scheme = Scheme::ifrk4;
  } else if (o.scheme == "auto") {
    cfg.scheme = stiffness > 2.0 ? Scheme::ifrk4 : Scheme::rk4;
  } else {
    throw ParameterError("unknown scheme '" + o.scheme + "'");
  }

  const PartialRun run = integratePartial(model, s0, cfg);
  const Trajectory& traj = run.trajectory;

  Json outputs = Json::array();
  const auto csvPath = outputPath(o.output, "_trajectory.csv");
  {
    auto os = openOutput(csvPath);
    writeTrajectoryCsv(os, model, traj);
  }
  outputs.push_back(csvPath.string());

  Json summary = trajectorySummary(model, cfg, traj);
  summary["linear_stiffness"] = stiffness;
  summary["sample_every"] = cfg.sampleEvery;
  summary["final_residual"] = numberOrNull(finalResidual(model, traj));
  summary["diverged"] = run.diverged;
  summary["partial"] = run.diverged;
  summary["last_valid_time"] = run.lastValidTime;
  if (run.diverged) summary["error"] = run.message;

  if (o.flow && !run.diverged) {
    std::vector<FourierField> u;
    for (const auto& s : traj.states) u.push_back(s.u);
    const double h = cfg.dt * cfg.sampleEvery;
    if (cfg.steps % cfg.sampleEvery != 0) {
      throw ParameterError("--flow needs steps to be a multiple of sample-every");
    }
    const std::vector<DiffeoGrid> gamma = flowFromLog(u, h, o.grid);
    const auto flowPath = outputPath(o.output, "_flow.csv");
    {
      auto os = openOutput(flowPath);
      writeDiffeoCsv(os, traj.times, gamma);
    }
    outputs.push_back(flowPath.string());
    if (model.isVirasoro()) {
      const std::vector<double> b = centralLift(u, gamma, h, model.cocycle());
      const auto sidecar = outputPath(o.output, "_central.json");
      writeJson(sidecar, virasoroSidecar(traj.times, b, o.grid, model.cocycle()));
      outputs.push_back(sidecar.string());
    }
  }

  summary["outputs"] = outputs;
  summary["wall_time_s"] = clock.seconds();
  const auto summaryPath = outputPath(o.output, "_summary.json");
  writeJson(summaryPath, summary);
  std::cout << summary.dump(2) << '\n';
  if (run.diverged) {
    std::cerr << "srgeo: " << run.message << "; partial outputs written\n";
    return kExitDiverged;
  }
  return kExitOk;
}

int runSteer(const SteerOptions& o) {
  const WallClock clock;
  if (o.samplesPerStage < 1) throw ParameterError("samples-per-stage must be >= 1");
  if (o.grid < 8) throw ParameterError("grid must be >= 8");
  Json summary;
  SteeringPlan plan;
  if (o.center) {
    CentralSlopes slopes;
    if (o.slopes == "paper") {
      slopes = CentralSlopes::paper;
    } else if (o.slopes == "lifted") {
      slopes = CentralSlopes::lifted;
    } else {
      throw ParameterError("unknown slopes '" + o.slopes + "'");
    }
    const CocycleParams cp{o.mu, o.nu};
    const CenterSteering cs = steerVirasoroCenter(o.b0, o.b, cp, slopes, o.tol);
    plan = cs.plan;

    // central coordinate actually reached by the horizontal lift of the plan
    const double total = plan.totalTime();
    const int steps = std::max(8, static_cast<int>(std::ceil(total * 64)));
    const double h = total / steps;
    std::vector<FourierField> u;
    std::vector<DiffeoGrid> gamma;
    for (int i = 0; i <= steps; ++i) {
      u.push_back(plan.logDerivative(i * h, 4));
      gamma.push_back(plan.at(i * h).toGrid(o.grid));
    }
    const double reached = total > 0.0 ? centralLift(u, gamma, h, cp).back() : 0.0;
    summary = {{"mode", "center"},
               {"slopes", o.slopes},
               {"mu", o.mu},
               {"nu", o.nu},
               {"b0", o.b0},
               {"b", o.b},
               {"r1", cs.r1},
               {"r2", cs.r2},
               {"determinant", cs.determinant},
               {"round_trip", cs.roundTrip},
               {"endpoint_error", cs.endpointError},
               {"central_reached", reached},
               {"central_error", std::abs(reached - o.b)}};
  } else {
    const RotationSteering rs = steerToRotation(o.targetRotation, o.tol, o.subgroup);
    plan = rs.plan;
    summary = {{"mode", "rotation"},
               {"target_rotation", o.targetRotation},
               {"subgroup", o.subgroup},
               {"tol", o.tol},
               {"endpoint_error", rs.endpointError},
               {"pieces", rs.pieces},
               {"iterations", rs.iterations}};
  }
  summary["horizontality"] = plan.stages().empty() ? 0.0 : measureHorizontality(plan, 4, 256);
  summary["plan"] = planJson(plan);

  const int stages = static_cast<int>(plan.stages().size());
  const int samples = std::max(1, stages * o.samplesPerStage);
  std::vector<double> times;
  std::vector<DiffeoGrid> path;
  for (int i = 0; i <= samples; ++i) {
    const double t = plan.totalTime() * i / samples;
    times.push_back(t);
    path.push_back(plan.at(t).toGrid(o.grid));
  }
  const auto pathFile = outputPath(o.output, "_path.csv");
  {
    auto os = openOutput(pathFile);
    writeDiffeoCsv(os, times, path);
  }
  const auto planFile = outputPath(o.output, "_plan.json");
  summary["outputs"] = {planFile.string(), pathFile.string()};
  summary["wall_time_s"] = clock.seconds();
  writeJson(planFile, summary);
  std::printf("endpoint error = %.3e\n", summary["endpoint_error"].get<double>());
  std::cout << summary.dump(2) << '\n';
  return kExitOk;
}

int runMartinet(const MartinetOptions& o) {
  const WallClock clock;
  const MartinetVariation mv = martinetVariation(namedProfile(o.v), o.s, o.samples);
  Json summary = {{"v", o.v},
                  {"s", o.s},
                  {"samples", o.samples},
                  {"endpoint_z", mv.endpointZ},
                  {"ratio", numberOrNull(mv.ratio)},
                  {"leading_term", mv.leadingTerm},
                  {"field_residual", mv.fieldResidual},
                  {"field_w", mv.fieldW}};
  Json outputs = Json::array();

  if (o.normalFrame != "none") {
    const FrameSR sys = frameByName(o.normalFrame);
    const auto m = parseRealList(o.m, 3);
    const auto p = parseRealList(o.p, 3);
    const CotangentState s0{Eigen::Map<const VectorXd>(m.data(), 3),
                            Eigen::Map<const VectorXd>(p.data(), 3)};
    if (!(o.dt > 0.0) || o.steps < 0) throw ParameterError("need dt > 0 and steps >= 0");
    const NormalTrajectory tr = srNormalFlow(sys, s0, o.dt, o.steps);
    const auto csv = outputPath(o.output, "_normal.csv");
    {
      auto os = openOutput(csv);
      {
        CsvRow(os) << std::string("t") << std::string("m0") << std::string("m1")
                   << std::string("m2") << std::string("p0") << std::string("p1")
                   << std::string("p2") << std::string("H");
      }
      for (std::size_t i = 0; i < tr.states.size(); ++i) {
        CsvRow row(os);
        row << tr.times[i];
        for (int k = 0; k < 3; ++k) row << tr.states[i].m(k);
        for (int k = 0; k < 3; ++k) row << tr.states[i].p(k);
        row << tr.hamiltonian[i];
      }
    }
    outputs.push_back(csv.string());
    summary["normal_flow"] = {{"frame", o.normalFrame},
                              {"dt", o.dt},
                              {"steps", o.steps},
                              {"hamiltonian_drift", tr.maxHamiltonianDrift},
                              {"max_vertical", tr.maxVertical}};
  }
  const auto file = outputPath(o.output, "_martinet.json");
  outputs.push_back(file.string());
  summary["outputs"] = outputs;
  summary["wall_time_s"] = clock.seconds();
  writeJson(file, summary);
  std::printf("z^s(1)/s^2 = %.10g  (-(1/2) int v^2 = %.10g)\n", mv.ratio, mv.leadingTerm);
  std::cout << summary.dump(2) << '\n';
  return kExitOk;
}

int runCheck(const CheckCommandOptions& o) {
  checks::CheckOptions opts;
  opts.seed = o.seed;
  opts.branchRule = o.injectFault ? BranchRule::principal : BranchRule::continuous;
  const auto reports = checks::runSuites(checks::parseSuites(o.suite), opts);
  const Json j = checks::reportJson(reports, opts);
  for (const auto& c : checks::sortedCriteria(reports)) {
    std::fprintf(stderr, "%s  criterion %2d: %s\n", c.pass() ? "PASS" : "FAIL", c.number,
                 c.title.c_str());
  }
  for (const auto& r : reports) {
    std::fprintf(stderr, "suite %-9s %.2f s\n", r.suite.c_str(), r.seconds);
  }
  if (!o.report.empty()) writeJson(outputPath(o.report, ""), j);
  std::cout << j.dump(2) << '\n';
  return checks::allPass(reports) ? kExitOk : kExitFailure;
}

}  // namespace srgeo::cli
