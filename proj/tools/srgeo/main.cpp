// srgeo: geodesic, steering and Martinet experiments plus the check suites.
//
//   srgeo [--config FILE] geodesic|steer|martinet|check [flags]
//
// Config files hold key=value lines whose keys are the long flag names;
// flags given on the command line win.

#include <algorithm>
#include <iostream>
#include <set>

#include "CLI11.hpp"
#include "commands.hpp"
#include "config.hpp"
#include "srgeo/core/error.hpp"

namespace {

using namespace srgeo::cli;

struct Options {
  GeodesicOptions geodesic;
  SteerOptions steer;
  MartinetOptions martinet;
  CheckCommandOptions check;
};

void addGeodesic(CLI::App& app, GeodesicOptions& o) {
  auto* c = app.add_subcommand("geodesic", "integrate a normal geodesic equation");
  c->add_option("--model", o.model, "h10 | hab | vir10 | virab | kahler")
      ->check(CLI::IsMember({"h10", "hab", "vir10", "virab", "kahler"}));
  c->add_option("--alpha", o.alpha, "metric weight alpha");
  c->add_option("--beta", o.beta, "metric weight beta");
  c->add_option("--mu", o.mu, "cocycle weight mu");
  c->add_option("--nu", o.nu, "cocycle weight nu");
  c->add_option("--lambda1", o.lambda1, "rotation multiplier");
  c->add_option("--lambda2", o.lambda2, "central multiplier (Virasoro models)");
  c->add_option("--init", o.init, "field literal 'a0,a1,b1,...', '(k,re,im) ...' or 'random'");
  c->add_option("-N,--band-limit", o.bandLimit, "Fourier band limit");
  c->add_option("-M,--grid", o.grid, "nodes of the diffeomorphism grid (--flow)");
  c->add_option("--dt", o.dt, "time step");
  c->add_option("--steps", o.steps, "number of steps");
  c->add_option("--sample-every", o.sampleEvery, "write every n-th step");
  c->add_option("--scheme", o.scheme, "auto | rk4 | ifrk4")
      ->check(CLI::IsMember({"auto", "rk4", "ifrk4"}));
  c->add_flag("--keep-mean", o.keepMean, "do not project the mean of u to zero");
  c->add_flag("--flow", o.flow, "also integrate the diffeomorphism path");
  c->add_option("--seed", o.seed, "seed for --init random");
  c->add_option("-o,--output", o.output, "output prefix");
}

void addSteer(CLI::App& app, SteerOptions& o) {
  auto* c = app.add_subcommand("steer", "horizontal steering inside finite-dimensional subgroups");
  c->add_option("--target-rotation", o.targetRotation, "rotation angle to reach");
  c->add_option("--tol", o.tol, "endpoint tolerance");
  c->add_option("--subgroup", o.subgroup, "subgroup index n for rotation steering");
  c->add_flag("--center", o.center, "steer the Virasoro centre instead");
  c->add_option("--b0", o.b0, "target rotation (centre mode)");
  c->add_option("--b", o.b, "target central value (centre mode)");
  c->add_option("--mu", o.mu, "cocycle weight mu");
  c->add_option("--nu", o.nu, "cocycle weight nu");
  c->add_option("--slopes", o.slopes, "paper | lifted")
      ->check(CLI::IsMember({"paper", "lifted"}));
  c->add_option("--samples-per-stage", o.samplesPerStage, "path samples per stage");
  c->add_option("-M,--grid", o.grid, "nodes of the diffeomorphism grid");
  c->add_option("-o,--output", o.output, "output prefix");
}

void addMartinet(CLI::App& app, MartinetOptions& o) {
  auto* c = app.add_subcommand("martinet", "Martinet variation and normal flows");
  c->add_option("--v", o.v, "variation profile: sin_pi | t1mt | zero");
  c->add_option("--s", o.s, "variation size");
  c->add_option("--samples", o.samples, "quadrature intervals");
  c->add_option("--normal-frame", o.normalFrame, "none | heisenberg | martinet")
      ->check(CLI::IsMember({"none", "heisenberg", "martinet"}));
  c->add_option("--m", o.m, "initial point 'x,y,z'");
  c->add_option("--p", o.p, "initial covector in frame components 'p1,p2,p3'");
  c->add_option("--dt", o.dt, "normal flow time step");
  c->add_option("--steps", o.steps, "normal flow steps");
  c->add_option("-o,--output", o.output, "output prefix");
}

void addCheck(CLI::App& app, CheckCommandOptions& o) {
  auto* c = app.add_subcommand("check", "run the verification suites");
  c->add_option("suite", o.suite, "all | fourier | geodesic | group | su11 | finite")
      ->check(CLI::IsMember({"all", "fourier", "geodesic", "group", "su11", "finite"}));
  c->add_option("--seed", o.seed, "seed for randomized checks");
  c->add_flag("--inject-fault", o.injectFault,
              "use the principal branch in the SU(1,1) lift (negative control)");
  c->add_option("--report", o.report, "also write the JSON report to this file");
}

// Config values become option defaults so that command-line flags override
// them. Keys of other subcommands are ignored; unknown keys are an error.
void applyConfig(CLI::App& app, const ConfigFile& cfg) {
  for (const auto& [key, value] : cfg.values) {
    if (key == "command" || key == "config") continue;
    bool known = false;
    for (auto* sub : app.get_subcommands({})) {
      if (auto* opt = sub->get_option_no_throw("--" + key)) {
        opt->default_val(value);
        known = true;
      } else if (auto* pos = sub->get_option_no_throw(key)) {
        pos->default_val(value);
        known = true;
      }
    }
    if (!known) throw srgeo::InputError(cfg.path + ": unknown key '" + key + "'");
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"srgeo: sub-Riemannian geodesics and controllability on circle groups"};
  app.require_subcommand(0, 1);
  std::string configPath;
  app.add_option("--config", configPath, "key=value configuration file");
  Options opts;
  addGeodesic(app, opts.geodesic);
  addSteer(app, opts.steer);
  addMartinet(app, opts.martinet);
  addCheck(app, opts.check);

  // --config is consumed here; everything else goes to CLI11
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) {
    const std::string a = argv[i];
    if (a == "--config" && i + 1 < argc) {
      ++i;
    } else if (a.rfind("--config=", 0) != 0) {
      args.push_back(a);
    }
  }
  try {
    if (const auto path = findConfigArgument(argc, argv)) {
      const ConfigFile cfg = loadConfig(*path);
      applyConfig(app, cfg);
      // a config file may name the command
      if (auto it = cfg.values.find("command"); it != cfg.values.end()) {
        const std::set<std::string> names = {"geodesic", "steer", "martinet", "check"};
        bool given = false;
        for (const auto& a : args) given = given || names.count(a) > 0;
        if (!given) args.insert(args.begin(), it->second);
      }
    }
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  } catch (const CLI::Error& e) {
    std::cerr << "srgeo: " << e.what() << '\n';
    return kExitUsage;
  } catch (const srgeo::Error& e) {
    std::cerr << "srgeo: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (app.got_subcommand("geodesic")) return runGeodesic(opts.geodesic);
    if (app.got_subcommand("steer")) return runSteer(opts.steer);
    if (app.got_subcommand("martinet")) return runMartinet(opts.martinet);
    if (app.got_subcommand("check")) return runCheck(opts.check);
    std::cerr << app.help();
    return kExitUsage;
  } catch (const srgeo::DivergenceError& e) {
    std::cerr << "srgeo: divergence: " << e.what() << '\n';
    return kExitDiverged;
  } catch (const srgeo::SteeringError& e) {
    std::cerr << "srgeo: " << e.what() << " (residual " << e.residual() << ")\n";
    return kExitSteering;
  } catch (const srgeo::InputError& e) {
    std::cerr << "srgeo: " << e.what() << '\n';
    return kExitUsage;
  } catch (const srgeo::ParameterError& e) {
    std::cerr << "srgeo: " << e.what() << '\n';
    return kExitUsage;
  } catch (const srgeo::DimensionError& e) {
    std::cerr << "srgeo: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "srgeo: " << e.what() << '\n';
    return kExitFailure;
  }
}
