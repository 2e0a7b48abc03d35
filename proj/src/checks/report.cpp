#include <algorithm>
#include <cmath>
#include <future>

#include "srgeo/checks/checks.hpp"
#include "srgeo/core/error.hpp"

namespace srgeo::checks {

Measurement measure(std::string name, double measured, double tolerance) {
  const bool ok = std::isfinite(measured) && measured <= tolerance;
  return {std::move(name), measured, tolerance, ok};
}

bool Criterion::pass() const {
  if (!error.empty() || items.empty()) return false;
  return std::all_of(items.begin(), items.end(), [](const Measurement& m) { return m.pass; });
}

void Criterion::add(std::string name, double measured, double tolerance) {
  items.push_back(measure(std::move(name), measured, tolerance));
}

bool SuiteReport::pass() const {
  return std::all_of(criteria.begin(), criteria.end(), [](const Criterion& c) { return c.pass(); });
}

std::string suiteName(Suite s) {
  switch (s) {
    case Suite::fourier: return "fourier";
    case Suite::geodesic: return "geodesic";
    case Suite::group: return "group";
    case Suite::su11: return "su11";
    case Suite::finite: return "finite";
  }
  return "?";
}

std::vector<Suite> parseSuites(const std::string& name) {
  const std::vector<Suite> all = {Suite::fourier, Suite::geodesic, Suite::group, Suite::su11,
                                  Suite::finite};
  if (name == "all") return all;
  for (Suite s : all)
    if (suiteName(s) == name) return {s};
  throw InputError("unknown suite '" + name + "'");
}

SuiteReport runSuite(Suite s, const CheckOptions& opts) {
  switch (s) {
    case Suite::fourier: return runFourierChecks(opts);
    case Suite::geodesic: return runGeodesicChecks(opts);
    case Suite::group: return runGroupChecks(opts);
    case Suite::su11: return runSu11Checks(opts);
    case Suite::finite: return runFiniteChecks(opts);
  }
  return {};
}

std::vector<SuiteReport> runSuites(const std::vector<Suite>& suites, const CheckOptions& opts) {
  std::vector<std::future<SuiteReport>> pending;
  pending.reserve(suites.size());
  for (Suite s : suites) pending.push_back(std::async(std::launch::async, runSuite, s, opts));
  std::vector<SuiteReport> out;
  out.reserve(suites.size());
  for (auto& f : pending) out.push_back(f.get());
  return out;
}

bool allPass(const std::vector<SuiteReport>& reports) {
  return std::all_of(reports.begin(), reports.end(), [](const SuiteReport& r) { return r.pass(); });
}

std::vector<Criterion> sortedCriteria(const std::vector<SuiteReport>& reports) {
  std::vector<Criterion> all;
  for (const auto& r : reports) all.insert(all.end(), r.criteria.begin(), r.criteria.end());
  std::stable_sort(all.begin(), all.end(),
                   [](const Criterion& a, const Criterion& b) { return a.number < b.number; });
  return all;
}

namespace {

nlohmann::json finiteOrNull(double v) {
  if (std::isfinite(v)) return v;
  return nullptr;
}

}  // namespace

nlohmann::json reportJson(const std::vector<SuiteReport>& reports, const CheckOptions& opts) {
  nlohmann::json suites = nlohmann::json::array();
  for (const auto& r : reports) {
    nlohmann::json crits = nlohmann::json::array();
    for (const auto& c : r.criteria) {
      nlohmann::json items = nlohmann::json::array();
      for (const auto& m : c.items) {
        items.push_back({{"name", m.name},
                         {"measured", finiteOrNull(m.measured)},
                         {"tolerance", m.tolerance},
                         {"pass", m.pass}});
      }
      nlohmann::json entry = {
          {"criterion", c.number}, {"title", c.title}, {"pass", c.pass()}, {"checks", items}};
      if (!c.error.empty()) entry["error"] = c.error;
      crits.push_back(entry);
    }
    suites.push_back(
        {{"suite", r.suite}, {"pass", r.pass()}, {"criteria", crits}});
  }
  return {{"seed", opts.seed},
          {"branch_rule", opts.branchRule == BranchRule::continuous ? "continuous" : "principal"},
          {"pass", allPass(reports)},
          {"suites", suites}};
}

}  // namespace srgeo::checks
