#include "config.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "srgeo/core/error.hpp"

namespace srgeo::cli {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

ConfigFile loadConfig(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open config file '" + path + "'");
  ConfigFile cfg{path, {}};
  std::string line;
  int lineNo = 0;
  while (std::getline(in, line)) {
    ++lineNo;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw InputError(path + ":" + std::to_string(lineNo) + ": expected key=value");
    }
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    if (value.size() >= 2 && value.front() == '"' && value.back() == '"') {
      value = value.substr(1, value.size() - 2);
    }
    if (key.empty()) throw InputError(path + ":" + std::to_string(lineNo) + ": empty key");
    cfg.values[key] = value;
  }
  return cfg;
}

std::optional<std::string> findConfigArgument(int argc, char** argv) {
  for (int i = 1; i < argc; ++i) {
    const std::string a = argv[i];
    if (a == "--config" && i + 1 < argc) return std::string(argv[i + 1]);
    if (a.rfind("--config=", 0) == 0) return a.substr(9);
  }
  return std::nullopt;
}

std::vector<double> parseRealList(const std::string& text, std::size_t expected) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size()) throw InputError("not a number: '" + item + "'");
    out.push_back(v);
  }
  if (expected != 0 && out.size() != expected) {
    throw InputError("expected " + std::to_string(expected) + " comma-separated values in '" +
                     text + "'");
  }
  return out;
}

std::filesystem::path outputPath(const std::string& prefix, const std::string& suffix) {
  std::filesystem::path p(prefix + suffix);
  if (const char* dir = std::getenv("SRGEO_OUTPUT_DIR"); dir != nullptr && *dir != '\0') {
    p = std::filesystem::path(dir) / p.filename();
  }
  if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path());
  return p;
}

}  // namespace srgeo::cli
