#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace srgeo::cli {

/// Flat key=value file; '#' starts a comment, blank lines are ignored.
/// Keys are the long flag names without the leading dashes.
struct ConfigFile {
  std::string path;
  std::map<std::string, std::string> values;
};

/// Throws InputError with the offending line number on malformed input.
ConfigFile loadConfig(const std::string& path);

/// Value of --config / --config=FILE anywhere in argv, if present.
std::optional<std::string> findConfigArgument(int argc, char** argv);

/// Comma-separated reals ("0, 1.5, -2").
std::vector<double> parseRealList(const std::string& text, std::size_t expected = 0);

/// prefix + suffix, with the directory replaced by $SRGEO_OUTPUT_DIR when set.
/// Parent directories are created.
std::filesystem::path outputPath(const std::string& prefix, const std::string& suffix);

}  // namespace srgeo::cli
