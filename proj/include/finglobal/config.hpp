#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "finglobal/io.hpp"
#include "finglobal/permgroup.hpp"

namespace finglobal {

enum class OutputFormat { text, json };

struct Config {
  std::optional<std::filesystem::path> cache_dir;
  std::size_t max_group_order = 50000;
  std::size_t max_lattice_order = 1000;
  std::uint64_t seed = 0;
  OutputFormat output = OutputFormat::text;

  Limits limits() const { return {max_group_order, max_lattice_order}; }
};

/// Defaults overridden by FINGLOBAL_CACHE_DIR, FINGLOBAL_MAX_GROUP_ORDER,
/// FINGLOBAL_MAX_LATTICE_ORDER and FINGLOBAL_SEED.
Config config_from_environment();

/// S<n>, A<n>, S<k>xS<l> or Y<k>,<l>; also e for the trivial group.
GroupPtr parse_group_spec(const std::string& spec, const Limits& limits = {});
/// "a..b" inclusive.
std::pair<int, int> parse_range(const std::string& text);

/// One JSON file per (artifact, key) below the cache directory.
class Cache {
 public:
  static constexpr int kSchemaVersion = 1;

  /// Disabled when `dir` is empty or cannot be created; the reason is kept
  /// in warning().
  explicit Cache(std::optional<std::filesystem::path> dir);

  bool enabled() const { return dir_.has_value(); }
  const std::string& warning() const { return warning_; }
  std::optional<Json> load(const std::string& artifact, const std::string& key) const;
  void store(const std::string& artifact, const std::string& key, const Json& data) const;

 private:
  std::filesystem::path file(const std::string& artifact, const std::string& key) const;

  std::optional<std::filesystem::path> dir_;
  std::string warning_;
};

}  // namespace finglobal
