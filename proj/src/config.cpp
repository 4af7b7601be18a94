#include "finglobal/config.hpp"

#include <cctype>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <regex>

#include "finglobal/errors.hpp"

namespace finglobal {

namespace {

std::uint64_t parse_unsigned(const std::string& text, const char* what) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size()) throw InvalidInput(std::string("bad value for ") + what);
  return v;
}

int parse_int(const std::string& text) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size()) throw InvalidInput("bad integer: " + text);
  return v;
}

}  // namespace

Config config_from_environment() {
  Config c;
  if (const char* v = std::getenv("FINGLOBAL_CACHE_DIR"); v && *v) c.cache_dir = v;
  if (const char* v = std::getenv("FINGLOBAL_MAX_GROUP_ORDER"); v && *v) {
    c.max_group_order = parse_unsigned(v, "FINGLOBAL_MAX_GROUP_ORDER");
  }
  if (const char* v = std::getenv("FINGLOBAL_MAX_LATTICE_ORDER"); v && *v) {
    c.max_lattice_order = parse_unsigned(v, "FINGLOBAL_MAX_LATTICE_ORDER");
  }
  if (const char* v = std::getenv("FINGLOBAL_SEED"); v && *v) c.seed = parse_unsigned(v, "FINGLOBAL_SEED");
  return c;
}

GroupPtr parse_group_spec(const std::string& spec, const Limits& limits) {
  static const std::regex single(R"(([SA])(\d+))");
  static const std::regex product(R"(S(\d+)xS(\d+))");
  static const std::regex young(R"(Y(\d+),(\d+))");
  std::smatch m;
  const std::size_t cap = limits.max_group_order;
  if (spec == "e" || spec == "1") return trivial_group(1);
  if (std::regex_match(spec, m, single)) {
    const int n = parse_int(m[2]);
    if (n > Perm::kMaxDegree) throw CapExceeded("degree exceeds " + std::to_string(Perm::kMaxDegree));
    return m[1] == "S" ? symmetric_group(n, cap) : alternating_group(n, cap);
  }
  if (std::regex_match(spec, m, product) || std::regex_match(spec, m, young)) {
    const int k = parse_int(m[1]), l = parse_int(m[2]);
    if (k + l > Perm::kMaxDegree) throw CapExceeded("degree exceeds " + std::to_string(Perm::kMaxDegree));
    return young_subgroup(k, l, cap);
  }
  throw InvalidInput("unrecognized group spec '" + spec + "' (expected S<n>, A<n>, S<k>xS<l> or Y<k>,<l>)");
}

std::pair<int, int> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    const int v = parse_int(text);
    return {v, v};
  }
  const int a = parse_int(text.substr(0, dots)), b = parse_int(text.substr(dots + 2));
  if (a > b) throw InvalidInput("empty range " + text);
  return {a, b};
}

Cache::Cache(std::optional<std::filesystem::path> dir) {
  if (!dir || dir->empty()) return;
  std::error_code ec;
  std::filesystem::create_directories(*dir, ec);
  const auto probe = *dir / ".write-test";
  std::ofstream test(probe);
  if (ec || !test) {
    warning_ = "cache directory " + dir->string() + " is not writable; caching disabled";
    return;
  }
  test.close();
  std::filesystem::remove(probe, ec);
  dir_ = std::move(dir);
}

std::filesystem::path Cache::file(const std::string& artifact, const std::string& key) const {
  std::string safe;
  for (char c : key) safe += (std::isalnum(static_cast<unsigned char>(c)) || c == '-' || c == '_') ? c : '_';
  return *dir_ / artifact / (safe + ".json");
}

std::optional<Json> Cache::load(const std::string& artifact, const std::string& key) const {
  if (!dir_) return std::nullopt;
  std::ifstream in(file(artifact, key));
  if (!in) return std::nullopt;
  try {
    Json j = Json::parse(in);
    if (j.value("schema_version", 0) != kSchemaVersion || j.value("key", "") != key) return std::nullopt;
    return j.at("data");
  } catch (const Json::exception&) {
    return std::nullopt;
  }
}

void Cache::store(const std::string& artifact, const std::string& key, const Json& data) const {
  if (!dir_) return;
  const auto path = file(artifact, key);
  std::error_code ec;
  std::filesystem::create_directories(path.parent_path(), ec);
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["artifact"] = artifact;
  j["key"] = key;
  j["data"] = data;
  const auto tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) return;
    out << j.dump(2) << '\n';
  }
  std::filesystem::rename(tmp, path, ec);
}

}  // namespace finglobal
