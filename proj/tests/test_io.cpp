#include <filesystem>
#include <fstream>

#include "doctest.h"
#include "finglobal/config.hpp"
#include "finglobal/errors.hpp"
#include "finglobal/io.hpp"
#include "finglobal/repring.hpp"

using namespace finglobal;

namespace {

std::filesystem::path scratch_dir(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / ("finglobal-test-" + name);
  std::filesystem::remove_all(dir);
  return dir;
}

}  // namespace

TEST_CASE("group specs") {
  CHECK(parse_group_spec("S4")->order() == 24);
  CHECK(parse_group_spec("A5")->order() == 60);
  CHECK(parse_group_spec("S2xS3")->same_group(*young_subgroup(2, 3)));
  CHECK(parse_group_spec("Y1,2")->same_group(*young_subgroup(1, 2)));
  CHECK(parse_group_spec("e")->order() == 1);
  CHECK_THROWS_AS(parse_group_spec("Q8"), InvalidInput);
  CHECK_THROWS_AS(parse_group_spec("S9"), CapExceeded);
  CHECK_THROWS_AS(parse_group_spec("S4", Limits{10, 10}), CapExceeded);
  CHECK(parse_range("5..8") == std::pair(5, 8));
  CHECK(parse_range("6") == std::pair(6, 6));
  CHECK_THROWS_AS(parse_range("8..5"), InvalidInput);
}

TEST_CASE("json round trips are byte identical") {
  auto g = symmetric_group(4);
  CHECK(group_from_json(to_json(*g))->same_group(*g));

  const CharacterTable t = char_table_symmetric(5);
  const std::string text = to_json(t).dump(2);
  const CharacterTable back = char_table_from_json(Json::parse(text));
  CHECK(back.matrix() == t.matrix());
  CHECK(to_json(back).dump(2) == text);

  const auto product = char_table_young(young_subgroup(2, 2));
  CHECK(to_json(char_table_from_json(to_json(product))).dump() == to_json(product).dump());

  RepRingFunctor ru;
  SplittingEngine engine(ru);
  for (int n = 0; n <= 4; ++n) {
    const std::string s = to_json(engine.report(n)).dump(2);
    const SplittingReport r = splitting_report_from_json(Json::parse(s));
    CHECK(to_json(r).dump(2) == s);
    CHECK(Json::parse(s).dump(2) == s);
  }
  const ZMap m = ru.tr(young_subgroup(2, 1), symmetric_group(3));
  CHECK(zmap_from_json(to_json(m)) == m);
}

TEST_CASE("cache store, load and invalidation") {
  const auto dir = scratch_dir("cache");
  Cache cache(dir);
  REQUIRE(cache.enabled());
  Json data = {{"x", 1}};
  CHECK(!cache.load("thing", "k1").has_value());
  cache.store("thing", "k1", data);
  auto loaded = cache.load("thing", "k1");
  REQUIRE(loaded.has_value());
  CHECK(*loaded == data);

  // an old schema version is ignored
  const auto path = dir / "thing" / "k1.json";
  Json stale = Json::parse(std::ifstream(path));
  stale["schema_version"] = Cache::kSchemaVersion + 1;
  std::ofstream(path) << stale.dump();
  CHECK(!cache.load("thing", "k1").has_value());

  Cache disabled(std::nullopt);
  CHECK(!disabled.enabled());
  disabled.store("thing", "k2", data);
  CHECK(!disabled.load("thing", "k2").has_value());
  std::filesystem::remove_all(dir);
}

TEST_CASE("unwritable cache directory disables caching") {
  const auto blocker = scratch_dir("blocker");
  std::ofstream(blocker) << "file, not a directory";
  Cache cache(blocker / "sub");
  CHECK(!cache.enabled());
  CHECK(!cache.warning().empty());
  std::filesystem::remove(blocker);
}
