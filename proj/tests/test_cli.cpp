#include <array>
#include <cstdio>
#include <filesystem>
#include <memory>
#include <string>
#include <sys/wait.h>

#include "doctest.h"
#include "json.hpp"

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(FINGLOBAL_CLI) + " " + args + " 2>/dev/null";
  std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(cmd.c_str(), "r"), pclose);
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe.get())) > 0) out.append(buf.data(), n);
  const int status = pclose(pipe.release());
  return {WEXITSTATUS(status), out};
}

}  // namespace

TEST_CASE("documented command outputs") {
  auto dcf = run("dcf --functor burnside --n 4 --k 2");
  CHECK(dcf.code == 0);
  CHECK(dcf.out == "EQUAL\n");

  auto split = run("--output json split --functor repring --n 3");
  REQUIRE(split.code == 0);
  auto report = nlohmann::json::parse(split.out);
  CHECK(report["component_ranks"] == nlohmann::json::array({1, 0, 1, 1}));
  CHECK(std::abs(report["determinant"].get<int>()) == 1);

  auto fusion = run("--output json fusion --family alternating --n-range 5..8");
  REQUIRE(fusion.code == 0);
  auto w = nlohmann::json::parse(fusion.out);
  REQUIRE(w.size() == 4);
  CHECK(w[0]["found"] == true);
  CHECK(w[1]["found"] == false);
  CHECK(w[2]["found"] == true);
  CHECK(w[3]["found"] == false);

  auto table = run("--output json char-table --n 2");
  REQUIRE(table.code == 0);
  CHECK(nlohmann::json::parse(table.out)["matrix"] == nlohmann::json::parse("[[1,1],[1,-1]]"));

  auto dec = run("--output json decompose --functor burnside --n 2 --element [1,0]");
  REQUIRE(dec.code == 0);
  auto comps = nlohmann::json::parse(dec.out)["decomposition"]["components"];
  CHECK(comps[0]["element"] == nlohmann::json::array({2}));
  CHECK(comps[2]["element"] == nlohmann::json::array({1, -2}));

  CHECK(run("section --n 3 --with-product-group S2").code == 0);
  CHECK(run("verify-axioms --functor repring --max-n 3").code == 0);
  CHECK(run("marks --group S3").code == 0);
  CHECK(run("functor-value --functor burnside --group S4").out.find("rank 11") != std::string::npos);
}

TEST_CASE("exit codes") {
  CHECK(run("char-table --n 9").code == 2);
  CHECK(run("marks --group Q8").code == 2);
  CHECK(run("dcf --functor nonsense --n 3 --k 1").code == 2);
  CHECK(run("").code == 2);
  CHECK(run("--max-group-order 100 marks --group S5").code == 2);
  CHECK(run("decompose --functor burnside --n 2 --element [1,2,3]").code == 2);
  CHECK(run("--help").code == 0);
}

TEST_CASE("warm cache output equals cold cache output") {
  const auto dir = std::filesystem::temp_directory_path() / "finglobal-cli-cache";
  std::filesystem::remove_all(dir);
  for (const std::string cmd : {"char-table --n 6", "--output json char-table --n 5", "marks --group S4",
                                "--output json marks --group S2xS2"}) {
    const std::string args = "--cache-dir " + dir.string() + " " + cmd;
    const Run cold = run(args);
    const Run warm = run(args);
    const Run uncached = run(cmd);
    CHECK(cold.code == 0);
    CHECK(warm.out == cold.out);
    CHECK(uncached.out == cold.out);
  }
  CHECK(std::filesystem::exists(dir / "char_table" / "symmetric-6.json"));
  std::filesystem::remove_all(dir);
}
