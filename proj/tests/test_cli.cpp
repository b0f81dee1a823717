#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "superdirac/cache.hpp"
#include "superdirac/cli.hpp"
#include "superdirac/json_io.hpp"

using namespace superdirac;

namespace {

struct RunResult {
  int code;
  std::string out;
  std::string err;
};

RunResult run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

struct TempDir {
  std::filesystem::path path;
  TempDir() : path(std::filesystem::temp_directory_path() /
                   ("sdtest-" + std::to_string(::getpid()) + "-" +
                    std::to_string(counter++))) {
    std::filesystem::create_directories(path);
  }
  ~TempDir() { std::filesystem::remove_all(path); }
  static inline int counter = 0;
};

}  // namespace

TEST_CASE("lift-ds matches the documented examples") {
  auto r = run({"lift-ds", "--n", "2", "--param", "2,1", "--json"});
  CHECK(r.code == 0);
  auto j = Json::parse(r.out);
  CHECK(j["lambda_prime"] == "3/2,1/2");

  auto r2 = run({"lift-ds", "--param", "3,1,-2", "--json"});
  CHECK(Json::parse(r2.out)["lambda_prime"] == "5/2,1/2,-3/2");
}

TEST_CASE("character command round-trips through its schema") {
  auto r = run({"character", "--type", "osp", "--n", "1", "--hw", "2",
                "--json", "--no-cache"});
  CHECK(r.code == 0);
  auto j = Json::parse(r.out);
  CHECK(j["dimension"] == "5");
  auto hw = weight_from_json(j["highest_weight"]);
  CHECK(hw.str() == "2");
  auto terms = character_from_json(j["terms"], 1);
  CHECK(terms.coefficient_sum() == 5);
  CHECK(weight_from_json(j["inf_char"]).str() == "5/2");
}

TEST_CASE("exit codes: 0 success, 1 identity failure, 2 usage") {
  CHECK(run({"roots", "--type", "b", "--n", "2"}).code == 0);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"roots", "--type", "q", "--n", "2"}).code == 2);
  CHECK(run({"roots", "--type", "b", "--n", "2", "--bogus-flag"}).code == 2);
  CHECK(run({"character", "--type", "b", "--n", "2", "--hw", "1/2,1/2",
             "--no-cache"})
            .code == 2);  // spinorial
  CHECK(run({"lift-ds", "--param", "3/2,1/2"}).code == 2);  // wrong parity
  CHECK(run({"lift-ds", "--param", "2,2"}).code == 2);      // singular
  CHECK(run({"mult", "--n", "2", "--hw", "junk"}).code == 2);
  auto usage = run({"lift-ds", "--param", "2,2"});
  CHECK(usage.err.find("usage error") != std::string::npos);
  CHECK(usage.err.find("hint") != std::string::npos);
}

TEST_CASE("identity commands succeed on valid ranks") {
  CHECK(run({"transfer-factor", "--n", "2", "--order", "10"}).code == 0);
  CHECK(run({"dirac-index", "--n", "1", "--hw", "2", "--order", "10"}).code ==
        0);
  CHECK(run({"dirac-square", "--n", "1"}).code == 0);
  // the Koszul convention flips the identity: reported as identity failure
  CHECK(run({"dirac-square", "--n", "1", "--convention", "koszul"}).code == 1);
  CHECK(run({"dirac-cohomology", "--m", "2", "--order", "12"}).code == 0);
  CHECK(run({"verify", "--suite", "kostant", "--n-max", "2"}).code == 0);
  CHECK(run({"verify", "--suite", "bogus"}).code == 2);
}

TEST_CASE("output determinism: identical invocations are byte-identical") {
  std::vector<std::vector<std::string>> cases = {
      {"roots", "--type", "osp", "--n", "3", "--json"},
      {"character", "--type", "b", "--n", "2", "--hw", "2,1", "--json",
       "--no-cache"},
      {"mult", "--n", "2", "--hw", "1,1", "--json"},
      {"verify", "--suite", "denominator", "--json"},
      {"verify", "--suite", "denominator", "--jobs", "3", "--json"},
      {"dirac-index", "--n", "2", "--hw", "1,0", "--order", "8", "--json"},
  };
  for (const auto& c : cases) {
    auto a = run(c), b = run(c);
    CHECK(a.code == b.code);
    CHECK(a.out == b.out);
  }
  // parallel and serial verify agree
  auto serial = run({"verify", "--suite", "oscillator", "--json"});
  auto parallel =
      run({"verify", "--suite", "oscillator", "--jobs", "4", "--json"});
  CHECK(serial.out == parallel.out);
}

TEST_CASE("result cache") {
  TempDir tmp;
  ResultCache cache(tmp.path, true);
  SUBCASE("put then get is identical") {
    cache.put("k1", "payload-bytes");
    auto got = cache.get("k1");
    REQUIRE(got.has_value());
    CHECK(*got == "payload-bytes");
  }
  SUBCASE("corrupted payload is rejected") {
    cache.put("k2", "payload");
    // corrupt the stored file
    for (const auto& entry : std::filesystem::directory_iterator(tmp.path)) {
      auto text = Json::parse(std::ifstream(entry.path()));
      text["payload"] = "tampered";
      std::ofstream(entry.path(), std::ios::trunc) << text.dump(2);
    }
    CHECK(!cache.get("k2").has_value());
    // recompute-and-overwrite restores it
    cache.put("k2", "payload");
    CHECK(cache.get("k2").has_value());
  }
  SUBCASE("version bump invalidates old entries") {
    cache.put("k3", "payload");
    for (const auto& entry : std::filesystem::directory_iterator(tmp.path)) {
      auto text = Json::parse(std::ifstream(entry.path()));
      text["schema_version"] = ResultCache::kSchemaVersion - 1;
      std::ofstream(entry.path(), std::ios::trunc) << text.dump(2);
    }
    CHECK(!cache.get("k3").has_value());
  }
  SUBCASE("disabled cache stores nothing") {
    ResultCache off(tmp.path / "sub", false);
    off.put("k", "v");
    CHECK(!off.get("k").has_value());
    CHECK(!std::filesystem::exists(tmp.path / "sub"));
  }
}

TEST_CASE("character command cache hits are byte-identical") {
  TempDir tmp;
  std::vector<std::string> args = {"character", "--type",
                                   "osp",       "--n",
                                   "2",         "--hw",
                                   "2,1",       "--json",
                                   "--cache-dir", tmp.path.string()};
  auto miss = run(args);
  CHECK(miss.code == 0);
  CHECK(std::filesystem::exists(tmp.path));
  auto hit = run(args);
  CHECK(hit.code == 0);
  CHECK(hit.out == miss.out);
  // corrupt every cache file; the command recomputes and rewrites
  for (const auto& entry : std::filesystem::directory_iterator(tmp.path))
    std::ofstream(entry.path(), std::ios::trunc) << "{not json";
  auto recomputed = run(args);
  CHECK(recomputed.code == 0);
  CHECK(recomputed.out == miss.out);
  auto rehit = run(args);
  CHECK(rehit.out == miss.out);
}

TEST_CASE("verify json report round-trips") {
  auto r = run({"verify", "--suite", "lifting", "--json"});
  CHECK(r.code == 0);
  auto j = Json::parse(r.out);
  CHECK(j["pass"] == true);
  CHECK(j["schema_version"] == 1);
  for (const auto& c : j["checks"]) {
    CHECK(c.contains("suite"));
    CHECK(c.contains("identity"));
    CHECK(c["pass"] == true);
  }
}

TEST_CASE("series json round-trip") {
  auto s = weil_character(2, WeilParity::Difference, 9);
  auto j = series_json(s);
  auto back = series_from_json(j);
  CHECK(back == s);
}

TEST_CASE("help is available") {
  auto r = run({"--help"});
  CHECK(r.code == 0);
  for (const char* cmd :
       {"roots", "character", "mult", "dim", "transfer-factor", "dirac-index",
        "lift", "lift-ds", "dirac-square", "dirac-cohomology", "verify"})
    CHECK(r.out.find(cmd) != std::string::npos);
}
