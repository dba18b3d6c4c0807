#include <filesystem>
#include <map>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "sst/cli.hpp"
#include "sst/catalog.hpp"

using namespace sst;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "sstgroups");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli_main(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path temp_file(const std::string& name, const std::string& text) {
  const auto p = std::filesystem::temp_directory_path() / name;
  std::ofstream(p) << text;
  return p;
}

}  // namespace

TEST_CASE("usage errors exit with 2") {
  CHECK(run({}).code == kExitUsage);
  CHECK(run({"frobnicate"}).code == kExitUsage);
  CHECK(run({"predicate", "Ex1_5.json", "--subgroup", "L"}).code == kExitUsage);
  CHECK(run({"predicate", "Ex1_5.json", "--subgroup", "L", "--pred", "bogus"}).code == kExitUsage);
  CHECK(run({"classify", "no_such_file.json"}).code == kExitUsage);
  CHECK(run({"verify", "Ex1_5.json", "--check", "Z9"}).code == kExitUsage);
}

TEST_CASE("bad specs exit with 2") {
  const auto p = temp_file("sst_bad_kind.json", R"({"kind":"table","n":3})");
  const auto r = run({"classify", p.string()});
  CHECK(r.code == kExitUsage);
  CHECK_FALSE(r.err.empty());
  const auto big = temp_file("sst_big.json", R"({"kind":"symmetric","n":6})");
  CHECK(run({"classify", big.string()}).code == kExitUsage);
  CHECK(run({"--cap", "720", "classify", big.string()}).code == kExitPass);
}

TEST_CASE("predicate, classify and analyze report and check expectations") {
  const auto p = run({"predicate", "Ex1_3.json", "--subgroup", "A4", "--pred", "ss"});
  CHECK(p.code == kExitPass);
  const auto j = Json::parse(p.out);
  CHECK(j["verdict"]["verdict"] == true);
  const auto n = run({"predicate", "Ex1_3.json", "--subgroup", "A4", "--pred", "nss"});
  CHECK(n.code == kExitPass);
  CHECK(run({"predicate", "Ex1_5.json", "--subgroup", "y^2", "--pred", "ss_permutable"}).code == kExitPass);
  CHECK(run({"classify", "Ex1_8.json"}).code == kExitPass);
  CHECK(run({"analyze", "Ex1_2.json"}).code == kExitPass);
  CHECK(run({"classify", "S4"}).code == kExitPass);
}

TEST_CASE("mismatched expectations exit with 1") {
  const auto p = temp_file("sst_wrong.json", R"({"name":"wrong","group":{"kind":"cyclic","n":4},
      "expected":{"order==5":true}})");
  CHECK(run({"classify", p.string()}).code == kExitFail);
}

TEST_CASE("verify and catalog") {
  CHECK(run({"verify", "Ex1_5.json", "--check", "D,E,T1_1"}).code == kExitPass);
  CHECK(run({"verify", "S3"}).code == kExitPass);
  const auto out = std::filesystem::temp_directory_path() / "sst_catalog.json";
  const auto r = run({"catalog", "--jobs", "2", "--json", out.string()});
  CHECK(r.code == kExitPass);
  CHECK(r.out == "pass\n");
  const auto j = Json::parse(read_text(out));
  CHECK(j["summary"]["pass"] == true);
  CHECK(j["summary"]["checks_failed"] == 0);
}

TEST_CASE("documented command examples") {
  const auto c = run({"classify", "Ex1_5.json"});
  REQUIRE(c.code == kExitPass);
  const auto j = Json::parse(c.out);
  std::map<std::string, std::string> verdicts;
  for (const auto& v : j["group"]["class_verdicts"])
    if (v["via"] == "bruteforce") verdicts[v["class"]] = v["verdict"];
  CHECK(verdicts["BT"] == "true");
  CHECK(verdicts["SST"] == "false");
  const auto p = run({"predicate", "Ex1_3.json", "--subgroup", "A4", "--pred", "nss"});
  CHECK(p.code == kExitPass);
  CHECK(Json::parse(p.out)["verdict"]["verdict"] == false);
  const auto v = run({"verify", "Ex1_8.json", "--check", "D"});
  CHECK(v.code == kExitPass);
  const auto vj = Json::parse(v.out);
  REQUIRE(vj["checks"].size() == 1);
  CHECK(vj["checks"][0]["pass"] == true);
  for (const auto& s : vj["checks"][0]["statements"]) CHECK(s["value"] == "false");
}
