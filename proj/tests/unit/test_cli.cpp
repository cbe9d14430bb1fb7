#include <doctest.h>

#include <cstdio>
#include <filesystem>

#include "cli_cases.hpp"
#include "symtensor/json_io.hpp"
#include "symtensor/tensor.hpp"

using namespace symtensor;

TEST_CASE("golden outputs") {
  for (const auto& c : cli_cases::golden_cases()) {
    CAPTURE(c.golden);
    const auto first = cli_cases::run(c.args);
    CHECK(first.code == 0);
    CHECK(first.out == cli_cases::golden(c));
    const auto second = cli_cases::run(c.args);
    CHECK(second.out == first.out);
  }
}

TEST_CASE("exit codes") {
  for (const auto& c : cli_cases::exit_cases()) {
    CAPTURE(c.label);
    const auto r = cli_cases::run(c.args);
    CHECK(r.code == c.code);
    if (c.code >= 2) CHECK_FALSE(r.err.empty());
  }
}

TEST_CASE("selfcheck reports property counts and echoes the seed") {
  const auto r = cli_cases::run({"selfcheck", "--n", "2", "--trials", "1", "--seed", "0"});
  const auto doc = Json::parse(r.out);
  CHECK(doc["seed"] == 0);
  CHECK(doc["all_passed"] == true);
  int exercised = 0;
  for (const auto& p : doc["properties"]) exercised += p["checked"].get<int>() > 0;
  CHECK(exercised >= 4);
}

TEST_CASE("symmetrize output parses back to the computed tensor") {
  for (const char* name : {"symmetrize_row", "symmetrize_column_repeated", "symmetrize_hook"}) {
    CAPTURE(name);
    const auto r = cli_cases::run({"symmetrize", "--input", cli_cases::input(name)});
    const auto instance = parse_instance_text(cli_cases::read_file(cli_cases::input(name)));
    CHECK(tensor_from_json(Json::parse(r.out)) == symmetrize(instance.v, instance.lambda));
  }
}

TEST_CASE("shape-only symmetrize") {
  const auto r = cli_cases::run({"symmetrize", "--shape-only", "--input", cli_cases::input("symmetrize_hook")});
  CHECK(r.code == 0);
  const auto doc = Json::parse(r.out);
  CHECK(doc["dim"] == 3);
  CHECK(doc["order"] == 3);
  CHECK(doc["entry_count"] == 3);
}

TEST_CASE("output file") {
  const auto path = (std::filesystem::temp_directory_path() / "symtensor_cli_test.json").string();
  std::filesystem::remove(path);
  const auto r = cli_cases::run({"--output", path, "characters", "--n", "3"});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  CHECK(cli_cases::read_file(path) == cli_cases::read_file(cli_cases::kGoldenDir + "/characters_3.json"));
  std::filesystem::remove(path);
}

TEST_CASE("instance parsing") {
  const auto ok = parse_instance_text(R"({"dim":2,"lambda":[2],"v":[[1,"-2/4"],["0","3"]]})");
  CHECK(ok.v[1][1] == ratio(-1, 2));
  CHECK_FALSE(ok.u);
  CHECK_THROWS_AS(parse_instance_text(R"({"dim":2,"lambda":[2],"v":[["1","0"]]})"), InputError);
  CHECK_THROWS_AS(parse_instance_text(R"({"dim":0,"lambda":[1],"v":[[]]})"), InputError);
  CHECK_THROWS_AS(parse_instance_text(R"({"dim":2,"lambda":[1],"v":[["1","0"]],"u":[["1"]]})"), InputError);
  CHECK_THROWS_AS(tensor_from_json(Json::parse(
                      R"({"dim":2,"order":1,"entries":[{"index":[1],"coeff":"1"},{"index":[1],"coeff":"2"}]})")),
                  InputError);
}
