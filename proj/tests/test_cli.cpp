#include <doctest.h>

#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "updown/cli.hpp"

using Json = nlohmann::ordered_json;

namespace {

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = updown::run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("enumerate") {
  CliResult r = cli({"enumerate", "--n", "0"});
  CHECK(r.code == 0);
  CHECK(Json::parse(r.out) == Json::parse("[[]]"));

  r = cli({"enumerate", "--n", "3"});
  CHECK(Json::parse(r.out) == Json::parse("[[3],[2,1]]"));

  r = cli({"--format", "csv", "enumerate", "--n", "3"});
  CHECK(r.out == "[3]\n\"[2,1]\"\n");
}

TEST_CASE("measure") {
  CliResult r = cli({"measure", "--n", "3", "--alpha", "2"});
  CHECK(r.code == 0);
  CHECK(r.out == "{\"[3]\":\"8/9\",\"[2,1]\":\"1/9\"}\n");

  r = cli({"measure", "--n", "3", "--plancherel"});
  Json j = Json::parse(r.out);
  CHECK(j["[3]"] == "2/3");
  CHECK(j["[2,1]"] == "1/3");

  r = cli({"measure", "--n", "3", "--alpha", "inf"});
  CHECK(Json::parse(r.out)["[3]"] == "2/3");
}

TEST_CASE("matrix") {
  CliResult r = cli({"matrix", "--n", "3", "--alpha", "2"});
  Json j = Json::parse(r.out);
  CHECK(j["n"] == 3);
  CHECK(j["alpha"] == "2");
  CHECK(j["order"] == Json::parse(R"(["[3]","[2,1]"])"));
  CHECK(j["rows"] ==
        Json::parse(R"([["15/16","1/16"],["1/2","1/2"]])"));

  r = cli({"--format", "csv", "matrix", "--n", "3", "--alpha", "2"});
  CHECK(r.out == "15/16,1/16\n1/2,1/2\n");
}

TEST_CASE("spectrum") {
  CliResult r = cli({"spectrum", "--n", "3", "--alpha", "2"});
  CHECK(r.code == 0);
  Json j = Json::parse(r.out);
  CHECK(j["eigenvalues"] == Json::parse(R"(["1","7/16"])"));
  CHECK(j["multiplicities"] == Json::parse("[1,1]"));

  r = cli({"--format", "csv", "spectrum", "--n", "3", "--alpha", "2"});
  CHECK(r.out == "eigenvalue,multiplicity\n1,1\n7/16,1\n");
}

TEST_CASE("verify: passing suite") {
  CliResult r = cli({"verify", "--suite", "coherence", "--max-weight", "5"});
  CHECK(r.code == 0);
  Json j = Json::parse(r.out);
  CHECK(j["theorem"] == "measure-coherence");
  CHECK(j["pass"] == true);
  CHECK(j["checks"].is_array());
  CHECK_FALSE(j["checks"].empty());
  for (const auto& c : j["checks"]) {
    CHECK(c.contains("input"));
    CHECK(c.contains("expected"));
    CHECK(c.contains("got"));
    CHECK(c["pass"] == true);
  }
}

TEST_CASE("verify: small runs of every suite") {
  for (const std::string& name :
       {"coherence", "kerov", "ivanov", "thm27", "thm42", "thm51", "prop68",
        "sl2", "spectrum"}) {
    CliResult r = cli({"verify", "--suite", name, "--max-weight", "3"});
    INFO("suite ", name, ": ", r.err);
    CHECK(r.code == 0);
    CHECK(Json::parse(r.out)["pass"] == true);
  }
}

TEST_CASE("verify: csv rows") {
  CliResult r = cli({"--format", "csv", "verify", "--suite", "coherence",
                     "--max-weight", "4"});
  CHECK(r.code == 0);
  CHECK(r.out.substr(0, 24) == "input,expected,got,pass\n");
}

TEST_CASE("usage errors") {
  CHECK(cli({}).code == 2);
  CHECK(cli({"verify", "--suite", "nonsense"}).code == 2);
  CHECK(cli({"enumerate"}).code == 2);
  CHECK(cli({"enumerate", "--n", "-3"}).code == 2);
  CHECK(cli({"measure", "--n", "3", "--alpha=-1"}).code == 2);
  CHECK(cli({"measure", "--n", "3", "--alpha", "0"}).code == 2);
  CHECK(cli({"moments", "--n", "8", "--alpha", "inf"}).code == 2);
  CHECK(cli({"simulate", "--n", "4", "--start", "[oops]"}).code == 2);
  CHECK(cli({"simulate", "--n", "4", "--start", "[2,2]"}).code == 2);
  CHECK(cli({"--help"}).code == 0);
}

TEST_CASE("simulate: JSON lines with states and optional moments") {
  CliResult r = cli({"simulate", "--n", "3", "--steps", "5", "--seed", "7",
                     "--start", "[3]"});
  CHECK(r.code == 0);
  std::istringstream lines(r.out);
  std::string line;
  int step = 0;
  while (std::getline(lines, line)) {
    Json j = Json::parse(line);
    CHECK(j["step"] == step);
    CHECK(j["state"].is_string());
    CHECK_FALSE(j.contains("moments"));
    ++step;
  }
  CHECK(step == 6);
  CHECK(cli({"simulate", "--n", "3", "--steps", "5", "--seed", "7", "--start",
             "[3]"})
            .out == r.out);

  CliResult rm = cli({"simulate", "--n", "3", "--steps", "2", "--seed", "7",
                      "--start", "[3]", "--moments", "2"});
  Json first = Json::parse(rm.out.substr(0, rm.out.find('\n')));
  CHECK(first["moments"].size() == 2);
  CHECK(first["moments"][0] == 1.0);  // q2 of the embedded top state
}

TEST_CASE("simulate: CSV trajectory of scaled moments") {
  CliResult r = cli({"--format", "csv", "simulate", "--n", "3", "--steps", "3",
                     "--seed", "7", "--start", "[3]", "--moments", "2"});
  CHECK(r.code == 0);
  std::istringstream lines(r.out);
  std::string header;
  std::getline(lines, header);
  CHECK(header == "step,scaled_time,q2,q4");
  std::string row0;
  std::getline(lines, row0);
  CHECK(row0.substr(0, 4) == "0,0,");
}

TEST_CASE("moments: exact and monte carlo") {
  CliResult r =
      cli({"moments", "--n", "3", "--alpha", "2", "--exact", "--k", "1"});
  CHECK(r.code == 0);
  Json j = Json::parse(r.out);
  CHECK(j["exact"] == "25/27");
  CHECK(j["n"] == 3);

  CliResult mc = cli({"moments", "--n", "4", "--alpha", "2", "--steps", "640",
                      "--burn-in", "64", "--seed", "5"});
  CHECK(mc.code == 0);
  Json je = Json::parse(mc.out);
  CHECK(je.contains("mean"));
  CHECK(je.contains("stderr"));
  CHECK(je["n"] == 4);
  CHECK(je["alpha"] == "2");
  CHECK(je["steps"] == 640);
  CHECK(cli({"moments", "--n", "4", "--alpha", "2", "--steps", "640",
             "--burn-in", "64", "--seed", "5"})
            .out == mc.out);
}
