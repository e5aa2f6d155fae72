#include <doctest.h>
#include <json.hpp>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cdm/cli.hpp"

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  args.insert(args.begin(), "cdm");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = cdm::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

// Runs the installed binary so exit statuses are seen the way a shell sees them.
Outcome run_tool(const std::string& args) {
  std::string cmd = std::string(CDM_TOOL_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  int status = pclose(pipe);
  return {WEXITSTATUS(status), out, ""};
}

}  // namespace

TEST_CASE("derive") {
  auto r = run({"derive", "--theory", "zinbiel", "x1.x2"});
  CHECK(r.code == 0);
  CHECK(r.out == "dx1.x2\n");
  r = run({"derive", "--theory", "power", "x1*x2"});
  CHECK(r.out == "x1*dx2 + x2*dx1\n");
  r = run({"derive", "--theory", "power", "--json", "x1^2"});
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["arity"] == 2);
  CHECK(j["components"][0] == "2*x1*dx1");
}

TEST_CASE("compose") {
  CHECK(run({"compose", "--theory", "divided", "x1^[2]", "/", "x1^[2]*x2"}).out ==
        "6*x1^[4]*x2^[2]\n");
  CHECK(run({"compose", "--theory", "divided", "--field", "F2", "x1^[2]", "/", "x1^[2]*x2"})
            .out == "0\n");
  CHECK(run({"compose", "--theory", "divided", "--field", "F5", "x1^[2]", "/", "x1^[2]*x2"})
            .out == "x1^[4]*x2^[2]\n");
  CHECK(run({"compose", "--theory", "zinbiel", "x1.x2.x1", "/", "x1.x2, x3"}).out ==
        "x1.x2.x3.x1.x2 + 2*x1.x3.x1.x2.x2 + x1.x3.x2.x1.x2\n");
  CHECK(run({"compose", "--theory", "power", "x1"}).code == 2);
}

TEST_CASE("products and conversions") {
  CHECK(run({"mul", "--theory", "zinbiel", "--half", "x1.x2, x3"}).out ==
        "x1.x2.x3 + x1.x3.x2\n");
  CHECK(run({"mul", "--theory", "zinbiel", "x1.x2", "x3"}).out ==
        "x1.x2.x3 + x1.x3.x2 + x3.x1.x2\n");
  CHECK(run({"dpow", "--theory", "divided", "-n", "2", "x1^[2]"}).out == "3*x1^[4]\n");
  CHECK(run({"convert", "--theory", "divided", "--to", "zinbiel", "x1*x2"}).out ==
        "x1.x2 + x2.x1\n");
  CHECK(run({"convert", "--theory", "divided", "--to", "power", "x1^[2]"}).out ==
        "1/2*x1^2\n");
  CHECK(run({"mul", "--theory", "trivial", "x1, x2"}).code == 2);
  CHECK(run({"mul", "--theory", "power", "--half", "x1, x2"}).code == 2);
}

TEST_CASE("file input") {
  auto path = std::filesystem::temp_directory_path() / "cdm_cli_test.json";
  {
    std::ofstream f(path);
    f << R"({"arity": 2, "components": ["x1.x2", "x2"]})";
  }
  auto r = run({"derive", "--theory", "zinbiel", "@" + path.string()});
  CHECK(r.code == 0);
  CHECK(r.out == "dx1.x2, dx2\n");
  std::filesystem::remove(path);
  CHECK(run({"derive", "--theory", "zinbiel", "@" + path.string()}).code == 2);
}

TEST_CASE("usage and parse errors") {
  auto r = run({"derive", "--theory", "power", "x1 + * x2"});
  CHECK(r.code == 2);
  CHECK(r.err.find("position 5") != std::string::npos);
  CHECK(run({}).code == 2);
  CHECK(run({"derive", "--theory", "nope", "x1"}).code == 2);
  CHECK(run({"derive", "--theory", "power", "--field", "F4", "x1"}).code == 2);
  CHECK(run({"check", "--axiom", "XX"}).code == 2);
  CHECK(run({"check", "--theory", "power", "--mutate", "zinbiel-last-letter"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("check") {
  auto r = run({"check", "--theory", "zinbiel", "--trials", "10"});
  CHECK(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["passed"] == true);
  CHECK(j["reports"].size() == 18);
  CHECK(j["reports"][0]["millis"].is_null());

  r = run({"check", "--theory", "zinbiel", "--mutate", "zinbiel-last-letter", "--trials", "5",
           "--axiom", "CD.5"});
  CHECK(r.code == 1);
  j = nlohmann::json::parse(r.out);
  CHECK(j["reports"].size() == 1);
  std::string seed = j["reports"][0]["failures"][0]["seed"].dump();
  auto replay = run({"check", "--theory", "zinbiel", "--mutate", "zinbiel-last-letter",
                     "--axiom", "CD.5", "--replay", seed});
  CHECK(replay.code == 1);
  auto rj = nlohmann::json::parse(replay.out);
  CHECK(rj["lhs"] == j["reports"][0]["failures"][0]["lhs"]);

  auto timed = nlohmann::json::parse(
      run({"check", "--theory", "trivial", "--trials", "5", "--timing"}).out);
  CHECK(timed["reports"][0]["millis"].is_number());
}

TEST_CASE("installed binary") {
  CHECK(run_tool("derive --theory zinbiel x1.x2").out == "dx1.x2\n");
  CHECK(run_tool("check --theory power --field F5 --cap 4 --seed 42 --trials 200").code == 0);
  CHECK(run_tool("check --theory power --mutate power-drop-first --trials 20").code == 1);
  CHECK(run_tool("derive --theory power 'x1 +'").code == 2);
  auto a = run_tool("check --theory divided --field F3 --seed 42 --trials 30 --threads 1");
  auto b = run_tool("check --theory divided --field F3 --seed 42 --trials 30 --threads 4");
  CHECK(a.out == b.out);
}
