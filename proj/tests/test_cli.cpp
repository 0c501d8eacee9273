#include <array>
#include <cstdio>
#include <fstream>
#include <string>

#include "doctest.h"
#include "json.hpp"

#ifndef SOLTES_CLI_PATH
#error "SOLTES_CLI_PATH must name the built soltes executable"
#endif

namespace {

struct Run {
  int status = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string command = std::string(SOLTES_CLI_PATH) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

std::string cli() { return SOLTES_CLI_PATH; }

std::string temp_path(const std::string& name) { return std::string(SOLTES_TEST_TMP) + "/" + name; }

void write_file(const std::string& path, const std::string& text) {
  std::ofstream(path) << text;
}

}  // namespace

TEST_CASE("check irregular54") {
  const std::string file = temp_path("irregular54.hg");
  REQUIRE(run("construct --variant irregular54 -o " + file).status == 0);
  const Run r = run("check " + file + " --format json");
  CHECK(r.status == 0);
  const auto report = nlohmann::json::parse(r.out);
  CHECK(report["verdict"] == true);
  CHECK(report["wiener"] == 2349);
  CHECK(run("check " + file + " --expect true").status == 0);
  CHECK(run("check " + file + " --expect false").status == 1);
}

TEST_CASE("construct piped into check") {
  const Run r = run("construct --variant cycle --n 11 | " + cli() + " check - --format json");
  CHECK(r.status == 0);
  CHECK(nlohmann::json::parse(r.out)["verdict"] == true);
  const Run prism = run("construct --variant prism --k 21 | " + cli() + " check - --format json");
  CHECK(prism.status == 0);
  const auto report = nlohmann::json::parse(prism.out);
  CHECK(report["verdict"] == true);
  CHECK(report["vertices"][0]["delta"] == "0/1");
}

TEST_CASE("round trip through files matches the in-memory report") {
  const std::string file = temp_path("knits100.hg");
  const Run built = run("construct --variant knits --n 100 --format json");
  REQUIRE(built.status == 0);
  const auto j = nlohmann::json::parse(built.out);
  CHECK(j["descriptor"]["s"] == 15);
  CHECK(j["descriptor"]["t"] == 5);
  REQUIRE(run("construct --variant knits --n 100 -o " + file).status == 0);
  const auto checked = nlohmann::json::parse(run("check " + file + " --format json").out);
  CHECK(checked == j["report"]);
}

TEST_CASE("descriptor files") {
  const std::string file = temp_path("descriptor.json");
  write_file(file, R"({"variant": "general_r", "s": 15, "t": 5, "r": 2, "convention": "half_open_middle"})");
  const Run r = run("construct --descriptor " + file + " --format json");
  CHECK(r.status == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["descriptor"]["n"] == 87);
  CHECK(j["descriptor"]["k"] == 51);
  CHECK(j["report"]["verdict"] == true);
}

TEST_CASE("wiener on a disconnected file prints inf") {
  const std::string file = temp_path("split.hg");
  write_file(file, "4 2\n0 1\n2 3\n");
  const Run text = run("wiener " + file);
  CHECK(text.status == 0);
  CHECK(text.out.find("inf") != std::string::npos);
  const Run j = run("wiener " + file + " --format json");
  CHECK(nlohmann::json::parse(j.out)["wiener"] == "inf");
}

TEST_CASE("search emits witness lines and a summary") {
  const std::string file = temp_path("spec.json");
  write_file(file, R"({"n": 11, "k": 2, "m_min": 11, "m_max": 11})");
  const Run r = run("search " + file + " --format json --partitions 2");
  CHECK(r.status == 0);
  std::vector<nlohmann::json> lines;
  std::size_t start = 0;
  while (start < r.out.size()) {
    const std::size_t end = r.out.find('\n', start);
    lines.push_back(nlohmann::json::parse(r.out.substr(start, end - start)));
    start = end + 1;
  }
  REQUIRE(lines.size() == 2);
  CHECK(lines[0]["type"] == "witness");
  CHECK(lines[1]["type"] == "summary");
  CHECK(lines[1]["witness_count"] == 1);
  CHECK(lines[1]["spec"]["partitions"] == 2);
}

TEST_CASE("lemmas subcommand") {
  const Run r = run("lemmas --samples 2000 --seed 3 --format json");
  CHECK(r.status == 0);
  CHECK(nlohmann::json::parse(r.out)["ok"] == true);
}

TEST_CASE("errors and usage") {
  CHECK(run("").status == 2);
  CHECK(run("check").status == 2);
  CHECK(run("check --bogus x").status == 2);
  CHECK(run("check " + temp_path("missing.hg")).status == 2);
  CHECK(run("construct --variant knits --n 50").status == 2);
  CHECK(run("construct --variant prism --k 19").status == 2);
  CHECK(run("wiener x --format yaml").status == 2);
  const std::string bad = temp_path("bad.hg");
  write_file(bad, "3 1\n0 1 7\n");
  CHECK(run("check " + bad).status == 2);
  CHECK(run("construct --variant general_r --s 15 --t 0 --r 2 --convention literal").status == 2);
}
