#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "minuscule/app.hpp"
#include "minuscule/error.hpp"

#ifndef MINUSCULE_TOOL
#error "MINUSCULE_TOOL must name the command line binary"
#endif

namespace minuscule {
namespace {

using namespace app;
using nlohmann::json;
namespace fs = std::filesystem;

struct Run {
  int status;
  std::string out;
};

// Runs the tool through the shell, capturing stdout; stderr is discarded.
Run tool(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + " " + MINUSCULE_TOOL + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  std::string out;
  char buf[4096];
  while (std::size_t got = std::fread(buf, 1, sizeof buf, pipe)) out.append(buf, got);
  const int raw = pclose(pipe);
  return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

class TempDir {
 public:
  TempDir() : path_(fs::temp_directory_path() / ("minuscule_test_" + std::to_string(::getpid()))) {
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  std::string file(const std::string& name) const { return (path_ / name).string(); }

 private:
  fs::path path_;
};

void write_file(const std::string& path, const std::string& text) { std::ofstream(path) << text; }

std::vector<json> read_lines(const std::string& path) {
  std::ifstream in(path);
  std::vector<json> lines;
  for (std::string line; std::getline(in, line);) lines.push_back(json::parse(line));
  return lines;
}

// Certificate lines with the run-dependent fields removed.
std::vector<json> stable_lines(const std::string& path) {
  auto lines = read_lines(path);
  for (auto& j : lines) {
    if (j.contains("header")) j["header"].erase("timestamp");
    j.erase("duration_ms");
  }
  return lines;
}

TEST(Range, Parsing) {
  EXPECT_EQ(parse_range("3..7").lo, 3);
  EXPECT_EQ(parse_range("3..7").hi, 7);
  EXPECT_EQ(parse_range("5").hi, 5);
  for (const char* bad : {"7..3", "a..b", "", "3..", "..4", "1..2..3"})
    EXPECT_THROW(parse_range(bad), DomainError) << bad;
}

TEST(Config, KeysAndErrors) {
  Settings s;
  apply_config(s, json{{"degree_cap", 500}, {"jobs", 3}, {"refine_log2_width", -30}});
  EXPECT_EQ(s.limits.degree_cap, 500);
  EXPECT_EQ(s.jobs, 3);
  EXPECT_EQ(s.refine_log2_width, -30);
  EXPECT_THROW(apply_config(s, json{{"colour", 1}}), DomainError);
  EXPECT_THROW(apply_config(s, json{{"jobs", "many"}}), DomainError);
  EXPECT_THROW(load_config_file(s, "/nonexistent/minuscule.json"), DomainError);
}

TEST(Suites, EachPassesAtSmallN) {
  Settings s;
  for (const auto& name : suite_names()) {
    const long n = std::max(suite_bounds(name).lo, 4L);
    const auto cert = run_suite(name, n, s);
    EXPECT_TRUE(cert.pass) << name << ": " << cert.witness.dump();
  }
  EXPECT_THROW(suite_bounds("nonsense"), DomainError);
}

TEST(Suites, ThreadCountDoesNotChangeResults) {
  Settings one, three;
  three.jobs = 3;
  const auto a = run_range("realroot", {2, 9}, one);
  const auto b = run_range("realroot", {2, 9}, three);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].n, b[i].n);
    EXPECT_EQ(to_json(a[i].cert), to_json(b[i].cert));
  }
}

TEST(Suites, ExceptionsBecomeFailingCertificates) {
  Settings s;
  s.limits.minors_budget = 1;
  set_limits(s.limits);
  const auto cert = run_suite("tp", 4, s);
  set_limits(Limits{});
  EXPECT_FALSE(cert.pass);
  EXPECT_NE(cert.witness.dump().find("budget"), std::string::npos);
}

TEST(Generate, CsvAndJson) {
  std::ostringstream csv;
  generate("N", {2, 3}, Format::Csv, csv);
  EXPECT_EQ(csv.str(), "n,k,value\n2,0,0\n2,1,2\n3,0,0\n3,1,8\n3,2,8\n");
  std::ostringstream js;
  generate("coeffT", {2, 2}, Format::Json, js);
  const auto j = json::parse(js.str());
  EXPECT_EQ(j["family"], "coeffT");
  EXPECT_EQ(j["rows"][0]["values"][0], "1/6");
  std::ostringstream sink;
  EXPECT_THROW(generate("Q", {2, 3}, Format::Csv, sink), DomainError);
  EXPECT_THROW(generate("D", {1, 3}, Format::Csv, sink), DomainError);
}

TEST(Report, RendersTableAndWitness) {
  Record ok{"tp", 3, {}, 1.5};
  ok.cert.pass = true;
  Record bad{"tp", 4, {}, 2.0};
  bad.cert.witness = {{"negative_minor", {{"rows", {1, 2}}, {"cols", {0, 1}}, {"minor", "-1"}}}};
  std::stringstream in;
  in << header_json("certify", {}).dump() << '\n' << record_json(ok).dump() << '\n' << record_json(bad).dump() << '\n';
  const auto text = render_report(in);
  EXPECT_NE(text.find("| tp | 3..4 | 2 | 1 | 1 |"), std::string::npos) << text;
  EXPECT_NE(text.find("Negative minor: rows {1,2}, cols {0,1}, value -1"), std::string::npos) << text;

  std::stringstream empty;
  EXPECT_EQ(render_report(empty), "no certificates\n");
  std::stringstream broken("{\"suite\": \"tp\"}\n");
  EXPECT_THROW(render_report(broken), DomainError);
  std::stringstream garbage("not json\n");
  EXPECT_THROW(render_report(garbage), DomainError);
}

TEST(Cli, ExitCodes) {
  TempDir dir;
  EXPECT_EQ(tool("generate N 2..3").status, 0);
  EXPECT_EQ(tool("generate N 2..3").out, "n,k,value\n2,0,0\n2,1,2\n3,0,0\n3,1,8\n3,2,8\n");
  EXPECT_EQ(tool("generate nonsense 2..3").status, 2);
  EXPECT_EQ(tool("generate N 3..2").status, 2);
  EXPECT_EQ(tool("").status, 2);
  EXPECT_EQ(tool("certify nonsense 2..3").status, 2);
  EXPECT_EQ(tool("certify realroot 0..3").status, 2);

  const auto certs = dir.file("realroot.jsonl");
  EXPECT_EQ(tool("certify realroot 2..6 --out " + certs).status, 0);
  const auto lines = read_lines(certs);
  ASSERT_EQ(lines.size(), 6u);
  EXPECT_TRUE(lines[0].contains("header"));
  for (std::size_t i = 1; i < lines.size(); ++i) {
    for (const char* key : {"suite", "n", "verdict", "witness", "params", "duration_ms"})
      EXPECT_TRUE(lines[i].contains(key)) << key;
    EXPECT_EQ(lines[i]["verdict"], "pass");
  }
  EXPECT_EQ(tool("report " + certs).status, 0);

  // A budget exhausted inside a suite is a failed certificate, not a crash.
  EXPECT_EQ(tool("--minors-budget 1 certify tp 3..4").status, 1);

  const auto malformed = dir.file("malformed.jsonl");
  write_file(malformed, "{\"suite\":\"tp\",\"n\":\"x\"}\n");
  EXPECT_EQ(tool("report " + malformed).status, 2);
  const auto empty = dir.file("empty.jsonl");
  write_file(empty, "");
  const auto r = tool("report " + empty);
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "no certificates\n");
  EXPECT_EQ(tool("report " + dir.file("missing.jsonl")).status, 2);
}

TEST(Cli, ConfigFileAndEnvironment) {
  TempDir dir;
  const auto bad = dir.file("bad.json");
  write_file(bad, "{\"colour\": 3}");
  EXPECT_EQ(tool("--config " + bad + " generate N 2..3").status, 2);
  EXPECT_EQ(tool("generate N 2..3", "MINUSCULE_CONFIG=" + bad).status, 2);
  const auto tight = dir.file("tight.json");
  write_file(tight, "{\"degree_cap\": 5}");
  EXPECT_EQ(tool("generate N 2..4", "MINUSCULE_CONFIG=" + tight).status, 0);
  EXPECT_EQ(tool("generate N 2..40", "MINUSCULE_CONFIG=" + tight).status, 2);
  // Flags override the file.
  EXPECT_EQ(tool("--degree-cap 100 generate N 2..40", "MINUSCULE_CONFIG=" + tight).status, 0);
}

TEST(Cli, DeterministicApartFromTiming) {
  TempDir dir;
  const auto a = dir.file("a.jsonl"), b = dir.file("b.jsonl");
  ASSERT_EQ(tool("--jobs 2 certify interlace 2..12 --out " + a).status, 0);
  ASSERT_EQ(tool("--jobs 2 certify interlace 2..12 --out " + b).status, 0);
  EXPECT_EQ(stable_lines(a), stable_lines(b));
}

TEST(Cli, ScanStopsOnBudget) {
  TempDir dir;
  const auto out = dir.file("scan.jsonl");
  EXPECT_EQ(tool("scan --from 2 --max-n 12 --budget-seconds 60 --out " + out).status, 0);
  EXPECT_EQ(read_lines(out).size(), 12u);
  EXPECT_EQ(tool("scan --from 2 --budget-seconds 0 --out " + out).status, 0);
  EXPECT_EQ(read_lines(out).size(), 1u);
}

}  // namespace
}  // namespace minuscule
