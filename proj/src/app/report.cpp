#include <algorithm>
#include <iomanip>
#include <istream>
#include <sstream>

#include "minuscule/app.hpp"
#include "minuscule/error.hpp"

namespace minuscule::app {

using nlohmann::json;

namespace {

struct SuiteSummary {
  std::string name;
  long lo = 0, hi = 0;
  long total = 0, passed = 0;
  double ms = 0;
  std::vector<std::pair<long, json>> failures;
};

void require_field(const char* key, bool ok, long line) {
  if (!ok) throw DomainError("report: line " + std::to_string(line) + ": missing or invalid \"" + key + "\"");
}

std::string join_indices(const json& arr) {
  std::string s;
  for (const auto& v : arr) s += (s.empty() ? "" : ",") + std::to_string(v.get<long>());
  return "{" + s + "}";
}

// Depth-first search for a negative-minor object anywhere in a witness.
const json* find_minor(const json& w) {
  if (!w.is_object()) return nullptr;
  if (w.contains("rows") && w.contains("cols") && w.contains("minor")) return &w;
  for (const auto& [key, v] : w.items())
    if (const json* m = find_minor(v)) return m;
  return nullptr;
}

}  // namespace

std::string render_report(std::istream& in) {
  std::vector<SuiteSummary> suites;
  std::string text;
  long line = 0;
  while (std::getline(in, text)) {
    ++line;
    if (text.find_first_not_of(" \t\r") == std::string::npos) continue;
    json j;
    try {
      j = json::parse(text);
    } catch (const json::parse_error&) {
      throw DomainError("report: line " + std::to_string(line) + " is not JSON");
    }
    if (!j.is_object()) throw DomainError("report: line " + std::to_string(line) + " is not an object");
    if (j.contains("header")) continue;
    require_field("suite", j.contains("suite") && j["suite"].is_string(), line);
    require_field("n", j.contains("n") && j["n"].is_number_integer(), line);
    require_field("verdict", j.contains("verdict") && (j["verdict"] == "pass" || j["verdict"] == "fail"), line);
    require_field("witness", j.contains("witness"), line);
    require_field("params", j.contains("params"), line);
    require_field("duration_ms", j.contains("duration_ms") && j["duration_ms"].is_number(), line);

    const auto name = j["suite"].get<std::string>();
    const long n = j["n"].get<long>();
    auto it = std::find_if(suites.begin(), suites.end(), [&](const SuiteSummary& s) { return s.name == name; });
    if (it == suites.end()) {
      suites.push_back(SuiteSummary{name, n, n, 0, 0, 0.0, {}});
      it = suites.end() - 1;
    }
    it->lo = std::min(it->lo, n);
    it->hi = std::max(it->hi, n);
    ++it->total;
    it->ms += j["duration_ms"].get<double>();
    if (j["verdict"] == "pass")
      ++it->passed;
    else
      it->failures.emplace_back(n, j["witness"]);
  }

  std::ostringstream out;
  if (suites.empty()) {
    out << "no certificates\n";
    return out.str();
  }
  out << "| suite | n | certificates | pass | fail | time (ms) |\n";
  out << "|---|---|---|---|---|---|\n";
  out << std::fixed << std::setprecision(1);
  for (const auto& s : suites)
    out << "| " << s.name << " | " << s.lo << ".." << s.hi << " | " << s.total << " | " << s.passed << " | "
        << s.total - s.passed << " | " << s.ms << " |\n";
  for (const auto& s : suites) {
    if (s.failures.empty()) continue;
    const auto& [n, witness] = s.failures.front();
    out << "\n### " << s.name << ": first failure at n = " << n << "\n\n";
    if (const json* m = find_minor(witness))
      out << "Negative minor: rows " << join_indices((*m)["rows"]) << ", cols " << join_indices((*m)["cols"])
          << ", value " << (*m)["minor"].get<std::string>() << "\n\n";
    out << "```json\n" << witness.dump(2) << "\n```\n";
  }
  return out.str();
}

}  // namespace minuscule::app
