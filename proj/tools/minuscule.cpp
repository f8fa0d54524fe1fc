// Command line driver: generate, certify, report, scan.
//
// Exit codes: 0 every certificate passed, 1 some certificate failed,
// 2 usage error or malformed input.

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>

#include "minuscule/app.hpp"
#include "minuscule/error.hpp"

namespace {

using minuscule::app::Record;
using minuscule::app::Settings;

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct Overrides {
  std::string config;
  std::optional<int> jobs;
  std::optional<long> degree_cap;
  std::optional<std::size_t> matrix_size_cap;
  std::optional<unsigned long long> minors_budget;
  std::optional<long> refine_log2_width;
};

Settings resolve_settings(const Overrides& o) {
  Settings s;
  std::string path = o.config;
  if (path.empty())
    if (const char* env = std::getenv("MINUSCULE_CONFIG")) path = env;
  if (!path.empty()) minuscule::app::load_config_file(s, path);
  if (o.jobs) s.jobs = *o.jobs;
  if (o.degree_cap) s.limits.degree_cap = *o.degree_cap;
  if (o.matrix_size_cap) s.limits.matrix_size_cap = *o.matrix_size_cap;
  if (o.minors_budget) s.limits.minors_budget = *o.minors_budget;
  if (o.refine_log2_width) s.refine_log2_width = *o.refine_log2_width;
  if (s.jobs < 1) throw minuscule::DomainError("jobs must be positive");
  minuscule::set_limits(s.limits);
  return s;
}

// stdout unless a path is given.
class Sink {
 public:
  explicit Sink(const std::string& path) {
    if (path.empty() || path == "-") return;
    file_ = std::make_unique<std::ofstream>(path);
    if (!*file_) throw minuscule::DomainError("cannot write " + path);
  }
  std::ostream& stream() { return file_ ? *file_ : std::cout; }

 private:
  std::unique_ptr<std::ofstream> file_;
};

int summarize(const std::string& label, const std::vector<Record>& records) {
  long failed = 0;
  for (const auto& r : records)
    if (!r.cert.pass) {
      ++failed;
      std::cerr << "FAIL " << r.suite << " n=" << r.n << ": " << r.cert.witness.dump() << '\n';
    }
  std::cerr << label << ": " << records.size() - static_cast<std::size_t>(failed) << '/' << records.size()
            << " pass\n";
  return failed == 0 ? 0 : kExitFail;
}

void write_records(std::ostream& out, const std::vector<Record>& records) {
  for (const auto& r : records) out << minuscule::app::record_json(r).dump() << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact construction and certification of minuscule polynomial families"};
  app.require_subcommand(1);
  Overrides o;
  app.add_option("--config", o.config, "JSON config file (default: $MINUSCULE_CONFIG)");
  app.add_option("--jobs", o.jobs, "worker threads");
  app.add_option("--degree-cap", o.degree_cap, "largest polynomial degree a constructor may build");
  app.add_option("--matrix-size-cap", o.matrix_size_cap, "largest matrix dimension");
  app.add_option("--minors-budget", o.minors_budget, "most minors an exhaustive TP check may enumerate");
  app.add_option("--refine-log2-width", o.refine_log2_width, "root enclosure width exponent");

  std::string family, range_text, format = "csv", out_path, suite, report_path;
  auto* gen = app.add_subcommand("generate", "write coefficient tables");
  gen->add_option("family", family, "N, f, U, D, gamma, h, g, coeffN or coeffT")->required();
  gen->add_option("range", range_text, "a..b")->required();
  gen->add_option("format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  gen->add_option("--out", out_path, "output file (default stdout)");

  auto* cert = app.add_subcommand("certify", "run a certification suite over a range of n");
  cert->add_option("suite", suite, "suite name")->required();
  cert->add_option("range", range_text, "a..b")->required();
  cert->add_option("--out", out_path, "certificate file, JSON lines (default stdout)");

  auto* rep = app.add_subcommand("report", "summarize a certificate file");
  rep->add_option("file", report_path, "certificate file")->required();

  long scan_from = 2;
  long scan_max = 1'000'000;
  double budget_seconds = 60;
  auto* scan = app.add_subcommand("scan", "weak Hurwitz scan over n until a wall-clock budget runs out");
  scan->add_option("--from", scan_from, "first n");
  scan->add_option("--max-n", scan_max, "last n");
  scan->add_option("--budget-seconds", budget_seconds, "wall-clock budget");
  scan->add_option("--out", out_path, "certificate file, JSON lines (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    const Settings settings = resolve_settings(o);

    if (*gen) {
      const auto range = minuscule::app::parse_range(range_text);
      Sink sink(out_path);
      minuscule::app::generate(family, range,
                               format == "json" ? minuscule::app::Format::Json : minuscule::app::Format::Csv,
                               sink.stream());
      return 0;
    }

    if (*cert) {
      const auto range = minuscule::app::parse_range(range_text);
      const auto bounds = minuscule::app::suite_bounds(suite);
      if (range.lo < bounds.lo || range.hi > bounds.hi)
        throw minuscule::DomainError("suite " + suite + " accepts n in " + std::to_string(bounds.lo) + ".." +
                                     std::to_string(bounds.hi));
      Sink sink(out_path);
      sink.stream() << minuscule::app::header_json("certify", {{"suite", suite},
                                                               {"range", {range.lo, range.hi}},
                                                               {"jobs", settings.jobs}})
                           .dump()
                    << '\n';
      const auto records = minuscule::app::run_range(suite, range, settings);
      write_records(sink.stream(), records);
      return summarize("certify " + suite + " " + range_text, records);
    }

    if (*rep) {
      std::ifstream in(report_path);
      if (!in) throw minuscule::DomainError("cannot read " + report_path);
      std::cout << minuscule::app::render_report(in);
      return 0;
    }

    if (*scan) {
      const auto bounds = minuscule::app::suite_bounds("hurwitz");
      if (scan_from < bounds.lo || scan_max < scan_from)
        throw minuscule::DomainError("scan: need " + std::to_string(bounds.lo) + " <= --from <= --max-n");
      Sink sink(out_path);
      sink.stream() << minuscule::app::header_json("scan", {{"suite", "hurwitz"},
                                                            {"from", scan_from},
                                                            {"budget_seconds", budget_seconds},
                                                            {"jobs", settings.jobs}})
                           .dump()
                    << '\n';
      const auto start = std::chrono::steady_clock::now();
      std::vector<Record> all;
      long n = scan_from;
      while (n <= scan_max &&
             std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count() < budget_seconds) {
        const long hi = std::min(scan_max, n + settings.jobs - 1);
        const auto batch = minuscule::app::run_range("hurwitz", {n, hi}, settings);
        write_records(sink.stream(), batch);
        sink.stream().flush();
        all.insert(all.end(), batch.begin(), batch.end());
        n = hi + 1;
      }
      const std::string label =
          all.empty() ? "scan: budget spent before n = " + std::to_string(scan_from)
                      : "scan hurwitz " + std::to_string(scan_from) + ".." + std::to_string(n - 1);
      return summarize(label, all);
    }
  } catch (const minuscule::DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const minuscule::BudgetError& e) {
    std::cerr << "budget: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitFail;
  }
  return kExitUsage;
}
