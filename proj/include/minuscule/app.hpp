#pragma once

// Batch driver pieces behind the `minuscule` command line tool.

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "minuscule/certificate.hpp"
#include "minuscule/limits.hpp"

namespace minuscule::app {

struct Settings {
  Limits limits;
  int jobs = 1;
  long refine_log2_width = -40;
};

/// Overlay keys from a JSON config object. Unknown keys or wrong types throw DomainError.
void apply_config(Settings& s, const nlohmann::json& config);
/// Reads and applies a config file; throws DomainError when unreadable or malformed.
void load_config_file(Settings& s, const std::string& path);

struct Range {
  long lo = 0;
  long hi = 0;
};

/// "a..b" or a single "a"; throws DomainError on anything else or when a > b.
Range parse_range(std::string_view text);

const std::vector<std::string>& suite_names();
/// Smallest and largest n a suite accepts.
Range suite_bounds(const std::string& suite);

/// One combined certificate for (suite, n). Exceptions raised inside a suite
/// become failing certificates carrying the error text.
Certificate run_suite(const std::string& suite, long n, const Settings& s);

struct Record {
  std::string suite;
  long n = 0;
  Certificate cert;
  double duration_ms = 0;
};

nlohmann::json record_json(const Record& r);
/// Runs n = lo..hi on `s.jobs` threads; results come back in n order.
std::vector<Record> run_range(const std::string& suite, Range r, const Settings& s);
/// First line of a certificate file.
nlohmann::json header_json(const std::string& verb, nlohmann::json details);

const std::vector<std::string>& family_names();
enum class Format { Json, Csv };
/// Coefficient table for a family over n in r. Throws DomainError for an
/// unknown family or an n outside the family's domain.
void generate(const std::string& family, Range r, Format f, std::ostream& out);

/// Markdown summary of a certificate file; throws DomainError on malformed lines.
std::string render_report(std::istream& in);

}  // namespace minuscule::app
